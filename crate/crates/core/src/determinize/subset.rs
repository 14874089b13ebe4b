use std::collections::HashMap;

use super::{DeterminizeError, Dfa};
use crate::automaton::{Fsa, StateId, SymbolId, Word};
use crate::boolean::BitVector;

/// Default ceiling on the number of subset states explored.
pub const DEFAULT_MAX_STATES: usize = 1 << 20;

/// DFA produced by the subset construction, each state labelled by the
/// subset of base states it stands for.
#[derive(Clone, Debug)]
pub struct SubsetAutomaton {
    base: Fsa,
    subsets: Vec<BitVector>,
    delta: Vec<StateId>,
    finals: Vec<bool>,
    // Discovering predecessor and symbol; `None` for the initial state.
    parent: Vec<Option<(StateId, SymbolId)>>,
}

/// Runs the subset construction with an explicit LIFO stack.
///
/// States are numbered in discovery order, starting from the subset of
/// initial states. The empty subset is kept as an ordinary state when it
/// is reached. Fails once more than `max_states` subsets are discovered.
pub fn subset_construct(a: &Fsa, max_states: usize) -> Result<SubsetAutomaton, DeterminizeError> {
    if a.has_epsilon() {
        return Err(DeterminizeError::NotEpsilonFree);
    }
    if max_states == 0 {
        return Err(DeterminizeError::BlowUp {
            max_states,
            discovered: 1,
        });
    }
    let k = a.alphabet().len();
    let matrices = a.transition_matrices();
    let start = a.initial_vector();

    let mut index: HashMap<BitVector, StateId> = HashMap::new();
    let mut subsets = vec![start.clone()];
    let mut parent = vec![None];
    index.insert(start, 0);
    let mut delta = vec![StateId::MAX; k];
    let mut stack = vec![0];

    while let Some(s) = stack.pop() {
        for (w, m) in matrices.iter().enumerate() {
            let next = subsets[s].apply(m).expect("matrix matches automaton");
            let target = match index.get(&next) {
                Some(&t) => t,
                None => {
                    if subsets.len() == max_states {
                        return Err(DeterminizeError::BlowUp {
                            max_states,
                            discovered: subsets.len() + 1,
                        });
                    }
                    let t = subsets.len();
                    index.insert(next.clone(), t);
                    subsets.push(next);
                    parent.push(Some((s, w)));
                    delta.resize(delta.len() + k, StateId::MAX);
                    stack.push(t);
                    t
                }
            };
            delta[s * k + w] = target;
        }
    }

    let final_vec = a.final_vector();
    let finals = subsets.iter().map(|q| q.intersects(&final_vec)).collect();
    Ok(SubsetAutomaton {
        base: a.clone(),
        subsets,
        delta,
        finals,
        parent,
    })
}

impl SubsetAutomaton {
    pub fn base(&self) -> &Fsa {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[BitVector] {
        &self.subsets
    }

    pub fn subset(&self, s: StateId) -> &BitVector {
        &self.subsets[s]
    }

    pub fn next(&self, s: StateId, a: SymbolId) -> StateId {
        self.delta[s * self.base.alphabet().len() + a]
    }

    pub fn is_final(&self, s: StateId) -> bool {
        self.finals[s]
    }

    pub fn final_flags(&self) -> &[bool] {
        &self.finals
    }

    /// Index of the state labelled by `subset`, if it was discovered.
    pub fn find(&self, subset: &BitVector) -> Option<StateId> {
        self.subsets.iter().position(|q| q == subset)
    }

    /// The discovery path from state 0 to `s`, as a word.
    pub fn witness(&self, mut s: StateId) -> Word {
        let mut symbols = Vec::new();
        while let Some((p, a)) = self.parent[s] {
            symbols.push(a);
            s = p;
        }
        symbols.reverse();
        Word::new(symbols)
    }

    pub fn run(&self, w: &Word) -> StateId {
        w.symbols().iter().fold(0, |s, &a| self.next(s, a))
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.is_final(self.run(w))
    }

    /// `S{index}={comma-joined base states}`.
    pub fn state_name(&self, s: StateId) -> String {
        let members: Vec<&str> = self.subsets[s]
            .ones_iter()
            .map(|q| self.base.state_name(q))
            .collect();
        format!("S{s}={}", members.join(","))
    }

    /// Forgets the subset labels; state names keep them for traceability.
    pub fn to_dfa(&self) -> Dfa {
        Dfa::from_parts(
            self.base.alphabet().to_vec(),
            (0..self.len()).map(|s| self.state_name(s)).collect(),
            0,
            self.delta.clone(),
            self.finals.clone(),
        )
    }

    pub fn to_fsa(&self) -> Fsa {
        self.to_dfa().to_fsa()
    }
}

/// Free-function form of [`SubsetAutomaton::to_dfa`].
pub fn subset_to_dfa(s: &SubsetAutomaton) -> Dfa {
    s.to_dfa()
}
