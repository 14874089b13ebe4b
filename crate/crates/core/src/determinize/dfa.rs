use std::collections::BTreeSet;

use super::DeterminizeError;
use crate::automaton::{Fsa, Label, StateId, SymbolId, Transition, Word};

/// Complete deterministic automaton with a dense transition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<String>,
    names: Vec<String>,
    initial: StateId,
    delta: Vec<StateId>,
    finals: Vec<bool>,
}

impl Dfa {
    pub(crate) fn from_parts(
        alphabet: Vec<String>,
        names: Vec<String>,
        initial: StateId,
        delta: Vec<StateId>,
        finals: Vec<bool>,
    ) -> Self {
        debug_assert_eq!(delta.len(), names.len() * alphabet.len());
        debug_assert!(initial < names.len());
        Self {
            alphabet,
            names,
            initial,
            delta,
            finals,
        }
    }

    pub fn from_fsa(a: &Fsa) -> Result<Dfa, DeterminizeError> {
        if !a.is_deterministic() {
            return Err(DeterminizeError::NotDeterministic);
        }
        let k = a.alphabet().len();
        let mut delta = vec![0; a.state_count() * k];
        for t in a.transitions() {
            if let Label::Symbol(s) = t.label {
                delta[t.src * k + s] = t.dst;
            }
        }
        let initial = *a.initial().iter().next().expect("one initial state");
        let mut finals = vec![false; a.state_count()];
        for &q in a.finals() {
            finals[q] = true;
        }
        Ok(Dfa::from_parts(
            a.alphabet().to_vec(),
            a.states().to_vec(),
            initial,
            delta,
            finals,
        ))
    }

    pub fn to_fsa(&self) -> Fsa {
        let k = self.alphabet.len();
        let transitions: BTreeSet<Transition> = (0..self.len())
            .flat_map(|q| (0..k).map(move |a| (q, a)))
            .map(|(q, a)| Transition::new(q, Label::Symbol(a), self.next(q, a)))
            .collect();
        Fsa::from_parts(
            self.alphabet.clone(),
            self.names.clone(),
            BTreeSet::from([self.initial]),
            (0..self.len()).filter(|&q| self.finals[q]).collect(),
            transitions,
        )
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn state_names(&self) -> &[String] {
        &self.names
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn next(&self, q: StateId, a: SymbolId) -> StateId {
        self.delta[q * self.alphabet.len() + a]
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn accepts(&self, w: &Word) -> bool {
        let end = w.symbols().iter().fold(self.initial, |q, &a| self.next(q, a));
        self.finals[end]
    }

    /// States reachable from the initial state, in breadth-first order
    /// (symbols tried in alphabet order).
    fn bfs_order(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.len()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            i += 1;
            for a in 0..self.alphabet.len() {
                let r = self.next(q, a);
                if !seen[r] {
                    seen[r] = true;
                    order.push(r);
                }
            }
        }
        order
    }

    /// Minimal equivalent DFA, canonically numbered in breadth-first order
    /// from the initial state, so equivalent inputs give equal outputs up to
    /// state names.
    ///
    /// Unreachable states are dropped first; the rest is refined with
    /// Hopcroft's algorithm. Minimal state `i` is named `m{i}`.
    pub fn minimize(&self) -> Dfa {
        let k = self.alphabet.len();
        let order = self.bfs_order();
        let n = order.len();
        let mut renum = vec![usize::MAX; self.len()];
        for (i, &q) in order.iter().enumerate() {
            renum[q] = i;
        }
        let delta: Vec<StateId> = order
            .iter()
            .flat_map(|&q| (0..k).map(move |a| (q, a)))
            .map(|(q, a)| renum[self.next(q, a)])
            .collect();
        let finals: Vec<bool> = order.iter().map(|&q| self.finals[q]).collect();

        let block_of = hopcroft(n, k, &delta, &finals);

        // Canonical numbering of blocks by BFS over the quotient.
        let blocks = block_of.iter().max().map_or(0, |m| m + 1);
        let mut number = vec![usize::MAX; blocks];
        let mut reps = Vec::with_capacity(blocks);
        number[block_of[0]] = 0;
        reps.push(0);
        let mut i = 0;
        while i < reps.len() {
            let q = reps[i];
            i += 1;
            for a in 0..k {
                let b = block_of[delta[q * k + a]];
                if number[b] == usize::MAX {
                    number[b] = reps.len();
                    reps.push(delta[q * k + a]);
                }
            }
        }
        let m = reps.len();
        let min_delta = reps
            .iter()
            .flat_map(|&q| (0..k).map(move |a| (q, a)))
            .map(|(q, a)| number[block_of[delta[q * k + a]]])
            .collect();
        Dfa::from_parts(
            self.alphabet.clone(),
            (0..m).map(|i| format!("m{i}")).collect(),
            0,
            min_delta,
            reps.iter().map(|&q| finals[q]).collect(),
        )
    }
}

/// Hopcroft partition refinement over a complete DFA with `n` states and
/// `k` symbols. Returns the block of every state.
fn hopcroft(n: usize, k: usize, delta: &[StateId], finals: &[bool]) -> Vec<usize> {
    // Inverse transitions, bucketed by (symbol, target).
    let mut inv_start = vec![0usize; k * n + 1];
    for q in 0..n {
        for a in 0..k {
            inv_start[a * n + delta[q * k + a] + 1] += 1;
        }
    }
    for i in 1..inv_start.len() {
        inv_start[i] += inv_start[i - 1];
    }
    let mut inv = vec![0usize; n * k];
    let mut fill = inv_start.clone();
    for q in 0..n {
        for a in 0..k {
            let slot = &mut fill[a * n + delta[q * k + a]];
            inv[*slot] = q;
            *slot += 1;
        }
    }
    let preimage = |a: usize, q: usize| &inv[inv_start[a * n + q]..inv_start[a * n + q + 1]];

    let (acc, rej): (Vec<_>, Vec<_>) = (0..n).partition(|&q| finals[q]);
    let mut blocks: Vec<Vec<usize>> = [acc, rej].into_iter().filter(|b| !b.is_empty()).collect();
    let mut block_of = vec![0; n];
    for (b, members) in blocks.iter().enumerate() {
        for &q in members {
            block_of[q] = b;
        }
    }
    let mut work = Vec::new();
    if blocks.len() == 2 {
        let smaller = if blocks[0].len() <= blocks[1].len() { 0 } else { 1 };
        work.extend((0..k).map(|a| (smaller, a)));
    }

    let mut marked = vec![false; n];
    let mut hits = vec![0usize; n];
    let mut touched = Vec::new();
    while let Some((splitter, a)) = work.pop() {
        let mut senders = Vec::new();
        for &q in &blocks[splitter] {
            for &p in preimage(a, q) {
                if !marked[p] {
                    marked[p] = true;
                    senders.push(p);
                    let b = block_of[p];
                    if hits[b] == 0 {
                        touched.push(b);
                    }
                    hits[b] += 1;
                }
            }
        }
        for b in touched.drain(..) {
            let count = std::mem::take(&mut hits[b]);
            if count == blocks[b].len() {
                continue;
            }
            let (inside, outside): (Vec<_>, Vec<_>) = blocks[b].iter().partition(|&&q| marked[q]);
            let (keep, split) = if inside.len() <= outside.len() {
                (outside, inside)
            } else {
                (inside, outside)
            };
            let new = blocks.len();
            for &q in &split {
                block_of[q] = new;
            }
            blocks[b] = keep;
            blocks.push(split);
            work.extend((0..k).map(|c| (new, c)));
        }
        for p in senders {
            marked[p] = false;
        }
    }
    block_of
}

/// Free-function form of [`Dfa::minimize`].
pub fn minimize(d: &Dfa) -> Dfa {
    d.minimize()
}
