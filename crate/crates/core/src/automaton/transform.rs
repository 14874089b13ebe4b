use std::collections::{BTreeSet, VecDeque};

use super::{Fsa, Label, StateId, Transition};
use crate::boolean::BoolMatrix;

/// Reflexive-transitive closure of the ε-relation as a matrix.
pub(super) fn epsilon_closure_matrix(a: &Fsa) -> BoolMatrix {
    let n = a.state_count();
    let mut closure = BoolMatrix::identity(n);
    for q in 0..n {
        let mut queue = VecDeque::from([q]);
        while let Some(p) = queue.pop_front() {
            for r in a.successors(p, Label::Epsilon) {
                if !closure.get(q, r) {
                    closure.set(q, r, true);
                    queue.push_back(r);
                }
            }
        }
    }
    closure
}

impl Fsa {
    /// Equivalent automaton over the same states with no ε-transitions.
    ///
    /// `p --a--> r` for every `q` in the ε-closure of `p` with `q --a--> r`,
    /// and `p` becomes final when its closure meets a final state.
    pub fn remove_epsilon(&self) -> Fsa {
        if !self.has_epsilon() {
            return self.clone();
        }
        let closure = epsilon_closure_matrix(self);
        let mut transitions = BTreeSet::new();
        let mut finals = BTreeSet::new();
        for p in 0..self.state_count() {
            for q in closure.row(p).ones_iter() {
                if self.finals.contains(&q) {
                    finals.insert(p);
                }
                for t in self.transitions.range(
                    Transition::new(q, Label::Symbol(0), 0)..=Transition::new(q, Label::Symbol(usize::MAX), usize::MAX),
                ) {
                    transitions.insert(Transition::new(p, t.label, t.dst));
                }
            }
        }
        Fsa::from_parts(
            self.alphabet.clone(),
            self.states.clone(),
            self.initial.clone(),
            finals,
            transitions,
        )
    }

    /// All transitions flipped; initial and final sets swapped.
    pub fn reverse(&self) -> Fsa {
        Fsa::from_parts(
            self.alphabet.clone(),
            self.states.clone(),
            self.finals.clone(),
            self.initial.clone(),
            self.transitions
                .iter()
                .map(|t| Transition::new(t.dst, t.label, t.src))
                .collect(),
        )
    }

    fn reachable_from(&self, start: &BTreeSet<StateId>, forward: bool) -> Vec<bool> {
        let n = self.state_count();
        let mut adj = vec![Vec::new(); n];
        for t in &self.transitions {
            if forward {
                adj[t.src].push(t.dst);
            } else {
                adj[t.dst].push(t.src);
            }
        }
        let mut seen = vec![false; n];
        let mut queue: VecDeque<StateId> = start.iter().copied().collect();
        for &q in start {
            seen[q] = true;
        }
        while let Some(p) = queue.pop_front() {
            for &r in &adj[p] {
                if !seen[r] {
                    seen[r] = true;
                    queue.push_back(r);
                }
            }
        }
        seen
    }

    pub fn accessible_states(&self) -> Vec<bool> {
        self.reachable_from(&self.initial, true)
    }

    pub fn coaccessible_states(&self) -> Vec<bool> {
        self.reachable_from(&self.finals, false)
    }

    /// Restriction to states both accessible and co-accessible. Surviving
    /// states keep their relative order.
    pub fn trim(&self) -> Fsa {
        let acc = self.accessible_states();
        let coacc = self.coaccessible_states();
        let keep: Vec<bool> = acc.iter().zip(&coacc).map(|(a, c)| *a && *c).collect();
        self.restrict(&keep)
    }

    pub fn is_trim(&self) -> bool {
        let acc = self.accessible_states();
        let coacc = self.coaccessible_states();
        acc.iter().zip(&coacc).all(|(a, c)| *a && *c)
    }

    /// Induced sub-automaton on the states flagged in `keep`.
    pub(crate) fn restrict(&self, keep: &[bool]) -> Fsa {
        let mut map = vec![None; self.state_count()];
        let mut states = Vec::new();
        for (q, name) in self.states.iter().enumerate() {
            if keep[q] {
                map[q] = Some(states.len());
                states.push(name.clone());
            }
        }
        let remap = |set: &BTreeSet<StateId>| set.iter().filter_map(|&q| map[q]).collect();
        let transitions = self
            .transitions
            .iter()
            .filter_map(|t| Some(Transition::new(map[t.src]?, t.label, map[t.dst]?)))
            .collect();
        Fsa::from_parts(
            self.alphabet.clone(),
            states,
            remap(&self.initial),
            remap(&self.finals),
            transitions,
        )
    }

    /// One initial state and exactly one successor for every state and symbol.
    pub fn is_deterministic(&self) -> bool {
        if self.initial.len() != 1 || self.has_epsilon() {
            return false;
        }
        let k = self.alphabet.len();
        let mut out_degree = vec![0usize; self.state_count() * k];
        for t in &self.transitions {
            if let Label::Symbol(a) = t.label {
                out_degree[t.src * k + a] += 1;
            }
        }
        out_degree.iter().all(|&d| d == 1)
    }

    pub fn is_codeterministic(&self) -> bool {
        self.reverse().is_deterministic()
    }

    /// Whether every state has at least one successor on every symbol.
    pub fn is_total(&self) -> bool {
        let k = self.alphabet.len();
        let mut has = vec![false; self.state_count() * k];
        for t in &self.transitions {
            if let Label::Symbol(a) = t.label {
                has[t.src * k + a] = true;
            }
        }
        has.into_iter().all(|b| b)
    }

    /// Adds a non-final sink absorbing every missing `(state, symbol)` move.
    ///
    /// Returns `self` unchanged when already total with at least one initial
    /// state. An automaton without initial states gets the sink as its
    /// initial state.
    pub fn complete_with_dead_state(&self) -> Fsa {
        if self.is_total() && !self.initial.is_empty() {
            return self.clone();
        }
        let k = self.alphabet.len();
        let dead = self.state_count();
        let mut name = String::from("q_dead");
        while self.states.contains(&name) {
            name.push('\'');
        }
        let mut states = self.states.clone();
        states.push(name);
        let mut transitions = self.transitions.clone();
        for q in 0..=dead {
            for a in 0..k {
                if self.successors(q, Label::Symbol(a)).next().is_none() {
                    transitions.insert(Transition::new(q, Label::Symbol(a), dead));
                }
            }
        }
        let mut initial = self.initial.clone();
        if initial.is_empty() {
            initial.insert(dead);
        }
        Fsa::from_parts(self.alphabet.clone(), states, initial, self.finals.clone(), transitions)
    }
}
