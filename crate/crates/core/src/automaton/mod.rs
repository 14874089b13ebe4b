//! Finite-state automata: representation, the line-oriented text format and
//! structural transformations.
//!
//! States and symbols are named by strings externally and densely indexed
//! internally. The transition relation is a set; duplicate transitions
//! collapse.

mod text;
mod transform;

use std::collections::BTreeSet;
use std::fmt;

use crate::boolean::{BitVector, BoolMatrix};

pub use text::{parse_fsa, serialize_fsa, ParseError, EPSILON_TOKEN};

pub type StateId = usize;
pub type SymbolId = usize;

/// A transition label: a symbol of the alphabet or the empty word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Epsilon,
    Symbol(SymbolId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transition {
    pub src: StateId,
    pub label: Label,
    pub dst: StateId,
}

impl Transition {
    pub fn new(src: StateId, label: Label, dst: StateId) -> Self {
        Self { src, label, dst }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FsaError {
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("`{0}` is not a valid name")]
    InvalidName(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("state index {index} out of range for {count} states")]
    StateOutOfRange { index: StateId, count: usize },
    #[error("symbol index {index} out of range for an alphabet of {count}")]
    SymbolOutOfRange { index: SymbolId, count: usize },
}

/// A finite-state automaton `(Σ, Q, I, F, δ)`, possibly with ε-transitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fsa {
    alphabet: Vec<String>,
    states: Vec<String>,
    initial: BTreeSet<StateId>,
    finals: BTreeSet<StateId>,
    transitions: BTreeSet<Transition>,
}

fn valid_symbol(s: &str) -> bool {
    !s.is_empty() && s != EPSILON_TOKEN && !s.chars().any(char::is_whitespace)
}

fn valid_state(s: &str) -> bool {
    !s.is_empty() && !s.starts_with(['#', '@']) && !s.chars().any(char::is_whitespace)
}

impl Fsa {
    /// Validating constructor over dense indices.
    pub fn new(
        alphabet: Vec<String>,
        states: Vec<String>,
        initial: impl IntoIterator<Item = StateId>,
        finals: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = Transition>,
    ) -> Result<Self, FsaError> {
        let mut seen = BTreeSet::new();
        for s in &alphabet {
            if !valid_symbol(s) {
                return Err(FsaError::InvalidName(s.clone()));
            }
            if !seen.insert(s.as_str()) {
                return Err(FsaError::DuplicateSymbol(s.clone()));
            }
        }
        let mut seen = BTreeSet::new();
        for s in &states {
            if !valid_state(s) {
                return Err(FsaError::InvalidName(s.clone()));
            }
            if !seen.insert(s.as_str()) {
                return Err(FsaError::DuplicateState(s.clone()));
            }
        }
        let n = states.len();
        let check_state = |q: StateId| {
            if q < n {
                Ok(q)
            } else {
                Err(FsaError::StateOutOfRange { index: q, count: n })
            }
        };
        let initial = initial.into_iter().map(check_state).collect::<Result<_, _>>()?;
        let finals = finals.into_iter().map(check_state).collect::<Result<_, _>>()?;
        let transitions = transitions
            .into_iter()
            .map(|t| {
                check_state(t.src)?;
                check_state(t.dst)?;
                if let Label::Symbol(a) = t.label {
                    if a >= alphabet.len() {
                        return Err(FsaError::SymbolOutOfRange {
                            index: a,
                            count: alphabet.len(),
                        });
                    }
                }
                Ok(t)
            })
            .collect::<Result<_, _>>()?;
        Ok(Self {
            alphabet,
            states,
            initial,
            finals,
            transitions,
        })
    }

    pub fn builder() -> FsaBuilder {
        FsaBuilder::default()
    }

    // Used by transformations whose output is valid by construction.
    pub(crate) fn from_parts(
        alphabet: Vec<String>,
        states: Vec<String>,
        initial: BTreeSet<StateId>,
        finals: BTreeSet<StateId>,
        transitions: BTreeSet<Transition>,
    ) -> Self {
        Self {
            alphabet,
            states,
            initial,
            finals,
            transitions,
        }
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn initial(&self) -> &BTreeSet<StateId> {
        &self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn transitions(&self) -> &BTreeSet<Transition> {
        &self.transitions
    }

    pub fn symbol_index(&self, name: &str) -> Option<SymbolId> {
        self.alphabet.iter().position(|s| s == name)
    }

    pub fn state_index(&self, name: &str) -> Option<StateId> {
        self.states.iter().position(|s| s == name)
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.states[q]
    }

    pub fn symbol_name(&self, a: SymbolId) -> &str {
        &self.alphabet[a]
    }

    pub fn has_epsilon(&self) -> bool {
        self.transitions.iter().any(|t| t.label == Label::Epsilon)
    }

    /// Targets of all transitions leaving `q` with label `label`.
    pub fn successors(&self, q: StateId, label: Label) -> impl Iterator<Item = StateId> + '_ {
        let lo = Transition::new(q, label, 0);
        let hi = Transition::new(q, label, StateId::MAX);
        self.transitions.range(lo..=hi).map(|t| t.dst)
    }

    pub fn initial_vector(&self) -> BitVector {
        BitVector::from_indices(self.state_count(), self.initial.iter().copied())
    }

    pub fn final_vector(&self) -> BitVector {
        BitVector::from_indices(self.state_count(), self.finals.iter().copied())
    }

    /// The matrix `T^(a)`: entry `(p, q)` is set iff `p --a--> q`.
    pub fn transition_matrix(&self, a: SymbolId) -> BoolMatrix {
        self.label_matrix(Label::Symbol(a))
    }

    /// One matrix per symbol, in alphabet order.
    pub fn transition_matrices(&self) -> Vec<BoolMatrix> {
        (0..self.alphabet.len())
            .map(|a| self.transition_matrix(a))
            .collect()
    }

    fn label_matrix(&self, label: Label) -> BoolMatrix {
        BoolMatrix::from_entries(
            self.state_count(),
            self.transitions
                .iter()
                .filter(|t| t.label == label)
                .map(|t| (t.src, t.dst)),
        )
    }

    /// Resolves symbol names into a word over this alphabet.
    pub fn word<S: AsRef<str>>(&self, symbols: &[S]) -> Result<Word, FsaError> {
        symbols
            .iter()
            .map(|s| {
                self.symbol_index(s.as_ref())
                    .ok_or_else(|| FsaError::UnknownSymbol(s.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    /// Parses a word written as whitespace-separated symbols, or as a run of
    /// single-character symbols when it has no whitespace.
    pub fn parse_word(&self, text: &str) -> Result<Word, FsaError> {
        let text = text.trim();
        if text.chars().any(char::is_whitespace) {
            self.word(&text.split_whitespace().collect::<Vec<_>>())
        } else {
            let chars: Vec<String> = text.chars().map(String::from).collect();
            self.word(&chars)
        }
    }

    /// A copy with `extra` symbols appended to the alphabet (those already
    /// present are skipped). Existing symbol indices are unchanged.
    pub fn with_symbols<S: AsRef<str>>(&self, extra: &[S]) -> Result<Fsa, FsaError> {
        let mut alphabet = self.alphabet.clone();
        for s in extra {
            let s = s.as_ref();
            if !alphabet.iter().any(|x| x == s) {
                if !valid_symbol(s) {
                    return Err(FsaError::InvalidName(s.to_string()));
                }
                alphabet.push(s.to_string());
            }
        }
        Ok(Self {
            alphabet,
            ..self.clone()
        })
    }

    /// Whether some path from an initial to a final state yields `w`.
    ///
    /// Simulates the subset construction on the fly; ε-transitions, if any,
    /// are followed through their closure.
    pub fn accepts(&self, w: &Word) -> bool {
        Simulator::new(self).accepts(w)
    }

    pub fn simulator(&self) -> Simulator {
        Simulator::new(self)
    }
}

impl fmt::Display for Fsa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_fsa(self))
    }
}

impl std::str::FromStr for Fsa {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_fsa(s)
    }
}

/// Precomputed transition matrices for repeated membership queries.
#[derive(Clone, Debug)]
pub struct Simulator {
    matrices: Vec<BoolMatrix>,
    closure: Option<BoolMatrix>,
    initial: BitVector,
    finals: BitVector,
}

impl Simulator {
    pub fn new(a: &Fsa) -> Self {
        let closure = a.has_epsilon().then(|| transform::epsilon_closure_matrix(a));
        let mut initial = a.initial_vector();
        if let Some(c) = &closure {
            initial = initial.apply(c).expect("same dimension");
        }
        Self {
            matrices: a.transition_matrices(),
            closure,
            initial,
            finals: a.final_vector(),
        }
    }

    /// Set of states reached after reading `w`.
    pub fn run(&self, w: &Word) -> BitVector {
        let mut cur = self.initial.clone();
        for &a in w.symbols() {
            cur = cur.apply(&self.matrices[a]).expect("same dimension");
            if let Some(c) = &self.closure {
                cur = cur.apply(c).expect("same dimension");
            }
        }
        cur
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.run(w).intersects(&self.finals)
    }
}

/// A finite word, as symbol indices into some alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<SymbolId>);

impl Word {
    pub fn new(symbols: Vec<SymbolId>) -> Self {
        Self(symbols)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn symbols(&self) -> &[SymbolId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, a: SymbolId) {
        self.0.push(a);
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Space-separated symbol names; the empty word renders as `ε`.
    pub fn display(&self, alphabet: &[String]) -> String {
        if self.0.is_empty() {
            return "ε".to_string();
        }
        self.0
            .iter()
            .map(|&a| alphabet[a].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// All words over `k` symbols of length `0..=max_len`, shortest first.
    pub fn enumerate(k: usize, max_len: usize) -> impl Iterator<Item = Word> {
        (0..=max_len).flat_map(move |len| {
            let total = if k == 0 {
                usize::from(len == 0)
            } else {
                k.pow(len as u32)
            };
            (0..total).map(move |mut code| {
                let mut symbols = vec![0; len];
                for slot in symbols.iter_mut().rev() {
                    *slot = code % k;
                    code /= k;
                }
                Word(symbols)
            })
        })
    }
}

impl From<Vec<SymbolId>> for Word {
    fn from(v: Vec<SymbolId>) -> Self {
        Word(v)
    }
}

/// Name-based incremental construction. States and symbols are declared on
/// first use, in order.
#[derive(Clone, Debug, Default)]
pub struct FsaBuilder {
    alphabet: Vec<String>,
    states: Vec<String>,
    initial: Vec<StateId>,
    finals: Vec<StateId>,
    transitions: Vec<Transition>,
}

impl FsaBuilder {
    pub fn symbol(mut self, name: &str) -> Self {
        self.symbol_id(name);
        self
    }

    pub fn state(mut self, name: &str) -> Self {
        self.state_id(name);
        self
    }

    pub fn states<S: AsRef<str>>(mut self, names: &[S]) -> Self {
        for n in names {
            self.state_id(n.as_ref());
        }
        self
    }

    pub fn transition(mut self, src: &str, symbol: &str, dst: &str) -> Self {
        self.add_transition(src, Some(symbol), dst);
        self
    }

    pub fn epsilon(mut self, src: &str, dst: &str) -> Self {
        self.add_transition(src, None, dst);
        self
    }

    pub fn initial(mut self, name: &str) -> Self {
        let q = self.state_id(name);
        self.initial.push(q);
        self
    }

    pub fn final_state(mut self, name: &str) -> Self {
        let q = self.state_id(name);
        self.finals.push(q);
        self
    }

    pub fn build(self) -> Result<Fsa, FsaError> {
        Fsa::new(
            self.alphabet,
            self.states,
            self.initial,
            self.finals,
            self.transitions,
        )
    }

    pub(crate) fn add_transition(&mut self, src: &str, symbol: Option<&str>, dst: &str) {
        let s = self.state_id(src);
        let label = match symbol {
            Some(sym) => Label::Symbol(self.symbol_id(sym)),
            None => Label::Epsilon,
        };
        let d = self.state_id(dst);
        self.transitions.push(Transition::new(s, label, d));
    }

    pub(crate) fn state_id(&mut self, name: &str) -> StateId {
        match self.states.iter().position(|s| s == name) {
            Some(q) => q,
            None => {
                self.states.push(name.to_string());
                self.states.len() - 1
            }
        }
    }

    pub(crate) fn symbol_id(&mut self, name: &str) -> SymbolId {
        match self.alphabet.iter().position(|s| s == name) {
            Some(a) => a,
            None => {
                self.alphabet.push(name.to_string());
                self.alphabet.len() - 1
            }
        }
    }

    pub(crate) fn has_state(&self, name: &str) -> bool {
        self.states.iter().any(|s| s == name)
    }
}
