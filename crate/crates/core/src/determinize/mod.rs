//! Subset construction, DFA minimization and subset-based language queries.

mod dfa;
mod language;
mod subset;

pub use dfa::{minimize, Dfa};
pub use language::{
    check_brzozowski, distinguishing_word, equivalent, is_universal, state_complexity, universality_witness,
    BrzozowskiCheck,
};
pub use subset::{subset_construct, subset_to_dfa, SubsetAutomaton, DEFAULT_MAX_STATES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DeterminizeError {
    #[error("subset construction aborted: {discovered} states discovered, limit is {max_states}")]
    BlowUp { max_states: usize, discovered: usize },
    #[error("automaton has ε-transitions; remove them first")]
    NotEpsilonFree,
    #[error("automaton is not deterministic")]
    NotDeterministic,
}
