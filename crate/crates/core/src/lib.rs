//! Subset construction for finite-state automata, and a priori upper bounds
//! on the size of the DFA it produces.

pub mod automaton;
pub mod boolean;
pub mod bounds;
pub mod determinize;
pub mod generators;

pub use automaton::{parse_fsa, serialize_fsa, Fsa, FsaError, Label, ParseError, StateId, SymbolId, Transition, Word};
pub use boolean::{BitVector, BoolError, BoolMatrix, PrecedenceGraph};
pub use bounds::{full_report, BoundError, BoundReport, Caps, Measure, MonoidClosure};
pub use determinize::{minimize, subset_construct, DeterminizeError, Dfa, SubsetAutomaton};
pub use generators::{GenError, RandomNfaSpec};
