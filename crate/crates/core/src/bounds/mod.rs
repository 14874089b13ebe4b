//! A priori upper bounds on the size of the subset automaton.

pub(crate) mod estimates;
mod monoid;
mod report;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::boolean::{BoolError, DEFAULT_RANGE_CAP};
use crate::determinize::DEFAULT_MAX_STATES;

pub use estimates::{
    all_but_one_bound, all_but_one_bound_with, monoid_bound, range_bound, subset_complexity, unary_monoid_bounds,
    AllButOne, SubsetComplexity, UnaryMonoidBounds, DEFAULT_ESTIMATE_CONSTANT, MAX_SPLIT_SYMBOLS,
};
pub use monoid::{monoid_closure, symbol_closure, MonoidClosure, DEFAULT_MONOID_CAP};
pub use report::{full_report, full_report_with, BoundReport, Check, SymbolStats};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("automaton has ε-transitions; remove them first")]
    NotEpsilonFree,
    #[error("expected a unary automaton, alphabet has {0} symbols")]
    NotUnary(usize),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("alphabet has {symbols} symbols; split enumeration supports at most {max}")]
    TooManySymbols { symbols: usize, max: usize },
    #[error(transparent)]
    Bool(#[from] BoolError),
    #[error("report: {0}")]
    Report(String),
}

/// Enumeration limits shared by all bound computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Maximum number of monoid elements.
    pub monoid: usize,
    /// Maximum matrix dimension for exhaustive range enumeration.
    pub range: usize,
    /// Maximum number of subset-automaton states.
    pub subset: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            monoid: DEFAULT_MONOID_CAP,
            range: DEFAULT_RANGE_CAP,
            subset: DEFAULT_MAX_STATES,
        }
    }
}

/// A computed quantity, or the reason it is missing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    Value(u64),
    /// Enumeration stopped at `cap`.
    Capped { cap: usize },
    /// An `n × n` range was needed but `n` exceeds the range cap.
    RangeCapExceeded { n: usize, cap: usize },
    /// More symbols than split enumeration supports.
    TooManySymbols { symbols: usize, max: usize },
}

impl Measure {
    pub fn value(&self) -> Option<u64> {
        match *self {
            Measure::Value(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_value(&self) -> bool {
        matches!(self, Measure::Value(_))
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Value(v) => write!(f, "{v}"),
            Measure::Capped { cap } => write!(f, "capped at {cap}"),
            Measure::RangeCapExceeded { n, cap } => write!(f, "range cap exceeded (n={n}, cap={cap})"),
            Measure::TooManySymbols { symbols, max } => write!(f, "too many symbols ({symbols} > {max})"),
        }
    }
}

impl From<BoolError> for Measure {
    fn from(e: BoolError) -> Self {
        match e {
            BoolError::RangeCapExceeded { n, cap } => Measure::RangeCapExceeded { n, cap },
            BoolError::DimensionMismatch { .. } => unreachable!("matrices of one automaton share a dimension"),
        }
    }
}
