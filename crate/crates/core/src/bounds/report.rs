use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{
    all_but_one_bound_with, estimates::estimate, monoid_bound, range_bound, subset_complexity, BoundError, Caps, Measure,
    DEFAULT_ESTIMATE_CONSTANT,
};
use crate::automaton::Fsa;
use crate::boolean::{rank_gf2, BoolError, PrecedenceGraph};
use crate::determinize::subset_construct;

/// Per-symbol matrix statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolStats {
    pub symbol: String,
    pub rank: usize,
    pub range: Measure,
    pub cyclicity: u64,
}

/// All bounds for one automaton, next to the actual subset-automaton size
/// when it could be computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub alphabet: Vec<String>,
    pub subset_size: Measure,
    pub monoid_bound: Measure,
    pub range_bound: Measure,
    pub subset_complexity: Measure,
    pub subset_complexity_witness: Vec<String>,
    /// `None` for an empty alphabet.
    pub all_but_one_certified: Option<Measure>,
    pub all_but_one_target: Option<String>,
    #[serde(with = "decimal")]
    pub all_but_one_estimate: Option<BigUint>,
    pub all_but_one_constant: u32,
    pub per_symbol: Vec<SymbolStats>,
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(D::Error::custom))
            .transpose()
    }
}

/// One soundness check: a bound against the actual subset size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub bound: &'static str,
    pub subset_size: u64,
    pub value: u64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.subset_size <= self.value
    }
}

impl BoundReport {
    /// A check per bound with a value, when the subset size is known.
    pub fn checks(&self) -> Vec<Check> {
        let Some(size) = self.subset_size.value() else {
            return Vec::new();
        };
        let fields = [
            ("monoid_bound", Some(&self.monoid_bound)),
            ("range_bound", Some(&self.range_bound)),
            ("subset_complexity", Some(&self.subset_complexity)),
            ("all_but_one_certified", self.all_but_one_certified.as_ref()),
        ];
        fields
            .into_iter()
            .filter_map(|(bound, m)| {
                m.and_then(Measure::value).map(|value| Check {
                    bound,
                    subset_size: size,
                    value,
                })
            })
            .collect()
    }

    pub fn is_sound(&self) -> bool {
        self.checks().iter().all(Check::passed)
    }

    /// `key: value` lines followed by one PASS/FAIL line per check.
    pub fn to_text(&self) -> String {
        let opt = |m: &Option<Measure>| m.as_ref().map_or_else(|| "none".to_string(), Measure::to_string);
        let mut out = String::new();
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "alphabet: {}", self.alphabet.join(" "));
        let _ = writeln!(out, "subset_size: {}", self.subset_size);
        let _ = writeln!(out, "monoid_bound: {}", self.monoid_bound);
        let _ = writeln!(out, "range_bound: {}", self.range_bound);
        let _ = writeln!(out, "subset_complexity: {}", self.subset_complexity);
        let _ = writeln!(out, "subset_complexity_witness: {{{}}}", self.subset_complexity_witness.join(","));
        let _ = writeln!(out, "all_but_one_certified: {}", opt(&self.all_but_one_certified));
        let _ = writeln!(
            out,
            "all_but_one_target: {}",
            self.all_but_one_target.as_deref().unwrap_or("none")
        );
        let _ = writeln!(
            out,
            "all_but_one_estimate: {}",
            self.all_but_one_estimate
                .as_ref()
                .map_or_else(|| "none".to_string(), BigUint::to_string)
        );
        let _ = writeln!(out, "all_but_one_constant: {}", self.all_but_one_constant);
        for s in &self.per_symbol {
            let _ = writeln!(
                out,
                "per_symbol.{}: rank={} range={} cyclicity={}",
                s.symbol, s.rank, s.range, s.cyclicity
            );
        }
        for c in self.checks() {
            let (verdict, op) = if c.passed() { ("PASS", "<=") } else { ("FAIL", ">") };
            let _ = writeln!(out, "check {}: {verdict} ({} {op} {})", c.bound, c.subset_size, c.value);
        }
        out
    }

    pub fn to_tree(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn from_tree(text: &str) -> Result<BoundReport, BoundError> {
        serde_json::from_str(text).map_err(|e| BoundError::Report(e.to_string()))
    }
}

pub fn full_report(a: &Fsa, caps: &Caps) -> Result<BoundReport, BoundError> {
    full_report_with(a, caps, DEFAULT_ESTIMATE_CONSTANT)
}

/// Every report field, each computed under `caps`.
///
/// The all-but-one fields use the target symbol with the smallest certified
/// bound (first in alphabet order on ties).
pub fn full_report_with(a: &Fsa, caps: &Caps, constant: u32) -> Result<BoundReport, BoundError> {
    if a.has_epsilon() {
        return Err(BoundError::NotEpsilonFree);
    }
    let measure = |r: Result<u64, BoundError>| -> Result<Measure, BoundError> {
        match r {
            Ok(v) => Ok(Measure::Value(v)),
            Err(BoundError::Bool(e @ BoolError::RangeCapExceeded { .. })) => Ok(e.into()),
            Err(e) => Err(e),
        }
    };

    let subset_size = match subset_construct(a, caps.subset) {
        Ok(ss) => Measure::Value(ss.len() as u64),
        Err(_) => Measure::Capped { cap: caps.subset },
    };
    let (subset_complexity, witness) = match subset_complexity(a, caps) {
        Ok(sc) => (sc.value, sc.witness),
        Err(BoundError::Bool(e)) => (e.into(), Vec::new()),
        Err(BoundError::TooManySymbols { symbols, max }) => (Measure::TooManySymbols { symbols, max }, Vec::new()),
        Err(e) => return Err(e),
    };

    let mut best: Option<(Measure, usize)> = None;
    for (s, name) in a.alphabet().iter().enumerate() {
        let certified = match all_but_one_bound_with(a, name, caps, constant) {
            Ok(r) => Measure::Value(r.certified),
            Err(BoundError::Bool(e)) => e.into(),
            Err(e) => return Err(e),
        };
        let better = match (&best, &certified) {
            (None, _) => true,
            (Some((Measure::Value(b), ..)), Measure::Value(v)) => v < b,
            (Some((b, ..)), Measure::Value(_)) => !b.is_value(),
            _ => false,
        };
        if better {
            best = Some((certified, s));
        }
    }
    let (all_but_one_certified, all_but_one_target, all_but_one_estimate) = match best {
        Some((c, t)) => (Some(c), Some(a.symbol_name(t).to_string()), Some(estimate(a, t, constant))),
        None => (None, None, None),
    };

    let per_symbol = (0..a.alphabet().len())
        .map(|s| {
            let m = a.transition_matrix(s);
            SymbolStats {
                symbol: a.symbol_name(s).to_string(),
                rank: rank_gf2(&m),
                range: m.range_size(caps.range).map_or_else(Measure::from, |r| Measure::Value(r as u64)),
                cyclicity: PrecedenceGraph::from_matrix(&m).cyclicity(),
            }
        })
        .collect();

    Ok(BoundReport {
        n: a.state_count(),
        alphabet: a.alphabet().to_vec(),
        subset_size,
        monoid_bound: monoid_bound(a, caps.monoid)?,
        range_bound: measure(range_bound(a, caps.range))?,
        subset_complexity,
        subset_complexity_witness: witness.iter().map(|&s| a.symbol_name(s).to_string()).collect(),
        all_but_one_certified,
        all_but_one_target,
        all_but_one_estimate,
        all_but_one_constant: constant,
        per_symbol,
    })
}
