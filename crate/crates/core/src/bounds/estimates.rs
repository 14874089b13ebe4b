use num_bigint::BigUint;

use super::{symbol_closure, BoundError, Caps, Measure};
use crate::automaton::{Fsa, SymbolId};
use crate::boolean::{rank_gf2, PrecedenceGraph};

/// Largest alphabet for which every split is enumerated.
pub const MAX_SPLIT_SYMBOLS: usize = 16;

/// Default exponent constant `C` of the all-but-one estimate.
pub const DEFAULT_ESTIMATE_CONSTANT: u32 = 2;

fn require_epsilon_free(a: &Fsa) -> Result<(), BoundError> {
    if a.has_epsilon() {
        return Err(BoundError::NotEpsilonFree);
    }
    Ok(())
}

fn range_sizes(a: &Fsa, range_cap: usize) -> Result<Vec<u64>, BoundError> {
    (0..a.alphabet().len())
        .map(|s| Ok(a.transition_matrix(s).range_size(range_cap)? as u64))
        .collect()
}

fn closure_measure(a: &Fsa, symbols: &[SymbolId], cap: usize) -> Measure {
    let m = symbol_closure(a, symbols, cap);
    match m.capped {
        Some(cap) => Measure::Capped { cap },
        None => Measure::Value(m.len() as u64),
    }
}

/// Size of the full transition monoid.
pub fn monoid_bound(a: &Fsa, cap: usize) -> Result<Measure, BoundError> {
    require_epsilon_free(a)?;
    let all: Vec<SymbolId> = (0..a.alphabet().len()).collect();
    Ok(closure_measure(a, &all, cap))
}

/// `1 + Σ_w |range(T^(w))|`.
pub fn range_bound(a: &Fsa, range_cap: usize) -> Result<u64, BoundError> {
    require_epsilon_free(a)?;
    Ok(range_sizes(a, range_cap)?.iter().fold(1u64, |acc, &r| acc.saturating_add(r)))
}

/// Minimum over alphabet splits together with the split attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetComplexity {
    pub value: Measure,
    /// The monoid part of the minimizing split, in alphabet order.
    pub witness: Vec<SymbolId>,
}

/// `min_J (1 + Σ_{w∉J} |range(T^(w))|) · |M(J)|`, over every `J ⊆ Σ`.
///
/// Splits whose monoid hits the cap are skipped unless every split does.
/// Ties go to the smallest `J`, then the lexicographically first.
pub fn subset_complexity(a: &Fsa, caps: &Caps) -> Result<SubsetComplexity, BoundError> {
    require_epsilon_free(a)?;
    let k = a.alphabet().len();
    if k > MAX_SPLIT_SYMBOLS {
        return Err(BoundError::TooManySymbols {
            symbols: k,
            max: MAX_SPLIT_SYMBOLS,
        });
    }
    let ranges = range_sizes(a, caps.range)?;
    let mut splits: Vec<Vec<SymbolId>> = (0u32..1 << k)
        .map(|mask| (0..k).filter(|&s| mask >> s & 1 == 1).collect())
        .collect();
    splits.sort_by(|x: &Vec<usize>, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));

    let mut best: Option<(u64, Vec<SymbolId>)> = None;
    let mut first_capped = None;
    for j in splits {
        let Measure::Value(monoid) = closure_measure(a, &j, caps.monoid) else {
            first_capped.get_or_insert(j);
            continue;
        };
        let outside = (0..k)
            .filter(|s| !j.contains(s))
            .fold(1u64, |acc, s| acc.saturating_add(ranges[s]));
        let value = outside.saturating_mul(monoid);
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, j));
        }
    }
    Ok(match best {
        Some((v, witness)) => SubsetComplexity {
            value: Measure::Value(v),
            witness,
        },
        None => SubsetComplexity {
            value: Measure::Capped { cap: caps.monoid },
            witness: first_capped.unwrap_or_default(),
        },
    })
}

/// `c(G(A))`, `c(G(A)) + n² − 2n + 2` and the exact monoid size of a unary
/// automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnaryMonoidBounds {
    pub lower: u64,
    pub upper: u64,
    pub exact: Measure,
}

impl UnaryMonoidBounds {
    /// `None` when the exact size is unknown.
    pub fn holds(&self) -> Option<bool> {
        self.exact.value().map(|e| self.lower <= e && e <= self.upper)
    }
}

fn unary_upper(cyclicity: u64, n: usize) -> u64 {
    let n = n as u64;
    cyclicity.saturating_add(n * n + 2 - 2 * n)
}

fn matrix_cyclicity(a: &Fsa, s: SymbolId) -> u64 {
    PrecedenceGraph::from_matrix(&a.transition_matrix(s)).cyclicity()
}

pub fn unary_monoid_bounds(a: &Fsa, monoid_cap: usize) -> Result<UnaryMonoidBounds, BoundError> {
    require_epsilon_free(a)?;
    if a.alphabet().len() != 1 {
        return Err(BoundError::NotUnary(a.alphabet().len()));
    }
    let lower = matrix_cyclicity(a, 0);
    let b = UnaryMonoidBounds {
        lower,
        upper: unary_upper(lower, a.state_count()),
        exact: closure_measure(a, &[0], monoid_cap),
    };
    debug_assert_ne!(b.holds(), Some(false), "unary monoid sandwich violated: {b:?}");
    Ok(b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AllButOne {
    pub target: SymbolId,
    /// Sound upper bound on the subset automaton size.
    pub certified: u64,
    /// Asymptotic-form estimate; not a guaranteed bound.
    pub estimate: BigUint,
    pub constant: u32,
}

/// All-but-one bound for `target` with the default estimate constant.
pub fn all_but_one_bound(a: &Fsa, target: &str, caps: &Caps) -> Result<AllButOne, BoundError> {
    all_but_one_bound_with(a, target, caps, DEFAULT_ESTIMATE_CONSTANT)
}

/// Certified: `(1 + Σ_{b≠t} |range(T^(b))|) · min(|M({t})|, c + n² − 2n + 2)`.
///
/// Estimate: `|Σ| · (c + n²) · max_{b≠t} 2^(⌈rank(T^(b))²/4⌉ + C·rank(T^(b)))`,
/// where `c` is the cyclicity of the precedence graph of `T^(t)`.
pub fn all_but_one_bound_with(a: &Fsa, target: &str, caps: &Caps, constant: u32) -> Result<AllButOne, BoundError> {
    require_epsilon_free(a)?;
    let t = a
        .symbol_index(target)
        .ok_or_else(|| BoundError::UnknownSymbol(target.to_string()))?;
    let c = matrix_cyclicity(a, t);
    let mut outside = 1u64;
    for b in (0..a.alphabet().len()).filter(|&b| b != t) {
        outside = outside.saturating_add(a.transition_matrix(b).range_size(caps.range)? as u64);
    }
    let upper = unary_upper(c, a.state_count());
    let monoid = match closure_measure(a, &[t], caps.monoid) {
        Measure::Value(v) => v.min(upper),
        _ => upper,
    };

    Ok(AllButOne {
        target: t,
        certified: outside.saturating_mul(monoid),
        estimate: estimate(a, t, constant),
        constant,
    })
}

pub(super) fn estimate(a: &Fsa, t: SymbolId, constant: u32) -> BigUint {
    let k = a.alphabet().len();
    let n = a.state_count();
    let exponent = (0..k)
        .filter(|&b| b != t)
        .map(|b| {
            let r = rank_gf2(&a.transition_matrix(b)) as u64;
            (r * r).div_ceil(4) + constant as u64 * r
        })
        .max()
        .unwrap_or(0);
    BigUint::from(k) * (BigUint::from(matrix_cyclicity(a, t)) + BigUint::from(n * n)) << exponent
}
