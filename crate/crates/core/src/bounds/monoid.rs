use std::collections::{HashSet, VecDeque};

use crate::automaton::{Fsa, SymbolId};
use crate::boolean::{BoolError, BoolMatrix};

/// Default ceiling on the number of monoid elements enumerated.
pub const DEFAULT_MONOID_CAP: usize = 100_000;

/// The monoid generated by a set of Boolean matrices, always including the
/// identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidClosure {
    /// Elements in breadth-first discovery order, identity first.
    pub elements: Vec<BoolMatrix>,
    /// Symbol indices of the generators, parallel to `generators`.
    pub symbols: Vec<SymbolId>,
    pub generators: Vec<BoolMatrix>,
    /// The cap in force when enumeration stopped early.
    pub capped: Option<usize>,
}

impl MonoidClosure {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_capped(&self) -> bool {
        self.capped.is_some()
    }
}

/// Breadth-first closure of `{identity}` under right multiplication by each
/// generator, in generator order.
///
/// Stops as soon as a new element would push the count past `cap`; the
/// result then holds exactly `cap` elements and records the cap.
pub fn monoid_closure(n: usize, generators: &[BoolMatrix], cap: usize) -> Result<MonoidClosure, BoolError> {
    for g in generators {
        if g.dim() != n {
            return Err(BoolError::DimensionMismatch { left: n, right: g.dim() });
        }
    }
    let cap = cap.max(1);
    let identity = BoolMatrix::identity(n);
    let mut seen = HashSet::from([identity.clone()]);
    let mut elements = vec![identity];
    let mut queue = VecDeque::from([0]);
    let mut capped = None;
    'bfs: while let Some(i) = queue.pop_front() {
        for g in generators {
            let next = elements[i].multiply(g)?;
            if seen.contains(&next) {
                continue;
            }
            if elements.len() == cap {
                capped = Some(cap);
                break 'bfs;
            }
            seen.insert(next.clone());
            queue.push_back(elements.len());
            elements.push(next);
        }
    }
    Ok(MonoidClosure {
        elements,
        symbols: (0..generators.len()).collect(),
        generators: generators.to_vec(),
        capped,
    })
}

/// Closure of the transition matrices of the symbols in `symbols`.
pub fn symbol_closure(a: &Fsa, symbols: &[SymbolId], cap: usize) -> MonoidClosure {
    let gens: Vec<BoolMatrix> = symbols.iter().map(|&s| a.transition_matrix(s)).collect();
    let mut m = monoid_closure(a.state_count(), &gens, cap).expect("matrices of one automaton");
    m.symbols = symbols.to_vec();
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: usize) -> BoolMatrix {
        BoolMatrix::from_entries(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    #[test]
    fn no_generators_gives_identity() {
        let m = monoid_closure(3, &[], 10).unwrap();
        assert_eq!(m.elements, vec![BoolMatrix::identity(3)]);
        assert!(!m.is_capped());
    }

    #[test]
    fn cyclic_permutation_has_order_k() {
        for k in 1..8 {
            assert_eq!(monoid_closure(k, &[cycle(k)], 1000).unwrap().len(), k);
        }
    }

    #[test]
    fn nilpotent_shift() {
        let s = BoolMatrix::from_entries(3, [(0, 1), (1, 2)]);
        let m = monoid_closure(3, &[s.clone()], 100).unwrap();
        assert_eq!(m.len(), 4);
        assert!(m.elements.contains(&BoolMatrix::zeros(3)));
        assert!(m.elements.contains(&s.pow(2)));
    }

    #[test]
    fn cap_is_a_result_state() {
        let m = monoid_closure(5, &[cycle(5)], 3).unwrap();
        assert_eq!(m.capped, Some(3));
        assert_eq!(m.len(), 3);
        let m = monoid_closure(5, &[cycle(5)], 5).unwrap();
        assert_eq!(m.capped, None);
    }

    #[test]
    fn dimension_mismatch() {
        assert!(monoid_closure(2, &[cycle(3)], 10).is_err());
    }
}
