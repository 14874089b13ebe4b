use std::collections::VecDeque;

use super::{subset_construct, DeterminizeError, SubsetAutomaton};
use crate::automaton::{Fsa, StateId, SymbolId, Word};

/// Size of the minimal DFA equivalent to `a`.
pub fn state_complexity(a: &Fsa, max_states: usize) -> Result<usize, DeterminizeError> {
    Ok(subset_construct(a, max_states)?.to_dfa().minimize().len())
}

/// Universality via the subset construction: after completing `a` with a
/// dead state, `a` is universal iff every discovered subset contains a
/// final state.
pub fn is_universal(a: &Fsa, max_states: usize) -> Result<bool, DeterminizeError> {
    Ok(universality_witness(a, max_states)?.is_none())
}

/// A word rejected by `a`, read off the discovery path to the first
/// subset without a final state; `None` when `a` is universal.
///
/// The word is shortest along discovery paths, not necessarily globally
/// shortest.
pub fn universality_witness(a: &Fsa, max_states: usize) -> Result<Option<Word>, DeterminizeError> {
    let ss = subset_construct(&a.complete_with_dead_state(), max_states)?;
    Ok((0..ss.len()).find(|&s| !ss.is_final(s)).map(|s| ss.witness(s)))
}

/// Language equality over the union of both alphabets.
pub fn equivalent(a: &Fsa, b: &Fsa, max_states: usize) -> Result<bool, DeterminizeError> {
    Ok(distinguishing_word(a, b, max_states)?.is_none())
}

/// A word in exactly one of the two languages, symbols indexed by the
/// union alphabet `a.alphabet()` followed by the symbols only `b` has.
///
/// Found by breadth-first search over the product of both subset
/// automata.
pub fn distinguishing_word(a: &Fsa, b: &Fsa, max_states: usize) -> Result<Option<Word>, DeterminizeError> {
    let (a, b) = unify_alphabets(a, b);
    let sa = subset_construct(&a, max_states)?;
    let sb = subset_construct(&b, max_states)?;
    Ok(product_search(&sa, &sb, a.alphabet().len()))
}

/// The union alphabet, returned as `a` and `b` both re-indexed over it.
pub(crate) fn unify_alphabets(a: &Fsa, b: &Fsa) -> (Fsa, Fsa) {
    let a2 = a.with_symbols(b.alphabet()).expect("symbols already validated");
    let b2 = relabel(b, a2.alphabet());
    (a2, b2)
}

fn relabel(b: &Fsa, alphabet: &[String]) -> Fsa {
    use crate::automaton::{Label, Transition};
    let map: Vec<SymbolId> = b
        .alphabet()
        .iter()
        .map(|s| alphabet.iter().position(|x| x == s).expect("superset alphabet"))
        .collect();
    Fsa::new(
        alphabet.to_vec(),
        b.states().to_vec(),
        b.initial().iter().copied(),
        b.finals().iter().copied(),
        b.transitions().iter().map(|t| {
            let label = match t.label {
                Label::Symbol(s) => Label::Symbol(map[s]),
                Label::Epsilon => Label::Epsilon,
            };
            Transition::new(t.src, label, t.dst)
        }),
    )
    .expect("relabelled automaton is valid")
}

fn product_search(sa: &SubsetAutomaton, sb: &SubsetAutomaton, k: usize) -> Option<Word> {
    let idx = |p: StateId, q: StateId| p * sb.len() + q;
    let mut parent: Vec<Option<(usize, SymbolId)>> = vec![None; sa.len() * sb.len()];
    let mut seen = vec![false; sa.len() * sb.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([(0, 0)]);
    while let Some((p, q)) = queue.pop_front() {
        if sa.is_final(p) != sb.is_final(q) {
            let mut symbols = Vec::new();
            let mut cur = idx(p, q);
            while let Some((prev, a)) = parent[cur] {
                symbols.push(a);
                cur = prev;
            }
            symbols.reverse();
            return Some(Word::new(symbols));
        }
        for a in 0..k {
            let (p2, q2) = (sa.next(p, a), sb.next(q, a));
            let j = idx(p2, q2);
            if !seen[j] {
                seen[j] = true;
                parent[j] = Some((idx(p, q), a));
                queue.push_back((p2, q2));
            }
        }
    }
    None
}

/// Outcome of checking that the subset construction is already minimal on
/// a trim co-deterministic automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BrzozowskiCheck {
    /// The automaton is not both trim and co-deterministic.
    NotApplicable,
    Checked { subset_size: usize, minimal_size: usize },
}

impl BrzozowskiCheck {
    /// `Some(true)` when checked and the sizes agree.
    pub fn holds(&self) -> Option<bool> {
        match *self {
            BrzozowskiCheck::NotApplicable => None,
            BrzozowskiCheck::Checked {
                subset_size,
                minimal_size,
            } => Some(subset_size == minimal_size),
        }
    }
}

pub fn check_brzozowski(a: &Fsa, max_states: usize) -> Result<BrzozowskiCheck, DeterminizeError> {
    if a.has_epsilon() {
        return Err(DeterminizeError::NotEpsilonFree);
    }
    if !(a.is_trim() && a.is_codeterministic()) {
        return Ok(BrzozowskiCheck::NotApplicable);
    }
    let ss = subset_construct(a, max_states)?;
    Ok(BrzozowskiCheck::Checked {
        subset_size: ss.len(),
        minimal_size: ss.to_dfa().minimize().len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::parse_fsa;

    fn universal() -> Fsa {
        parse_fsa("q a q\nq b q\n@initial q\n@final q\n").unwrap()
    }

    #[test]
    fn universal_dfa_language_facts() {
        let u = universal();
        assert_eq!(state_complexity(&u, 10).unwrap(), 1);
        assert!(is_universal(&u, 10).unwrap());
        assert!(equivalent(&u, &u, 10).unwrap());
        assert_eq!(check_brzozowski(&u, 10).unwrap().holds(), Some(true));
    }

    #[test]
    fn no_final_states_minimizes_to_one() {
        let a = parse_fsa("p a q\nq b p\nq a q\n@initial p\n").unwrap();
        assert_eq!(state_complexity(&a, 10).unwrap(), 1);
    }

    #[test]
    fn all_final_total_is_universal() {
        let a = parse_fsa("p a q\np b p\nq a p\nq b q\nq a q\n@initial p\n@final p\n@final q\n").unwrap();
        assert!(is_universal(&a, 10).unwrap());
    }

    #[test]
    fn partial_automaton_is_not_universal() {
        let a = parse_fsa("p a p\n@alphabet a b\n@initial p\n@final p\n").unwrap();
        let w = universality_witness(&a, 10).unwrap().unwrap();
        assert!(!a.accepts(&w));
        assert_eq!(w.symbols(), &[1]);
    }

    #[test]
    fn equivalence_over_union_alphabet() {
        // Same language over {a}; b accepts extra words using `b`.
        let a = parse_fsa("p a p\n@initial p\n@final p\n").unwrap();
        let b = parse_fsa("p a p\np b p\n@initial p\n@final p\n").unwrap();
        let w = distinguishing_word(&a, &b, 10).unwrap().unwrap();
        assert_eq!(w.symbols(), &[1]);
        let a2 = parse_fsa("x a y\ny a x\nx a x\n@initial x\n@final x\n@final y\n").unwrap();
        assert!(equivalent(&a, &a2, 10).unwrap());
    }

    #[test]
    fn brzozowski_not_applicable_when_not_codeterministic() {
        let a = parse_fsa("p a q\nr a q\np a r\n@initial p\n@final q\n").unwrap();
        assert_eq!(check_brzozowski(&a, 10).unwrap(), BrzozowskiCheck::NotApplicable);
    }
}
