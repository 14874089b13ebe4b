//! Named automaton families, the reduction gadgets and seeded random NFAs.

mod random;

use crate::automaton::{Fsa, FsaBuilder, Label};

pub use random::{gen_random, RandomNfaSpec, DEFAULT_RETRIES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("{family} needs n >= {min}, got {n}")]
    TooSmall { family: &'static str, n: usize, min: usize },
    #[error("expected an ε-free automaton over {{a, b}}, found alphabet {{{found}}}")]
    WrongAlphabet { found: String },
    #[error("automaton has ε-transitions")]
    NotEpsilonFree,
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("no acceptable automaton after {attempts} attempts")]
    RetriesExhausted { attempts: usize },
}

fn require(family: &'static str, n: usize, min: usize) -> Result<(), GenError> {
    if n < min {
        return Err(GenError::TooSmall { family, n, min });
    }
    Ok(())
}

fn build(b: FsaBuilder) -> Fsa {
    b.build().expect("generated names are valid")
}

/// One state, initial and final, with an `a` and a `b` self-loop.
pub fn gen_universal() -> Fsa {
    build(
        Fsa::builder()
            .symbol("a")
            .symbol("b")
            .transition("q", "a", "q")
            .transition("q", "b", "q")
            .initial("q")
            .final_state("q"),
    )
}

fn moore_builder(n: usize, wrap: &str) -> FsaBuilder {
    let q = |i: usize| format!("q{i}");
    let mut b = Fsa::builder().symbol("a").symbol("b");
    if wrap != "a" {
        b = b.symbol(wrap);
    }
    b = b.states(&(1..=n).map(q).collect::<Vec<_>>());
    b = b.transition("q1", "b", "q1").transition("q1", "a", "q2");
    for i in 2..n {
        b = b.transition(&q(i), "a", &q(i + 1)).transition(&q(i), "b", &q(i + 1));
    }
    b.transition(&q(n), wrap, "q1")
        .transition(&q(n), wrap, "q2")
        .initial("q1")
        .final_state(&q(n))
}

/// The `n`-state Moore automaton over `{a, b}`.
pub fn gen_moore(n: usize) -> Result<Fsa, GenError> {
    require("moore", n, 2)?;
    Ok(build(moore_builder(n, "a")))
}

/// Moore with the two back edges out of `q_n` relabelled by a fresh symbol `c`.
pub fn gen_modified_moore(n: usize) -> Result<Fsa, GenError> {
    require("moore-mod", n, 2)?;
    Ok(build(moore_builder(n, "c")))
}

/// The `n`-state Meyer–Fischer automaton over `{a, b}`: an `a`-cycle
/// `p1 → … → pn → p1`, `b`-loops on `p2 … pn` and `b`-edges from each of
/// them back to `p1`. `p1` is the only initial and the only final state.
pub fn gen_meyer_fischer(n: usize) -> Result<Fsa, GenError> {
    require("mf", n, 2)?;
    let b = meyer_fischer_builder(Fsa::builder().symbol("a").symbol("b"), n, "p");
    Ok(build(b.initial("p1").final_state("p1")))
}

fn meyer_fischer_builder(mut b: FsaBuilder, n: usize, prefix: &str) -> FsaBuilder {
    let p = |i: usize| format!("{prefix}{i}");
    b = b.states(&(1..=n).map(p).collect::<Vec<_>>());
    for i in 1..=n {
        b = b.transition(&p(i), "a", &p(i % n + 1));
        if i > 1 {
            b = b.transition(&p(i), "b", &p(i)).transition(&p(i), "b", &p(1));
        }
    }
    b
}

fn check_binary(a: &Fsa) -> Result<(), GenError> {
    if a.has_epsilon() {
        return Err(GenError::NotEpsilonFree);
    }
    if a.alphabet().iter().any(|s| s != "a" && s != "b") {
        return Err(GenError::WrongAlphabet {
            found: a.alphabet().join(", "),
        });
    }
    Ok(())
}

fn copy_into(mut b: FsaBuilder, a: &Fsa, prefix: &str) -> FsaBuilder {
    let name = |q: usize| format!("{prefix}{}", a.state_name(q));
    b = b.states(&(0..a.state_count()).map(name).collect::<Vec<_>>());
    for t in a.transitions() {
        if let Label::Symbol(s) = t.label {
            b = b.transition(&name(t.src), a.symbol_name(s), &name(t.dst));
        }
    }
    b
}

/// Union of `Σ* # L(Moore)` and `L(a) # Σ*` over `{a, b, #}`.
///
/// States: `qu` (initial, universal), the Moore copy `moore.q1 …` of size
/// `max(|a|, 2)`, the copy `base.…` of `a`, and the final universal state
/// `pu`.
pub fn gen_union_gadget(a: &Fsa) -> Result<Fsa, GenError> {
    check_binary(a)?;
    let n = a.state_count().max(2);
    let moore = gen_moore(n)?;
    let mut b = Fsa::builder().symbol("a").symbol("b").symbol("#");
    b = b.transition("qu", "a", "qu").transition("qu", "b", "qu").initial("qu");
    b = copy_into(b, &moore, "moore.");
    b = b.transition("qu", "#", "moore.q1").final_state(&format!("moore.q{n}"));
    b = copy_into(b, a, "base.");
    for &q in a.initial() {
        b = b.initial(&format!("base.{}", a.state_name(q)));
    }
    for &q in a.finals() {
        b = b.transition(&format!("base.{}", a.state_name(q)), "#", "pu");
    }
    b = b.transition("pu", "a", "pu").transition("pu", "b", "pu").final_state("pu");
    Ok(build(b))
}

/// `a`, completed with a dead state, followed by a `t`-state Meyer–Fischer
/// automaton `mf.p1 … mf.pt`: `#` leads from every non-final state of `a`
/// to `mf.p1` and from every final state of `a` to every `mf` state.
///
/// `mf.p1` is final but not initial; `a`'s states become non-final.
pub fn gen_mf_gadget(a: &Fsa, t: usize) -> Result<Fsa, GenError> {
    check_binary(a)?;
    require("gadget-mf", t, 2)?;
    let a = a.with_symbols(&["a", "b"]).expect("valid symbols").complete_with_dead_state();
    let mut b = Fsa::builder().symbol("a").symbol("b").symbol("#");
    b = copy_into(b, &a, "base.");
    b = meyer_fischer_builder(b, t, "mf.p").final_state("mf.p1");
    for &q in a.initial() {
        b = b.initial(&format!("base.{}", a.state_name(q)));
    }
    for q in 0..a.state_count() {
        let src = format!("base.{}", a.state_name(q));
        if a.finals().contains(&q) {
            for i in 1..=t {
                b = b.transition(&src, "#", &format!("mf.p{i}"));
            }
        } else {
            b = b.transition(&src, "#", "mf.p1");
        }
    }
    Ok(build(b))
}
