//! Acceptance criteria, one PASS/FAIL line each.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subsetcx::automaton::{parse_fsa, Fsa};
use subsetcx::boolean::{rank_gf2, BoolMatrix};
use subsetcx::bounds::{monoid_bound, range_bound, subset_complexity, unary_monoid_bounds, Caps, Measure};
use subsetcx::determinize::{check_brzozowski, is_universal, state_complexity, subset_construct, DEFAULT_MAX_STATES};
use subsetcx::generators::{
    gen_meyer_fischer, gen_mf_gadget, gen_modified_moore, gen_moore, gen_random, gen_union_gadget, gen_universal,
    RandomNfaSpec,
};

const MAX: usize = DEFAULT_MAX_STATES;

type Verdict = (bool, String);

fn universal_base() -> Fsa {
    parse_fsa("p a q\np b q\nq a p\nq b p\n@initial p\n@final p\n@final q\n").unwrap()
}

// Σ* aaa Σ*
fn non_universal_base() -> Fsa {
    parse_fsa("q1 a q1\nq1 b q1\nq1 a q2\nq2 a q3\nq3 a q4\nq4 a q4\nq4 b q4\n@initial q1\n@final q4\n").unwrap()
}

fn families() -> Vec<Fsa> {
    let mut v = vec![gen_universal(), universal_base(), non_universal_base()];
    for n in 2..=8 {
        v.push(gen_moore(n).unwrap());
        v.push(gen_meyer_fischer(n).unwrap());
        v.push(gen_modified_moore(n).unwrap());
    }
    for base in [gen_universal(), universal_base(), non_universal_base()] {
        v.push(gen_union_gadget(&base).unwrap());
        for t in [4, 6] {
            v.push(gen_mf_gadget(&base, t).unwrap());
        }
    }
    v
}

fn soundness_corpus() -> Vec<Fsa> {
    let mut v = common::random_corpus(1000, 7, 3, 0x5eed);
    v.extend(families());
    v
}

fn unary_corpus() -> Vec<Fsa> {
    common::random_corpus(500, 6, 1, 0x0a1)
}

fn codeterministic_corpus() -> Vec<Fsa> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb20);
    (0..200)
        .map(|_| {
            let spec = RandomNfaSpec {
                states: rng.gen_range(1..=8),
                symbols: rng.gen_range(1..=3),
                final_density: rng.gen_range(0.2..0.7),
                seed: rng.gen(),
                force_codeterministic: true,
                ..Default::default()
            };
            gen_random(&spec).unwrap()
        })
        .collect()
}

fn total_corpus() -> Vec<Fsa> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x707);
    (0..300)
        .map(|_| {
            let spec = RandomNfaSpec {
                states: rng.gen_range(1..=4),
                symbols: 2,
                density: rng.gen_range(0.2..0.7),
                initial_density: rng.gen_range(0.3..0.9),
                final_density: rng.gen_range(0.3..1.0),
                seed: rng.gen(),
                force_total: true,
                ..Default::default()
            };
            gen_random(&spec).unwrap()
        })
        .collect()
}

fn c1_moore() -> Verdict {
    let start = Instant::now();
    let bad: Vec<String> = (2..=10)
        .filter_map(|n| {
            let sc = state_complexity(&gen_moore(n).unwrap(), MAX).unwrap();
            (sc != 1 << n).then(|| format!("n={n}: {sc}"))
        })
        .collect();
    let secs = start.elapsed().as_secs_f64();
    (
        bad.is_empty() && secs < 30.0,
        format!("n=2..10 all 2^n, {secs:.2}s (limit 30s); mismatches {bad:?}"),
    )
}

fn c2_meyer_fischer() -> Verdict {
    let bad: Vec<String> = (2..=8)
        .filter_map(|n| {
            let sc = state_complexity(&gen_meyer_fischer(n).unwrap(), MAX).unwrap();
            (sc != 1 << n).then(|| format!("n={n}: {sc}"))
        })
        .collect();
    (bad.is_empty(), format!("n=2..8; mismatches {bad:?}"))
}

fn c3_subset_complexity(corpus: &[Fsa]) -> Verdict {
    let caps = Caps::default();
    let mut violations = 0;
    let mut oracle_mismatch = 0;
    for a in corpus {
        let ss = subset_construct(a, MAX).unwrap().len();
        if ss != common::reachable_subsets(a).len() {
            oracle_mismatch += 1;
        }
        match subset_complexity(a, &caps).unwrap().value {
            Measure::Value(v) if ss as u64 <= v => {}
            _ => violations += 1,
        }
    }
    (
        violations == 0 && oracle_mismatch == 0,
        format!(
            "{} automata, {violations} violations, {oracle_mismatch} subset-size oracle mismatches",
            corpus.len()
        ),
    )
}

fn c4_lemmas(corpus: &[Fsa]) -> Verdict {
    let (mut monoid_bad, mut range_bad, mut capped) = (0, 0, 0);
    for a in corpus {
        let ss = subset_construct(a, MAX).unwrap().len() as u64;
        match monoid_bound(a, Caps::default().monoid).unwrap() {
            Measure::Value(m) if ss > m => monoid_bad += 1,
            Measure::Value(_) => {}
            _ => capped += 1,
        }
        if ss > range_bound(a, Caps::default().range).unwrap() {
            range_bad += 1;
        }
    }
    (
        monoid_bad == 0 && range_bad == 0,
        format!(
            "{} automata, monoid violations {monoid_bad} ({capped} capped), range violations {range_bad}",
            corpus.len()
        ),
    )
}

fn c5_modified_moore() -> Verdict {
    let mut failures = Vec::new();
    for n in 3..=12 {
        let m = gen_modified_moore(n).unwrap();
        let sc = subset_complexity(&m, &Caps::default()).unwrap();
        let limit = (3 * n * n + 3 * n) as u64;
        let t = m.transition_matrices();
        let ab = t[0].multiply(&t[1]).unwrap();
        let ba = t[1].multiply(&t[0]).unwrap();
        let mut why = Vec::new();
        match sc.value.value() {
            Some(v) if v <= limit => {}
            _ => why.push(format!("value {} > {limit}", sc.value)),
        }
        if sc.witness != [0, 1] {
            let names: Vec<&str> = sc.witness.iter().map(|&s| m.symbol_name(s)).collect();
            why.push(format!("witness {{{}}} (value {})", names.join(","), sc.value));
        }
        if ab != ba {
            why.push("TaTb != TbTa".into());
        }
        if !t[0].pow(n).is_zero() {
            why.push("Ta^n != 0".into());
        }
        if t[1].pow(n - 1) != t[1].pow(n) {
            why.push("Tb^(n-1) != Tb^n".into());
        }
        if !why.is_empty() {
            failures.push(format!("n={n}: {}", why.join(", ")));
        }
    }
    (failures.is_empty(), format!("n=3..12; failures: {}", failures.join("; ")))
}

fn c6_unary(corpus: &[Fsa]) -> Verdict {
    let (mut violations, mut oracle) = (0, 0);
    for a in corpus {
        let b = unary_monoid_bounds(a, Caps::default().monoid).unwrap();
        let m = common::matrix(a, 0);
        if b.exact.value() != Some(common::monoid_size(a.state_count(), &[m.clone()]) as u64)
            || b.lower != common::cyclicity(&m)
        {
            oracle += 1;
        }
        if b.holds() != Some(true) {
            violations += 1;
        }
    }
    (
        violations == 0 && oracle == 0,
        format!("{} unary automata, {violations} violations, {oracle} oracle mismatches", corpus.len()),
    )
}

fn c7_rank_range() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a4);
    let (mut violations, mut oracle) = (0, 0);
    for _ in 0..500 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.05..0.7);
        let rows: Vec<Vec<bool>> = (0..n).map(|_| (0..n).map(|_| rng.gen_bool(p)).collect()).collect();
        let m = BoolMatrix::from_entries(
            n,
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| rows[i][j]),
        );
        let rank = rank_gf2(&m);
        let range = m.range_size(n).unwrap();
        if rank != common::rank_gf2(&rows) || range != common::range_size(&rows) {
            oracle += 1;
        }
        if rank > range {
            violations += 1;
        }
    }
    (
        violations == 0 && oracle == 0,
        format!("500 matrices, {violations} violations, {oracle} oracle mismatches"),
    )
}

fn c8_brzozowski(corpus: &[Fsa]) -> Verdict {
    let mut bad = 0;
    for a in corpus {
        let ok = check_brzozowski(a, MAX).unwrap().holds() == Some(true)
            && subset_construct(a, MAX).unwrap().len() == common::minimal_dfa_size(a);
        if !ok {
            bad += 1;
        }
    }
    (bad == 0, format!("{} trim co-deterministic NFAs, {bad} non-minimal", corpus.len()))
}

fn c9_mf_gadget() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;
    for t in [4usize, 6] {
        for (label, base, universal) in [
            ("universal", universal_base(), true),
            ("non-universal", non_universal_base(), false),
        ] {
            let before = subset_construct(&base.complete_with_dead_state(), MAX).unwrap().len();
            let after = subset_construct(&gen_mf_gadget(&base, t).unwrap(), MAX).unwrap().len();
            let extra = after - before;
            let good = if universal { extra == 2 } else { extra >= 1 << t };
            ok &= good;
            notes.push(format!("t={t} {label}: +{extra}"));
        }
    }
    (ok, notes.join(", "))
}

fn c10_union_gadget() -> Verdict {
    let u = state_complexity(&gen_union_gadget(&universal_base()).unwrap(), MAX).unwrap();
    let nu = state_complexity(&gen_union_gadget(&non_universal_base()).unwrap(), MAX).unwrap();
    (u == 3 && nu >= 16, format!("universal base: {u}, non-universal base: {nu} (>= 16)"))
}

fn c11_universality(corpus: &[Fsa]) -> Verdict {
    let (mut disagree, mut universal) = (0, 0);
    for a in corpus {
        let size = subset_construct(a, MAX).unwrap().len();
        let lib = is_universal(a, MAX).unwrap();
        universal += usize::from(lib);
        if lib != common::universal_by_enumeration(a, size) {
            disagree += 1;
        }
    }
    (
        disagree == 0,
        format!(
            "{} total NFAs ({universal} universal), {disagree} disagreements",
            corpus.len()
        ),
    )
}

fn c12_language(corpora: &[&[Fsa]]) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a6);
    let (mut automata, mut bad) = (0, 0);
    let mut extra = vec![];
    for n in 2..=10 {
        extra.push(gen_moore(n).unwrap());
    }
    for a in corpora.iter().flat_map(|c| c.iter()).chain(&extra) {
        automata += 1;
        let k = a.alphabet().len();
        let ss = subset_construct(a, MAX).unwrap();
        let sim = common::Sim::new(a);
        let mut words = common::words_up_to(k, 6);
        if k > 0 {
            for _ in 0..200 {
                let len = rng.gen_range(7..=24);
                words.push((0..len).map(|_| rng.gen_range(0..k)).collect());
            }
        }
        if words.iter().any(|w| ss.accepts(&common::word(w)) != sim.accepts(w)) {
            bad += 1;
        }
    }
    (bad == 0, format!("{automata} automata, {bad} with a disagreeing word"))
}

fn run(id: u32, name: &str, f: impl FnOnce() -> Verdict) -> bool {
    let start = Instant::now();
    let (pass, detail) = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        (false, format!("panicked: {msg}"))
    });
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!(
        "[{verdict}] {id:>2} {name}: {detail} [{:.2}s]",
        start.elapsed().as_secs_f64()
    );
    pass
}

fn main() -> ExitCode {
    let soundness = soundness_corpus();
    let unary = unary_corpus();
    let codet = codeterministic_corpus();
    let total = total_corpus();

    let results = [
        run(1, "Moore blow-up", c1_moore),
        run(2, "Meyer-Fischer blow-up", c2_meyer_fischer),
        run(3, "subset complexity soundness", || c3_subset_complexity(&soundness)),
        run(4, "monoid and range bound soundness", || c4_lemmas(&soundness)),
        run(5, "modified Moore claim", c5_modified_moore),
        run(6, "unary monoid sandwich", || c6_unary(&unary)),
        run(7, "rank below range size", c7_rank_range),
        run(8, "trim co-deterministic subset automaton is minimal", || c8_brzozowski(&codet)),
        run(9, "Meyer-Fischer gadget dichotomy", c9_mf_gadget),
        run(10, "union gadget dichotomy", c10_union_gadget),
        run(11, "universality oracle agreement", || c11_universality(&total)),
        run(12, "language preservation", || {
            c12_language(&[&soundness, &unary, &codet, &total])
        }),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
