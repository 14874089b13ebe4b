//! Brute-force oracles working from the raw transition set only.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subsetcx::automaton::{Fsa, Label, Word};
use subsetcx::generators::{gen_random, RandomNfaSpec};

pub type Subset = BTreeSet<usize>;

pub fn step(a: &Fsa, from: &Subset, sym: usize) -> Subset {
    a.transitions()
        .iter()
        .filter(|t| t.label == Label::Symbol(sym) && from.contains(&t.src))
        .map(|t| t.dst)
        .collect()
}

fn eps_closure(a: &Fsa, s: &Subset) -> Subset {
    let mut out = s.clone();
    let mut todo: Vec<usize> = s.iter().copied().collect();
    while let Some(p) = todo.pop() {
        for t in a.transitions() {
            if t.src == p && t.label == Label::Epsilon && out.insert(t.dst) {
                todo.push(t.dst);
            }
        }
    }
    out
}

/// Successor lists of an ε-free automaton, for fast repeated simulation.
pub struct Sim {
    succ: Vec<Vec<Vec<usize>>>,
    initial: Vec<usize>,
    finals: Vec<bool>,
}

impl Sim {
    pub fn new(a: &Fsa) -> Sim {
        let (n, k) = (a.state_count(), a.alphabet().len());
        let mut succ = vec![vec![Vec::new(); k]; n];
        for t in a.transitions() {
            match t.label {
                Label::Symbol(s) => succ[t.src][s].push(t.dst),
                Label::Epsilon => panic!("Sim needs an ε-free automaton"),
            }
        }
        let mut finals = vec![false; n];
        for &q in a.finals() {
            finals[q] = true;
        }
        Sim {
            succ,
            initial: a.initial().iter().copied().collect(),
            finals,
        }
    }

    pub fn accepts(&self, w: &[usize]) -> bool {
        let n = self.finals.len();
        let mut cur = vec![false; n];
        for &q in &self.initial {
            cur[q] = true;
        }
        for &s in w {
            let mut next = vec![false; n];
            for p in (0..n).filter(|&p| cur[p]) {
                for &q in &self.succ[p][s] {
                    next[q] = true;
                }
            }
            cur = next;
        }
        (0..n).any(|q| cur[q] && self.finals[q])
    }
}

/// Membership by direct simulation, ε-moves included.
pub fn accepts(a: &Fsa, w: &[usize]) -> bool {
    let mut cur = eps_closure(a, &a.initial().clone());
    for &s in w {
        cur = eps_closure(a, &step(a, &cur, s));
    }
    cur.iter().any(|q| a.finals().contains(q))
}

/// Accessible subsets of an ε-free automaton, in BFS order.
pub fn reachable_subsets(a: &Fsa) -> Vec<Subset> {
    let start: Subset = a.initial().clone();
    let mut seen = HashSet::from([start.clone()]);
    let mut order = vec![start];
    let mut i = 0;
    while i < order.len() {
        for s in 0..a.alphabet().len() {
            let next = step(a, &order[i], s);
            if seen.insert(next.clone()) {
                order.push(next);
            }
        }
        i += 1;
    }
    order
}

/// Minimal DFA size via Moore-style refinement over the reachable subsets.
pub fn minimal_dfa_size(a: &Fsa) -> usize {
    let subsets = reachable_subsets(a);
    let index: HashMap<&Subset, usize> = subsets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let k = a.alphabet().len();
    let delta: Vec<Vec<usize>> = subsets
        .iter()
        .map(|s| (0..k).map(|c| index[&step(a, s, c)]).collect())
        .collect();
    let mut class: Vec<usize> = subsets
        .iter()
        .map(|s| usize::from(s.iter().any(|q| a.finals().contains(q))))
        .collect();
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let next: Vec<usize> = (0..subsets.len())
            .map(|i| {
                let mut sig = vec![class[i]];
                sig.extend(delta[i].iter().map(|&j| class[j]));
                let len = ids.len();
                *ids.entry(sig).or_insert(len)
            })
            .collect();
        let before: HashSet<_> = class.iter().collect();
        if ids.len() == before.len() {
            return ids.len();
        }
        class = next;
    }
}

pub type Mat = Vec<Vec<bool>>;

pub fn matrix(a: &Fsa, sym: usize) -> Mat {
    let n = a.state_count();
    let mut m = vec![vec![false; n]; n];
    for t in a.transitions() {
        if t.label == Label::Symbol(sym) {
            m[t.src][t.dst] = true;
        }
    }
    m
}

pub fn mul(x: &Mat, y: &Mat) -> Mat {
    let n = x.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).any(|l| x[i][l] && y[l][j])).collect())
        .collect()
}

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect()
}

/// Monoid generated by `gens`, identity included, by saturation.
pub fn monoid_size(n: usize, gens: &[Mat]) -> usize {
    let mut seen = HashSet::from([identity(n)]);
    let mut todo = vec![identity(n)];
    while let Some(m) = todo.pop() {
        for g in gens {
            let p = mul(&m, g);
            if seen.insert(p.clone()) {
                todo.push(p);
            }
        }
    }
    seen.len()
}

/// Number of distinct images `v · m` over all 2^n vectors `v`.
pub fn range_size(m: &Mat) -> usize {
    let n = m.len();
    let mut images = HashSet::new();
    for v in 0u64..1 << n {
        let img: Vec<bool> = (0..n).map(|j| (0..n).any(|i| v >> i & 1 == 1 && m[i][j])).collect();
        images.insert(img);
    }
    images.len()
}

/// Rank over GF(2) by elimination on row bitmasks.
pub fn rank_gf2(m: &Mat) -> usize {
    let mut rows: Vec<u64> = m
        .iter()
        .map(|r| r.iter().enumerate().fold(0, |acc, (j, &b)| acc | (u64::from(b) << j)))
        .collect();
    let mut rank = 0;
    for bit in 0..64 {
        if let Some(p) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) {
            rows.swap(rank, p);
            for i in 0..rows.len() {
                if i != rank && rows[i] >> bit & 1 == 1 {
                    rows[i] ^= rows[rank];
                }
            }
            rank += 1;
        }
    }
    rank
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Lcm over strongly connected classes of the gcd of closed-walk lengths
/// up to n at any member, read off the diagonals of matrix powers.
pub fn cyclicity(m: &Mat) -> u64 {
    let n = m.len();
    let mut reach = m.clone();
    for l in 0..n {
        for i in 0..n {
            for j in 0..n {
                reach[i][j] = reach[i][j] || (reach[i][l] && reach[l][j]);
            }
        }
    }
    let mut period = vec![0u64; n];
    let mut p = identity(n);
    for k in 1..=n as u64 {
        p = mul(&p, m);
        for v in 0..n {
            if p[v][v] {
                period[v] = gcd(period[v], k);
            }
        }
    }
    let mut done = vec![false; n];
    let mut c = 1u64;
    for v in 0..n {
        if done[v] {
            continue;
        }
        // Every simple cycle of the class passes through some member within n steps.
        let mut g = 0;
        for u in 0..n {
            if u == v || (reach[v][u] && reach[u][v]) {
                done[u] = true;
                g = gcd(g, period[u]);
            }
        }
        if g > 0 {
            c = c / gcd(c, g) * g;
        }
    }
    c
}

/// Seeded random NFA corpus with varied shape.
pub fn random_corpus(count: usize, max_n: usize, max_k: usize, seed: u64) -> Vec<Fsa> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let spec = RandomNfaSpec {
                states: rng.gen_range(1..=max_n),
                symbols: rng.gen_range(1..=max_k),
                density: rng.gen_range(0.05..0.6),
                initial_density: rng.gen_range(0.1..0.6),
                final_density: rng.gen_range(0.1..0.7),
                seed: rng.gen(),
                ..Default::default()
            };
            gen_random(&spec).expect("plain random generation never retries")
        })
        .collect()
}

/// All words up to `max_len`, shortest first.
pub fn words_up_to(k: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut level = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &level {
            for s in 0..k {
                let mut v: Vec<usize> = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    if k == 0 {
        out.truncate(1);
    }
    out
}

/// Universality by enumerating words level by level up to `max_len`,
/// merging words that reach the same state set.
pub fn universal_by_enumeration(a: &Fsa, max_len: usize) -> bool {
    let k = a.alphabet().len();
    let is_final = |s: &Subset| s.iter().any(|q| a.finals().contains(q));
    let start: Subset = a.initial().clone();
    if !is_final(&start) {
        return false;
    }
    let mut seen = HashSet::from([start.clone()]);
    let mut frontier = VecDeque::from([start]);
    for _ in 0..max_len {
        let mut next = VecDeque::new();
        for s in frontier {
            for c in 0..k {
                let t = step(a, &s, c);
                if !is_final(&t) {
                    return false;
                }
                if seen.insert(t.clone()) {
                    next.push_back(t);
                }
            }
        }
        frontier = next;
    }
    true
}

pub fn word(w: &[usize]) -> Word {
    Word::new(w.to_vec())
}
