use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::GenError;
use crate::automaton::{Fsa, Label, Transition};

pub const DEFAULT_RETRIES: usize = 100;

/// Parameters of a seeded random NFA.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomNfaSpec {
    pub states: usize,
    pub symbols: usize,
    /// Probability of each potential transition `(p, a, q)`.
    pub density: f64,
    pub initial_density: f64,
    pub final_density: f64,
    pub seed: u64,
    pub force_trim: bool,
    pub force_total: bool,
    pub force_codeterministic: bool,
    pub max_retries: usize,
}

impl Default for RandomNfaSpec {
    fn default() -> Self {
        RandomNfaSpec {
            states: 4,
            symbols: 2,
            density: 0.3,
            initial_density: 0.3,
            final_density: 0.3,
            seed: 0,
            force_trim: false,
            force_total: false,
            force_codeterministic: false,
            max_retries: DEFAULT_RETRIES,
        }
    }
}

impl RandomNfaSpec {
    pub fn new(states: usize, symbols: usize, density: f64, seed: u64) -> Self {
        RandomNfaSpec {
            states,
            symbols,
            density,
            seed,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.states == 0 {
            return Err(GenError::InvalidSpec("state count must be at least 1".into()));
        }
        for (name, d) in [
            ("density", self.density),
            ("initial density", self.initial_density),
            ("final density", self.final_density),
        ] {
            if !(0.0..=1.0).contains(&d) {
                return Err(GenError::InvalidSpec(format!("{name} {d} is outside [0, 1]")));
            }
        }
        Ok(())
    }
}

fn symbol_names(k: usize) -> Vec<String> {
    (0..k)
        .map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("s{i}")
            }
        })
        .collect()
}

fn state_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("q{i}")).collect()
}

/// A random automaton, a pure function of `spec`.
///
/// With `force_codeterministic` the result is the reverse of a random
/// accessible, co-accessible total DFA with at most `spec.states` states,
/// and `density` and `initial_density` are ignored. Otherwise each
/// transition and each initial and final flag is drawn independently;
/// `force_trim` redraws until the trimmed automaton is non-empty.
/// `force_total` is applied last.
pub fn gen_random(spec: &RandomNfaSpec) -> Result<Fsa, GenError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let attempts = spec.max_retries.max(1);
    let mut result = None;
    for _ in 0..attempts {
        let candidate = if spec.force_codeterministic {
            random_trim_dfa(spec, &mut rng).map(|d| d.reverse())
        } else {
            let a = random_nfa(spec, &mut rng);
            if spec.force_trim {
                Some(a.trim()).filter(|t| t.state_count() > 0)
            } else {
                Some(a)
            }
        };
        if candidate.is_some() {
            result = candidate;
            break;
        }
    }
    let a = result.ok_or(GenError::RetriesExhausted { attempts })?;
    Ok(if spec.force_total {
        a.complete_with_dead_state()
    } else {
        a
    })
}

fn random_nfa(spec: &RandomNfaSpec, rng: &mut ChaCha8Rng) -> Fsa {
    let (n, k) = (spec.states, spec.symbols);
    let mut transitions = Vec::new();
    for p in 0..n {
        for a in 0..k {
            for q in 0..n {
                if rng.gen_bool(spec.density) {
                    transitions.push(Transition::new(p, Label::Symbol(a), q));
                }
            }
        }
    }
    let initial: Vec<usize> = (0..n).filter(|_| rng.gen_bool(spec.initial_density)).collect();
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(spec.final_density)).collect();
    Fsa::new(symbol_names(k), state_names(n), initial, finals, transitions).expect("generated names are valid")
}

// None when some accessible state is not co-accessible.
fn random_trim_dfa(spec: &RandomNfaSpec, rng: &mut ChaCha8Rng) -> Option<Fsa> {
    let (n, k) = (spec.states, spec.symbols);
    let mut transitions = Vec::new();
    for p in 0..n {
        for a in 0..k {
            transitions.push(Transition::new(p, Label::Symbol(a), rng.gen_range(0..n)));
        }
    }
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(spec.final_density)).collect();
    let d = Fsa::new(symbol_names(k), state_names(n), [0], finals, transitions).expect("generated names are valid");
    let d = d.restrict(&d.accessible_states());
    d.coaccessible_states().into_iter().all(|c| c).then_some(d)
}
