use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use serde_json::json;
use subsetcx::automaton::{parse_fsa, serialize_fsa, Fsa, FsaError, ParseError};
use subsetcx::bounds::{full_report, BoundError, Caps};
use subsetcx::determinize::{distinguishing_word, subset_construct, universality_witness, DeterminizeError};
use subsetcx::generators::{self, GenError, RandomNfaSpec};

use crate::{Family, Format, GlobalOpts};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BLOW_UP: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}: automaton has ε-transitions and --no-eps-removal is set", path.display())]
    Epsilon { path: PathBuf },
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Determinize(#[from] DeterminizeError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Fsa(#[from] FsaError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Determinize(DeterminizeError::BlowUp { .. }) => EXIT_BLOW_UP,
            _ => EXIT_USAGE,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn caps(g: &GlobalOpts) -> Caps {
    Caps {
        monoid: g.monoid_cap.get(),
        range: g.range_cap.get(),
        subset: g.max_states.get(),
    }
}

/// Reads an automaton from `path`, or from standard input when it is `-`.
fn read_fsa(path: &Path) -> Result<Fsa> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        s
    } else {
        fs::read_to_string(path).map_err(io_err)?
    };
    parse_fsa(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads an automaton and makes it ε-free.
fn load(g: &GlobalOpts, path: &Path) -> Result<Fsa> {
    let a = read_fsa(path)?;
    if !a.has_epsilon() {
        return Ok(a);
    }
    if g.no_eps_removal {
        return Err(CliError::Epsilon {
            path: path.to_path_buf(),
        });
    }
    Ok(a.remove_epsilon())
}

fn emit(g: &GlobalOpts, body: &str) -> Result<()> {
    match &g.out {
        Some(path) => fs::write(path, body).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn emit_json(g: &GlobalOpts, value: serde_json::Value) -> Result<()> {
    let mut body = serde_json::to_string_pretty(&value).expect("json value");
    body.push('\n');
    emit(g, &body)
}

pub fn gen(g: &GlobalOpts, family: &Family) -> Result<u8> {
    let a = match family {
        Family::Universal => generators::gen_universal(),
        Family::Moore { n } => generators::gen_moore(*n)?,
        Family::Mf { n } => generators::gen_meyer_fischer(*n)?,
        Family::MooreMod { n } => generators::gen_modified_moore(*n)?,
        Family::Random(r) => generators::gen_random(&RandomNfaSpec {
            states: r.n,
            symbols: r.sigma,
            density: r.density,
            initial_density: r.initial_density,
            final_density: r.final_density,
            seed: r.seed,
            force_trim: r.trim,
            force_total: r.total,
            force_codeterministic: r.codeterministic,
            max_retries: r.retries,
        })?,
        Family::GadgetUnion { input } => generators::gen_union_gadget(&load(g, input)?)?,
        Family::GadgetMf { input, t } => generators::gen_mf_gadget(&load(g, input)?, *t)?,
    };
    emit(g, &serialize_fsa(&a))?;
    Ok(EXIT_OK)
}

pub fn determinize(g: &GlobalOpts, input: &Path) -> Result<u8> {
    let ss = subset_construct(&load(g, input)?, g.max_states.get())?;
    eprintln!("states: {}", ss.len());
    emit(g, &serialize_fsa(&ss.to_fsa()))?;
    Ok(EXIT_OK)
}

pub fn minimize(g: &GlobalOpts, input: &Path) -> Result<u8> {
    let m = subset_construct(&load(g, input)?, g.max_states.get())?.to_dfa().minimize();
    eprintln!("states: {}", m.len());
    emit(g, &serialize_fsa(&m.to_fsa()))?;
    Ok(EXIT_OK)
}

pub fn state_complexity(g: &GlobalOpts, input: &Path) -> Result<u8> {
    let n = subsetcx::determinize::state_complexity(&load(g, input)?, g.max_states.get())?;
    match g.format {
        Format::Text => emit(g, &format!("{n}\n"))?,
        Format::Tree => emit_json(g, json!({ "state_complexity": n }))?,
    }
    Ok(EXIT_OK)
}

pub fn bounds(g: &GlobalOpts, input: &Path) -> Result<u8> {
    let report = full_report(&load(g, input)?, &caps(g))?;
    match g.format {
        Format::Text => emit(g, &report.to_text())?,
        Format::Tree => {
            let mut body = report.to_tree();
            body.push('\n');
            emit(g, &body)?
        }
    }
    Ok(EXIT_OK)
}

pub fn universal(g: &GlobalOpts, input: &Path) -> Result<u8> {
    let a = load(g, input)?;
    let witness = universality_witness(&a, g.max_states.get())?;
    let shown = witness.as_ref().map(|w| w.display(a.alphabet()));
    match (g.format, &shown) {
        (Format::Text, None) => emit(g, "universal\n")?,
        (Format::Text, Some(w)) => emit(g, &format!("not universal: {w}\n"))?,
        (Format::Tree, _) => emit_json(g, json!({ "universal": shown.is_none(), "witness": shown }))?,
    }
    Ok(if witness.is_none() { EXIT_OK } else { EXIT_FALSE })
}

pub fn equiv(g: &GlobalOpts, a: &Path, b: &Path) -> Result<u8> {
    let (a, b) = (load(g, a)?, load(g, b)?);
    let witness = distinguishing_word(&a, &b, g.max_states.get())?;
    let alphabet = a.with_symbols(b.alphabet())?.alphabet().to_vec();
    let shown = witness.as_ref().map(|w| w.display(&alphabet));
    match (g.format, &shown) {
        (Format::Text, None) => emit(g, "equivalent\n")?,
        (Format::Text, Some(w)) => emit(g, &format!("not equivalent: {w}\n"))?,
        (Format::Tree, _) => emit_json(g, json!({ "equivalent": shown.is_none(), "witness": shown }))?,
    }
    Ok(if witness.is_none() { EXIT_OK } else { EXIT_FALSE })
}
