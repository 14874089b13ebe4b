//! Line-oriented automaton text format.
//!
//! ```text
//! # comment
//! @alphabet a b
//! q0 a q1
//! q1 <eps> q0
//! @initial q0
//! @final q1
//! ```
//!
//! States and symbols are indexed in order of first appearance among
//! `@states`, `@alphabet` and transition lines. `@states` is only needed
//! when that order would otherwise differ from the intended one, or to
//! declare states that occur in no transition.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{Fsa, FsaBuilder, Label};

/// Token standing for ε in the symbol column.
pub const EPSILON_TOKEN: &str = "<eps>";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: unknown state `{state}`")]
    UnknownState { line: usize, state: String },
    #[error("line {line}: duplicate {directive} declaration")]
    DuplicateDeclaration { line: usize, directive: &'static str },
    #[error("line {line}: `{name}` declared twice")]
    DuplicateName { line: usize, name: String },
    #[error("document declares no states")]
    NoStates,
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Malformed { line, .. }
            | ParseError::UnknownState { line, .. }
            | ParseError::DuplicateDeclaration { line, .. }
            | ParseError::DuplicateName { line, .. } => Some(*line),
            ParseError::NoStates => None,
        }
    }
}

fn malformed(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        message: message.into(),
    }
}

pub fn parse_fsa(text: &str) -> Result<Fsa, ParseError> {
    let mut b = FsaBuilder::default();
    let mut alphabet_line = None;
    let mut states_line = None;
    // Resolved after the whole document is read, so order does not matter.
    let mut initial = Vec::new();
    let mut finals = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields[0] {
            "@alphabet" => {
                if alphabet_line.replace(line).is_some() {
                    return Err(ParseError::DuplicateDeclaration {
                        line,
                        directive: "@alphabet",
                    });
                }
                let mut listed = HashSet::new();
                for &sym in &fields[1..] {
                    if sym == EPSILON_TOKEN {
                        return Err(malformed(line, "ε cannot be an alphabet symbol"));
                    }
                    if !listed.insert(sym) {
                        return Err(ParseError::DuplicateName {
                            line,
                            name: sym.to_string(),
                        });
                    }
                    b.symbol_id(sym);
                }
            }
            "@states" => {
                if states_line.replace(line).is_some() {
                    return Err(ParseError::DuplicateDeclaration {
                        line,
                        directive: "@states",
                    });
                }
                let mut listed = HashSet::new();
                for &q in &fields[1..] {
                    if !listed.insert(q) {
                        return Err(ParseError::DuplicateName {
                            line,
                            name: q.to_string(),
                        });
                    }
                    b.state_id(q);
                }
            }
            "@initial" | "@final" => {
                let [_, q] = fields[..] else {
                    return Err(malformed(line, format!("{} takes exactly one state", fields[0])));
                };
                if fields[0] == "@initial" {
                    initial.push((line, q));
                } else {
                    finals.push((line, q));
                }
            }
            d if d.starts_with('@') => {
                return Err(malformed(line, format!("unknown directive `{d}`")));
            }
            _ => {
                let [src, sym, dst] = fields[..] else {
                    return Err(malformed(
                        line,
                        format!("expected `src sym dst`, found {} fields", fields.len()),
                    ));
                };
                if dst.starts_with(['@', '#']) {
                    return Err(malformed(line, format!("invalid state name `{dst}`")));
                }
                let label = (sym != EPSILON_TOKEN).then_some(sym);
                b.add_transition(src, label, dst);
            }
        }
    }

    for (line, q) in initial.iter().chain(&finals) {
        if !b.has_state(q) {
            return Err(ParseError::UnknownState {
                line: *line,
                state: q.to_string(),
            });
        }
    }
    for (_, q) in initial {
        b = b.initial(q);
    }
    for (_, q) in finals {
        b = b.final_state(q);
    }
    let fsa = b.build().map_err(|e| malformed(0, e.to_string()))?;
    if fsa.state_count() == 0 {
        return Err(ParseError::NoStates);
    }
    Ok(fsa)
}

/// Deterministic rendering: `@alphabet`, an optional `@states`, transitions
/// sorted by (source index, symbol index, target index), then `@initial`
/// and `@final` lines in state-index order.
pub fn serialize_fsa(a: &Fsa) -> String {
    let mut out = String::new();
    out.push_str("@alphabet");
    for s in a.alphabet() {
        out.push(' ');
        out.push_str(s);
    }
    out.push('\n');
    if needs_state_declaration(a) {
        out.push_str("@states");
        for q in a.states() {
            out.push(' ');
            out.push_str(q);
        }
        out.push('\n');
    }
    for t in a.transitions() {
        let sym = match t.label {
            Label::Epsilon => EPSILON_TOKEN,
            Label::Symbol(s) => a.symbol_name(s),
        };
        let _ = writeln!(out, "{} {} {}", a.state_name(t.src), sym, a.state_name(t.dst));
    }
    for &q in a.initial() {
        let _ = writeln!(out, "@initial {}", a.state_name(q));
    }
    for &q in a.finals() {
        let _ = writeln!(out, "@final {}", a.state_name(q));
    }
    out
}

pub(super) fn needs_state_declaration(a: &Fsa) -> bool {
    let mut next = 0;
    let mut seen = vec![false; a.state_count()];
    for t in a.transitions() {
        for q in [t.src, t.dst] {
            if !seen[q] {
                if q != next {
                    return true;
                }
                seen[q] = true;
                next += 1;
            }
        }
    }
    next != a.state_count()
}
