use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::automata::{Dfa, Letter, OrderedAlphabet, StateId};
use crate::error::{Error, Result};

/// Canonical text form: states in breadth-first order from the initial
/// state, transitions sorted by state then letter.
pub fn render_dfa(d: &Dfa) -> String {
    let d = d.canonical();
    let mut out = String::new();
    let tokens: Vec<&str> = d.alphabet().letters().iter().map(Letter::as_str).collect();
    writeln!(out, "alphabet {}", tokens.join(" ")).unwrap();
    writeln!(out, "states {}", d.state_count()).unwrap();
    writeln!(out, "initial {}", d.initial()).unwrap();
    let finals: Vec<String> = d.finals().map(|q| q.to_string()).collect();
    if finals.is_empty() {
        out.push_str("final\n");
    } else {
        writeln!(out, "final {}", finals.join(" ")).unwrap();
    }
    for q in 0..d.state_count() {
        for &(s, t) in d.transitions(q) {
            writeln!(out, "trans {q} {} {t}", d.alphabet().letter(s)).unwrap();
        }
    }
    out
}

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format { line, msg: msg.into() }
}

/// Parses the text form. Lines starting with `#` and blank lines are
/// ignored; `alphabet`, `states`, `initial` and `final` must each appear once
/// before any `trans` line.
pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let mut alphabet: Option<OrderedAlphabet> = None;
    let mut states: Option<usize> = None;
    let mut initial: Option<(usize, StateId)> = None;
    let mut finals: Option<Vec<StateId>> = None;
    let mut transitions: Vec<(StateId, usize, StateId)> = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let key = fields.next().unwrap();
        let args: Vec<&str> = fields.collect();
        let count = |line| states.ok_or_else(|| format_err(line, "`states` must come first"));
        let state = |tok: &str, line: usize| -> Result<StateId> {
            let n = count(line)?;
            let q: StateId = tok
                .parse()
                .map_err(|_| format_err(line, format!("bad state id {tok:?}")))?;
            if q >= n {
                return Err(Error::UnknownState { line, state: q });
            }
            Ok(q)
        };
        match key {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(format_err(line, "repeated `alphabet` line"));
                }
                let letters = args
                    .iter()
                    .map(|t| Letter::new(*t))
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| format_err(line, e.to_string()))?;
                alphabet = Some(OrderedAlphabet::new(letters).map_err(|e| format_err(line, e.to_string()))?);
            }
            "states" => {
                if states.is_some() {
                    return Err(format_err(line, "repeated `states` line"));
                }
                let [n] = args[..] else { return Err(format_err(line, "`states` takes one count")) };
                states = Some(n.parse().map_err(|_| format_err(line, format!("bad state count {n:?}")))?);
            }
            "initial" => {
                if initial.is_some() {
                    return Err(format_err(line, "repeated `initial` line"));
                }
                let [q] = args[..] else { return Err(format_err(line, "`initial` takes one state")) };
                initial = Some((line, state(q, line)?));
            }
            "final" => {
                if finals.is_some() {
                    return Err(format_err(line, "repeated `final` line"));
                }
                finals = Some(args.iter().map(|q| state(q, line)).collect::<Result<_>>()?);
            }
            "trans" => {
                let al = alphabet.as_ref().ok_or_else(|| format_err(line, "`alphabet` must come first"))?;
                let [p, tok, q] = args[..] else {
                    return Err(format_err(line, "`trans` takes a state, a letter and a state"));
                };
                let p = state(p, line)?;
                let s = al
                    .sym_of(tok)
                    .map_err(|_| format_err(line, format!("letter {tok:?} is not in the alphabet")))?;
                let q = state(q, line)?;
                if !seen.insert((p, s)) {
                    return Err(Error::DuplicateTransition { line });
                }
                transitions.push((p, s, q));
            }
            other => return Err(format_err(line, format!("unknown keyword {other:?}"))),
        }
    }
    let end = text.lines().count() + 1;
    let alphabet = alphabet.ok_or_else(|| format_err(end, "missing `alphabet` line"))?;
    let n = states.ok_or_else(|| format_err(end, "missing `states` line"))?;
    let (_, initial) = initial.ok_or_else(|| format_err(end, "missing `initial` line"))?;
    let finals = finals.ok_or_else(|| format_err(end, "missing `final` line"))?;
    Dfa::new(alphabet, n, initial, &finals, &transitions)
}

pub fn read_dfa(path: &Path) -> Result<Dfa> {
    parse_dfa(&fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?)
}

pub fn write_dfa(path: &Path, d: &Dfa) -> Result<()> {
    fs::write(path, render_dfa(d)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
