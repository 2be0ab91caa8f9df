//! Boolean algebra and structural edits on partial DFAs.

use std::collections::{HashMap, VecDeque};

use super::alphabet::{Letter, OrderedAlphabet, Sym, Word};
use super::dfa::{Dfa, StateId};
use super::minimize::minimize;
use super::nfa::Nfa;
use crate::error::{Error, Result};

const SINK: StateId = StateId::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
}

impl BoolOp {
    fn keep(self, a: bool, b: bool) -> bool {
        match self {
            BoolOp::Union => a || b,
            BoolOp::Intersection => a && b,
            BoolOp::Difference => a && !b,
        }
    }
}

/// Merges two sorted transition rows into `(sym, target_a, target_b)`.
fn merged_row(ra: &[(Sym, StateId)], rb: &[(Sym, StateId)], out: &mut Vec<(Sym, StateId, StateId)>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < ra.len() || j < rb.len() {
        match (ra.get(i), rb.get(j)) {
            (Some(&(sa, ta)), Some(&(sb, tb))) if sa == sb => {
                out.push((sa, ta, tb));
                i += 1;
                j += 1;
            }
            (Some(&(sa, ta)), Some(&(sb, _))) if sa < sb => {
                out.push((sa, ta, SINK));
                i += 1;
            }
            (Some(&(sa, ta)), None) => {
                out.push((sa, ta, SINK));
                i += 1;
            }
            (_, Some(&(sb, tb))) => {
                out.push((sb, SINK, tb));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
}

/// Reachable product of two automata over the same alphabet.
pub fn product(a: &Dfa, b: &Dfa, op: BoolOp) -> Result<Dfa> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let row_of = |d: &Dfa, q: StateId| -> Vec<(Sym, StateId)> {
        if q == SINK {
            Vec::new()
        } else {
            d.transitions(q).to_vec()
        }
    };
    let fin = |d: &Dfa, q: StateId| q != SINK && d.is_final(q);
    let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut pairs = vec![(a.initial(), b.initial())];
    ids.insert(pairs[0], 0);
    let mut finals = Vec::new();
    let mut delta = Vec::new();
    let mut buf = Vec::new();
    let mut head = 0;
    while head < pairs.len() {
        let (p, q) = pairs[head];
        head += 1;
        finals.push(op.keep(fin(a, p), fin(b, q)));
        merged_row(&row_of(a, p), &row_of(b, q), &mut buf);
        let mut row = Vec::with_capacity(buf.len());
        for &(s, tp, tq) in &buf {
            // once the left side is dead, intersection and difference cannot recover
            if tp == SINK && op != BoolOp::Union {
                continue;
            }
            let next = ids.len();
            let id = *ids.entry((tp, tq)).or_insert_with(|| {
                pairs.push((tp, tq));
                next
            });
            row.push((s, id));
        }
        delta.push(row);
    }
    Ok(Dfa::from_parts(a.alphabet().clone(), 0, finals, delta).trim())
}

pub fn union(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    product(a, b, BoolOp::Union)
}

pub fn intersection(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    product(a, b, BoolOp::Intersection)
}

pub fn difference(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    product(a, b, BoolOp::Difference)
}

/// `Σ*` minus the language of `d`, over `d`'s alphabet.
pub fn complement(d: &Dfa) -> Dfa {
    let n = d.state_count();
    let k = d.alphabet().len();
    let sink = n;
    let mut finals: Vec<bool> = (0..n).map(|q| !d.is_final(q)).collect();
    finals.push(true);
    let mut delta: Vec<Vec<(Sym, StateId)>> = (0..n)
        .map(|q| (0..k).map(|s| (s, d.step(q, s).unwrap_or(sink))).collect())
        .collect();
    delta.push((0..k).map(|s| (s, sink)).collect());
    Dfa::from_parts(d.alphabet().clone(), d.initial(), finals, delta).trim()
}

/// Renames the letters of `a` into `target`. Letters missing from `rename`
/// keep their own token. Letters of `target` outside the image get no
/// transitions.
pub fn embed(a: &Dfa, target: &OrderedAlphabet, rename: &HashMap<Letter, Letter>) -> Result<Dfa> {
    let mut map = Vec::with_capacity(a.alphabet().len());
    let mut used: HashMap<Sym, &Letter> = HashMap::new();
    for l in a.alphabet().letters() {
        let image = rename.get(l).unwrap_or(l);
        let s = target
            .sym(image)
            .ok_or_else(|| Error::LetterNotInTarget(image.to_string()))?;
        if used.insert(s, l).is_some() {
            return Err(Error::NonInjectiveRename(image.to_string()));
        }
        map.push(s);
    }
    Ok(a.relabel(target.clone(), &map))
}

/// Union of automata over pairwise disjoint alphabets. The merged alphabet
/// lists the letters of each part in part order.
pub fn disjoint_union(parts: &[Dfa]) -> Result<Dfa> {
    let mut letters: Vec<Letter> = Vec::new();
    let mut seen: HashMap<&Letter, ()> = HashMap::new();
    for p in parts {
        for l in p.alphabet().letters() {
            if seen.insert(l, ()).is_some() {
                return Err(Error::OverlappingAlphabets(l.to_string()));
            }
            letters.push(l.clone());
        }
    }
    let alphabet = OrderedAlphabet::new(letters)?;
    // state 0 is the new initial state
    let mut finals = vec![false];
    let mut delta: Vec<Vec<(Sym, StateId)>> = vec![Vec::new()];
    let mut sym_offset = 0;
    for p in parts {
        let offset = delta.len();
        for q in 0..p.state_count() {
            finals.push(p.is_final(q));
            delta.push(
                p.transitions(q)
                    .iter()
                    .map(|&(s, t)| (s + sym_offset, t + offset))
                    .collect(),
            );
        }
        finals[0] |= p.is_final(p.initial());
        let init_row: Vec<_> = delta[offset + p.initial()].clone();
        delta[0].extend(init_row);
        sym_offset += p.alphabet().len();
    }
    Ok(Dfa::from_parts(alphabet, 0, finals, delta).trim())
}

/// `(L(d) \ remove) ∪ add`. Letters of `add` that are new are appended to
/// the alphabet in order of first appearance.
pub fn modify_finite(d: &Dfa, add: &[Vec<Letter>], remove: &[Vec<Letter>]) -> Result<Dfa> {
    let mut fresh: Vec<Letter> = Vec::new();
    for w in add {
        for l in w {
            if !d.alphabet().contains(l) && !fresh.contains(l) {
                fresh.push(l.clone());
            }
        }
    }
    let alphabet = d.alphabet().extended(&fresh)?;
    let base = d.relabel(alphabet.clone(), &(0..d.alphabet().len()).collect::<Vec<_>>());
    let render = |w: &[Letter]| w.iter().map(Letter::as_str).collect::<Vec<_>>().join(" ");
    let mut removed = Vec::with_capacity(remove.len());
    for w in remove {
        let syms = alphabet.encode_letters(w)?;
        if !base.accepts_syms(&syms) {
            return Err(Error::WordAbsent(render(w)));
        }
        removed.push(syms);
    }
    let mut added = Vec::with_capacity(add.len());
    for w in add {
        let syms = alphabet.encode_letters(w)?;
        if base.accepts_syms(&syms) {
            return Err(Error::WordAlreadyPresent(render(w)));
        }
        added.push(syms);
    }
    let mut out = base;
    if !removed.is_empty() {
        out = difference(&out, &Dfa::from_words(alphabet.clone(), &removed))?;
    }
    if !added.is_empty() {
        out = union(&out, &Dfa::from_words(alphabet, &added))?;
    }
    Ok(out)
}

/// Words whose letter at position `i + 1` from the right is `sigma`
/// (`Σ* σ Σ^i`).
pub fn position_pattern(alphabet: &OrderedAlphabet, sigma: &Letter, i: usize) -> Result<Dfa> {
    let s = alphabet
        .sym(sigma)
        .ok_or_else(|| Error::UnknownLetter(sigma.to_string()))?;
    let mut n = Nfa::new(alphabet.clone(), i + 2);
    n.add_initial(0)?;
    for t in 0..alphabet.len() {
        n.add_transition(0, t, 0)?;
        for k in 1..=i {
            n.add_transition(k, t, k + 1)?;
        }
    }
    n.add_transition(0, s, 1)?;
    n.set_final(i + 1, true)?;
    Ok(minimize(&n.determinize()))
}

/// Words where `sigma` occurs among the last `window` letters; the same
/// language as the union of `position_pattern(sigma, i)` for `i < window`,
/// built directly with `window + 1` states.
pub fn recent_occurrence(alphabet: &OrderedAlphabet, sigma: &Letter, window: usize) -> Result<Dfa> {
    let s = alphabet
        .sym(sigma)
        .ok_or_else(|| Error::UnknownLetter(sigma.to_string()))?;
    // state k < window: k letters read since the last sigma; state `window`: none recently
    let far = window;
    let finals = (0..=window).map(|k| k < window).collect();
    let delta = (0..=window)
        .map(|k| {
            (0..alphabet.len())
                .map(|t| if t == s { (t, 0) } else { (t, (k + 1).min(far)) })
                .collect()
        })
        .collect();
    Ok(minimize(&Dfa::from_parts(alphabet.clone(), far, finals, delta)))
}

/// `L(d) ∩ Σ^{≥ min_len}`.
pub fn restrict_min_length(d: &Dfa, min_len: usize) -> Dfa {
    let mut ids: HashMap<(StateId, usize), StateId> = HashMap::new();
    let mut pairs = vec![(d.initial(), 0)];
    ids.insert(pairs[0], 0);
    let mut finals = Vec::new();
    let mut delta = Vec::new();
    let mut head = 0;
    while head < pairs.len() {
        let (q, len) = pairs[head];
        head += 1;
        finals.push(d.is_final(q) && len >= min_len);
        let next_len = (len + 1).min(min_len);
        let mut row = Vec::new();
        for &(s, t) in d.transitions(q) {
            let next = ids.len();
            let id = *ids.entry((t, next_len)).or_insert_with(|| {
                pairs.push((t, next_len));
                next
            });
            row.push((s, id));
        }
        delta.push(row);
    }
    Dfa::from_parts(d.alphabet().clone(), 0, finals, delta).trim()
}

/// Outcome of a language equivalence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equivalent,
    /// A shortest word of the symmetric difference, radix-least among the
    /// shortest, over the first automaton's alphabet.
    Differ(Word),
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::Equivalent)
    }
}

/// Language equivalence over the same token set (orders may differ; the
/// counterexample follows `a`'s order).
pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<Verdict> {
    if !a.alphabet().same_tokens(b.alphabet()) {
        return Err(Error::AlphabetMismatch);
    }
    let b = b.with_order(a.alphabet())?;
    let fin = |d: &Dfa, q: StateId| q != SINK && d.is_final(q);
    let mut parent: HashMap<(StateId, StateId), Option<((StateId, StateId), Sym)>> = HashMap::new();
    let start = (a.initial(), b.initial());
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    let mut buf = Vec::new();
    while let Some(pair) = queue.pop_front() {
        let (p, q) = pair;
        if fin(a, p) != fin(&b, q) {
            let mut word = Vec::new();
            let mut cur = pair;
            while let Some(Some((prev, s))) = parent.get(&cur) {
                word.push(*s);
                cur = *prev;
            }
            word.reverse();
            return Ok(Verdict::Differ(word));
        }
        let ra = if p == SINK { &[][..] } else { a.transitions(p) };
        let rb = if q == SINK { &[][..] } else { b.transitions(q) };
        merged_row(ra, rb, &mut buf);
        for &(s, tp, tq) in &buf {
            let next = (tp, tq);
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                e.insert(Some((pair, s)));
                queue.push_back(next);
            }
        }
    }
    Ok(Verdict::Equivalent)
}
