use std::collections::HashMap;

use super::profile::{relevance, state_budget_check, Bits, Lasso};
use crate::automata::{minimize, Dfa, StateId, Sym};
use crate::error::Result;

use super::min_words::DEFAULT_STATE_BUDGET;

/// Per-length profile used by decimation: `u_q(m) mod s` for all q, the
/// cumulative count `v(m) mod s`, and the set of states accepting a word of
/// length `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct CountProfile {
    counts: Vec<u32>,
    shorter: u32,
    live: Bits,
}

const DONT_CARE: u32 = u32::MAX;

/// Words of `L(d)` whose radix rank is congruent to `residue` modulo
/// `modulus`.
pub fn decimate(d: &Dfa, modulus: u32, residue: u32) -> Result<Dfa> {
    decimate_with_budget(d, modulus, residue, DEFAULT_STATE_BUDGET)
}

/// Decimation with an explicit cap on constructed states.
///
/// The rank of a word `w` of length `n` is
/// `v(n) + Σ_i Σ_{τ < w_i} u_{δ(q_{i-1}, τ)}(n - i)`. Reading left to right,
/// the remaining length is unknown, so every state carries one partial sum
/// per profile node, each entry assuming the remaining length has that node.
/// Entries for nodes at which the current DFA state cannot accept are
/// irrelevant and blanked. A word is accepted when its DFA state is final and
/// the entry for length 0 equals `residue`.
pub fn decimate_with_budget(d: &Dfa, modulus: u32, residue: u32, budget: usize) -> Result<Dfa> {
    assert!(modulus >= 1 && residue < modulus, "residue must lie in [0, modulus)");
    let d = d.trim();
    if modulus == 1 {
        return Ok(minimize(&d));
    }
    let n = d.state_count();
    let s = u64::from(modulus);
    let mut start = CountProfile { counts: vec![0; n], shorter: 0, live: Bits::new(n) };
    for q in d.finals() {
        start.counts[q] = 1;
        start.live.set(q);
    }
    let profile = Lasso::build(
        start,
        |prev| {
            let mut next = CountProfile { counts: vec![0; n], shorter: 0, live: Bits::new(n) };
            for q in 0..n {
                let mut sum = 0u64;
                for &(_, t) in d.transitions(q) {
                    sum += u64::from(prev.counts[t]);
                    if prev.live.get(t) {
                        next.live.set(q);
                    }
                }
                next.counts[q] = (sum % s) as u32;
            }
            next.shorter = ((u64::from(prev.shorter) + u64::from(prev.counts[d.initial()])) % s) as u32;
            next
        },
        budget,
    )?;
    let nodes = profile.len();
    let live = Lasso {
        nodes: profile.nodes.iter().map(|p| p.live.clone()).collect(),
        tail: profile.tail,
    };
    let rel = relevance(&d, &live);
    let mask = |q: StateId, mut v: Vec<u32>| {
        for (p, x) in v.iter_mut().enumerate() {
            if !rel[q].get(p) {
                *x = DONT_CARE;
            }
        }
        v
    };

    let init = mask(d.initial(), profile.nodes.iter().map(|p| p.shorter).collect());
    let mut ids: HashMap<(StateId, Vec<u32>), StateId> = HashMap::new();
    let mut states = vec![(d.initial(), init)];
    ids.insert(states[0].clone(), 0);
    let mut finals = Vec::new();
    let mut delta: Vec<Vec<(Sym, StateId)>> = Vec::new();
    let mut head = 0;
    let mut below_letter = vec![0u64; nodes];
    while head < states.len() {
        let (q, sums) = states[head].clone();
        head += 1;
        finals.push(d.is_final(q) && sums[0] == residue);
        below_letter.iter_mut().for_each(|x| *x = 0);
        let mut row = Vec::new();
        for &(sym, t) in d.transitions(q) {
            let mut next = vec![DONT_CARE; nodes];
            for (p, x) in next.iter_mut().enumerate() {
                if rel[t].get(p) {
                    let prev = sums[profile.succ(p)];
                    debug_assert_ne!(prev, DONT_CARE);
                    *x = ((u64::from(prev) + below_letter[p]) % s) as u32;
                }
            }
            for (p, acc) in below_letter.iter_mut().enumerate() {
                *acc = (*acc + u64::from(profile.nodes[p].counts[t])) % s;
            }
            let key = (t, next);
            let id = match ids.get(&key) {
                Some(&id) => id,
                None => {
                    let id = states.len();
                    state_budget_check(id + 1, budget)?;
                    ids.insert(key.clone(), id);
                    states.push(key);
                    id
                }
            };
            row.push((sym, id));
        }
        delta.push(row);
    }
    Ok(minimize(&Dfa::from_parts(d.alphabet().clone(), 0, finals, delta)))
}
