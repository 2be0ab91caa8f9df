//! Eventually periodic per-length profiles of a DFA.
//!
//! Quantities such as "the set of states that accept some word of length m"
//! or "u_q(m) mod s for every q" evolve by a deterministic map from length m
//! to m + 1, so their sequence is a lasso: a tail followed by a cycle. The
//! constructions of `min_words` and `decimate` index lengths by lasso node.

use std::collections::HashMap;
use std::hash::Hash;

use crate::automata::Dfa;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub(crate) struct Lasso<T> {
    pub nodes: Vec<T>,
    /// First node of the cycle.
    pub tail: usize,
}

impl<T: Clone + Eq + Hash> Lasso<T> {
    pub fn build(start: T, mut step: impl FnMut(&T) -> T, budget: usize) -> Result<Self> {
        let mut index: HashMap<T, usize> = HashMap::new();
        let mut nodes = vec![start.clone()];
        index.insert(start, 0);
        loop {
            let next = step(nodes.last().unwrap());
            if let Some(&i) = index.get(&next) {
                return Ok(Lasso { nodes, tail: i });
            }
            if nodes.len() >= budget {
                return Err(Error::ResourceLimit(budget));
            }
            index.insert(next.clone(), nodes.len());
            nodes.push(next);
        }
    }
}

impl<T> Lasso<T> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Node holding the value for length `m`.
    #[cfg(test)]
    pub fn node(&self, m: usize) -> usize {
        if m < self.nodes.len() {
            m
        } else {
            let period = self.nodes.len() - self.tail;
            self.tail + (m - self.tail) % period
        }
    }

    /// Node for length `m + 1` given the node for `m`.
    pub fn succ(&self, i: usize) -> usize {
        if i + 1 < self.nodes.len() {
            i + 1
        } else {
            self.tail
        }
    }
}

/// Fixed-width bitset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn or_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    pub fn and_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= b;
        }
    }
}

/// `E(m)`: the states accepting at least one word of length `m`.
pub(crate) fn live_lasso(d: &Dfa, budget: usize) -> Result<Lasso<Bits>> {
    let n = d.state_count();
    let mut start = Bits::new(n);
    for q in d.finals() {
        start.set(q);
    }
    Lasso::build(
        start,
        |prev| {
            let mut next = Bits::new(n);
            for q in 0..n {
                if d.transitions(q).iter().any(|&(_, t)| prev.get(t)) {
                    next.set(q);
                }
            }
            next
        },
        budget,
    )
}

/// For each state q, the lasso nodes t with q ∈ E(t), as a bitset over nodes.
pub(crate) fn relevance(d: &Dfa, live: &Lasso<Bits>) -> Vec<Bits> {
    let mut out = vec![Bits::new(live.len()); d.state_count()];
    for (t, set) in live.nodes.iter().enumerate() {
        for (q, bits) in out.iter_mut().enumerate() {
            if set.get(q) {
                bits.set(t);
            }
        }
    }
    out
}

/// `{ p : succ(p) ∈ set }` over lasso nodes.
pub(crate) fn shift_back<T>(lasso: &Lasso<T>, set: &Bits) -> Bits {
    let mut out = Bits::new(lasso.len());
    for p in 0..lasso.len() {
        if set.get(lasso.succ(p)) {
            out.set(p);
        }
    }
    out
}

pub(crate) fn state_budget_check(count: usize, budget: usize) -> Result<()> {
    if count > budget {
        Err(Error::ResourceLimit(budget))
    } else {
        Ok(())
    }
}
