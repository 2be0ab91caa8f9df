use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::automata::{Dfa, StateId};

/// Memoized word counts of a DFA: `u_q(m)`, the number of words of length
/// `m` accepted from state `q`, and the cumulative count `v(n)` of accepted
/// words shorter than `n`. Rows are added on demand.
#[derive(Clone, Debug)]
pub struct CountTable {
    dfa: Arc<Dfa>,
    rows: Vec<Vec<BigUint>>,
    // below[n] = v(n); always rows.len() + 1 entries
    below: Vec<BigUint>,
}

impl CountTable {
    pub fn new(dfa: impl Into<Arc<Dfa>>) -> Self {
        let dfa = dfa.into();
        let row0 = (0..dfa.state_count())
            .map(|q| BigUint::from(u8::from(dfa.is_final(q))))
            .collect::<Vec<_>>();
        let below = vec![BigUint::zero(), row0[dfa.initial()].clone()];
        CountTable { dfa, rows: vec![row0], below }
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    /// Makes rows `0..=len` available.
    pub fn extend_to(&mut self, len: usize) {
        while self.rows.len() <= len {
            let prev = self.rows.last().expect("row 0 exists");
            let next: Vec<BigUint> = (0..self.dfa.state_count())
                .map(|q| {
                    self.dfa
                        .transitions(q)
                        .iter()
                        .fold(BigUint::zero(), |acc, &(_, t)| acc + &prev[t])
                })
                .collect();
            let v = self.below.last().unwrap() + &next[self.dfa.initial()];
            self.below.push(v);
            self.rows.push(next);
        }
    }

    /// `u_q(m)`.
    pub fn from_state(&mut self, q: StateId, m: usize) -> &BigUint {
        self.extend_to(m);
        &self.rows[m][q]
    }

    /// Number of accepted words of length `n`.
    pub fn density(&mut self, n: usize) -> BigUint {
        let init = self.dfa.initial();
        self.from_state(init, n).clone()
    }

    /// Number of accepted words of length strictly less than `n`.
    pub fn shorter_than(&mut self, n: usize) -> BigUint {
        if n > 0 {
            self.extend_to(n - 1);
        }
        self.below[n].clone()
    }

    /// Number of accepted words of length at most `max_len`.
    pub fn up_to(&mut self, max_len: usize) -> BigUint {
        self.extend_to(max_len);
        self.below[max_len + 1].clone()
    }

    pub(crate) fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }
}

/// `ρ_L(n)`: number of words of length `n` accepted by `d`.
pub fn density(d: &Dfa, n: usize) -> BigUint {
    CountTable::new(d.clone()).density(n)
}

/// `ρ_L(0), …, ρ_L(max_len)`.
pub fn densities(d: &Dfa, max_len: usize) -> Vec<BigUint> {
    let mut t = CountTable::new(d.clone());
    t.extend_to(max_len);
    (0..=max_len).map(|n| t.density(n)).collect()
}

/// Number of accepted words of length at most `max_len`.
pub fn count_words_up_to(d: &Dfa, max_len: usize) -> BigUint {
    CountTable::new(d.clone()).up_to(max_len)
}
