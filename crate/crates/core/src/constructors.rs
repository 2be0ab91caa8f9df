//! Regular languages with prescribed polynomial densities.
//!
//! All languages of one [`Constructor`] session draw their letters from a
//! single [`LetterPool`], so independently built pieces can be combined with
//! [`disjoint_union`] without renaming.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::automata::{
    difference, disjoint_union, minimize, recent_occurrence, shuffle, Dfa, LetterPool, OrderedAlphabet,
};
use crate::enumeration::strip_first;

/// Closed form of the density a constructor promises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DensitySpec {
    /// `n^k` for every n (with `0^0 = 1`).
    Power(u32),
    /// `(n + 1)^(k - 1)` for every n.
    ShiftedPower(u32),
    /// `c` for n ≥ 1, 0 at n = 0.
    Const(u64),
    /// `n^k − α n^(k−1)` for n ≥ α, 0 below.
    PolDif { k: u32, alpha: u64 },
    /// `n^k` for every n, via Stirling numbers of the second kind.
    Stirling(u32),
}

impl DensitySpec {
    pub fn expected(&self, n: u64) -> BigUint {
        let n_big = BigUint::from(n);
        match *self {
            DensitySpec::Power(k) | DensitySpec::Stirling(k) => n_big.pow(k),
            DensitySpec::ShiftedPower(k) => (n_big + 1u32).pow(k.saturating_sub(1)),
            DensitySpec::Const(c) => {
                if n == 0 {
                    BigUint::zero()
                } else {
                    BigUint::from(c)
                }
            }
            DensitySpec::PolDif { k, alpha } => {
                if n < alpha {
                    BigUint::zero()
                } else {
                    n_big.pow(k - 1) * (n - alpha)
                }
            }
        }
    }
}

/// Binomial coefficient by Pascal's rule.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::one()];
    for i in 1..=n {
        let mut next = vec![BigUint::one(); (i + 1) as usize];
        for j in 1..i as usize {
            next[j] = &row[j - 1] + &row[j];
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// Stirling number of the second kind `S(k, t)`.
pub fn stirling2(k: u64, t: u64) -> BigUint {
    // S(n, j) = j S(n-1, j) + S(n-1, j-1)
    let mut row = vec![BigUint::one()];
    for n in 1..=k {
        let mut next = vec![BigUint::zero(); (n + 1) as usize];
        for j in 1..=n as usize {
            let keep = if j < row.len() { &row[j] * j } else { BigUint::zero() };
            next[j] = keep + &row[j - 1];
        }
        row = next;
    }
    row.get(t as usize).cloned().unwrap_or_default()
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Size of the minimal alphabet of the power language of degree `k`:
/// `u_0 = 1, u_1 = 2, u_2 = 3`, `u_m = Σ_{j<m} binom(m−1, j) u_j + 1`.
pub fn min_alphabet_size(k: u32) -> BigUint {
    let mut u: Vec<BigUint> = vec![1u32.into(), 2u32.into(), 3u32.into()];
    for m in 3..=k as u64 {
        let next = (0..m).fold(BigUint::one(), |acc, j| acc + binomial(m - 1, j) * &u[j as usize]);
        u.push(next);
    }
    u.swap_remove(k as usize)
}

/// A construction session owning the fresh-letter counter.
#[derive(Clone, Debug, Default)]
pub struct Constructor {
    pool: LetterPool,
}

impl Constructor {
    pub fn new() -> Self {
        Constructor { pool: LetterPool::new() }
    }

    pub fn pool(&mut self) -> &mut LetterPool {
        &mut self.pool
    }

    fn chain(&mut self, letters: usize, transitions: &[(usize, usize, usize)], states: usize, finals: &[usize]) -> Dfa {
        let al = self.pool.fresh_alphabet(letters);
        Dfa::new(al, states, 0, finals, transitions).expect("well-formed construction")
    }

    /// `L_k` with `ρ(n) = n^k`: `a*` for k = 0, `a⁺b*` for k = 1, and the
    /// shuffle of `M_k` with one fresh letter for k ≥ 2.
    pub fn power(&mut self, k: u32) -> Dfa {
        match k {
            0 => self.chain(1, &[(0, 0, 0)], 1, &[0]),
            1 => self.chain(2, &[(0, 0, 1), (1, 0, 1), (1, 1, 2), (2, 1, 2)], 3, &[1, 2]),
            _ => self.power_with_marker(k).0,
        }
    }

    // L_k together with the symbol of its shuffled letter (the last one).
    fn power_with_marker(&mut self, k: u32) -> (Dfa, usize) {
        debug_assert!(k >= 2);
        let m = self.shifted_power(k);
        let sigma = self.pool.fresh();
        let single = Dfa::from_words(OrderedAlphabet::new(vec![sigma]).unwrap(), &[vec![0]]);
        let l = minimize(&shuffle(&m, &single).determinize());
        let marker = l.alphabet().len() - 1;
        (l, marker)
    }

    /// `M_k` with `ρ(n) = (n + 1)^(k − 1)`: `a*` for k = 1, `a*b*` for k = 2,
    /// otherwise the disjoint union of `binom(k−1, j)` copies of `L_j` for
    /// j = k−1 down to 0.
    pub fn shifted_power(&mut self, k: u32) -> Dfa {
        assert!(k >= 1, "M_k needs k ≥ 1");
        match k {
            1 => self.power(0),
            2 => self.chain(2, &[(0, 0, 0), (0, 1, 1), (1, 1, 1)], 2, &[0, 1]),
            _ => {
                let mut parts = Vec::new();
                for j in (0..k).rev() {
                    let copies = binomial(u64::from(k - 1), u64::from(j));
                    let mut i = BigUint::zero();
                    while i < copies {
                        parts.push(self.power(j));
                        i += 1u32;
                    }
                }
                minimize(&disjoint_union(&parts).expect("fresh alphabets"))
            }
        }
    }

    /// `ρ(n) = c` for n ≥ 1 and `ρ(0) = 0`: the language `{σ_1, …, σ_c} σ_1*`.
    pub fn constant(&mut self, c: u64) -> Dfa {
        assert!(c >= 1, "constant density needs c ≥ 1");
        let c = c as usize;
        let mut transitions: Vec<_> = (0..c).map(|s| (0, s, 1)).collect();
        transitions.push((1, 0, 1));
        self.chain(c, &transitions, 2, &[1])
    }

    /// Words over a fresh `{a, b}` with exactly `t` letters `b`; `ρ(n) = binom(n, t)`.
    pub fn exactly_b(&mut self, t: usize) -> Dfa {
        let mut transitions = Vec::new();
        for q in 0..=t {
            transitions.push((q, 0, q));
            if q < t {
                transitions.push((q, 1, q + 1));
            }
        }
        self.chain(2, &transitions, t + 1, &[t])
    }

    /// `ρ(n) = n^k` from `n^k = Σ_t t! S(k, t) binom(n, t)`, as a disjoint
    /// union of exactly-t-b languages (t = k down to 1).
    pub fn stirling(&mut self, k: u32) -> Dfa {
        assert!(k >= 1, "Stirling construction needs k ≥ 1");
        let mut parts = Vec::new();
        for t in (1..=u64::from(k)).rev() {
            let copies = factorial(t) * stirling2(u64::from(k), t);
            let mut i = BigUint::zero();
            while i < copies {
                parts.push(self.exactly_b(t as usize));
                i += 1u32;
            }
        }
        minimize(&disjoint_union(&parts).expect("fresh alphabets"))
    }

    /// `ρ(n) = n^k − α n^(k−1)` for n ≥ α and 0 below. For k ≥ 2, the words
    /// of `L_k` whose shuffled letter is among the last α letters are
    /// removed; for k = 1 the α radix-least words of each length of `L_1`.
    pub fn poldif(&mut self, k: u32, alpha: usize) -> Dfa {
        assert!(k >= 1 && alpha >= 1, "PolDif needs k ≥ 1 and α ≥ 1");
        if k == 1 {
            return strip_first(&self.power(1), alpha);
        }
        let (l, marker) = self.power_with_marker(k);
        let sigma = l.alphabet().letter(marker).clone();
        let recent = recent_occurrence(l.alphabet(), &sigma, alpha).expect("marker in alphabet");
        minimize(&difference(&l, &recent).expect("same alphabet"))
    }

    /// Builds the language for a density spec.
    pub fn build(&mut self, spec: DensitySpec) -> Dfa {
        match spec {
            DensitySpec::Power(k) => self.power(k),
            DensitySpec::ShiftedPower(k) => self.shifted_power(k),
            DensitySpec::Const(c) => self.constant(c),
            DensitySpec::PolDif { k, alpha } => self.poldif(k, alpha as usize),
            DensitySpec::Stirling(k) => self.stirling(k),
        }
    }
}
