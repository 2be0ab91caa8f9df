//! From an integer-valued polynomial to a numeration system in which its
//! image is recognizable.

mod polynomial;
mod verify;

pub use polynomial::Polynomial;
pub use verify::{reorder_check, value_set, verify_recognizer, Mismatch};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::automata::{difference, disjoint_union, minimize, modify_finite, restrict_min_length, union, Dfa, LetterPool, Word};
use crate::constructors::Constructor;
use crate::enumeration::{decimate_with_budget, min_words_with_budget, CountTable, NumerationSystem, DEFAULT_STATE_BUDGET};
use crate::error::{Error, Result};
use polynomial::to_usize;

/// Checks that `P(n)` is a natural number for every `n ≥ 0`.
pub fn validate(p: &Polynomial) -> Result<()> {
    let Some(deg) = p.degree() else { return Ok(()) };
    // integer-valued iff integral on deg + 1 consecutive integers
    for n in 0..=deg as u64 {
        if p.eval_integer(n).is_none() {
            return Err(Error::NotIntegerValued(n));
        }
    }
    if deg == 0 {
        return if p.leading().is_negative() { Err(Error::NegativeValue(0)) } else { Ok(()) };
    }
    let lead = p.leading();
    if lead.is_negative() {
        return Err(Error::NegativeLeadingCoefficient);
    }
    // every real root lies below 1 + max |c_j / c_k|
    let bound = p.coefficients()[..deg]
        .iter()
        .map(|c| (c / &lead).abs())
        .max()
        .unwrap_or_else(BigRational::zero)
        + BigRational::one();
    let last = bound.ceil().to_integer().to_u64().ok_or(Error::ResourceLimit(usize::MAX))?;
    for n in 0..=last {
        if p.eval_at(n).is_negative() {
            return Err(Error::NegativeValue(n));
        }
    }
    Ok(())
}

/// `(s·P, s)` with `s` the least common multiple of the coefficient
/// denominators.
pub fn scale_to_integers(p: &Polynomial) -> (Vec<BigInt>, BigUint) {
    let s = p
        .coefficients()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled = p.scale(&s).integer_coefficients().expect("lcm clears denominators");
    (scaled, s.to_biguint().expect("positive"))
}

/// `Q = Σ_j (x^{i_j+1} − a_j x^{i_j}) + Σ_l b_l x^l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `(i_j, a_j)` with `a_j > 0`, increasing `i_j`.
    pub poldif_terms: Vec<(usize, BigUint)>,
    /// `(l, b_l)` with `b_l > 0`, increasing `l`.
    pub plain_terms: Vec<(usize, BigUint)>,
    pub alpha: usize,
}

impl Decomposition {
    /// The polynomial the terms add up to, lowest degree first.
    pub fn reconstruct(&self) -> Vec<BigInt> {
        let len = self
            .poldif_terms
            .iter()
            .map(|(i, _)| i + 2)
            .chain(self.plain_terms.iter().map(|(l, _)| l + 1))
            .max()
            .unwrap_or(0);
        let mut c = vec![BigInt::zero(); len];
        for (i, a) in &self.poldif_terms {
            c[i + 1] += 1;
            c[*i] -= BigInt::from(a.clone());
        }
        for (l, b) in &self.plain_terms {
            c[*l] += BigInt::from(b.clone());
        }
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        c
    }

    /// Closed-form density of the assembled language at length `n`.
    pub fn density(&self, n: u64) -> BigUint {
        let nb = BigUint::from(n);
        let mut total = BigUint::zero();
        for (i, a) in &self.poldif_terms {
            let a64 = a.to_u64().unwrap_or(u64::MAX);
            if n >= a64 {
                total += nb.pow(*i as u32) * (n - a64);
            }
        }
        for (l, b) in &self.plain_terms {
            if n >= 1 {
                total += b * nb.pow(*l as u32);
            }
        }
        total
    }
}

/// Rewrites `Q` (integer coefficients, lowest first) by borrowing one unit
/// from the next coefficient whenever a coefficient is negative, scanning
/// from degree 0 upward.
pub fn decompose(q: &[BigInt]) -> Result<Decomposition> {
    let mut c = q.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    if c.is_empty() || c.last().unwrap().is_negative() {
        return Err(Error::InfeasibleDecomposition);
    }
    let mut poldif_terms = Vec::new();
    let mut plain_terms = Vec::new();
    for j in 0..c.len() {
        if c[j].is_negative() {
            if j + 1 == c.len() {
                return Err(Error::InfeasibleDecomposition);
            }
            poldif_terms.push((j, (-&c[j]).to_biguint().unwrap()));
            c[j + 1] -= 1;
        } else if !c[j].is_zero() {
            plain_terms.push((j, c[j].to_biguint().unwrap()));
        }
    }
    let max_a = poldif_terms.iter().map(|(_, a)| a.clone()).max().unwrap_or_default();
    let alpha = to_usize(&max_a).ok_or(Error::ResourceLimit(usize::MAX))?.max(2);
    Ok(Decomposition { poldif_terms, plain_terms, alpha })
}

fn copies(b: &BigUint) -> Result<usize> {
    to_usize(b).ok_or(Error::ResourceLimit(usize::MAX))
}

/// Disjoint union realizing the decomposition, by descending degree: for
/// each degree the plain copies, then the PolDif language; the constant part
/// comes last. The density is `Q(n)` for `n ≥ α`, and 0 at `n = 0`.
pub fn assemble(d: &Decomposition, ctor: &mut Constructor) -> Result<Dfa> {
    let top = d
        .poldif_terms
        .iter()
        .map(|(i, _)| i + 1)
        .chain(d.plain_terms.iter().map(|&(l, _)| l))
        .max()
        .unwrap_or(0);
    let mut parts = Vec::new();
    for deg in (1..=top).rev() {
        if let Some((_, b)) = d.plain_terms.iter().find(|(l, _)| *l == deg) {
            for _ in 0..copies(b)? {
                parts.push(ctor.power(deg as u32));
            }
        }
        if let Some((_, a)) = d.poldif_terms.iter().find(|(i, _)| i + 1 == deg) {
            parts.push(ctor.poldif(deg as u32, copies(a)?));
        }
    }
    if let Some((_, b0)) = d.plain_terms.iter().find(|(l, _)| *l == 0) {
        parts.push(ctor.constant(b0.to_u64().ok_or(Error::ResourceLimit(usize::MAX))?));
    }
    Ok(minimize(&disjoint_union(&parts)?))
}

/// What [`adjust_prefix`] changed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Adjustment {
    /// Words of length below α before the adjustment.
    pub before: BigUint,
    pub removed: BigUint,
    pub added: BigUint,
}

/// Adds or removes words of length below `alpha` so that exactly `target`
/// remain there. Removal takes radix-greatest words first; additions are
/// `f a^{α−2}` for fresh letters `f` and the first letter `a`.
pub fn adjust_prefix(d: &Dfa, alpha: usize, target: &BigUint) -> Result<(Dfa, Adjustment)> {
    assert!(alpha >= 1);
    let d = minimize(d);
    let mut table = CountTable::new(d.clone());
    let before = table.up_to(alpha - 1);
    let mut adj = Adjustment { before: before.clone(), ..Default::default() };
    if &before > target {
        let mut deficit = &before - target;
        adj.removed = deficit.clone();
        let mut full_from = alpha;
        let mut partial = None;
        for len in (0..alpha).rev() {
            if deficit.is_zero() {
                break;
            }
            let here = table.density(len);
            if here <= deficit {
                deficit -= &here;
                full_from = len;
            } else {
                // keep the first here − deficit words of this length
                let sys_rank = table.shorter_than(len) + (&here - &deficit);
                partial = Some(nth_word(&d, &sys_rank));
                break;
            }
        }
        let mut drop = length_band(&d, full_from, alpha - 1);
        if let Some(w) = partial {
            drop = union(&drop, &at_least_lex(&d, &w))?;
        }
        Ok((minimize(&difference(&d, &drop)?), adj))
    } else if &before < target {
        let missing = target - &before;
        if alpha < 2 || d.alphabet().is_empty() {
            return Err(Error::CannotAdjust { alpha, missing: missing.into() });
        }
        let count = copies(&missing)?;
        let pad = d.alphabet().letter(0).clone();
        let mut pool = LetterPool::after(d.alphabet());
        let words: Vec<_> = (0..count)
            .map(|_| {
                let mut w = vec![pool.fresh()];
                w.extend(std::iter::repeat(pad.clone()).take(alpha - 2));
                w
            })
            .collect();
        adj.added = missing;
        Ok((minimize(&modify_finite(&d, &words, &[])?), adj))
    } else {
        Ok((d, adj))
    }
}

// The word of L(d) with the given radix rank, which must exist.
fn nth_word(d: &Dfa, rank: &BigUint) -> Word {
    let mut table = CountTable::new(d.clone());
    let mut len = 0;
    while &table.shorter_than(len + 1) <= rank {
        len += 1;
    }
    let mut rest = rank - table.shorter_than(len);
    let mut q = d.initial();
    let mut w = Vec::with_capacity(len);
    for i in 0..len {
        for &(s, t) in d.transitions(q) {
            let c = table.from_state(t, len - i - 1).clone();
            if rest < c {
                w.push(s);
                q = t;
                break;
            }
            rest -= c;
        }
    }
    w
}

// All words with length in [lo, hi].
fn length_band(d: &Dfa, lo: usize, hi: usize) -> Dfa {
    let k = d.alphabet().len();
    if lo > hi {
        return Dfa::empty(d.alphabet().clone());
    }
    let delta = (0..=hi)
        .map(|i| if i < hi { (0..k).map(|s| (s, i + 1)).collect() } else { Vec::new() })
        .collect();
    let finals = (0..=hi).map(|i| i >= lo).collect();
    Dfa::from_parts(d.alphabet().clone(), 0, finals, delta)
}

// Words of the same length as `w` that are lexicographically ≥ `w`.
fn at_least_lex(d: &Dfa, w: &[usize]) -> Dfa {
    let k = d.alphabet().len();
    let n = w.len();
    // state i ≤ n: prefix equals w[..i]; state n + i: prefix of length i is greater
    let mut delta = vec![Vec::new(); 2 * n + 1];
    let mut finals = vec![false; 2 * n + 1];
    finals[n] = true;
    finals[2 * n] = true;
    for i in 0..n {
        delta[i] = (w[i]..k)
            .map(|s| (s, if s == w[i] { i + 1 } else { n + i + 1 }))
            .collect();
        if i > 0 {
            delta[n + i] = (0..k).map(|s| (s, n + i + 1)).collect();
        }
    }
    Dfa::from_parts(d.alphabet().clone(), 0, finals, delta)
}

/// Tunables of [`build_system_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub state_budget: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { state_budget: DEFAULT_STATE_BUDGET }
    }
}

/// Everything produced for one polynomial.
#[derive(Clone, Debug)]
pub struct SystemBundle {
    pub polynomial: Polynomial,
    pub s: BigUint,
    pub alpha: usize,
    pub decomposition: Option<Decomposition>,
    pub adjustment: Adjustment,
    /// The adjusted language before decimation.
    pub base: Dfa,
    pub system: NumerationSystem,
    pub recognizer: Dfa,
    /// `(P(t), rep(P(t)))` for `t < α`, by increasing value, without repeats.
    pub exceptional: Vec<(BigUint, Word)>,
}

pub fn build_system(p: &Polynomial) -> Result<SystemBundle> {
    build_system_with(p, BuildOptions::default())
}

pub fn build_system_with(p: &Polynomial, opts: BuildOptions) -> Result<SystemBundle> {
    validate(p)?;
    if p.degree().unwrap_or(0) == 0 {
        return Ok(constant_bundle(p));
    }
    let (scaled, s) = scale_to_integers(p);
    let q = Polynomial::new(scaled.iter().cloned().map(BigRational::from_integer).collect())
        .difference()
        .integer_coefficients()
        .expect("integer polynomial");
    let dec = decompose(&q)?;
    let alpha = dec.alpha;
    let mut ctor = Constructor::new();
    let assembled = assemble(&dec, &mut ctor)?;
    let target = Polynomial::new(scaled.into_iter().map(BigRational::from_integer).collect())
        .eval_natural(alpha as u64)
        .expect("validated");
    let (base, adjustment) = adjust_prefix(&assembled, alpha, &target)?;
    let modulus = s.to_u32().ok_or(Error::ResourceLimit(usize::MAX))?;
    let language = if modulus > 1 {
        decimate_with_budget(&base, modulus, 0, opts.state_budget)?
    } else {
        base.clone()
    };
    let system = NumerationSystem::new(language)?;
    let (recognizer, exceptional) = recognizer_for(&system, p, alpha, opts)?;
    Ok(SystemBundle {
        polynomial: p.clone(),
        s,
        alpha,
        decomposition: Some(dec),
        adjustment,
        base,
        system,
        recognizer,
        exceptional,
    })
}

pub(crate) fn recognizer_for(
    system: &NumerationSystem,
    p: &Polynomial,
    alpha: usize,
    opts: BuildOptions,
) -> Result<(Dfa, Vec<(BigUint, Word)>)> {
    let mut values: Vec<BigUint> = (0..alpha as u64).map(|t| p.eval_natural(t).expect("validated")).collect();
    values.sort();
    values.dedup();
    let exceptional: Vec<(BigUint, Word)> = values.into_iter().map(|v| {
        let w = system.unrank(&v);
        (v, w)
    }).collect();
    let firsts = min_words_with_budget(system.dfa(), opts.state_budget)?;
    let words: Vec<Word> = exceptional.iter().map(|(_, w)| w.clone()).collect();
    let extra = Dfa::from_words(system.alphabet().clone(), &words);
    let recognizer = minimize(&union(&restrict_min_length(&firsts, alpha), &extra)?);
    Ok((recognizer, exceptional))
}

// P = d: the system c0* with recognizer {c0^d}.
fn constant_bundle(p: &Polynomial) -> SystemBundle {
    let d = p.eval_natural(0).expect("validated");
    let mut ctor = Constructor::new();
    let chain = ctor.power(0);
    let system = NumerationSystem::new(chain.clone()).expect("infinite");
    let w = system.unrank(&d);
    let recognizer = Dfa::from_words(chain.alphabet().clone(), &[w.clone()]);
    SystemBundle {
        polynomial: p.clone(),
        s: BigUint::one(),
        alpha: 1,
        decomposition: None,
        adjustment: Adjustment::default(),
        base: chain,
        system,
        recognizer,
        exceptional: vec![(d, w)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::count_words_up_to;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    fn terms(v: &[(usize, u64)]) -> Vec<(usize, BigUint)> {
        v.iter().map(|&(d, c)| (d, c.into())).collect()
    }

    fn example4() -> Polynomial {
        Polynomial::from_fractions(&[(4, 1), (-17, 2), (37, 6), (-2, 1), (1, 3)])
    }

    #[test]
    fn validation() {
        assert!(validate(&example4()).is_ok());
        assert!(matches!(
            validate(&Polynomial::from_fractions(&[(0, 1), (1, 2)])),
            Err(Error::NotIntegerValued(1))
        ));
        assert!(validate(&Polynomial::from_fractions(&[(0, 1), (1, 2), (1, 2)])).is_ok());
        assert!(matches!(
            validate(&Polynomial::from_integers(&[0, 0, -1])),
            Err(Error::NegativeLeadingCoefficient)
        ));
        assert!(matches!(
            validate(&Polynomial::from_integers(&[3, -4, 1])),
            Err(Error::NegativeValue(2))
        ));
        assert!(matches!(validate(&Polynomial::from_integers(&[-1])), Err(Error::NegativeValue(0))));
        assert!(validate(&Polynomial::zero()).is_ok());
    }

    #[test]
    fn scaling() {
        let (p, s) = scale_to_integers(&example4());
        assert_eq!(s, 6u32.into());
        let q = Polynomial::new(p.into_iter().map(BigRational::from_integer).collect()).difference();
        assert_eq!(q, Polynomial::from_integers(&[-24, 46, -24, 8]));
        let (p, s) = scale_to_integers(&Polynomial::from_integers(&[0, 3, 2]));
        assert_eq!((p, s), (ints(&[0, 3, 2]), BigUint::one()));
    }

    #[test]
    fn borrow_decompositions() {
        let d = decompose(&ints(&[-4, -2, 6, 4])).unwrap();
        assert_eq!(d.poldif_terms, terms(&[(0, 4), (1, 3)]));
        assert_eq!(d.plain_terms, terms(&[(2, 5), (3, 4)]));
        assert_eq!(d.alpha, 4);
        assert_eq!(d.reconstruct(), ints(&[-4, -2, 6, 4]));

        let d = decompose(&ints(&[-5, -11, -2, 10, 5])).unwrap();
        assert_eq!(d.poldif_terms, terms(&[(0, 5), (1, 12), (2, 3)]));
        assert_eq!(d.plain_terms, terms(&[(3, 9), (4, 5)]));
        assert_eq!(d.alpha, 12);

        let d = decompose(&ints(&[-24, 46, -24, 8])).unwrap();
        assert_eq!(d.poldif_terms, terms(&[(0, 24), (2, 24)]));
        assert_eq!(d.plain_terms, terms(&[(1, 45), (3, 7)]));
        assert_eq!(d.alpha, 24);

        assert_eq!(decompose(&ints(&[4, 5])).unwrap().alpha, 2);
        assert!(matches!(decompose(&ints(&[-1])), Err(Error::InfeasibleDecomposition)));
        let d = decompose(&ints(&[0, -1, 1])).unwrap();
        assert_eq!((d.poldif_terms, d.plain_terms), (terms(&[(1, 1)]), vec![]));
    }

    #[test]
    fn assembled_density_follows_closed_form() {
        let d = decompose(&ints(&[-4, -2, 6, 4])).unwrap();
        let l = assemble(&d, &mut Constructor::new()).unwrap();
        let dens = crate::enumeration::densities(&l, 10);
        for n in 0..=10u64 {
            assert_eq!(dens[n as usize], d.density(n), "n = {n}");
        }
        assert_eq!(count_words_up_to(&l, 3), 214u32.into());
    }

    #[test]
    fn prefix_adjustment() {
        let d = decompose(&ints(&[-4, -2, 6, 4])).unwrap();
        let l = assemble(&d, &mut Constructor::new()).unwrap();
        let (adj, info) = adjust_prefix(&l, 4, &205u32.into()).unwrap();
        assert_eq!(info.removed, 9u32.into());
        assert_eq!(count_words_up_to(&adj, 3), 205u32.into());
        let (same, info) = adjust_prefix(&adj, 4, &205u32.into()).unwrap();
        assert!(info.removed.is_zero() && info.added.is_zero());
        assert_eq!(same, minimize(&adj));
        let (more, info) = adjust_prefix(&adj, 4, &210u32.into()).unwrap();
        assert_eq!(info.added, 5u32.into());
        assert_eq!(count_words_up_to(&more, 3), 210u32.into());
        assert_eq!(crate::enumeration::densities(&more, 12)[4..], crate::enumeration::densities(&l, 12)[4..]);
        assert!(matches!(
            adjust_prefix(&Dfa::empty(l.alphabet().clone()), 1, &1u32.into()),
            Err(Error::CannotAdjust { .. })
        ));
    }

    #[test]
    fn constant_polynomial() {
        let b = build_system(&Polynomial::from_integers(&[3])).unwrap();
        assert_eq!(b.exceptional[0].0, 3u32.into());
        assert!(b.recognizer.accepts_tokens(&["c0", "c0", "c0"]).unwrap());
        assert!(!b.recognizer.accepts_tokens(&["c0", "c0"]).unwrap());
    }
}
