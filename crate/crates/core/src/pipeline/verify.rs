use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{recognizer_for, BuildOptions, Polynomial, SystemBundle};
use crate::automata::{Dfa, OrderedAlphabet, Word};
use crate::enumeration::{decimate_with_budget, NumerationSystem};
use crate::error::{Error, Result};
use crate::oracle::EnumerationCursor;

/// A word on which the recognizer disagrees with `P(ℕ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub rank: u64,
    pub word: Word,
    /// Whether the recognizer accepted the word.
    pub accepted: bool,
}

// First n from which P is non-decreasing.
fn monotone_from(p: &Polynomial) -> u64 {
    let q = p.difference();
    let Some(deg) = q.degree() else { return 0 };
    let lead = q.leading();
    let bound = q.coefficients()[..deg]
        .iter()
        .map(|c| (c / &lead).abs())
        .max()
        .unwrap_or_else(BigRational::zero)
        + BigRational::one();
    bound.ceil().to_integer().to_u64().unwrap_or(u64::MAX)
}

/// `P(ℕ) ∩ [0, max_value]` for a validated polynomial.
pub fn value_set(p: &Polynomial, max_value: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let start = monotone_from(p);
    let max = BigUint::from(max_value);
    let mut n = 0u64;
    loop {
        let v = p.eval_natural(n).expect("validated polynomial");
        if v <= max {
            out.insert(v.to_u64().unwrap());
        } else if n >= start {
            break;
        }
        if p.degree().unwrap_or(0) == 0 {
            break;
        }
        n += 1;
    }
    out
}

/// Checks the first `words` words of `system` against `recognizer` by
/// brute-force enumeration: a word must be accepted iff its rank is a value
/// of `p`.
pub fn verify_recognizer(system: &Dfa, recognizer: &Dfa, p: &Polynomial, words: u64) -> Result<Option<Mismatch>> {
    if !system.alphabet().same_tokens(recognizer.alphabet()) {
        return Err(Error::AlphabetMismatch);
    }
    let recognizer = recognizer.with_order(system.alphabet())?;
    let values = value_set(p, words.saturating_sub(1));
    let mut cursor = EnumerationCursor::new(system, usize::MAX);
    for rank in 0..words {
        let Some(w) = cursor.next() else { break };
        let accepted = recognizer.accepts_syms(&w);
        if accepted != values.contains(&rank) {
            return Ok(Some(Mismatch { rank, word: w, accepted }));
        }
    }
    Ok(None)
}

/// Rebuilds the decimated system and recognizer of `bundle` with its base
/// language read under `order`, then verifies the first `words` words.
pub fn reorder_check(bundle: &SystemBundle, order: &OrderedAlphabet, words: u64) -> Result<bool> {
    let base = bundle.base.with_order(order)?;
    let opts = BuildOptions::default();
    let modulus = bundle.s.to_u32().ok_or(Error::ResourceLimit(usize::MAX))?;
    let (system, recognizer) = if bundle.decomposition.is_none() {
        let system = NumerationSystem::new(base)?;
        let w = system.unrank(&bundle.exceptional[0].0);
        let r = Dfa::from_words(order.clone(), &[w]);
        (system, r)
    } else {
        let lang = if modulus > 1 { decimate_with_budget(&base, modulus, 0, opts.state_budget)? } else { base };
        let system = NumerationSystem::new(lang)?;
        let (r, _) = recognizer_for(&system, &bundle.polynomial, bundle.alpha, opts)?;
        (system, r)
    };
    Ok(verify_recognizer(system.dfa(), &recognizer, &bundle.polynomial, words)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_of_non_monotone_polynomial() {
        // (x - 2)^2
        let p = Polynomial::from_integers(&[4, -4, 1]);
        assert_eq!(value_set(&p, 20).into_iter().collect::<Vec<_>>(), [0, 1, 4, 9, 16]);
        assert_eq!(value_set(&Polynomial::from_integers(&[7]), 10).len(), 1);
        assert!(value_set(&Polynomial::from_integers(&[7]), 6).is_empty());
    }
}
