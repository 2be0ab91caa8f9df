use std::cell::RefCell;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Zero;

use super::count::CountTable;
use crate::automata::{Dfa, OrderedAlphabet, Sym, Word};
use crate::error::{Error, Result};

/// A numeration system `(L, Σ, <)`: an infinite regular language whose radix
/// order (length first, then lexicographic by alphabet order) numbers the
/// natural integers.
///
/// Counts are memoized in an interior table, so a system is meant to be
/// owned by one thread at a time.
#[derive(Debug)]
pub struct NumerationSystem {
    dfa: Arc<Dfa>,
    table: RefCell<CountTable>,
}

impl Clone for NumerationSystem {
    fn clone(&self) -> Self {
        NumerationSystem { dfa: self.dfa.clone(), table: RefCell::new(self.table.borrow().clone()) }
    }
}

impl NumerationSystem {
    pub fn new(dfa: Dfa) -> Result<Self> {
        if !dfa.is_infinite() {
            return Err(Error::FiniteLanguage);
        }
        let dfa = Arc::new(dfa.trim());
        Ok(NumerationSystem { table: RefCell::new(CountTable::new(dfa.clone())), dfa })
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn alphabet(&self) -> &OrderedAlphabet {
        self.dfa.alphabet()
    }

    pub fn density(&self, n: usize) -> BigUint {
        self.table.borrow_mut().density(n)
    }

    /// Number of words of the language shorter than `n`.
    pub fn shorter_than(&self, n: usize) -> BigUint {
        self.table.borrow_mut().shorter_than(n)
    }

    /// `val_S(w)`: the 0-based radix position of `w` in the language.
    pub fn rank(&self, word: &[Sym]) -> Result<BigUint> {
        if !self.dfa.accepts_syms(word) {
            return Err(Error::NotInLanguage(self.alphabet().render(word)));
        }
        let n = word.len();
        let mut table = self.table.borrow_mut();
        table.extend_to(n);
        let mut r = table.shorter_than(n);
        let rows = table.rows();
        let mut q = self.dfa.initial();
        for (i, &s) in word.iter().enumerate() {
            let rest = n - i - 1;
            for &(t_s, t) in self.dfa.transitions(q) {
                if t_s >= s {
                    break;
                }
                r += &rows[rest][t];
            }
            q = self.dfa.step(q, s).expect("word is accepted");
        }
        Ok(r)
    }

    /// `rep_S(n)`: the word of rank `n`.
    pub fn unrank(&self, n: &BigUint) -> Word {
        let mut table = self.table.borrow_mut();
        let mut len = 0;
        // the language is infinite, so cumulative counts grow without bound
        while table.shorter_than(len + 1) <= *n {
            len += 1;
        }
        let mut rem = n - table.shorter_than(len);
        let rows = table.rows();
        let mut q = self.dfa.initial();
        let mut word = Vec::with_capacity(len);
        for i in 0..len {
            let rest = len - i - 1;
            let mut chosen = None;
            for &(s, t) in self.dfa.transitions(q) {
                let c = &rows[rest][t];
                if rem < *c {
                    chosen = Some((s, t));
                    break;
                }
                rem -= c;
            }
            let (s, t) = chosen.expect("counts are consistent");
            word.push(s);
            q = t;
        }
        debug_assert!(rem.is_zero() && self.dfa.is_final(q));
        word
    }

    pub fn unrank_u64(&self, n: u64) -> Word {
        self.unrank(&BigUint::from(n))
    }

    /// The radix-least word of length `n`, if any.
    pub fn first_of_length(&self, n: usize) -> Option<Word> {
        if self.density(n).is_zero() {
            None
        } else {
            Some(self.unrank(&self.shorter_than(n)))
        }
    }
}
