//! Brute-force reference semantics.
//!
//! Everything here is derived from a backtracking enumeration of words in
//! radix order. Nothing calls into the counting tables of
//! [`crate::enumeration`]; the only shared code is the automaton itself.

use crate::automata::{Dfa, StateId, Word};
use crate::error::{Error, Result};

/// Limits on brute-force work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_words: usize,
    pub max_len: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_words: 100_000, max_len: 20 }
    }
}

/// Emits the words of a language in strict radix order, each once.
///
/// Words of a given length are produced by depth-first backtracking over the
/// alphabet in increasing order; a branch is entered only if its state can
/// still finish a word of the remaining length.
#[derive(Clone, Debug)]
pub struct EnumerationCursor {
    dfa: Dfa,
    // live[m][q]: q accepts some word of length exactly m
    live: Vec<Vec<bool>>,
    len: usize,
    stack: Vec<(StateId, usize)>,
    word: Word,
    emitted: usize,
    max_len: usize,
    finished: bool,
    truncated: bool,
}

impl EnumerationCursor {
    pub fn new(d: &Dfa, max_len: usize) -> Self {
        Self::starting_at(d, 0, max_len)
    }

    /// A cursor that skips every word shorter than `len`.
    pub fn starting_at(d: &Dfa, len: usize, max_len: usize) -> Self {
        let dfa = d.trim();
        let live0 = (0..dfa.state_count()).map(|q| dfa.is_final(q)).collect();
        let mut c = EnumerationCursor {
            dfa,
            live: vec![live0],
            len,
            stack: Vec::new(),
            word: Vec::new(),
            emitted: 0,
            max_len,
            finished: false,
            truncated: false,
        };
        c.open_length();
        c
    }

    /// Words emitted so far.
    pub fn emitted(&self) -> usize {
        self.emitted
    }

    /// Length of the words currently being produced.
    pub fn current_length(&self) -> usize {
        self.len
    }

    /// True when enumeration stopped at the length cap while longer words
    /// might still exist.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    fn live_at(&mut self, m: usize) -> &[bool] {
        while self.live.len() <= m {
            let prev = self.live.last().unwrap();
            let next = (0..self.dfa.state_count())
                .map(|q| self.dfa.transitions(q).iter().any(|&(_, t)| prev[t]))
                .collect();
            self.live.push(next);
        }
        &self.live[m]
    }

    // Prepares the stack for the first length ≥ self.len that has words.
    fn open_length(&mut self) {
        loop {
            if self.len > self.max_len {
                self.finished = true;
                self.truncated = self.live_at(self.len).iter().any(|&b| b);
                return;
            }
            let init = self.dfa.initial();
            let live = self.live_at(self.len);
            if live[init] {
                self.stack = vec![(init, 0)];
                self.word.clear();
                return;
            }
            if !live.iter().any(|&b| b) {
                // no state finishes a word of this length, hence of any longer one
                self.finished = true;
                return;
            }
            self.len += 1;
        }
    }
}

impl Iterator for EnumerationCursor {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        while !self.finished {
            let depth = self.word.len();
            if self.stack.is_empty() {
                self.len += 1;
                self.open_length();
                continue;
            }
            if depth == self.len {
                let w = self.word.clone();
                self.stack.pop();
                self.word.pop();
                self.emitted += 1;
                return Some(w);
            }
            // rows up to self.len were filled by open_length
            let live = &self.live[self.len - depth - 1];
            let (q, idx) = *self.stack.last().unwrap();
            let row = self.dfa.transitions(q);
            match row[idx..].iter().position(|&(_, t)| live[t]) {
                Some(k) => {
                    let (s, t) = row[idx + k];
                    self.stack.last_mut().unwrap().1 = idx + k + 1;
                    self.stack.push((t, 0));
                    self.word.push(s);
                }
                None => {
                    self.stack.pop();
                    self.word.pop();
                }
            }
        }
        None
    }
}

/// The first `limit` words of `L(d)` in radix order (fewer if the language
/// is exhausted first).
pub fn enumerate_radix(d: &Dfa, limit: usize) -> Result<Vec<Word>> {
    enumerate_radix_with(d, limit, Budget::default())
}

pub fn enumerate_radix_with(d: &Dfa, limit: usize, budget: Budget) -> Result<Vec<Word>> {
    if limit > budget.max_words {
        return Err(Error::BudgetExceeded(format!("{limit} words requested")));
    }
    let mut cur = EnumerationCursor::new(d, budget.max_len);
    let words: Vec<Word> = cur.by_ref().take(limit).collect();
    if words.len() < limit && cur.truncated() {
        return Err(Error::BudgetExceeded(format!("length cap {} reached", budget.max_len)));
    }
    Ok(words)
}

/// All words of length at most `max_len`, in radix order.
pub fn words_up_to(d: &Dfa, max_len: usize, budget: Budget) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    for w in EnumerationCursor::new(d, max_len) {
        if out.len() == budget.max_words {
            return Err(Error::BudgetExceeded(format!("more than {} words", budget.max_words)));
        }
        out.push(w);
    }
    Ok(out)
}

/// Radix position of `w`, found by enumerating until it appears.
pub fn oracle_rank(d: &Dfa, w: &[usize], budget: Budget) -> Result<u64> {
    if !d.accepts_syms(w) {
        return Err(Error::NotInLanguage(d.alphabet().render(w)));
    }
    for (i, x) in EnumerationCursor::new(d, w.len()).enumerate() {
        if i >= budget.max_words {
            break;
        }
        if x == w {
            return Ok(i as u64);
        }
    }
    Err(Error::BudgetExceeded(format!("word not reached within {} words", budget.max_words)))
}

/// Number of words of length `n`, by enumeration.
pub fn oracle_density(d: &Dfa, n: usize, budget: Budget) -> Result<u64> {
    let mut count = 0u64;
    for w in EnumerationCursor::starting_at(d, n, n) {
        debug_assert_eq!(w.len(), n);
        count += 1;
        if count as usize > budget.max_words {
            return Err(Error::BudgetExceeded(format!("more than {} words", budget.max_words)));
        }
    }
    Ok(count)
}

/// The radix-least word of each length up to `max_len` (lengths without
/// words are skipped).
pub fn oracle_min_words(d: &Dfa, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut n = 0;
    while n <= max_len {
        let mut cur = EnumerationCursor::starting_at(d, n, max_len);
        match cur.next() {
            Some(w) => {
                n = w.len() + 1;
                out.push(w);
            }
            None => break,
        }
    }
    out
}

/// Every `modulus`-th enumerated word starting at index `residue`, up to
/// `limit` words.
pub fn oracle_decimate(d: &Dfa, modulus: usize, residue: usize, limit: usize, budget: Budget) -> Result<Vec<Word>> {
    let needed = residue + modulus * limit.saturating_sub(1) + 1;
    let words = if limit == 0 {
        Vec::new()
    } else {
        let mut cur = EnumerationCursor::new(d, budget.max_len);
        let ws: Vec<Word> = cur.by_ref().take(needed.min(budget.max_words)).collect();
        if ws.len() < needed && (cur.truncated() || needed > budget.max_words) {
            return Err(Error::BudgetExceeded(format!("{needed} words needed")));
        }
        ws
    };
    Ok(words.into_iter().skip(residue).step_by(modulus).take(limit).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::OrderedAlphabet;

    fn ab_star() -> Dfa {
        let al = OrderedAlphabet::from_tokens(&["a", "b"]).unwrap();
        Dfa::new(al, 2, 0, &[0, 1], &[(0, 0, 0), (0, 1, 1), (1, 1, 1)]).unwrap()
    }

    fn two_tails() -> Dfa {
        let al = OrderedAlphabet::from_tokens(&["a", "b", "c"]).unwrap();
        Dfa::new(al, 3, 0, &[0, 1, 2], &[(0, 0, 0), (0, 1, 1), (1, 1, 1), (0, 2, 2), (2, 2, 2)]).unwrap()
    }

    fn render(d: &Dfa, ws: &[Word]) -> Vec<String> {
        ws.iter().map(|w| d.alphabet().render(w)).collect()
    }

    #[test]
    fn hand_enumerations() {
        let d = ab_star();
        assert_eq!(render(&d, &enumerate_radix(&d, 6).unwrap()), ["", "a", "b", "aa", "ab", "bb"]);
        let i = two_tails();
        assert_eq!(
            render(&i, &enumerate_radix(&i, 9).unwrap()),
            ["", "a", "b", "c", "aa", "ab", "ac", "bb", "cc"]
        );
        let empty = Dfa::empty(d.alphabet().clone());
        assert!(enumerate_radix(&empty, 5).unwrap().is_empty());
    }

    #[test]
    fn finite_language_exhausts() {
        let al = OrderedAlphabet::from_tokens(&["a", "b"]).unwrap();
        let d = Dfa::from_words(al, &[vec![1], vec![0, 0], vec![]]);
        let ws = enumerate_radix(&d, 10).unwrap();
        assert_eq!(ws, vec![vec![], vec![1], vec![0, 0]]);
    }

    #[test]
    fn reference_values() {
        let d = ab_star();
        assert_eq!(oracle_rank(&d, &[1, 1], Budget::default()).unwrap(), 5);
        assert_eq!(oracle_density(&d, 3, Budget::default()).unwrap(), 4);
        assert_eq!(
            render(&d, &oracle_decimate(&d, 2, 0, 3, Budget::default()).unwrap()),
            ["", "b", "ab"]
        );
        assert_eq!(render(&d, &oracle_min_words(&two_tails(), 3)), ["", "a", "aa", "aaa"]);
    }

    #[test]
    fn length_cap_is_reported() {
        let d = ab_star();
        let b = Budget { max_words: 1000, max_len: 2 };
        assert!(matches!(enumerate_radix_with(&d, 100, b), Err(Error::BudgetExceeded(_))));
        assert!(matches!(enumerate_radix_with(&d, 1_000_000, Budget::default()), Err(Error::BudgetExceeded(_))));
    }
}
