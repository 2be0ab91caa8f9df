use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of a letter inside its [`OrderedAlphabet`]. Comparing symbols compares
/// letters in declared order.
pub type Sym = usize;

/// A word as a sequence of symbol indices.
pub type Word = Vec<Sym>;

/// A letter token: non-empty and free of whitespace.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(String);

impl Letter {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if token.is_empty() || token.chars().any(char::is_whitespace) {
            return Err(Error::InvalidLetter(token));
        }
        Ok(Letter(token))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    letters: Vec<Letter>,
    index: HashMap<Letter, Sym>,
}

/// A finite alphabet whose order is the declaration order of its letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedAlphabet(Arc<Inner>);

impl OrderedAlphabet {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let mut index = HashMap::with_capacity(letters.len());
        for (i, l) in letters.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLetter(l.0.clone()));
            }
        }
        Ok(OrderedAlphabet(Arc::new(Inner { letters, index })))
    }

    /// Builds an alphabet from string tokens, e.g. `from_tokens(&["a", "b"])`.
    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let letters = tokens
            .iter()
            .map(|t| Letter::new(t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters)
    }

    pub fn empty() -> Self {
        OrderedAlphabet(Arc::new(Inner {
            letters: Vec::new(),
            index: HashMap::new(),
        }))
    }

    pub fn len(&self) -> usize {
        self.0.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0.letters
    }

    pub fn letter(&self, sym: Sym) -> &Letter {
        &self.0.letters[sym]
    }

    pub fn sym(&self, letter: &Letter) -> Option<Sym> {
        self.0.index.get(letter).copied()
    }

    pub fn sym_of(&self, token: &str) -> Result<Sym> {
        Letter::new(token)
            .ok()
            .and_then(|l| self.sym(&l))
            .ok_or_else(|| Error::UnknownLetter(token.to_string()))
    }

    pub fn contains(&self, letter: &Letter) -> bool {
        self.0.index.contains_key(letter)
    }

    /// True when both alphabets hold the same tokens, in any order.
    pub fn same_tokens(&self, other: &OrderedAlphabet) -> bool {
        self.len() == other.len() && self.letters().iter().all(|l| other.contains(l))
    }

    /// This alphabet followed by the letters of `other` it does not already contain.
    pub fn merge(&self, other: &OrderedAlphabet) -> OrderedAlphabet {
        let mut letters = self.letters().to_vec();
        letters.extend(other.letters().iter().filter(|l| !self.contains(l)).cloned());
        OrderedAlphabet::new(letters).expect("merge keeps tokens distinct")
    }

    /// Appends letters, which must be new.
    pub fn extended(&self, extra: &[Letter]) -> Result<OrderedAlphabet> {
        let mut letters = self.letters().to_vec();
        letters.extend_from_slice(extra);
        OrderedAlphabet::new(letters)
    }

    /// Converts a token sequence into symbols.
    pub fn encode<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Word> {
        tokens.iter().map(|t| self.sym_of(t.as_ref())).collect()
    }

    pub fn encode_letters(&self, letters: &[Letter]) -> Result<Word> {
        letters
            .iter()
            .map(|l| self.sym(l).ok_or_else(|| Error::UnknownLetter(l.0.clone())))
            .collect()
    }

    fn single_char_tokens(&self) -> bool {
        self.letters().iter().all(|l| l.0.chars().count() == 1)
    }

    /// Renders a word: letters are concatenated when every token of the
    /// alphabet is a single character, space separated otherwise.
    pub fn render(&self, word: &[Sym]) -> String {
        let sep = if self.single_char_tokens() { "" } else { " " };
        word.iter()
            .map(|&s| self.letter(s).as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses a word written as whitespace-separated tokens. A single
    /// unseparated string is split into characters when all tokens are single
    /// characters.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let parts: Vec<&str> = text.split_whitespace().collect();
        if parts.len() == 1 && self.sym_of(parts[0]).is_err() && self.single_char_tokens() {
            return parts[0]
                .chars()
                .map(|c| self.sym_of(&c.to_string()))
                .collect();
        }
        self.encode(&parts)
    }
}

/// Issues fresh tokens `c0`, `c1`, ... from a monotone counter.
#[derive(Clone, Debug, Default)]
pub struct LetterPool {
    next: usize,
}

impl LetterPool {
    pub fn new() -> Self {
        LetterPool { next: 0 }
    }

    /// A pool whose tokens cannot clash with those of `alphabet`.
    pub fn after(alphabet: &OrderedAlphabet) -> Self {
        let next = alphabet
            .letters()
            .iter()
            .filter_map(|l| l.as_str().strip_prefix('c')?.parse::<usize>().ok())
            .map(|n| n + 1)
            .max()
            .unwrap_or(0);
        LetterPool { next }
    }

    pub fn fresh(&mut self) -> Letter {
        let l = Letter(format!("c{}", self.next));
        self.next += 1;
        l
    }

    pub fn fresh_alphabet(&mut self, size: usize) -> OrderedAlphabet {
        let letters = (0..size).map(|_| self.fresh()).collect();
        OrderedAlphabet::new(letters).expect("fresh letters are distinct")
    }

    pub fn issued(&self) -> usize {
        self.next
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_tokens() {
        assert!(Letter::new("").is_err());
        assert!(Letter::new("a b").is_err());
        assert!(matches!(
            OrderedAlphabet::from_tokens(&["a", "b", "a"]),
            Err(Error::DuplicateLetter(_))
        ));
    }

    #[test]
    fn order_is_declaration_order() {
        let al = OrderedAlphabet::from_tokens(&["z", "a"]).unwrap();
        assert!(al.sym_of("z").unwrap() < al.sym_of("a").unwrap());
    }

    #[test]
    fn word_parsing() {
        let al = OrderedAlphabet::from_tokens(&["a", "b"]).unwrap();
        assert_eq!(al.parse_word("abba").unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(al.parse_word("a b").unwrap(), vec![0, 1]);
        assert_eq!(al.parse_word("").unwrap(), Vec::<Sym>::new());
        assert_eq!(al.render(&[0, 1]), "ab");
        let multi = OrderedAlphabet::from_tokens(&["c0", "c1"]).unwrap();
        assert_eq!(multi.render(&[1, 0]), "c1 c0");
        assert_eq!(multi.parse_word("c1 c0").unwrap(), vec![1, 0]);
        assert!(multi.parse_word("c1c0").is_err());
    }

    #[test]
    fn pool_skips_existing_tokens() {
        let al = OrderedAlphabet::from_tokens(&["c3", "x", "c10"]).unwrap();
        let mut pool = LetterPool::after(&al);
        assert_eq!(pool.fresh().as_str(), "c11");
    }
}
