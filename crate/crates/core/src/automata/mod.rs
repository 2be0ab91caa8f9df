//! Finite automata over ordered alphabets.
//!
//! [`Dfa`] is partial: a missing transition leads to an implicit rejecting
//! sink. All operations are pure and return new automata.

mod alphabet;
mod dfa;
mod minimize;
mod nfa;
mod ops;

pub use alphabet::{Letter, LetterPool, OrderedAlphabet, Sym, Word};
pub use dfa::{Dfa, StateId};
pub use minimize::minimize;
pub use nfa::{reverse, shuffle, Nfa};
pub use ops::{
    complement, difference, disjoint_union, embed, equivalent, intersection, modify_finite,
    position_pattern, product, recent_occurrence, restrict_min_length, union, BoolOp, Verdict,
};

/// Determinizes an NFA (reachable subsets, trimmed).
pub fn determinize(n: &Nfa) -> Dfa {
    n.determinize()
}
