//! Abstract numeration systems built on regular languages.
//!
//! Given a polynomial `P` with rational coefficients and `P(N) ⊂ N`, the
//! [`pipeline`] builds a regular language `L` over an ordered alphabet such
//! that the representations of `P(N)` (the words of `L` whose radix rank is a
//! value of `P`) form a regular language, and returns an automaton for it.
//!
//! The building blocks are public: automaton algebra ([`automata`]), exact
//! counting and radix rank/unrank ([`enumeration`]), languages of polynomial
//! density ([`constructors`]) and a brute-force [`oracle`] for checking all of
//! the above.

pub mod automata;
pub mod constructors;
pub mod enumeration;
pub mod error;
pub mod io;
pub mod oracle;
pub mod pipeline;

pub use error::{Error, Result};
