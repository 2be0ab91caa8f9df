#![allow(dead_code)]

use polyrec::automata::{Dfa, OrderedAlphabet};
use polyrec::pipeline::Polynomial;
use rand::Rng;

pub const TOKENS: [&str; 3] = ["a", "b", "c"];

/// A random partial DFA with up to `max_states` states over the first
/// `letters` tokens, trimmed.
pub fn random_dfa<R: Rng>(rng: &mut R, max_states: usize, letters: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let al = OrderedAlphabet::from_tokens(&TOKENS[..letters]).unwrap();
    let mut trans = Vec::new();
    for q in 0..n {
        for s in 0..letters {
            if rng.gen_bool(0.6) {
                trans.push((q, s, rng.gen_range(0..n)));
            }
        }
    }
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    Dfa::new(al, n, 0, &finals, &trans).unwrap().trim()
}

/// A random trimmed DFA with an infinite language.
pub fn random_infinite_dfa<R: Rng>(rng: &mut R, max_states: usize, max_letters: usize) -> Dfa {
    loop {
        let letters = rng.gen_range(1..=max_letters);
        let d = random_dfa(rng, max_states, letters);
        if d.is_infinite() {
            return d;
        }
    }
}

pub fn ab_star() -> Dfa {
    let al = OrderedAlphabet::from_tokens(&["a", "b"]).unwrap();
    Dfa::new(al, 2, 0, &[0, 1], &[(0, 0, 0), (0, 1, 1), (1, 1, 1)]).unwrap()
}

/// `a*b* ∪ a*c*`.
pub fn squares_system() -> Dfa {
    let al = OrderedAlphabet::from_tokens(&TOKENS).unwrap();
    Dfa::new(al, 3, 0, &[0, 1, 2], &[(0, 0, 0), (0, 1, 1), (1, 1, 1), (0, 2, 2), (2, 2, 2)]).unwrap()
}

pub fn quadratic() -> Polynomial {
    Polynomial::from_integers(&[0, 3, 2])
}

pub fn quartic() -> Polynomial {
    Polynomial::from_integers(&[5, -2, -3, 0, 1])
}

pub fn quintic() -> Polynomial {
    Polynomial::from_integers(&[8, 0, -2, -4, 0, 1])
}

pub fn rational_quartic() -> Polynomial {
    Polynomial::from_fractions(&[(4, 1), (-17, 2), (37, 6), (-2, 1), (1, 3)])
}

pub fn squares() -> Polynomial {
    Polynomial::from_integers(&[0, 0, 1])
}

/// `(x − 2)²`.
pub fn shifted_square() -> Polynomial {
    Polynomial::from_integers(&[4, -4, 1])
}

/// Every word over `letters` symbols of length at most `max_len`, in radix
/// order.
pub fn all_words(letters: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for s in 0..letters {
                let mut x: Vec<usize> = w.clone();
                x.push(s);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
