use std::collections::HashMap;

use super::profile::{live_lasso, relevance, shift_back, state_budget_check, Bits};
use crate::automata::{difference, minimize, Dfa, StateId, Sym};
use crate::error::Result;

/// Default cap on the number of product states built by the constructions
/// in this module.
pub const DEFAULT_STATE_BUDGET: usize = 1_000_000;

/// `I(L)`: the radix-least word of every length present in `L(d)`.
pub fn min_words(d: &Dfa) -> Dfa {
    min_words_with_budget(d, usize::MAX).expect("unbounded budget")
}

/// `min_words` with a cap on constructed states.
///
/// A product state pairs the DFA state `q` reached by the word read so far
/// with the set `S` of states reached by strictly smaller words of the same
/// length. Only the lengths that `S` can still complete matter, so `S` is
/// stored as the set of length-profile nodes at which some member of `S`
/// accepts, restricted to the nodes where `q` itself can accept.
pub fn min_words_with_budget(d: &Dfa, budget: usize) -> Result<Dfa> {
    let d = d.trim();
    let live = live_lasso(&d, budget)?;
    let rel = relevance(&d, &live);
    let nodes = live.len();

    let mut ids: HashMap<(StateId, Bits), StateId> = HashMap::new();
    let mut states = vec![(d.initial(), Bits::new(nodes))];
    ids.insert(states[0].clone(), 0);
    let mut finals = Vec::new();
    let mut delta: Vec<Vec<(Sym, StateId)>> = Vec::new();
    let mut head = 0;
    while head < states.len() {
        let (q, smaller) = states[head].clone();
        head += 1;
        finals.push(d.is_final(q) && !smaller.get(0));
        let shifted = shift_back(&live, &smaller);
        let mut below_letter = Bits::new(nodes);
        let mut row = Vec::new();
        for &(s, t) in d.transitions(q) {
            let mut next = shifted.clone();
            next.or_with(&below_letter);
            next.and_with(&rel[t]);
            below_letter.or_with(&rel[t]);
            let key = (t, next);
            let id = match ids.get(&key) {
                Some(&id) => id,
                None => {
                    let id = states.len();
                    state_budget_check(id + 1, budget)?;
                    ids.insert(key.clone(), id);
                    states.push(key);
                    id
                }
            };
            row.push((s, id));
        }
        delta.push(row);
    }
    Ok(minimize(&Dfa::from_parts(d.alphabet().clone(), 0, finals, delta)))
}

/// Removes, at every length, the `count` radix-least words of `L(d)`.
pub fn strip_first(d: &Dfa, count: usize) -> Dfa {
    let mut cur = minimize(d);
    for _ in 0..count {
        let first = min_words(&cur);
        cur = minimize(&difference(&cur, &first).expect("same alphabet"));
    }
    cur
}
