use std::collections::HashMap;

use super::dfa::{Dfa, StateId};

/// Moore partition refinement on the trimmed automaton. The output is
/// numbered canonically (breadth-first from the initial state), so two
/// equivalent automata minimize to identical values.
pub fn minimize(d: &Dfa) -> Dfa {
    let t = d.trim();
    let n = t.state_count();
    let mut class: Vec<usize> = (0..n).map(|q| usize::from(t.is_final(q))).collect();
    let mut classes = if class.iter().all(|&c| c == class[0]) { 1 } else { 2 };
    loop {
        let mut ids: HashMap<(usize, Vec<(usize, usize)>), usize> = HashMap::with_capacity(n);
        let mut next = Vec::with_capacity(n);
        for q in 0..n {
            // a trimmed automaton has no state equivalent to the implicit sink
            let sig: Vec<(usize, usize)> =
                t.transitions(q).iter().map(|&(s, r)| (s, class[r])).collect();
            let fresh = ids.len();
            next.push(*ids.entry((class[q], sig)).or_insert(fresh));
        }
        let count = ids.len();
        class = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let mut rep: Vec<Option<StateId>> = vec![None; classes];
    for q in 0..n {
        rep[class[q]].get_or_insert(q);
    }
    let finals = rep.iter().map(|r| t.is_final(r.unwrap())).collect();
    let delta = rep
        .iter()
        .map(|r| {
            t.transitions(r.unwrap())
                .iter()
                .map(|&(s, q)| (s, class[q]))
                .collect()
        })
        .collect();
    Dfa::from_parts(t.alphabet().clone(), class[t.initial()], finals, delta).canonical()
}
