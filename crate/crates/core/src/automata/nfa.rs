use std::collections::HashMap;

use super::alphabet::{OrderedAlphabet, Sym};
use super::dfa::{Dfa, StateId};
use crate::error::{Error, Result};

/// Nondeterministic automaton with optional ε-moves.
#[derive(Clone, Debug)]
pub struct Nfa {
    alphabet: OrderedAlphabet,
    initials: Vec<StateId>,
    finals: Vec<bool>,
    delta: Vec<Vec<(Sym, StateId)>>,
    epsilon: Vec<Vec<StateId>>,
}

impl Nfa {
    pub fn new(alphabet: OrderedAlphabet, state_count: usize) -> Self {
        Nfa {
            alphabet,
            initials: Vec::new(),
            finals: vec![false; state_count],
            delta: vec![Vec::new(); state_count],
            epsilon: vec![Vec::new(); state_count],
        }
    }

    pub fn alphabet(&self) -> &OrderedAlphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    pub fn add_state(&mut self) -> StateId {
        self.finals.push(false);
        self.delta.push(Vec::new());
        self.epsilon.push(Vec::new());
        self.finals.len() - 1
    }

    fn check(&self, q: StateId) -> Result<()> {
        if q < self.state_count() {
            Ok(())
        } else {
            Err(Error::StateOutOfRange { state: q, count: self.state_count() })
        }
    }

    pub fn add_initial(&mut self, q: StateId) -> Result<()> {
        self.check(q)?;
        if !self.initials.contains(&q) {
            self.initials.push(q);
        }
        Ok(())
    }

    pub fn set_final(&mut self, q: StateId, accepting: bool) -> Result<()> {
        self.check(q)?;
        self.finals[q] = accepting;
        Ok(())
    }

    pub fn add_transition(&mut self, p: StateId, s: Sym, q: StateId) -> Result<()> {
        self.check(p)?;
        self.check(q)?;
        if s >= self.alphabet.len() {
            return Err(Error::UnknownLetter(format!("#{s}")));
        }
        self.delta[p].push((s, q));
        Ok(())
    }

    pub fn add_epsilon(&mut self, p: StateId, q: StateId) -> Result<()> {
        self.check(p)?;
        self.check(q)?;
        self.epsilon[p].push(q);
        Ok(())
    }

    pub fn initials(&self) -> &[StateId] {
        &self.initials
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    fn closure(&self, set: &mut Vec<StateId>, mark: &mut [bool]) {
        let mut stack = set.clone();
        while let Some(q) = stack.pop() {
            for &t in &self.epsilon[q] {
                if !mark[t] {
                    mark[t] = true;
                    set.push(t);
                    stack.push(t);
                }
            }
        }
        for &q in set.iter() {
            mark[q] = false;
        }
        set.sort_unstable();
        set.dedup();
    }

    /// Simulates the automaton on a word.
    pub fn accepts_syms(&self, word: &[Sym]) -> bool {
        let mut mark = vec![false; self.state_count()];
        let mut cur = self.initials.clone();
        for &q in &cur {
            mark[q] = true;
        }
        self.closure(&mut cur, &mut mark);
        for &s in word {
            let mut next = Vec::new();
            for &q in &cur {
                for &(t_s, t) in &self.delta[q] {
                    if t_s == s && !mark[t] {
                        mark[t] = true;
                        next.push(t);
                    }
                }
            }
            self.closure(&mut next, &mut mark);
            cur = next;
        }
        cur.iter().any(|&q| self.finals[q])
    }

    /// Subset construction over reachable subsets, followed by trimming.
    pub fn determinize(&self) -> Dfa {
        let mut mark = vec![false; self.state_count()];
        let mut start = self.initials.clone();
        start.sort_unstable();
        start.dedup();
        for &q in &start {
            mark[q] = true;
        }
        self.closure(&mut start, &mut mark);

        let mut ids: HashMap<Vec<StateId>, StateId> = HashMap::new();
        let mut subsets = vec![start.clone()];
        ids.insert(start, 0);
        let mut finals = Vec::new();
        let mut delta = Vec::new();
        let mut head = 0;
        let mut buckets: Vec<Vec<StateId>> = vec![Vec::new(); self.alphabet.len()];
        while head < subsets.len() {
            let cur = subsets[head].clone();
            head += 1;
            finals.push(cur.iter().any(|&q| self.finals[q]));
            let mut touched = Vec::new();
            for &q in &cur {
                for &(s, t) in &self.delta[q] {
                    if buckets[s].is_empty() {
                        touched.push(s);
                    }
                    buckets[s].push(t);
                }
            }
            touched.sort_unstable();
            let mut row = Vec::with_capacity(touched.len());
            for s in touched {
                let mut next = std::mem::take(&mut buckets[s]);
                next.sort_unstable();
                next.dedup();
                for &q in &next {
                    mark[q] = true;
                }
                self.closure(&mut next, &mut mark);
                let id = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        ids.insert(next.clone(), id);
                        subsets.push(next);
                        id
                    }
                };
                row.push((s, id));
            }
            delta.push(row);
        }
        Dfa::from_parts(self.alphabet.clone(), 0, finals, delta).trim()
    }
}

impl From<&Dfa> for Nfa {
    fn from(d: &Dfa) -> Self {
        let mut n = Nfa::new(d.alphabet().clone(), d.state_count());
        n.initials.push(d.initial());
        for q in 0..d.state_count() {
            n.finals[q] = d.is_final(q);
            n.delta[q] = d.transitions(q).to_vec();
        }
        n
    }
}

/// Automaton for the mirror images of the words of `d`.
pub fn reverse(d: &Dfa) -> Nfa {
    let mut n = Nfa::new(d.alphabet().clone(), d.state_count());
    for q in 0..d.state_count() {
        for &(s, t) in d.transitions(q) {
            n.delta[t].push((s, q));
        }
    }
    n.initials = d.finals().collect();
    n.finals[d.initial()] = true;
    n
}

/// Shuffle product: every interleaving of a word of `a` with a word of `b`.
/// The result alphabet is `a`'s alphabet followed by the new letters of `b`.
pub fn shuffle(a: &Dfa, b: &Dfa) -> Nfa {
    let alphabet = a.alphabet().merge(b.alphabet());
    let b_map: Vec<Sym> = b
        .alphabet()
        .letters()
        .iter()
        .map(|l| alphabet.sym(l).expect("merged alphabet"))
        .collect();
    let mut n = Nfa::new(alphabet, 0);
    let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut queue = vec![(a.initial(), b.initial())];
    let first = n.add_state();
    ids.insert(queue[0], first);
    n.initials.push(first);
    let mut head = 0;
    while head < queue.len() {
        let (p, q) = queue[head];
        let id = ids[&(p, q)];
        head += 1;
        n.finals[id] = a.is_final(p) && b.is_final(q);
        let moves = a
            .transitions(p)
            .iter()
            .map(|&(s, t)| (s, (t, q)))
            .chain(b.transitions(q).iter().map(|&(s, t)| (b_map[s], (p, t))));
        for (s, pair) in moves.collect::<Vec<_>>() {
            let target = match ids.get(&pair) {
                Some(&t) => t,
                None => {
                    let t = n.add_state();
                    ids.insert(pair, t);
                    queue.push(pair);
                    t
                }
            };
            n.delta[id].push((s, target));
        }
    }
    n
}
