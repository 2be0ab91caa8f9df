use std::collections::VecDeque;

use super::alphabet::{Letter, OrderedAlphabet, Sym};
use crate::error::{Error, Result};

pub type StateId = usize;

/// A partial deterministic automaton. Missing transitions go to an implicit
/// rejecting sink.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: OrderedAlphabet,
    initial: StateId,
    finals: Vec<bool>,
    // per state, transitions sorted by symbol
    delta: Vec<Vec<(Sym, StateId)>>,
}

impl Dfa {
    /// Validates and builds an automaton from explicit parts.
    pub fn new(
        alphabet: OrderedAlphabet,
        state_count: usize,
        initial: StateId,
        finals: &[StateId],
        transitions: &[(StateId, Sym, StateId)],
    ) -> Result<Self> {
        let check = |q: StateId| {
            if q < state_count {
                Ok(())
            } else {
                Err(Error::StateOutOfRange { state: q, count: state_count })
            }
        };
        check(initial)?;
        let mut is_final = vec![false; state_count];
        for &f in finals {
            check(f)?;
            is_final[f] = true;
        }
        let mut delta = vec![Vec::new(); state_count];
        for &(p, s, q) in transitions {
            check(p)?;
            check(q)?;
            if s >= alphabet.len() {
                return Err(Error::UnknownLetter(format!("#{s}")));
            }
            delta[p].push((s, q));
        }
        for row in &mut delta {
            row.sort_unstable();
            if row.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::Format {
                    line: 0,
                    msg: "two transitions on the same letter".into(),
                });
            }
        }
        Ok(Dfa { alphabet, initial, finals: is_final, delta })
    }

    pub(crate) fn from_parts(
        alphabet: OrderedAlphabet,
        initial: StateId,
        finals: Vec<bool>,
        mut delta: Vec<Vec<(Sym, StateId)>>,
    ) -> Self {
        debug_assert_eq!(finals.len(), delta.len());
        for row in &mut delta {
            row.sort_unstable();
            debug_assert!(row.windows(2).all(|w| w[0].0 != w[1].0));
        }
        Dfa { alphabet, initial, finals, delta }
    }

    /// The automaton with a single non-accepting state.
    pub fn empty(alphabet: OrderedAlphabet) -> Self {
        Dfa { alphabet, initial: 0, finals: vec![false], delta: vec![Vec::new()] }
    }

    /// The automaton accepting only the empty word.
    pub fn epsilon(alphabet: OrderedAlphabet) -> Self {
        Dfa { alphabet, initial: 0, finals: vec![true], delta: vec![Vec::new()] }
    }

    /// `Σ*` over the given alphabet.
    pub fn universal(alphabet: OrderedAlphabet) -> Self {
        let row = (0..alphabet.len()).map(|s| (s, 0)).collect();
        Dfa { alphabet, initial: 0, finals: vec![true], delta: vec![row] }
    }

    /// A trie accepting exactly the given words.
    pub fn from_words(alphabet: OrderedAlphabet, words: &[Vec<Sym>]) -> Self {
        let mut finals = vec![false];
        let mut delta: Vec<Vec<(Sym, StateId)>> = vec![Vec::new()];
        for w in words {
            let mut q = 0;
            for &s in w {
                q = match delta[q].iter().find(|t| t.0 == s) {
                    Some(&(_, t)) => t,
                    None => {
                        let t = delta.len();
                        delta.push(Vec::new());
                        finals.push(false);
                        delta[q].push((s, t));
                        t
                    }
                };
            }
            finals[q] = true;
        }
        Dfa::from_parts(alphabet, 0, finals, delta)
    }

    pub fn alphabet(&self) -> &OrderedAlphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals.iter().enumerate().filter(|f| *f.1).map(|f| f.0)
    }

    /// Outgoing transitions of `q`, sorted by symbol.
    pub fn transitions(&self, q: StateId) -> &[(Sym, StateId)] {
        &self.delta[q]
    }

    pub fn transition_count(&self) -> usize {
        self.delta.iter().map(Vec::len).sum()
    }

    pub fn step(&self, q: StateId, s: Sym) -> Option<StateId> {
        let row = &self.delta[q];
        if row.len() <= 8 {
            row.iter().find(|t| t.0 == s).map(|t| t.1)
        } else {
            row.binary_search_by_key(&s, |t| t.0).ok().map(|i| row[i].1)
        }
    }

    /// The state reached from `q` after reading `word`, if any.
    pub fn run_from(&self, q: StateId, word: &[Sym]) -> Option<StateId> {
        word.iter().try_fold(q, |q, &s| self.step(q, s))
    }

    pub fn accepts_syms(&self, word: &[Sym]) -> bool {
        self.run_from(self.initial, word).is_some_and(|q| self.finals[q])
    }

    /// Membership for a word given as letters.
    pub fn accepts(&self, word: &[Letter]) -> Result<bool> {
        Ok(self.accepts_syms(&self.alphabet.encode_letters(word)?))
    }

    /// Membership for a word given as string tokens.
    pub fn accepts_tokens<S: AsRef<str>>(&self, word: &[S]) -> Result<bool> {
        Ok(self.accepts_syms(&self.alphabet.encode(word)?))
    }

    pub(crate) fn coreachable(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut preds = vec![Vec::new(); n];
        for (p, row) in self.delta.iter().enumerate() {
            for &(_, q) in row {
                preds[q].push(p);
            }
        }
        let mut seen = self.finals.clone();
        let mut stack: Vec<StateId> = self.finals().collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// Removes states that are unreachable or cannot reach a final state,
    /// renumbering the rest in breadth-first order from the initial state.
    pub fn trim(&self) -> Dfa {
        let co = self.coreachable();
        if !co[self.initial] {
            return Dfa::empty(self.alphabet.clone());
        }
        let mut id = vec![usize::MAX; self.state_count()];
        let mut order = vec![self.initial];
        id[self.initial] = 0;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for &(_, t) in &self.delta[q] {
                if co[t] && id[t] == usize::MAX {
                    id[t] = order.len();
                    order.push(t);
                }
            }
        }
        let finals = order.iter().map(|&q| self.finals[q]).collect();
        let delta = order
            .iter()
            .map(|&q| {
                self.delta[q]
                    .iter()
                    .filter(|t| co[t.1])
                    .map(|&(s, t)| (s, id[t]))
                    .collect()
            })
            .collect();
        Dfa::from_parts(self.alphabet.clone(), 0, finals, delta)
    }

    pub fn is_empty_language(&self) -> bool {
        !self.coreachable()[self.initial]
    }

    /// True when the accepted language is infinite: some useful state lies on a cycle.
    pub fn is_infinite(&self) -> bool {
        let t = self.trim();
        if t.is_empty_language() {
            return false;
        }
        // iterative DFS colouring for back edges
        let n = t.state_count();
        let mut colour = vec![0u8; n];
        let mut stack: Vec<(StateId, usize)> = vec![(t.initial, 0)];
        colour[t.initial] = 1;
        while let Some(&mut (q, ref mut i)) = stack.last_mut() {
            if *i < t.delta[q].len() {
                let next = t.delta[q][*i].1;
                *i += 1;
                match colour[next] {
                    0 => {
                        colour[next] = 1;
                        stack.push((next, 0));
                    }
                    1 => return true,
                    _ => {}
                }
            } else {
                colour[q] = 2;
                stack.pop();
            }
        }
        false
    }

    /// Same states and transitions with every letter renamed through `map`
    /// (old symbol to new symbol) into `alphabet`.
    pub(crate) fn relabel(&self, alphabet: OrderedAlphabet, map: &[Sym]) -> Dfa {
        let delta = self
            .delta
            .iter()
            .map(|row| row.iter().map(|&(s, t)| (map[s], t)).collect())
            .collect();
        Dfa::from_parts(alphabet, self.initial, self.finals.clone(), delta)
    }

    /// The same language over a reordering of this automaton's alphabet.
    pub fn with_order(&self, order: &OrderedAlphabet) -> Result<Dfa> {
        if !self.alphabet.same_tokens(order) {
            return Err(Error::AlphabetMismatch);
        }
        let map: Vec<Sym> = self
            .alphabet
            .letters()
            .iter()
            .map(|l| order.sym(l).expect("same tokens"))
            .collect();
        Ok(self.relabel(order.clone(), &map))
    }

    /// Breadth-first state order from the initial state, letters ascending.
    pub(crate) fn bfs_order(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.state_count()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for &(_, t) in &self.delta[q] {
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                    queue.push_back(t);
                }
            }
        }
        order
    }

    /// Reachable part renumbered in breadth-first discovery order.
    pub fn canonical(&self) -> Dfa {
        let order = self.bfs_order();
        let mut id = vec![usize::MAX; self.state_count()];
        for (i, &q) in order.iter().enumerate() {
            id[q] = i;
        }
        let finals = order.iter().map(|&q| self.finals[q]).collect();
        let delta = order
            .iter()
            .map(|&q| self.delta[q].iter().map(|&(s, t)| (s, id[t])).collect())
            .collect();
        Dfa::from_parts(self.alphabet.clone(), 0, finals, delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab_star() -> Dfa {
        let al = OrderedAlphabet::from_tokens(&["a", "b"]).unwrap();
        Dfa::new(al, 2, 0, &[0, 1], &[(0, 0, 0), (0, 1, 1), (1, 1, 1)]).unwrap()
    }

    #[test]
    fn membership() {
        let d = ab_star();
        assert!(d.accepts_tokens(&["a", "b"]).unwrap());
        assert!(!d.accepts_tokens(&["b", "a"]).unwrap());
        assert!(d.accepts_tokens::<&str>(&[]).unwrap());
        assert!(matches!(d.accepts_tokens(&["z"]), Err(Error::UnknownLetter(_))));
    }

    #[test]
    fn validation() {
        let al = OrderedAlphabet::from_tokens(&["a"]).unwrap();
        assert!(Dfa::new(al.clone(), 1, 1, &[], &[]).is_err());
        assert!(Dfa::new(al.clone(), 1, 0, &[0], &[(0, 0, 3)]).is_err());
        assert!(Dfa::new(al, 2, 0, &[0], &[(0, 0, 0), (0, 0, 1)]).is_err());
    }

    #[test]
    fn trim_and_infinite() {
        let al = OrderedAlphabet::from_tokens(&["a", "b"]).unwrap();
        // state 2 is a dead loop
        let d = Dfa::new(al.clone(), 3, 0, &[1], &[(0, 0, 1), (0, 1, 2), (2, 1, 2)]).unwrap();
        let t = d.trim();
        assert_eq!(t.state_count(), 2);
        assert!(!d.is_infinite());
        assert!(ab_star().is_infinite());
        assert!(Dfa::empty(al.clone()).is_empty_language());
        assert!(!Dfa::epsilon(al).is_empty_language());
    }

    #[test]
    fn trie() {
        let al = OrderedAlphabet::from_tokens(&["a", "b"]).unwrap();
        let d = Dfa::from_words(al, &[vec![0, 1], vec![0], vec![]]);
        assert!(d.accepts_syms(&[]));
        assert!(d.accepts_syms(&[0]));
        assert!(d.accepts_syms(&[0, 1]));
        assert!(!d.accepts_syms(&[1]));
    }
}
