//! A generic nondeterministic automaton without ε-transitions.
//!
//! States are opaque values; the container keeps them in insertion order and
//! refers to them internally by index. The transition function is total over
//! `alphabet × states`, with the empty set for missing moves.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::expr::LangSample;

pub type StateId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa<Q, S> {
    alphabet: Vec<S>,
    states: Vec<Q>,
    index: BTreeMap<Q, StateId>,
    initial: BTreeSet<StateId>,
    finals: BTreeSet<StateId>,
    // delta[state][symbol index]
    delta: Vec<Vec<BTreeSet<StateId>>>,
}

impl<Q: Clone + Ord, S: Clone + Ord + fmt::Debug> Nfa<Q, S> {
    pub fn new(alphabet: impl IntoIterator<Item = S>) -> Self {
        let alphabet: BTreeSet<S> = alphabet.into_iter().collect();
        Nfa {
            alphabet: alphabet.into_iter().collect(),
            states: Vec::new(),
            index: BTreeMap::new(),
            initial: BTreeSet::new(),
            finals: BTreeSet::new(),
            delta: Vec::new(),
        }
    }

    /// Adds `q` unless already present; returns its id either way.
    pub fn add_state(&mut self, q: Q) -> StateId {
        if let Some(&id) = self.index.get(&q) {
            return id;
        }
        let id = self.states.len();
        self.index.insert(q.clone(), id);
        self.states.push(q);
        self.delta.push(vec![BTreeSet::new(); self.alphabet.len()]);
        id
    }

    pub fn set_initial(&mut self, id: StateId) {
        assert!(id < self.states.len());
        self.initial.insert(id);
    }

    pub fn set_final(&mut self, id: StateId) {
        assert!(id < self.states.len());
        self.finals.insert(id);
    }

    pub fn add_transition(&mut self, from: StateId, symbol: &S, to: StateId) -> Result<()> {
        assert!(from < self.states.len() && to < self.states.len());
        let a = self.symbol_index(symbol)?;
        self.delta[from][a].insert(to);
        Ok(())
    }

    fn symbol_index(&self, symbol: &S) -> Result<usize> {
        self.alphabet.binary_search(symbol).map_err(|_| Error::UnknownSymbol(format!("{symbol:?}")))
    }

    pub fn alphabet(&self) -> &[S] {
        &self.alphabet
    }

    pub fn states(&self) -> &[Q] {
        &self.states
    }

    pub fn state(&self, id: StateId) -> &Q {
        &self.states[id]
    }

    pub fn id_of(&self, q: &Q) -> Option<StateId> {
        self.index.get(q).copied()
    }

    pub fn initial(&self) -> &BTreeSet<StateId> {
        &self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn is_final(&self, id: StateId) -> bool {
        self.finals.contains(&id)
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    /// δ(symbol, state).
    pub fn targets(&self, from: StateId, symbol: &S) -> Result<&BTreeSet<StateId>> {
        let a = self.symbol_index(symbol)?;
        Ok(&self.delta[from][a])
    }

    /// All `(from, symbol, to)` triples in state then symbol order.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, &S, StateId)> + '_ {
        self.delta.iter().enumerate().flat_map(move |(from, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(a, targets)| targets.iter().map(move |&to| (from, &self.alphabet[a], to)))
        })
    }

    pub fn transition_count(&self) -> usize {
        self.delta.iter().flatten().map(BTreeSet::len).sum()
    }

    pub fn is_deterministic(&self) -> bool {
        self.initial.len() == 1 && self.delta.iter().flatten().all(|t| t.len() <= 1)
    }

    fn step(&self, from: &BTreeSet<StateId>, a: usize) -> BTreeSet<StateId> {
        from.iter().flat_map(|&q| self.delta[q][a].iter().copied()).collect()
    }

    pub fn accepts(&self, word: &[S]) -> Result<bool> {
        let mut current = self.initial.clone();
        for s in word {
            let a = self.symbol_index(s)?;
            current = self.step(&current, a);
            if current.is_empty() {
                return Ok(false);
            }
        }
        Ok(current.iter().any(|q| self.finals.contains(q)))
    }

    /// Accepted words of length at most `bound`.
    pub fn enumerate_upto(&self, bound: usize) -> LangSample<S> {
        let mut found = Vec::new();
        let mut layer: Vec<(Vec<S>, BTreeSet<StateId>)> = vec![(Vec::new(), self.initial.clone())];
        for len in 0..=bound {
            for (w, set) in &layer {
                if set.iter().any(|q| self.finals.contains(q)) {
                    found.push(w.clone());
                }
            }
            if len == bound {
                break;
            }
            let mut next = Vec::new();
            for (w, set) in &layer {
                for (a, s) in self.alphabet.iter().enumerate() {
                    let to = self.step(set, a);
                    if !to.is_empty() {
                        let mut w2 = w.clone();
                        w2.push(s.clone());
                        next.push((w2, to));
                    }
                }
            }
            layer = next;
        }
        LangSample::new(bound, found)
    }

    /// Accessible subset construction. States of the result are sets of
    /// state ids of `self`; only non-empty targets become transitions.
    pub fn determinize(&self) -> Nfa<BTreeSet<StateId>, S> {
        let mut dfa = Nfa::new(self.alphabet.iter().cloned());
        let start = dfa.add_state(self.initial.clone());
        dfa.set_initial(start);
        let mut queue = VecDeque::from([self.initial.clone()]);
        while let Some(set) = queue.pop_front() {
            let from = dfa.id_of(&set).unwrap();
            if set.iter().any(|q| self.finals.contains(q)) {
                dfa.set_final(from);
            }
            for a in 0..self.alphabet.len() {
                let to = self.step(&set, a);
                if to.is_empty() {
                    continue;
                }
                let known = dfa.id_of(&to).is_some();
                let id = dfa.add_state(to.clone());
                dfa.delta[from][a].insert(id);
                if !known {
                    queue.push_back(to);
                }
            }
        }
        dfa
    }

    /// Moore partition refinement on the accessible part of a deterministic
    /// automaton, completed with a sink when some move is missing. States of
    /// the result are block numbers in breadth-first order from the initial
    /// block.
    pub fn minimize(&self) -> Result<Nfa<usize, S>> {
        if !self.is_deterministic() {
            return Err(Error::NotDeterministic);
        }
        let k = self.alphabet.len();
        // accessible states, then the completed transition table
        let start = *self.initial.iter().next().unwrap();
        let mut order = vec![start];
        let mut seen = BTreeSet::from([start]);
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            for a in 0..k {
                for &t in &self.delta[q][a] {
                    if seen.insert(t) {
                        order.push(t);
                    }
                }
            }
            i += 1;
        }
        let local: BTreeMap<StateId, usize> = order.iter().enumerate().map(|(n, &q)| (q, n)).collect();
        let mut table: Vec<Vec<Option<usize>>> =
            order.iter().map(|&q| (0..k).map(|a| self.delta[q][a].iter().next().map(|t| local[t])).collect()).collect();
        let mut accepting: Vec<bool> = order.iter().map(|q| self.finals.contains(q)).collect();
        if table.iter().flatten().any(Option::is_none) {
            let sink = table.len();
            table.push(vec![Some(sink); k]);
            accepting.push(false);
            for row in &mut table {
                for t in row.iter_mut() {
                    t.get_or_insert(sink);
                }
            }
        }
        let table: Vec<Vec<usize>> = table.into_iter().map(|r| r.into_iter().map(Option::unwrap).collect()).collect();

        let mut block: Vec<usize> = accepting.iter().map(|&f| usize::from(f)).collect();
        loop {
            let mut signatures: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
            let mut next = Vec::with_capacity(block.len());
            for (q, row) in table.iter().enumerate() {
                let sig = (block[q], row.iter().map(|&t| block[t]).collect::<Vec<_>>());
                let n = signatures.len();
                next.push(*signatures.entry(sig).or_insert(n));
            }
            let stable = signatures.len() == block.iter().collect::<BTreeSet<_>>().len();
            block = next;
            if stable {
                break;
            }
        }

        // renumber blocks breadth-first from the initial block
        let mut renumber: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue = VecDeque::from([0usize]);
        renumber.insert(block[0], 0);
        let mut rep: Vec<usize> = vec![0];
        while let Some(q) = queue.pop_front() {
            for &t in &table[q] {
                if let Entry::Vacant(slot) = renumber.entry(block[t]) {
                    slot.insert(rep.len());
                    rep.push(t);
                    queue.push_back(t);
                }
            }
        }
        let mut min = Nfa::new(self.alphabet.iter().cloned());
        for n in 0..rep.len() {
            min.add_state(n);
        }
        min.set_initial(0);
        for (n, &q) in rep.iter().enumerate() {
            if accepting[q] {
                min.set_final(n);
            }
            for a in 0..k {
                min.delta[n][a].insert(renumber[&block[table[q][a]]]);
            }
        }
        Ok(min)
    }

    /// Writes a Graphviz digraph. Nodes are named `q<k>` after their state
    /// id, labelled by `labeler`, and listed in a leading comment legend.
    /// Final states are double circles; each initial state gets an arrow from
    /// an invisible point node.
    pub fn to_dot(&self, mut labeler: impl FnMut(&Q) -> String) -> String
    where
        S: fmt::Display,
    {
        let labels: Vec<String> = self.states.iter().map(&mut labeler).collect();
        let mut out = String::new();
        for (id, label) in labels.iter().enumerate() {
            let _ = writeln!(out, "// q{id}: {label}");
        }
        out.push_str("digraph automaton {\n");
        out.push_str("  rankdir=LR;\n");
        for (id, label) in labels.iter().enumerate() {
            let shape = if self.finals.contains(&id) { "doublecircle" } else { "circle" };
            let _ = writeln!(out, "  q{id} [label=\"{}\", shape={shape}];", escape(label));
        }
        for &id in &self.initial {
            let _ = writeln!(out, "  start{id} [shape=point, style=invis];");
            let _ = writeln!(out, "  start{id} -> q{id};");
        }
        for (from, s, to) in self.transitions() {
            let _ = writeln!(out, "  q{from} -> q{to} [label=\"{}\"];", escape(&s.to_string()));
        }
        out.push_str("}\n");
        out
    }
}

fn escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Exact language equivalence: both automata are determinized, minimized
/// and completed, then the product is explored for a pair of states that
/// disagree on acceptance. A symbol missing from one alphabet sends that side
/// to a rejecting sink.
pub fn equivalent<Q1, Q2, S>(lhs: &Nfa<Q1, S>, rhs: &Nfa<Q2, S>) -> bool
where
    Q1: Clone + Ord,
    Q2: Clone + Ord,
    S: Clone + Ord + fmt::Debug,
{
    let l = lhs.determinize().minimize().expect("determinized input");
    let r = rhs.determinize().minimize().expect("determinized input");
    let alphabet: BTreeSet<&S> = l.alphabet.iter().chain(r.alphabet.iter()).collect();
    let move_in = |m: &Nfa<usize, S>, q: Option<usize>, s: &S| -> Option<usize> {
        let q = q?;
        let a = m.alphabet.binary_search(s).ok()?;
        m.delta[q][a].iter().next().copied()
    };
    let accepting = |m: &Nfa<usize, S>, q: Option<usize>| q.is_some_and(|q| m.finals.contains(&q));
    let start = (Some(0), Some(0));
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((p, q)) = queue.pop_front() {
        if accepting(&l, p) != accepting(&r, q) {
            return false;
        }
        for s in &alphabet {
            let next = (move_in(&l, p, s), move_in(&r, q, s));
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    true
}
