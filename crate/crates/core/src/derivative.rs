//! Antimirov partial derivatives of extended expressions.
//!
//! For a tilde `φ(E1, …, En)` the derivative by `a` is
//!
//! ```text
//! δa(E1) ⊙ φ'(E2, …, En)  ∪  (δa(φ'(E2, …, En)) if ε ∈ L(E1))  ∪  δa(φ''(E2, …, En))
//! ```
//!
//! with `φ' = φ[1 := false]` and `φ'' = φ[1 := true]`, both shifted down by
//! one atom. `⊙` catenates on the right with the smart constructor, so the
//! only normalisations applied to derived terms are the ones listed in
//! [`crate::expr`]. Terms that collapse to `∅` denote nothing and are dropped
//! from derivative sets.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::automaton::Nfa;
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::formula::Formula;

/// Default bound on the number of derived terms.
pub const DEFAULT_STATE_CAP: usize = 10_000;

/// A set of derived terms, kept in first-insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivSet<S> {
    terms: Vec<Expr<S>>,
}

impl<S: Clone + Ord> DerivSet<S> {
    pub fn new() -> Self {
        DerivSet { terms: Vec::new() }
    }

    /// Inserts `e` unless it is `∅` or already present.
    pub fn insert(&mut self, e: Expr<S>) {
        if e != Expr::Empty && !self.terms.contains(&e) {
            self.terms.push(e);
        }
    }

    pub fn extend(&mut self, other: DerivSet<S>) {
        for e in other.terms {
            self.insert(e);
        }
    }

    pub fn terms(&self) -> &[Expr<S>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Expr<S>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, e: &Expr<S>) -> bool {
        self.terms.contains(e)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Expr<S>> {
        self.terms.iter()
    }

    /// `self ⊙ rhs`.
    fn then(self, rhs: &Expr<S>) -> DerivSet<S> {
        let mut out = DerivSet::new();
        for e in self.terms {
            out.insert(Expr::concat(e, rhs.clone()));
        }
        out
    }
}

impl<S: Clone + Ord> Default for DerivSet<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<'a, S> IntoIterator for &'a DerivSet<S> {
    type Item = &'a Expr<S>;
    type IntoIter = std::slice::Iter<'a, Expr<S>>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<S: fmt::Display + PartialEq> fmt::Display for DerivSet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// `δa(E)`.
pub fn derive_symbol<S: Clone + Ord>(e: &Expr<S>, a: &S) -> DerivSet<S> {
    match e {
        Expr::Empty | Expr::Epsilon => DerivSet::new(),
        Expr::Symbol(b) => {
            let mut out = DerivSet::new();
            if b == a {
                out.insert(Expr::Epsilon);
            }
            out
        }
        Expr::Sum(l, r) => {
            let mut out = derive_symbol(l, a);
            out.extend(derive_symbol(r, a));
            out
        }
        Expr::Concat(l, r) => {
            let mut out = derive_symbol(l, a).then(r);
            if l.nullable() {
                out.extend(derive_symbol(r, a));
            }
            out
        }
        Expr::Star(inner) => derive_symbol(inner, a).then(e),
        Expr::Tilde(phi, ops) => derive_tilde(phi, ops, a),
    }
}

fn derive_tilde<S: Clone + Ord>(phi: &Formula, ops: &[Expr<S>], a: &S) -> DerivSet<S> {
    let Some((head, tail)) = ops.split_first() else {
        // a nullary tilde denotes ε or ∅
        return DerivSet::new();
    };
    let n = ops.len();
    let keep = phi.shift_head(false, n).expect("tilde formula within its arity");
    let erase = phi.shift_head(true, n).expect("tilde formula within its arity");
    let keep_tail = Expr::tilde(keep, tail.to_vec()).expect("shifted formula within the tail arity");
    let erase_tail = Expr::tilde(erase, tail.to_vec()).expect("shifted formula within the tail arity");

    let mut out = derive_symbol(head, a).then(&keep_tail);
    if head.nullable() {
        out.extend(derive_symbol(&keep_tail, a));
    }
    out.extend(derive_symbol(&erase_tail, a));
    out
}

/// `δw(E)`; `δε(E) = {E}`.
pub fn derive_word<S: Clone + Ord>(e: &Expr<S>, word: &[S]) -> DerivSet<S> {
    let mut current = DerivSet { terms: vec![e.clone()] };
    for a in word {
        let mut next = DerivSet::new();
        for t in current.iter() {
            next.extend(derive_symbol(t, a));
        }
        current = next;
    }
    current
}

/// Membership: some derived term by `word` is nullable.
pub fn member<S: Clone + Ord>(e: &Expr<S>, word: &[S]) -> bool {
    derive_word(e, word).iter().any(Expr::nullable)
}

pub fn derived_term_automaton<S>(e: &Expr<S>, alphabet: impl IntoIterator<Item = S>) -> Result<Nfa<Expr<S>, S>>
where
    S: Clone + Ord + fmt::Debug,
{
    derived_term_automaton_capped(e, alphabet, DEFAULT_STATE_CAP)
}

/// Worklist closure of `{E}` under symbol derivation. States appear in
/// discovery order; finals are the nullable terms.
pub fn derived_term_automaton_capped<S>(
    e: &Expr<S>,
    alphabet: impl IntoIterator<Item = S>,
    cap: usize,
) -> Result<Nfa<Expr<S>, S>>
where
    S: Clone + Ord + fmt::Debug,
{
    let alphabet: BTreeSet<S> = alphabet.into_iter().collect();
    let mut nfa = Nfa::new(alphabet.iter().cloned());
    let start = nfa.add_state(e.clone());
    nfa.set_initial(start);
    let mut queue = VecDeque::from([start]);
    while let Some(id) = queue.pop_front() {
        let term = nfa.state(id).clone();
        if term.nullable() {
            nfa.set_final(id);
        }
        for a in &alphabet {
            for target in derive_symbol(&term, a).into_terms() {
                let known = nfa.id_of(&target).is_some();
                let to = nfa.add_state(target);
                if !known {
                    if nfa.state_count() > cap {
                        return Err(Error::StateCapExceeded { cap });
                    }
                    queue.push_back(to);
                }
                nfa.add_transition(id, a, to)?;
            }
        }
    }
    Ok(nfa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::equivalent;
    use crate::syntax::parse_expr;

    fn e(text: &str) -> Expr<char> {
        parse_expr(text).unwrap()
    }

    fn w(text: &str) -> Vec<char> {
        text.chars().collect()
    }

    /// Splits `F · T[φ](ops)` into its parts.
    fn split_term(t: &Expr<char>) -> (&Expr<char>, &Formula, &[Expr<char>]) {
        match t {
            Expr::Concat(l, r) => match &**r {
                Expr::Tilde(phi, ops) => (l, phi, ops),
                other => panic!("expected a tilde, got {other}"),
            },
            other => panic!("expected a catenation, got {other}"),
        }
    }

    #[test]
    fn derive_by_a() {
        let d = derive_symbol(&e("T[mirror(2)](a+, b+, a+, b+)"), &'a');
        assert_eq!(d.len(), 1);
        let (head, phi, ops) = split_term(&d.terms()[0]);
        assert_eq!(*head, e("a*"));
        assert_eq!(ops, &[e("b+"), e("a+"), e("b+")]);
        let expected = Formula::and([Formula::mirror(1), Formula::not(Formula::atom(3))]);
        assert!(equivalent(phi, &expected, 3).unwrap());
    }

    #[test]
    fn derive_by_b() {
        let d = derive_symbol(&e("T[mirror(2)](a+, b+, a+, b+)"), &'b');
        assert_eq!(d.len(), 1);
        let (head, phi, ops) = split_term(&d.terms()[0]);
        assert_eq!(*head, e("b*"));
        assert_eq!(ops, &[e("a+"), e("b+")]);
        let expected = Formula::and([Formula::not(Formula::atom(1)), Formula::atom(2)]);
        assert!(equivalent(phi, &expected, 2).unwrap());
    }

    #[test]
    fn derive_symbol_classical() {
        assert!(derive_symbol(&e("b"), &'a').is_empty());
        assert_eq!(derive_symbol(&e("a"), &'a').terms(), &[Expr::Epsilon]);
        assert_eq!(derive_symbol(&e("a*"), &'a').terms(), &[e("a*")]);
        assert_eq!(derive_symbol(&e("(a+b)*a(a+b)"), &'a').len(), 2);
    }

    #[test]
    fn word_derivatives() {
        let big = e("T[mirror(2)](a+, b+, a+, b+)");
        assert_eq!(derive_word(&big, &[]).terms(), std::slice::from_ref(&big));
        let aa = derive_word(&big, &w("aa"));
        assert_eq!(aa, derive_symbol(&big, &'a'));
        let ab = derive_word(&big, &w("ab"));
        assert_eq!(ab.len(), 2);
        let (head, phi, ops) = split_term(&ab.terms()[0]);
        assert_eq!(*head, e("b*"));
        assert_eq!(ops, &[e("a+"), e("b+")]);
        let expected = Formula::and([Formula::not(Formula::atom(1)), Formula::not(Formula::atom(2))]);
        assert!(equivalent(phi, &expected, 2).unwrap());
        assert_eq!(ab.terms()[1], e("b*"));
    }

    #[test]
    fn membership() {
        let small = e("T[mirror(2)](a, b, a, b)");
        for word in ["", "ab", "ba", "abab"] {
            assert!(member(&small, &w(word)), "{word}");
        }
        for word in ["aab", "a", "aba", "abb", "bab"] {
            assert!(!member(&small, &w(word)), "{word}");
        }
        assert!(!member(&Expr::<char>::Empty, &[]));
    }

    #[test]
    fn mirror_plus_automaton() {
        let big = e("T[mirror(2)](a+, b+, a+, b+)");
        let dta = derived_term_automaton(&big, ['a', 'b']).unwrap();
        assert_eq!(dta.state_count(), 7);
        assert_eq!(dta.finals().len(), 3);
        assert_eq!(dta.transition_count(), 13);
        let finals: Vec<String> = dta.finals().iter().map(|&q| dta.state(q).to_string()).collect();
        assert_eq!(finals, vec![big.to_string(), "b*".to_string(), "a*.T[1](b+)".to_string()]);
    }

    #[test]
    fn empty_automaton() {
        let dta = derived_term_automaton(&Expr::<char>::Empty, ['a']).unwrap();
        assert_eq!(dta.state_count(), 1);
        assert!(dta.finals().is_empty());
        assert_eq!(dta.transition_count(), 0);
    }

    #[test]
    fn cap_is_enforced() {
        let big = e("T[mirror(2)](a+, b+, a+, b+)");
        let result = derived_term_automaton_capped(&big, ['a', 'b'], 3);
        assert!(matches!(result, Err(Error::StateCapExceeded { cap: 3 })));
    }
}
