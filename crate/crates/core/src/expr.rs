//! Extended regular expressions.
//!
//! [`Expr`] is a classical regular expression extended with the constrained
//! tilde node `Tilde(φ, [E1, …, En])`. Its language is the union, over the
//! interpretations `i` satisfying `φ`, of the catenation `L'1 · … · L'n`
//! where `L'k = {ε}` when `i(k)` holds and `L(Ek)` otherwise.
//!
//! The `concat`, `sum` and `tilde` constructors normalise exactly the
//! following and nothing more:
//!
//! * `E·ε = ε·E = E` and `E·∅ = ∅·E = ∅`,
//! * `∅ + E = E + ∅ = E`,
//! * a tilde's formula is reduced; a contradictory tilde is `∅`, and a
//!   nullary tilde with a tautological formula is `ε`.
//!
//! [`Expr::language_upto`] computes the words of bounded length straight
//! from the set semantics. It is the reference the automaton constructions
//! are tested against and deliberately shares no code with them.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Result;
use crate::formula::{Formula, Interpretation};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Expr<S> {
    Empty,
    Epsilon,
    Symbol(S),
    Sum(Box<Expr<S>>, Box<Expr<S>>),
    Concat(Box<Expr<S>>, Box<Expr<S>>),
    Star(Box<Expr<S>>),
    Tilde(Formula, Vec<Expr<S>>),
}

pub type Word<S> = Vec<S>;

impl<S: Clone + Ord> Expr<S> {
    pub fn symbol(s: S) -> Self {
        Expr::Symbol(s)
    }

    pub fn epsilon() -> Self {
        Expr::Epsilon
    }

    pub fn empty() -> Self {
        Expr::Empty
    }

    pub fn concat(lhs: Expr<S>, rhs: Expr<S>) -> Self {
        match (lhs, rhs) {
            (Expr::Empty, _) | (_, Expr::Empty) => Expr::Empty,
            (Expr::Epsilon, e) | (e, Expr::Epsilon) => e,
            (l, r) => Expr::Concat(Box::new(l), Box::new(r)),
        }
    }

    pub fn sum(lhs: Expr<S>, rhs: Expr<S>) -> Self {
        match (lhs, rhs) {
            (Expr::Empty, e) | (e, Expr::Empty) => e,
            (l, r) => Expr::Sum(Box::new(l), Box::new(r)),
        }
    }

    pub fn star(e: Expr<S>) -> Self {
        Expr::Star(Box::new(e))
    }

    /// `e · e*`.
    pub fn plus(e: Expr<S>) -> Self {
        Expr::concat(e.clone(), Expr::star(e))
    }

    pub fn tilde(phi: Formula, operands: Vec<Expr<S>>) -> Result<Self> {
        phi.check_width(operands.len())?;
        let phi = phi.reduce();
        Ok(match phi {
            phi if phi.is_contradiction() => Expr::Empty,
            Formula::Const(true) if operands.is_empty() => Expr::Epsilon,
            phi => Expr::Tilde(phi, operands),
        })
    }

    pub fn raw_concat(lhs: Expr<S>, rhs: Expr<S>) -> Self {
        Expr::Concat(Box::new(lhs), Box::new(rhs))
    }

    pub fn raw_sum(lhs: Expr<S>, rhs: Expr<S>) -> Self {
        Expr::Sum(Box::new(lhs), Box::new(rhs))
    }

    /// Whether the empty word is in the language.
    ///
    /// For a tilde, the first operand is peeled off: either it is kept (and
    /// must itself be nullable) under `φ[1 := false]`, or it is erased under
    /// `φ[1 := true]`, both shifted down by one.
    pub fn nullable(&self) -> bool {
        match self {
            Expr::Empty | Expr::Symbol(_) => false,
            Expr::Epsilon | Expr::Star(_) => true,
            Expr::Sum(l, r) => l.nullable() || r.nullable(),
            Expr::Concat(l, r) => l.nullable() && r.nullable(),
            Expr::Tilde(phi, ops) => tilde_nullable(phi, ops),
        }
    }

    pub fn symbols(&self) -> BTreeSet<S> {
        let mut out = BTreeSet::new();
        self.visit_symbols(&mut |s| {
            out.insert(s.clone());
        });
        out
    }

    /// Number of symbol occurrences.
    pub fn symbol_count(&self) -> usize {
        let mut n = 0;
        self.visit_symbols(&mut |_| n += 1);
        n
    }

    fn visit_symbols(&self, f: &mut impl FnMut(&S)) {
        match self {
            Expr::Empty | Expr::Epsilon => {}
            Expr::Symbol(s) => f(s),
            Expr::Sum(l, r) | Expr::Concat(l, r) => {
                l.visit_symbols(f);
                r.visit_symbols(f);
            }
            Expr::Star(e) => e.visit_symbols(f),
            Expr::Tilde(_, ops) => ops.iter().for_each(|e| e.visit_symbols(f)),
        }
    }

    /// Structure-preserving relabelling of the symbols.
    pub fn map_symbols<T>(&self, f: &mut impl FnMut(&S) -> T) -> Expr<T> {
        match self {
            Expr::Empty => Expr::Empty,
            Expr::Epsilon => Expr::Epsilon,
            Expr::Symbol(s) => Expr::Symbol(f(s)),
            Expr::Sum(l, r) => {
                let l = l.map_symbols(f);
                Expr::Sum(Box::new(l), Box::new(r.map_symbols(f)))
            }
            Expr::Concat(l, r) => {
                let l = l.map_symbols(f);
                Expr::Concat(Box::new(l), Box::new(r.map_symbols(f)))
            }
            Expr::Star(e) => Expr::Star(Box::new(e.map_symbols(f))),
            Expr::Tilde(phi, ops) => Expr::Tilde(phi.clone(), ops.iter().map(|e| e.map_symbols(f)).collect()),
        }
    }

    /// Every word of the language of length at most `bound`.
    pub fn language_upto(&self, bound: usize) -> LangSample<S> {
        LangSample { bound, words: self.words_upto(bound) }
    }

    /// `{ w : a·w ∈ L(E), |w| <= bound }`.
    pub fn quotient_upto(&self, a: &S, bound: usize) -> LangSample<S> {
        let words =
            self.words_upto(bound + 1).into_iter().filter(|w| w.first() == Some(a)).map(|w| w[1..].to_vec()).collect();
        LangSample { bound, words }
    }

    fn words_upto(&self, bound: usize) -> BTreeSet<Word<S>> {
        match self {
            Expr::Empty => BTreeSet::new(),
            Expr::Epsilon => BTreeSet::from([Vec::new()]),
            Expr::Symbol(s) if bound >= 1 => BTreeSet::from([vec![s.clone()]]),
            Expr::Symbol(_) => BTreeSet::new(),
            Expr::Sum(l, r) => {
                let mut out = l.words_upto(bound);
                out.extend(r.words_upto(bound));
                out
            }
            Expr::Concat(l, r) => product(&l.words_upto(bound), &r.words_upto(bound), bound),
            Expr::Star(e) => {
                let base = e.words_upto(bound);
                let mut acc = BTreeSet::from([Vec::new()]);
                // a word of length <= bound splits into at most `bound`
                // non-empty factors
                for _ in 0..bound {
                    let next = product(&acc, &base, bound);
                    let before = acc.len();
                    acc.extend(next);
                    if acc.len() == before {
                        break;
                    }
                }
                acc
            }
            Expr::Tilde(phi, ops) => {
                let langs: Vec<_> = ops.iter().map(|e| e.words_upto(bound)).collect();
                let mut out = BTreeSet::new();
                for i in Interpretation::all(ops.len()) {
                    if !phi.eval(&i).expect("tilde formula within its arity") {
                        continue;
                    }
                    let mut acc = BTreeSet::from([Vec::new()]);
                    for (k, lang) in langs.iter().enumerate() {
                        if !i.bits()[k] {
                            acc = product(&acc, lang, bound);
                        }
                    }
                    out.extend(acc);
                }
                out
            }
        }
    }
}

fn tilde_nullable<S: Clone + Ord>(phi: &Formula, ops: &[Expr<S>]) -> bool {
    match phi.reduce() {
        Formula::Const(false) => false,
        Formula::Const(true) if ops.is_empty() => true,
        phi => {
            let n = ops.len();
            assert!(n > 0, "a nullary tilde reduces to a constant");
            let keep = phi.shift_head(false, n).expect("tilde formula within its arity");
            if ops[0].nullable() && tilde_nullable(&keep, &ops[1..]) {
                return true;
            }
            let erase = phi.shift_head(true, n).expect("tilde formula within its arity");
            tilde_nullable(&erase, &ops[1..])
        }
    }
}

fn product<S: Clone + Ord>(lhs: &BTreeSet<Word<S>>, rhs: &BTreeSet<Word<S>>, bound: usize) -> BTreeSet<Word<S>> {
    let mut out = BTreeSet::new();
    for u in lhs {
        for v in rhs {
            if u.len() + v.len() <= bound {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.insert(w);
            }
        }
    }
    out
}

/// The words of a language up to a length bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LangSample<S> {
    bound: usize,
    words: BTreeSet<Word<S>>,
}

impl<S: Clone + Ord> LangSample<S> {
    /// Panics if a word is longer than `bound`.
    pub fn new(bound: usize, words: impl IntoIterator<Item = Word<S>>) -> Self {
        let words: BTreeSet<_> = words.into_iter().collect();
        assert!(words.iter().all(|w| w.len() <= bound), "word longer than the sample bound");
        LangSample { bound, words }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn words(&self) -> &BTreeSet<Word<S>> {
        &self.words
    }

    pub fn contains(&self, w: &[S]) -> bool {
        self.words.contains(w)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word<S>> {
        self.words.iter()
    }

    /// Applies a letter-to-letter morphism to every word.
    pub fn map<T: Clone + Ord>(&self, mut f: impl FnMut(&S) -> T) -> LangSample<T> {
        LangSample { bound: self.bound, words: self.words.iter().map(|w| w.iter().map(&mut f).collect()).collect() }
    }

    pub fn union(&self, other: &LangSample<S>) -> LangSample<S> {
        LangSample {
            bound: self.bound.min(other.bound),
            words: self.words.union(&other.words).filter(|w| w.len() <= self.bound.min(other.bound)).cloned().collect(),
        }
    }
}

impl LangSample<char> {
    /// Words as strings, `""` for the empty word.
    pub fn to_strings(&self) -> Vec<String> {
        self.words.iter().map(|w| w.iter().collect()).collect()
    }
}

/// Renders a word with `ε` for the empty word.
pub fn show_word<S: fmt::Display>(w: &[S]) -> String {
    if w.is_empty() {
        return "ε".to_string();
    }
    w.iter().map(|s| s.to_string()).collect()
}

const PREC_SUM: u8 = 0;
const PREC_CONCAT: u8 = 1;
const PREC_ATOM: u8 = 2;

impl<S: fmt::Display + PartialEq> Expr<S> {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Sum(..) => PREC_SUM,
            Expr::Concat(l, r) if !is_plus(l, r) => PREC_CONCAT,
            _ => PREC_ATOM,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.write_bare(f)?;
            f.write_str(")")
        } else {
            self.write_bare(f)
        }
    }

    fn write_bare(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Empty => f.write_str("0"),
            Expr::Epsilon => f.write_str("1"),
            Expr::Symbol(s) => write!(f, "{s}"),
            Expr::Sum(l, r) => {
                l.write_at(f, PREC_SUM)?;
                f.write_str(" + ")?;
                r.write_at(f, PREC_CONCAT)
            }
            Expr::Concat(l, r) if is_plus(l, r) => {
                l.write_at(f, PREC_ATOM)?;
                f.write_str("+")
            }
            Expr::Concat(l, r) => {
                l.write_at(f, PREC_CONCAT)?;
                f.write_str(".")?;
                r.write_at(f, PREC_ATOM)
            }
            Expr::Star(e) => {
                e.write_at(f, PREC_ATOM)?;
                f.write_str("*")
            }
            Expr::Tilde(phi, ops) => {
                write!(f, "T[{phi}](")?;
                for (k, e) in ops.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    e.write_at(f, PREC_SUM)?;
                }
                f.write_str(")")
            }
        }
    }
}

fn is_plus<S: PartialEq>(l: &Expr<S>, r: &Expr<S>) -> bool {
    matches!(r, Expr::Star(inner) if **inner == *l)
}

/// Prints in the expression syntax; `x.x*` is shown as `x+`.
impl<S: fmt::Display + PartialEq> fmt::Display for Expr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, PREC_SUM)
    }
}
