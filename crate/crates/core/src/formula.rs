//! Boolean formulae over positive integer atoms.
//!
//! A [`Formula`] is the constraint carried by a tilde node: atom `k` stands
//! for the `k`-th operand, and an interpretation mapping `k` to true erases
//! that operand. Besides evaluation this module provides the handful of
//! syntactic transforms the derivative and nullability rules rely on:
//! simultaneous substitution, constant propagation ([`Formula::reduce`]),
//! and the two head/tail assignments [`Formula::shift_head`] and
//! [`Formula::assign_last`].
//!
//! Satisfiability uses the plain splitting procedure: reduce, and if atoms
//! remain, branch on the smallest one with `false` tried before `true`.
//! Equivalence and model enumeration go through the full truth table and are
//! therefore guarded by a width cap.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Largest width accepted by truth-table enumeration.
pub const DEFAULT_WIDTH_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Const(bool),
    Atom(u32),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Atom `k`. Atoms are numbered from 1.
    ///
    /// Panics if `k` is zero.
    pub fn atom(k: u32) -> Formula {
        assert!(k >= 1, "atoms are numbered from 1");
        Formula::Atom(k)
    }

    pub fn top() -> Formula {
        Formula::Const(true)
    }

    pub fn bottom() -> Formula {
        Formula::Const(false)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(children: impl IntoIterator<Item = Formula>) -> Formula {
        Formula::And(children.into_iter().collect())
    }

    pub fn or(children: impl IntoIterator<Item = Formula>) -> Formula {
        Formula::Or(children.into_iter().collect())
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Implies(Box::new(lhs), Box::new(rhs))
    }

    pub fn iff(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Iff(Box::new(lhs), Box::new(rhs))
    }

    /// The mirror constraint over atoms `1..=2n`: atom `k` and atom
    /// `2n - k + 1` agree for every `k <= n`.
    ///
    /// Each agreement is spelled `(k & m) | (!k & !m)`. `mirror(0)` is `true`
    /// and `mirror(1)` is the single agreement clause without a conjunction
    /// wrapper.
    pub fn mirror(n: u32) -> Formula {
        let width = 2 * n;
        let mut clauses: Vec<Formula> = (1..=n)
            .map(|k| {
                let l = Formula::atom(k);
                let r = Formula::atom(width - k + 1);
                Formula::or([Formula::and([l.clone(), r.clone()]), Formula::and([Formula::not(l), Formula::not(r)])])
            })
            .collect();
        match clauses.len() {
            0 => Formula::top(),
            1 => clauses.pop().unwrap(),
            _ => Formula::And(clauses),
        }
    }

    /// Largest atom index occurring in the formula, or 0 when there is none.
    pub fn max_atom(&self) -> u32 {
        match self {
            Formula::Const(_) => 0,
            Formula::Atom(k) => *k,
            Formula::Not(x) => x.max_atom(),
            Formula::And(xs) | Formula::Or(xs) => xs.iter().map(Formula::max_atom).max().unwrap_or(0),
            Formula::Implies(a, b) | Formula::Iff(a, b) => a.max_atom().max(b.max_atom()),
        }
    }

    pub fn atoms(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<u32>) {
        match self {
            Formula::Const(_) => {}
            Formula::Atom(k) => {
                out.insert(*k);
            }
            Formula::Not(x) => x.collect_atoms(out),
            Formula::And(xs) | Formula::Or(xs) => xs.iter().for_each(|x| x.collect_atoms(out)),
            Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Fails with `AtomOutOfRange` when some atom exceeds `width`.
    pub fn check_width(&self, width: usize) -> Result<()> {
        let max = self.max_atom();
        if max as usize > width {
            return Err(Error::AtomOutOfRange { atom: max, width });
        }
        Ok(())
    }

    pub fn is_const(&self) -> Option<bool> {
        match self {
            Formula::Const(b) => Some(*b),
            _ => None,
        }
    }

    pub fn eval(&self, interp: &Interpretation) -> Result<bool> {
        Ok(match self {
            Formula::Const(b) => *b,
            Formula::Atom(k) => interp.get(*k)?,
            Formula::Not(x) => !x.eval(interp)?,
            Formula::And(xs) => {
                let mut acc = true;
                for x in xs {
                    acc &= x.eval(interp)?;
                }
                acc
            }
            Formula::Or(xs) => {
                let mut acc = false;
                for x in xs {
                    acc |= x.eval(interp)?;
                }
                acc
            }
            Formula::Implies(a, b) => !a.eval(interp)? || b.eval(interp)?,
            Formula::Iff(a, b) => a.eval(interp)? == b.eval(interp)?,
        })
    }

    /// Simultaneous substitution: atoms introduced by the replacement
    /// formulae are left alone.
    pub fn substitute(&self, assignments: &BTreeMap<u32, Formula>) -> Formula {
        match self {
            Formula::Const(_) => self.clone(),
            Formula::Atom(k) => assignments.get(k).cloned().unwrap_or_else(|| self.clone()),
            Formula::Not(x) => Formula::not(x.substitute(assignments)),
            Formula::And(xs) => Formula::And(xs.iter().map(|x| x.substitute(assignments)).collect()),
            Formula::Or(xs) => Formula::Or(xs.iter().map(|x| x.substitute(assignments)).collect()),
            Formula::Implies(a, b) => Formula::implies(a.substitute(assignments), b.substitute(assignments)),
            Formula::Iff(a, b) => Formula::iff(a.substitute(assignments), b.substitute(assignments)),
        }
    }

    /// `φ[1 := head, 2 := 1, …, n := n-1]`, reduced.
    ///
    /// This peels the first operand off a tilde: `head = false` keeps it,
    /// `head = true` erases it.
    pub fn shift_head(&self, head: bool, width: usize) -> Result<Formula> {
        self.check_width(width)?;
        let mut map = BTreeMap::new();
        map.insert(1, Formula::Const(head));
        for k in 2..=width as u32 {
            map.insert(k, Formula::Atom(k - 1));
        }
        Ok(self.substitute(&map).reduce())
    }

    /// `φ[n := last]`, reduced.
    pub fn assign_last(&self, last: bool, width: usize) -> Result<Formula> {
        self.check_width(width)?;
        if width == 0 {
            return Ok(self.reduce());
        }
        let mut map = BTreeMap::new();
        map.insert(width as u32, Formula::Const(last));
        Ok(self.substitute(&map).reduce())
    }

    /// Bottom-up constant propagation.
    ///
    /// The result is either a constant or contains no constant at all, and
    /// conjunctions/disjunctions in it have at least two children. The
    /// rewrite is compositional: reducing after each of two successive
    /// constant substitutions yields the same tree as reducing once after
    /// both.
    pub fn reduce(&self) -> Formula {
        match self {
            Formula::Const(_) | Formula::Atom(_) => self.clone(),
            Formula::Not(x) => negate(x.reduce()),
            Formula::And(xs) => {
                let mut kept = Vec::with_capacity(xs.len());
                for x in xs {
                    match x.reduce() {
                        Formula::Const(true) => {}
                        Formula::Const(false) => return Formula::Const(false),
                        r => kept.push(r),
                    }
                }
                collapse(kept, true)
            }
            Formula::Or(xs) => {
                let mut kept = Vec::with_capacity(xs.len());
                for x in xs {
                    match x.reduce() {
                        Formula::Const(false) => {}
                        Formula::Const(true) => return Formula::Const(true),
                        r => kept.push(r),
                    }
                }
                collapse(kept, false)
            }
            Formula::Implies(a, b) => match (a.reduce(), b.reduce()) {
                (Formula::Const(true), y) => y,
                (Formula::Const(false), _) => Formula::Const(true),
                (_, Formula::Const(true)) => Formula::Const(true),
                (x, Formula::Const(false)) => negate(x),
                (x, y) => Formula::implies(x, y),
            },
            Formula::Iff(a, b) => match (a.reduce(), b.reduce()) {
                (Formula::Const(true), y) | (y, Formula::Const(true)) => y,
                (Formula::Const(false), y) | (y, Formula::Const(false)) => negate(y),
                (x, y) => Formula::iff(x, y),
            },
        }
    }

    pub fn is_satisfiable(&self) -> bool {
        split(self, None)
    }

    /// Runs the splitting procedure and records every branch it visits, in
    /// visiting order.
    pub fn satisfiability_trace(&self) -> (bool, Vec<SplitStep>) {
        let mut steps = Vec::new();
        let sat = split(self, Some(&mut steps));
        (sat, steps)
    }

    pub fn is_contradiction(&self) -> bool {
        !self.is_satisfiable()
    }

    pub fn is_tautology(&self) -> bool {
        Formula::not(self.clone()).is_contradiction()
    }
}

fn negate(f: Formula) -> Formula {
    match f {
        Formula::Const(b) => Formula::Const(!b),
        other => Formula::not(other),
    }
}

fn collapse(mut kept: Vec<Formula>, conjunction: bool) -> Formula {
    match kept.len() {
        0 => Formula::Const(conjunction),
        1 => kept.pop().unwrap(),
        _ if conjunction => Formula::And(kept),
        _ => Formula::Or(kept),
    }
}

/// One branch of the splitting procedure: `atom := value`, and the reduced
/// formula that results.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitStep {
    pub atom: u32,
    pub value: bool,
    pub reduced: Formula,
}

fn split(phi: &Formula, mut trace: Option<&mut Vec<SplitStep>>) -> bool {
    let reduced = phi.reduce();
    if let Formula::Const(b) = reduced {
        return b;
    }
    let atom = *reduced.atoms().iter().next().expect("non-constant reduced formula has an atom");
    for value in [false, true] {
        let mut map = BTreeMap::new();
        map.insert(atom, Formula::Const(value));
        let next = reduced.substitute(&map).reduce();
        if let Some(t) = trace.as_deref_mut() {
            t.push(SplitStep { atom, value, reduced: next.clone() });
        }
        if split(&next, trace.as_deref_mut()) {
            return true;
        }
    }
    false
}

/// A total assignment of the atoms `1..=width`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interpretation {
    bits: Vec<bool>,
}

impl Interpretation {
    pub fn new(bits: Vec<bool>) -> Self {
        Interpretation { bits }
    }

    /// The `index`-th interpretation of the canonical order, where atom 1 is
    /// the most significant bit.
    pub fn from_index(index: u64, width: usize) -> Self {
        let bits = (0..width).map(|k| (index >> (width - 1 - k)) & 1 == 1).collect();
        Interpretation { bits }
    }

    pub fn width(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, atom: u32) -> Result<bool> {
        if atom == 0 || atom as usize > self.bits.len() {
            return Err(Error::AtomOutOfRange { atom, width: self.bits.len() });
        }
        Ok(self.bits[atom as usize - 1])
    }

    /// All `2^width` interpretations in canonical order.
    pub fn all(width: usize) -> impl Iterator<Item = Interpretation> {
        (0..1u64 << width).map(move |i| Interpretation::from_index(i, width))
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

fn check_cap(width: usize, cap: usize) -> Result<()> {
    if width > cap {
        return Err(Error::WidthTooLarge { width, cap });
    }
    Ok(())
}

/// Truth-table equivalence over `width` atoms.
pub fn equivalent(lhs: &Formula, rhs: &Formula, width: usize) -> Result<bool> {
    check_cap(width, DEFAULT_WIDTH_CAP)?;
    lhs.check_width(width)?;
    rhs.check_width(width)?;
    for i in Interpretation::all(width) {
        if lhs.eval(&i)? != rhs.eval(&i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Models of `phi` among the width-`width` interpretations, in canonical
/// order. List positions (from 1) are the interpretation numbers used to tag
/// position contexts.
pub fn satisfying_interpretations(phi: &Formula, width: usize) -> Result<Vec<Interpretation>> {
    satisfying_interpretations_capped(phi, width, DEFAULT_WIDTH_CAP)
}

pub fn satisfying_interpretations_capped(phi: &Formula, width: usize, cap: usize) -> Result<Vec<Interpretation>> {
    check_cap(width, cap)?;
    phi.check_width(width)?;
    let mut out = Vec::new();
    for i in Interpretation::all(width) {
        if phi.eval(&i)? {
            out.push(i);
        }
    }
    Ok(out)
}

const PREC_IFF: u8 = 0;
const PREC_IMPLIES: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_NOT: u8 = 4;

impl Formula {
    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => PREC_IFF,
            Formula::Implies(..) => PREC_IMPLIES,
            Formula::Or(xs) if xs.len() >= 2 => PREC_OR,
            Formula::And(xs) if xs.len() >= 2 => PREC_AND,
            _ => PREC_NOT,
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
            Formula::Const(true) => f.write_str("true"),
            Formula::Const(false) => f.write_str("false"),
            Formula::Atom(k) => write!(f, "{k}"),
            Formula::Not(x) => {
                f.write_str("!")?;
                x.write_at(f, PREC_NOT)
            }
            Formula::And(xs) | Formula::Or(xs) if xs.is_empty() => {
                f.write_str(if matches!(self, Formula::And(_)) { "true" } else { "false" })
            }
            Formula::And(xs) | Formula::Or(xs) if xs.len() == 1 => {
                f.write_str("(")?;
                xs[0].write_at(f, PREC_IFF)?;
                f.write_str(")")
            }
            Formula::And(xs) => write_list(f, xs, " & ", PREC_NOT),
            Formula::Or(xs) => write_list(f, xs, " | ", PREC_AND),
            Formula::Implies(a, b) => {
                a.write_at(f, PREC_OR)?;
                f.write_str(" -> ")?;
                b.write_at(f, PREC_IMPLIES)
            }
            Formula::Iff(a, b) => {
                a.write_at(f, PREC_IFF)?;
                f.write_str(" <-> ")?;
                b.write_at(f, PREC_IMPLIES)
            }
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[Formula], sep: &str, min: u8) -> fmt::Result {
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            f.write_str(sep)?;
        }
        x.write_at(f, min)?;
    }
    Ok(())
}

/// Prints in the textual formula syntax accepted by
/// [`parse_formula`](crate::syntax::parse_formula).
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, PREC_IFF)
    }
}
