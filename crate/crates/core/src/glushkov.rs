//! Position automata for extended expressions.
//!
//! Symbols are first linearized into [`Position`]s. A tilde node is then
//! developed into a sum over its satisfying interpretations, the `j`-th
//! summand catenating the operands the interpretation keeps, each tagged with
//! `j` at the front of its context. Nested tildes are developed on demand, so
//! a context reads innermost tilde first.

use std::collections::BTreeSet;
use std::fmt;

use crate::automaton::Nfa;
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::formula::{satisfying_interpretations, Formula};

/// Default bound on the number of positions of a developed expression.
pub const DEFAULT_POSITION_CAP: usize = 5_000;

/// An indexed symbol occurrence. Ordered by index, then context, then symbol.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position<S> {
    pub index: usize,
    pub context: Vec<usize>,
    pub base: S,
}

impl<S> Position<S> {
    pub fn new(base: S, index: usize) -> Self {
        Position { index, context: Vec::new(), base }
    }

    /// `ind_j`: tags the position with interpretation `j`.
    pub fn tagged(&self, j: usize) -> Self
    where
        S: Clone,
    {
        let mut context = Vec::with_capacity(self.context.len() + 1);
        context.push(j);
        context.extend_from_slice(&self.context);
        Position { index: self.index, context, base: self.base.clone() }
    }
}

impl<S: fmt::Display> fmt::Display for Position<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},[", self.base, self.index)?;
        for (k, c) in self.context.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("])")
    }
}

/// An expression over positions.
pub type LinExpr<S> = Expr<Position<S>>;

/// Indexes symbol occurrences left to right from `start`. Returns the next
/// unused index alongside the linearized expression.
pub fn linearize<S: Clone + Ord>(e: &Expr<S>, start: usize) -> (LinExpr<S>, usize) {
    let mut next = start;
    let lin = e.map_symbols(&mut |s| {
        let p = Position::new(s.clone(), next);
        next += 1;
        p
    });
    (lin, next)
}

/// The morphism `h` forgetting indices and contexts.
pub fn delinearize<S: Clone + Ord>(e: &LinExpr<S>) -> Expr<S> {
    e.map_symbols(&mut |p| p.base.clone())
}

fn tag<S: Clone + Ord>(e: &LinExpr<S>, j: usize) -> LinExpr<S> {
    e.map_symbols(&mut |p| p.tagged(j))
}

/// One-level development of `φ(E1, …, En)`.
///
/// Interpretations are numbered from 1 in the order of
/// [`satisfying_interpretations`]. Operand `m` is kept when the interpretation
/// maps `m` to false and erased when it maps `m` to true.
pub fn dev_phi<S: Clone + Ord>(phi: &Formula, operands: &[LinExpr<S>]) -> Result<LinExpr<S>> {
    let mut sum = Expr::Empty;
    for (k, interp) in satisfying_interpretations(phi, operands.len())?.into_iter().enumerate() {
        let j = k + 1;
        let mut product = Expr::Epsilon;
        for (m, operand) in operands.iter().enumerate() {
            if !interp.bits()[m] {
                product = Expr::concat(product, tag(operand, j));
            }
        }
        sum = Expr::sum(sum, product);
    }
    Ok(sum)
}

/// Expands every tilde, outermost first, into a tilde-free expression.
pub fn surlinearize<S: Clone + Ord>(e: &LinExpr<S>) -> Result<LinExpr<S>> {
    Ok(match e {
        Expr::Empty | Expr::Epsilon | Expr::Symbol(_) => e.clone(),
        Expr::Sum(l, r) => Expr::raw_sum(surlinearize(l)?, surlinearize(r)?),
        Expr::Concat(l, r) => Expr::raw_concat(surlinearize(l)?, surlinearize(r)?),
        Expr::Star(inner) => Expr::star(surlinearize(inner)?),
        Expr::Tilde(phi, ops) => surlinearize(&dev_phi(phi, ops)?)?,
    })
}

/// Pos, First, Last, Follow and Null of a linear expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionFunctions<S> {
    pub pos: BTreeSet<Position<S>>,
    pub first: BTreeSet<Position<S>>,
    pub last: BTreeSet<Position<S>>,
    pub follow: BTreeSet<(Position<S>, Position<S>)>,
    pub null: bool,
}

impl<S: Clone + Ord> PositionFunctions<S> {
    fn empty(null: bool) -> Self {
        PositionFunctions {
            pos: BTreeSet::new(),
            first: BTreeSet::new(),
            last: BTreeSet::new(),
            follow: BTreeSet::new(),
            null,
        }
    }
}

pub fn position_functions<S: Clone + Ord>(e: &LinExpr<S>) -> Result<PositionFunctions<S>> {
    position_functions_capped(e, DEFAULT_POSITION_CAP)
}

pub fn position_functions_capped<S: Clone + Ord>(e: &LinExpr<S>, cap: usize) -> Result<PositionFunctions<S>> {
    let pf = match e {
        Expr::Empty => PositionFunctions::empty(false),
        Expr::Epsilon => PositionFunctions::empty(true),
        Expr::Symbol(p) => {
            let one = BTreeSet::from([p.clone()]);
            PositionFunctions { pos: one.clone(), first: one.clone(), last: one, follow: BTreeSet::new(), null: false }
        }
        Expr::Sum(l, r) => {
            let mut l = position_functions_capped(l, cap)?;
            let r = position_functions_capped(r, cap)?;
            l.pos.extend(r.pos);
            l.first.extend(r.first);
            l.last.extend(r.last);
            l.follow.extend(r.follow);
            l.null |= r.null;
            l
        }
        Expr::Concat(l, r) => {
            let l = position_functions_capped(l, cap)?;
            let r = position_functions_capped(r, cap)?;
            let mut follow = l.follow;
            follow.extend(r.follow);
            for p in &l.last {
                for q in &r.first {
                    follow.insert((p.clone(), q.clone()));
                }
            }
            let mut first = l.first;
            if l.null {
                first.extend(r.first);
            }
            let mut last = r.last;
            if r.null {
                last.extend(l.last);
            }
            let mut pos = l.pos;
            pos.extend(r.pos);
            PositionFunctions { pos, first, last, follow, null: l.null && r.null }
        }
        Expr::Star(inner) => {
            let mut pf = position_functions_capped(inner, cap)?;
            for p in &pf.last {
                for q in &pf.first {
                    pf.follow.insert((p.clone(), q.clone()));
                }
            }
            pf.null = true;
            pf
        }
        Expr::Tilde(phi, ops) => {
            let mut pf = position_functions_capped(&dev_phi(phi, ops)?, cap)?;
            pf.null = e.nullable();
            pf
        }
    };
    if pf.pos.len() > cap {
        return Err(Error::PositionCapExceeded { cap });
    }
    Ok(pf)
}

/// A state of a Glushkov automaton: the initial state `0` or a position.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GlushkovState<S> {
    Initial,
    Pos(Position<S>),
}

impl<S: fmt::Display> fmt::Display for GlushkovState<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlushkovState::Initial => f.write_str("0"),
            GlushkovState::Pos(p) => write!(f, "{p}"),
        }
    }
}

pub fn glushkov_automaton<S>(e: &Expr<S>) -> Result<Nfa<GlushkovState<S>, S>>
where
    S: Clone + Ord + fmt::Debug,
{
    glushkov_automaton_capped(e, DEFAULT_POSITION_CAP)
}

/// Builds the position automaton of `linearize(e, 1)` and relabels each
/// transition with the base symbol of its target.
pub fn glushkov_automaton_capped<S>(e: &Expr<S>, cap: usize) -> Result<Nfa<GlushkovState<S>, S>>
where
    S: Clone + Ord + fmt::Debug,
{
    let (lin, _) = linearize(e, 1);
    let pf = position_functions_capped(&lin, cap)?;
    let mut nfa = Nfa::new(e.symbols());
    let init = nfa.add_state(GlushkovState::Initial);
    nfa.set_initial(init);
    if pf.null {
        nfa.set_final(init);
    }
    for p in &pf.pos {
        let id = nfa.add_state(GlushkovState::Pos(p.clone()));
        if pf.last.contains(p) {
            nfa.set_final(id);
        }
    }
    let id = |nfa: &Nfa<GlushkovState<S>, S>, p: &Position<S>| {
        nfa.id_of(&GlushkovState::Pos(p.clone())).expect("every position is a state")
    };
    for q in &pf.first {
        let to = id(&nfa, q);
        nfa.add_transition(init, &q.base, to)?;
    }
    for (p, q) in &pf.follow {
        let (from, to) = (id(&nfa, p), id(&nfa, q));
        nfa.add_transition(from, &q.base, to)?;
    }
    Ok(nfa)
}
