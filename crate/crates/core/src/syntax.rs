//! Text syntax for formulae and expressions.
//!
//! Formulae: decimal atoms `1`, `2`, …; constants `true`/`false` (also `⊤`,
//! `⊥`); `!`, `&`, `|`, `->`, `<->` (also `¬ ∧ ∨ → ↔`) binding in that
//! order from tightest to loosest, `->` to the right and `<->` to the left;
//! parentheses; `mirror(n)` expands to the mirror constraint on `2n` atoms.
//!
//! Expressions: symbols `a`..`z`; `0` is the empty language and `1` the
//! empty word; postfix `*` and `+`; infix `+` for sums; juxtaposition or `.`
//! for catenation; `T[formula](E1, …, En)` for a constrained tilde.
//! A `+` directly after an operand is a sum when another operand follows it
//! and a postfix plus otherwise, so `a+b` is a sum and `a+.b` or `(a+)b` use
//! the plus.

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::formula::Formula;

pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser::new(text, 0);
    let f = p.formula()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected `{c}`")));
    }
    Ok(f)
}

pub fn parse_expr(text: &str) -> Result<Expr<char>> {
    let mut p = Parser::new(text, 0);
    let e = p.sum()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected `{c}`")));
    }
    Ok(e)
}

impl std::str::FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_formula(s)
    }
}

impl std::str::FromStr for Expr<char> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    offset: usize,
    len: usize,
}

impl Parser {
    fn new(text: &str, offset: usize) -> Self {
        Parser { chars: text.char_indices().collect(), pos: 0, offset, len: text.len() }
    }

    fn byte_pos(&self) -> usize {
        self.offset + self.chars.get(self.pos).map_or(self.len, |&(b, _)| b)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax { pos: self.byte_pos(), message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn peek_at(&self, k: usize) -> Option<char> {
        self.chars.get(self.pos + k).map(|&(_, c)| c)
    }

    /// Skips whitespace, then consumes `token` if it comes next.
    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        let matches = token.chars().enumerate().all(|(k, c)| self.peek_at(k) == Some(c));
        if matches {
            self.pos += token.chars().count();
        }
        matches
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        digits
            .parse()
            .map_err(|_| Error::Syntax { pos: self.offset + self.chars[start].0, message: "number too large".into() })
    }

    // formula := implies ("<->" implies)*
    fn formula(&mut self) -> Result<Formula> {
        let mut lhs = self.implication()?;
        while self.eat("<->") || self.eat("↔") {
            let rhs = self.implication()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    // implies := disj ("->" implies)?
    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if self.eat("->") || self.eat("→") {
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut items = vec![self.conjunction()?];
        while self.eat("|") || self.eat("∨") {
            items.push(self.conjunction()?);
        }
        Ok(if items.len() == 1 { items.pop().unwrap() } else { Formula::Or(items) })
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut items = vec![self.negation()?];
        while self.eat("&") || self.eat("∧") {
            items.push(self.negation()?);
        }
        Ok(if items.len() == 1 { items.pop().unwrap() } else { Formula::And(items) })
    }

    fn negation(&mut self) -> Result<Formula> {
        if self.eat("!") || self.eat("¬") {
            return Ok(Formula::not(self.negation()?));
        }
        self.formula_atom()
    }

    fn formula_atom(&mut self) -> Result<Formula> {
        self.skip_ws();
        if self.eat("(") {
            let f = self.formula()?;
            self.expect(")")?;
            return Ok(f);
        }
        if self.eat("true") || self.eat("⊤") {
            return Ok(Formula::top());
        }
        if self.eat("false") || self.eat("⊥") {
            return Ok(Formula::bottom());
        }
        if self.eat("mirror") {
            self.expect("(")?;
            let n = self.number()?;
            self.expect(")")?;
            return Ok(Formula::mirror(n));
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let at = self.byte_pos();
                let k = self.number()?;
                if k == 0 {
                    return Err(Error::Syntax {
                        pos: at,
                        message: "atoms are numbered from 1; write `false` for ⊥".into(),
                    });
                }
                Ok(Formula::Atom(k))
            }
            Some(c) => Err(self.error(format!("unexpected `{c}` in formula"))),
            None => Err(self.error("unexpected end of formula")),
        }
    }

    // sum := cat ("+" cat)*
    fn sum(&mut self) -> Result<Expr<char>> {
        let mut lhs = self.catenation()?;
        while self.eat("+") {
            let rhs = self.catenation()?;
            lhs = Expr::sum(lhs, rhs);
        }
        Ok(lhs)
    }

    fn starts_operand(&mut self) -> bool {
        self.skip_ws();
        matches!(self.peek(), Some(c) if c.is_ascii_lowercase() || c == '0' || c == '1' || c == '(' || c == 'T')
    }

    // cat := postfix ("."? postfix)*
    fn catenation(&mut self) -> Result<Expr<char>> {
        let mut lhs = self.postfix()?;
        loop {
            if self.eat(".") || self.starts_operand() {
                let rhs = self.postfix()?;
                lhs = Expr::concat(lhs, rhs);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn postfix(&mut self) -> Result<Expr<char>> {
        let mut e = self.primary()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    e = Expr::star(e);
                }
                Some('+') => {
                    // postfix only when no operand follows
                    let save = self.pos;
                    self.pos += 1;
                    if self.starts_operand() {
                        self.pos = save;
                        return Ok(e);
                    }
                    e = Expr::plus(e);
                }
                _ => return Ok(e),
            }
        }
    }

    fn primary(&mut self) -> Result<Expr<char>> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(")")?;
                Ok(e)
            }
            Some('0') => {
                self.pos += 1;
                Ok(Expr::empty())
            }
            Some('1') => {
                self.pos += 1;
                Ok(Expr::epsilon())
            }
            Some('T') => self.tilde(),
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                Ok(Expr::symbol(c))
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of expression")),
        }
    }

    fn tilde(&mut self) -> Result<Expr<char>> {
        let at = self.byte_pos();
        self.pos += 1;
        self.expect("[")?;
        let start = self.pos;
        while self.peek().is_some_and(|c| c != ']') {
            self.pos += 1;
        }
        if self.peek().is_none() {
            return Err(self.error("unterminated tilde formula"));
        }
        let inner: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        let inner_offset = self.offset + self.chars[start].0;
        self.pos += 1;
        let phi = {
            let mut p = Parser::new(&inner, inner_offset);
            let f = p.formula()?;
            p.skip_ws();
            if let Some(c) = p.peek() {
                return Err(p.error(format!("unexpected `{c}` in formula")));
            }
            f
        };
        self.expect("(")?;
        let mut operands = Vec::new();
        if !self.eat(")") {
            loop {
                operands.push(self.sum()?);
                if self.eat(")") {
                    break;
                }
                self.expect(",")?;
            }
        }
        Expr::tilde(phi, operands).map_err(|e| match e {
            Error::AtomOutOfRange { .. } => e,
            other => Error::Syntax { pos: at, message: other.to_string() },
        })
    }
}
