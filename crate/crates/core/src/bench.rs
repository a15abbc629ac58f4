//! The mirror family `T[mirror(n)](a1, …, a2n)`.
//!
//! The expression has `2n` symbol occurrences while every NFA for its
//! language needs `2^n` states. The lower bound is certified by a fooling set
//! checked with [`member`], and the minimal DFA is built as a concrete
//! witness.

use crate::derivative::{derived_term_automaton, member};
use crate::error::{Error, Result};
use crate::expr::{Expr, Word};
use crate::formula::{Formula, Interpretation};
use crate::glushkov::glushkov_automaton;

/// Largest `n` accepted by [`fooling_set`] and [`size_report`].
pub const DEFAULT_MIRROR_CAP: usize = 8;

/// `count` distinct names: `a` to `z`, then `a1`, `b1`, …
pub fn default_alphabet(count: usize) -> Vec<String> {
    (0..count)
        .map(|k| {
            let letter = char::from(b'a' + (k % 26) as u8);
            match k / 26 {
                0 => letter.to_string(),
                round => format!("{letter}{round}"),
            }
        })
        .collect()
}

/// `T[mirror(n)](a1, …, a2n)` over the first `2n` symbols of `alphabet`.
pub fn mirror_expr<S: Clone + Ord>(n: usize, alphabet: &[S]) -> Result<Expr<S>> {
    if alphabet.len() < 2 * n {
        return Err(Error::AlphabetTooSmall { needed: 2 * n, available: alphabet.len() });
    }
    let width = u32::try_from(n).map_err(|_| Error::ParameterTooLarge { value: n, cap: u32::MAX as usize })?;
    let operands = alphabet[..2 * n].iter().cloned().map(Expr::Symbol).collect();
    Expr::tilde(Formula::mirror(width), operands)
}

/// A prefix and suffix built from the same erasure vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoolingPair<S> {
    pub prefix: Word<S>,
    pub suffix: Word<S>,
    pub tag: Vec<bool>,
}

impl<S: Clone> FoolingPair<S> {
    pub fn word(&self) -> Word<S> {
        let mut w = self.prefix.clone();
        w.extend_from_slice(&self.suffix);
        w
    }
}

/// The `2^n` pairs for the mirror expression over [`default_alphabet`].
///
/// For a vector `bs`, the prefix keeps `a_k` when `b_k` is false and the
/// suffix keeps `a_{n+k}` when `b_{n-k+1}` is false. Every matching pair is
/// checked to be accepted and every crossed pair to be rejected.
pub fn fooling_set(n: usize) -> Result<Vec<FoolingPair<String>>> {
    if n > DEFAULT_MIRROR_CAP {
        return Err(Error::ParameterTooLarge { value: n, cap: DEFAULT_MIRROR_CAP });
    }
    let alphabet = default_alphabet(2 * n);
    let expr = mirror_expr(n, &alphabet)?;
    let pairs: Vec<FoolingPair<String>> = Interpretation::all(n)
        .map(|interp| {
            let bs = interp.bits();
            let prefix = (0..n).filter(|&k| !bs[k]).map(|k| alphabet[k].clone()).collect();
            let suffix = (0..n).filter(|&k| !bs[n - 1 - k]).map(|k| alphabet[n + k].clone()).collect();
            FoolingPair { prefix, suffix, tag: bs.to_vec() }
        })
        .collect();
    for (i, x) in pairs.iter().enumerate() {
        for (j, y) in pairs.iter().enumerate() {
            let mut w = x.prefix.clone();
            w.extend_from_slice(&y.suffix);
            if member(&expr, &w) != (i == j) {
                return Err(Error::VerificationFailed(format!(
                    "prefix {} with suffix {} should be {}",
                    w_str(&x.prefix),
                    w_str(&y.suffix),
                    if i == j { "accepted" } else { "rejected" }
                )));
            }
        }
    }
    Ok(pairs)
}

fn w_str(w: &[String]) -> String {
    if w.is_empty() {
        "ε".into()
    } else {
        w.concat()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeReport {
    pub n: usize,
    pub symbols: usize,
    pub dta_states: usize,
    pub glushkov_states: usize,
    pub min_dfa_states: usize,
    pub fooling_bound: usize,
}

impl SizeReport {
    /// `key=value` lines.
    pub fn lines(&self) -> Vec<String> {
        vec![
            format!("n={}", self.n),
            format!("symbols={}", self.symbols),
            format!("dta_states={}", self.dta_states),
            format!("glushkov_states={}", self.glushkov_states),
            format!("min_dfa_states={}", self.min_dfa_states),
            format!("fooling_bound={}", self.fooling_bound),
        ]
    }
}

/// Sizes of both automata for the `n`-th mirror expression, of the minimal
/// DFA (sink included), and of the verified fooling set.
pub fn size_report(n: usize) -> Result<SizeReport> {
    if n > DEFAULT_MIRROR_CAP {
        return Err(Error::ParameterTooLarge { value: n, cap: DEFAULT_MIRROR_CAP });
    }
    let alphabet = default_alphabet(2 * n);
    let expr = mirror_expr(n, &alphabet)?;
    let dta = derived_term_automaton(&expr, alphabet.iter().cloned())?;
    let glushkov = glushkov_automaton(&expr)?;
    let min_dfa = dta.determinize().minimize()?;
    let fooling = fooling_set(n)?;
    let bound = 1usize << n;
    if fooling.len() != bound || min_dfa.state_count() < bound {
        return Err(Error::VerificationFailed(format!(
            "minimal DFA has {} states and the fooling set {} pairs, expected at least {bound}",
            min_dfa.state_count(),
            fooling.len()
        )));
    }
    Ok(SizeReport {
        n,
        symbols: expr.symbol_count(),
        dta_states: dta.state_count(),
        glushkov_states: glushkov.state_count(),
        min_dfa_states: min_dfa.state_count(),
        fooling_bound: fooling.len(),
    })
}
