//! Checks shared by the property tests and the acceptance runner. Each
//! returns a description of the first discrepancy found.

use std::collections::{BTreeMap, BTreeSet};

use multitilde::derivative::{derive_symbol, derived_term_automaton, member};
use multitilde::formula::equivalent;
use multitilde::glushkov::{delinearize, glushkov_automaton, linearize, position_functions, surlinearize};
use multitilde::{Expr, Formula, Word};

use super::{accepts, all_words, assign, catenate, same_truth_table, ALPHABET};

pub type Check = Result<(), String>;

fn lang(e: &Expr<char>, bound: usize) -> BTreeSet<Word<char>> {
    e.language_upto(bound).words().clone()
}

fn show(words: &BTreeSet<Word<char>>) -> String {
    let items: Vec<String> = words.iter().map(|w| multitilde::expr::show_word(w)).collect();
    format!("{{{}}}", items.join(", "))
}

fn same_lang(what: &str, lhs: &BTreeSet<Word<char>>, rhs: &BTreeSet<Word<char>>) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {} != {}", show(lhs), show(rhs)))
    }
}

/// Membership, the oracle, the derived-term automaton and the Glushkov
/// automaton agree on every word up to `bound`.
pub fn backends_agree(e: &Expr<char>, bound: usize) -> Check {
    let oracle = e.language_upto(bound);
    let dta = derived_term_automaton(e, ALPHABET).map_err(|err| err.to_string())?;
    let glushkov = glushkov_automaton(e).map_err(|err| err.to_string())?;
    for w in all_words(&ALPHABET, bound) {
        let expected = oracle.contains(&w);
        let answers = [member(e, &w), accepts(&dta, &w), accepts(&glushkov, &w)];
        if answers.iter().any(|&a| a != expected) {
            return Err(format!(
                "{e} on {}: oracle {expected}, member/dta/glushkov {answers:?}",
                multitilde::expr::show_word(&w)
            ));
        }
    }
    Ok(())
}

/// `φ ~ ¬k ∧ φ[k := ⊥] ∨ k ∧ φ[k := ⊤]`.
pub fn shannon(phi: &Formula, width: usize, k: u32) -> Check {
    let expansion = shannon_expansion(phi, k);
    if same_truth_table(phi, &expansion, width) && equivalent(phi, &expansion, width).unwrap() {
        Ok(())
    } else {
        Err(format!("{phi} is not equivalent to {expansion}"))
    }
}

pub fn shannon_expansion(phi: &Formula, k: u32) -> Formula {
    Formula::or([
        Formula::and([Formula::not(Formula::atom(k)), assign(phi, k, false)]),
        Formula::and([Formula::atom(k), assign(phi, k, true)]),
    ])
}

/// Equivalent formulas give the same tilde language. `psi` must be
/// equivalent to `phi`.
pub fn equivalent_formulas(phi: &Formula, psi: &Formula, ops: &[Expr<char>], bound: usize) -> Check {
    if !same_truth_table(phi, psi, ops.len()) {
        return Err(format!("{phi} and {psi} are not equivalent"));
    }
    same_lang(
        &format!("{phi} vs {psi}"),
        &lang(&Expr::Tilde(phi.clone(), ops.to_vec()), bound),
        &lang(&Expr::Tilde(psi.clone(), ops.to_vec()), bound),
    )
}

/// `(φ ∨ ψ)(L…) = φ(L…) ∪ ψ(L…)`.
pub fn disjunction(phi: &Formula, psi: &Formula, ops: &[Expr<char>], bound: usize) -> Check {
    let both = lang(&Expr::Tilde(Formula::or([phi.clone(), psi.clone()]), ops.to_vec()), bound);
    let mut union = lang(&Expr::Tilde(phi.clone(), ops.to_vec()), bound);
    union.extend(lang(&Expr::Tilde(psi.clone(), ops.to_vec()), bound));
    same_lang(&format!("({phi}) | ({psi})"), &both, &union)
}

/// `(1 ∧ φ↑)(L1…Ln) = φ(L2…Ln)` and `(¬1 ∧ φ↑)(L1…Ln) = L1 · φ(L2…Ln)`,
/// with `φ` over `1..n-1` and `φ↑` its atoms moved up by one.
pub fn conjunction(phi: &Formula, ops: &[Expr<char>], bound: usize) -> Check {
    let up: BTreeMap<u32, Formula> = phi.atoms().into_iter().map(|k| (k, Formula::atom(k + 1))).collect();
    let lifted = phi.substitute(&up);
    let tail = lang(&Expr::Tilde(phi.clone(), ops[1..].to_vec()), bound);
    let with_head = lang(&Expr::Tilde(Formula::and([Formula::atom(1), lifted.clone()]), ops.to_vec()), bound);
    same_lang(&format!("1 & ({lifted})"), &with_head, &tail)?;
    let without_head =
        lang(&Expr::Tilde(Formula::and([Formula::not(Formula::atom(1)), lifted.clone()]), ops.to_vec()), bound);
    same_lang(&format!("!1 & ({lifted})"), &without_head, &catenate(&lang(&ops[0], bound), &tail, bound))
}

/// `φ(L1…Ln) = L1 · φ'(L2…Ln) ∪ φ''(L2…Ln)`.
pub fn head_decomposition(phi: &Formula, ops: &[Expr<char>], bound: usize) -> Check {
    let n = ops.len();
    let keep = phi.shift_head(false, n).map_err(|e| e.to_string())?;
    let erase = phi.shift_head(true, n).map_err(|e| e.to_string())?;
    let tail = ops[1..].to_vec();
    let mut rhs = catenate(&lang(&ops[0], bound), &lang(&Expr::Tilde(keep, tail.clone()), bound), bound);
    rhs.extend(lang(&Expr::Tilde(erase, tail), bound));
    same_lang(&format!("head split of {phi}"), &lang(&Expr::Tilde(phi.clone(), ops.to_vec()), bound), &rhs)
}

/// `φ(L1…Ln) = φ[n := ⊥](L1…Ln-1) · Ln ∪ φ[n := ⊤](L1…Ln-1)`.
pub fn tail_decomposition(phi: &Formula, ops: &[Expr<char>], bound: usize) -> Check {
    let n = ops.len();
    let keep = phi.assign_last(false, n).map_err(|e| e.to_string())?;
    let erase = phi.assign_last(true, n).map_err(|e| e.to_string())?;
    let init = ops[..n - 1].to_vec();
    let mut rhs = catenate(&lang(&Expr::Tilde(keep, init.clone()), bound), &lang(&ops[n - 1], bound), bound);
    rhs.extend(lang(&Expr::Tilde(erase, init), bound));
    same_lang(&format!("tail split of {phi}"), &lang(&Expr::Tilde(phi.clone(), ops.to_vec()), bound), &rhs)
}

/// The derived terms by `a` together denote the quotient by `a`.
pub fn quotient(e: &Expr<char>, bound: usize) -> Check {
    for a in ALPHABET {
        let mut union = BTreeSet::new();
        for t in derive_symbol(e, &a).iter() {
            union.extend(lang(t, bound));
        }
        same_lang(&format!("quotient of {e} by {a}"), &union, e.quotient_upto(&a, bound).words())?;
    }
    Ok(())
}

/// A contradiction denotes nothing; a tautology denotes
/// `(L1 ∪ {ε}) ⋯ (Ln ∪ {ε})`.
pub fn constant_identities(phi: &Formula, ops: &[Expr<char>], bound: usize) -> Check {
    let contradiction = Formula::and([phi.clone(), Formula::not(phi.clone())]);
    let empty = lang(&Expr::Tilde(contradiction.clone(), ops.to_vec()), bound);
    if !empty.is_empty() {
        return Err(format!("{contradiction} gave {}", show(&empty)));
    }
    let tautology = Formula::or([phi.clone(), Formula::not(phi.clone())]);
    let mut product = BTreeSet::from([Vec::new()]);
    for op in ops {
        let mut optional = lang(op, bound);
        optional.insert(Vec::new());
        product = catenate(&product, &optional, bound);
    }
    same_lang(&format!("{tautology}"), &lang(&Expr::Tilde(tautology.clone(), ops.to_vec()), bound), &product)
}

/// Surlinearization keeps the position functions, stays linear, and
/// delinearizes to the original language.
pub fn surlinearization(e: &Expr<char>, bound: usize) -> Check {
    let (lin, _) = linearize(e, 1);
    let sur = surlinearize(&lin).map_err(|err| err.to_string())?;
    let before = position_functions(&lin).map_err(|err| err.to_string())?;
    let after = position_functions(&sur).map_err(|err| err.to_string())?;
    if before != after {
        return Err(format!("position functions of {e} change under surlinearization"));
    }
    if sur.symbol_count() != sur.symbols().len() {
        return Err(format!("surlinearization of {e} repeats a position"));
    }
    let original = lang(e, bound);
    same_lang("h(L(E#))", &lang(&delinearize(&lin), bound), &original)?;
    same_lang("h(L(E##))", &lang(&delinearize(&sur), bound), &original)
}
