//! Random generators and helpers shared by the integration tests.
#![allow(dead_code)]

pub mod checks;

use std::collections::{BTreeMap, BTreeSet};

use multitilde::automaton::Nfa;
use multitilde::{Error, Expr, Formula, Word};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

pub const ALPHABET: [char; 3] = ['a', 'b', 'c'];

/// Formulas over atoms `1..=width`, at most three levels deep.
pub fn formula(width: usize) -> BoxedStrategy<Formula> {
    let leaf = if width == 0 {
        any::<bool>().prop_map(Formula::Const).boxed()
    } else {
        prop_oneof![
            1 => any::<bool>().prop_map(Formula::Const),
            4 => (1..=width as u32).prop_map(Formula::atom),
        ]
        .boxed()
    };
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            prop::collection::vec(inner.clone(), 2..=3).prop_map(Formula::and),
            prop::collection::vec(inner.clone(), 2..=3).prop_map(Formula::or),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::implies(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Formula::iff(l, r)),
        ]
    })
    .boxed()
}

/// Expressions of depth at most 4 over the first `letters` symbols of
/// [`ALPHABET`], with tildes of arity at most 4.
pub fn expr(letters: usize) -> BoxedStrategy<Expr<char>> {
    let symbols = ALPHABET[..letters].to_vec();
    let leaf = prop_oneof![
        1 => Just(Expr::Empty),
        2 => Just(Expr::Epsilon),
        6 => prop::sample::select(symbols).prop_map(Expr::Symbol),
    ];
    leaf.prop_recursive(4, 24, 4, |inner| {
        prop_oneof![
            2 => (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::raw_sum(l, r)),
            3 => (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::raw_concat(l, r)),
            1 => inner.clone().prop_map(Expr::star),
            3 => tilde_over(inner),
        ]
    })
    .boxed()
}

/// A tilde with arity 0 to 4 and operands drawn from `operand`.
pub fn tilde_over(operand: impl Strategy<Value = Expr<char>> + Clone + 'static) -> BoxedStrategy<Expr<char>> {
    (0usize..=4)
        .prop_flat_map(move |n| (formula(n), prop::collection::vec(operand.clone(), n)))
        .prop_map(|(phi, ops)| Expr::tilde(phi, ops).expect("formula within arity"))
        .boxed()
}

/// Expressions whose root is a tilde node with arity at least 1.
pub fn rooted_tilde() -> BoxedStrategy<Expr<char>> {
    (1usize..=4, 1usize..=3)
        .prop_flat_map(|(n, letters)| (formula(n), prop::collection::vec(expr(letters), n)))
        .prop_map(|(phi, ops)| Expr::Tilde(phi, ops))
        .boxed()
}

/// A formula of width `n` in 1..=4, a second one of the same width, an atom
/// of that width, and `n` operands.
pub fn tilde_parts() -> BoxedStrategy<(Formula, Formula, u32, Vec<Expr<char>>)> {
    (1usize..=4, 1usize..=3)
        .prop_flat_map(|(n, letters)| (formula(n), formula(n), 1..=n as u32, prop::collection::vec(expr(letters), n)))
        .boxed()
}

/// A formula of width `n - 1` and `n` operands, `n` in 2..=4.
pub fn conjunction_parts() -> BoxedStrategy<(Formula, Vec<Expr<char>>)> {
    (2usize..=4, 1usize..=3)
        .prop_flat_map(|(n, letters)| (formula(n - 1), prop::collection::vec(expr(letters), n)))
        .boxed()
}

/// Any expression over an alphabet of 1 to 3 letters.
pub fn any_expr() -> BoxedStrategy<Expr<char>> {
    (1usize..=3).prop_flat_map(expr).boxed()
}

/// `count` values drawn deterministically from `strategy`.
pub fn sample<T: std::fmt::Debug>(strategy: impl Strategy<Value = T>, count: usize) -> Vec<T> {
    let mut runner = TestRunner::deterministic();
    (0..count).map(|_| strategy.new_tree(&mut runner).expect("generator").current()).collect()
}

/// Every word over `alphabet` of length at most `bound`, shortest first.
pub fn all_words(alphabet: &[char], bound: usize) -> Vec<Word<char>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..bound {
        layer = layer
            .iter()
            .flat_map(|w: &Word<char>| {
                alphabet.iter().map(move |&a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Acceptance with symbols outside the automaton alphabet rejected.
pub fn accepts<Q: Clone + Ord>(nfa: &Nfa<Q, char>, w: &[char]) -> bool {
    match nfa.accepts(w) {
        Ok(v) => v,
        Err(Error::UnknownSymbol(_)) => false,
        Err(e) => panic!("{e}"),
    }
}

/// `L1 · L2` truncated at `bound`.
pub fn catenate(lhs: &BTreeSet<Word<char>>, rhs: &BTreeSet<Word<char>>, bound: usize) -> BTreeSet<Word<char>> {
    let mut out = BTreeSet::new();
    for u in lhs {
        for v in rhs {
            if u.len() + v.len() <= bound {
                out.insert(u.iter().chain(v).copied().collect());
            }
        }
    }
    out
}

/// Whether `lhs` and `rhs` agree on every interpretation of `1..=width`,
/// checked by direct evaluation.
pub fn same_truth_table(lhs: &Formula, rhs: &Formula, width: usize) -> bool {
    multitilde::Interpretation::all(width).all(|i| lhs.eval(&i).unwrap() == rhs.eval(&i).unwrap())
}

/// `φ[k := value]` without shifting.
pub fn assign(phi: &Formula, k: u32, value: bool) -> Formula {
    phi.substitute(&BTreeMap::from([(k, Formula::Const(value))]))
}

/// Renames the context integers inside every `[...]` group of `text`
/// through one map per depth, counted from the outermost tilde.
pub fn relabel(text: &str, maps: &[BTreeMap<usize, usize>]) -> String {
    let mut out = String::new();
    let mut rest = text;
    while let Some(open) = rest.find('[') {
        let close = open + rest[open..].find(']').expect("closing bracket");
        out.push_str(&rest[..=open]);
        let inner = &rest[open + 1..close];
        if !inner.is_empty() {
            let items: Vec<usize> = inner.split(',').map(|s| s.parse().expect("context integer")).collect();
            let depth = items.len();
            let renamed: Vec<String> = items
                .iter()
                .enumerate()
                .map(|(k, c)| maps[depth - 1 - k].get(c).copied().unwrap_or(*c).to_string())
                .collect();
            out.push_str(&renamed.join(","));
        }
        out.push(']');
        rest = &rest[close + 1..];
    }
    out.push_str(rest);
    out
}

/// All permutations of `items`.
pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Whether some per-depth bijection of context integers maps the labels of
/// `ours` onto `theirs`. `width` gives, per depth from the outermost, how
/// many interpretation numbers exist.
pub fn same_up_to_context_renaming(ours: &BTreeSet<String>, theirs: &BTreeSet<String>, widths: &[usize]) -> bool {
    let choices: Vec<Vec<Vec<usize>>> = widths.iter().map(|&w| permutations(&(1..=w).collect::<Vec<_>>())).collect();
    let mut index = vec![0; widths.len()];
    loop {
        let maps: Vec<BTreeMap<usize, usize>> = index
            .iter()
            .enumerate()
            .map(|(d, &i)| choices[d][i].iter().enumerate().map(|(k, &v)| (k + 1, v)).collect())
            .collect();
        let renamed: BTreeSet<String> = ours.iter().map(|l| relabel(l, &maps)).collect();
        if &renamed == theirs {
            return true;
        }
        let mut d = 0;
        loop {
            if d == index.len() {
                return false;
            }
            index[d] += 1;
            if index[d] < choices[d].len() {
                break;
            }
            index[d] = 0;
            d += 1;
        }
    }
}
