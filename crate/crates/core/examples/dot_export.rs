//! Graphviz output for both constructions.
//!
//! ```text
//! cargo run --example dot_export | dot -Tsvg > automata.svg
//! ```

use multitilde::derivative::derived_term_automaton;
use multitilde::glushkov::glushkov_automaton;
use multitilde::parse_expr;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "T[1 <-> 3](a, T[1 -> 2](b, c), d)".into());
    let e = parse_expr(&text).expect("valid expression");

    let dta = derived_term_automaton(&e, e.symbols()).expect("within the state cap");
    print!("{}", dta.to_dot(|term| term.to_string()));

    let g = glushkov_automaton(&e).expect("within the position cap");
    print!("{}", g.to_dot(|q| q.to_string()));
}
