//! Position functions and the Glushkov automaton of a nested tilde.

use multitilde::glushkov::{glushkov_automaton, linearize, position_functions};
use multitilde::parse_expr;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "T[1 <-> 3](a, T[1 -> 2](b, c), d)".into());
    let e = parse_expr(&text).expect("valid expression");
    let (lin, _) = linearize(&e, 1);
    let pf = position_functions(&lin).expect("within the position cap");

    let list = |set: &mut dyn Iterator<Item = String>| set.collect::<Vec<_>>().join(" ");
    println!("linearized: {lin}");
    println!("Pos    = {}", list(&mut pf.pos.iter().map(|p| p.to_string())));
    println!("First  = {}", list(&mut pf.first.iter().map(|p| p.to_string())));
    println!("Last   = {}", list(&mut pf.last.iter().map(|p| p.to_string())));
    println!("Follow = {}", list(&mut pf.follow.iter().map(|(p, q)| format!("({p},{q})"))));
    println!("Null   = {}", pf.null);

    let g = glushkov_automaton(&e).expect("within the position cap");
    println!("\n{} states, {} final, {} transitions", g.state_count(), g.finals().len(), g.transition_count());
    for (from, a, to) in g.transitions() {
        println!("  {} --{a}--> {}", g.state(from), g.state(to));
    }
    let words = g.enumerate_upto(6).to_strings();
    println!("accepted up to 6: {words:?}");
}
