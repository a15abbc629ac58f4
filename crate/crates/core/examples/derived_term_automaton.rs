//! The derived-term automaton of an expression, printed state by state.

use multitilde::derivative::derived_term_automaton;
use multitilde::parse_expr;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "T[mirror(2)](a+, b+, a+, b+)".into());
    let e = parse_expr(&text).expect("valid expression");
    let dta = derived_term_automaton(&e, e.symbols()).expect("within the state cap");

    println!("{} states, {} final, {} transitions", dta.state_count(), dta.finals().len(), dta.transition_count());
    for (q, term) in dta.states().iter().enumerate() {
        let mark = if dta.is_final(q) { " (final)" } else { "" };
        println!("q{q}{mark}: {term}");
        for &a in dta.alphabet() {
            for &to in dta.targets(q, &a).expect("symbol in alphabet") {
                println!("    --{a}--> q{to}");
            }
        }
    }
}
