//! Language equivalence through minimized automata.

use multitilde::automaton::equivalent;
use multitilde::derivative::derived_term_automaton;
use multitilde::glushkov::glushkov_automaton;
use multitilde::parse_expr;

fn main() {
    let pairs = [
        ("T[1 | 2](a, b)", "1 + a + b"),
        ("T[true](a, b)", "(a + 1)(b + 1)"),
        ("T[mirror(1)](a, b)", "1 + ab"),
        ("T[1 -> 2](a, b)", "ab + a + 1"),
        ("(a+b)*", "(a*b*)*"),
        ("a*", "a+"),
    ];
    for (lhs, rhs) in pairs {
        let (l, r) = (parse_expr(lhs).unwrap(), parse_expr(rhs).unwrap());
        let l_dta = derived_term_automaton(&l, l.symbols()).unwrap();
        let r_dta = derived_term_automaton(&r, r.symbols()).unwrap();
        let same = equivalent(&l_dta, &r_dta);
        // the two constructions always agree with each other
        assert!(equivalent(&l_dta, &glushkov_automaton(&l).unwrap()));
        println!("{lhs:<22} {} {rhs}", if same { "==" } else { "!=" });
    }
}
