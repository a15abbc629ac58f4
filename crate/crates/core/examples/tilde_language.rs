//! Bounded languages of tilde expressions.

use multitilde::parse_expr;

fn main() {
    let cases = [
        ("T[mirror(2)](a, b, a, b)", 4),
        ("T[1 | 2](a, b)", 2),
        ("T[1 <-> 3](a, T[1 -> 2](b, c), d)", 6),
        ("T[!1 & !2](a*, b)", 4),
    ];
    for (text, bound) in cases {
        let e = parse_expr(text).expect("valid expression");
        let words = e.language_upto(bound).to_strings();
        let shown: Vec<&str> = words.iter().map(|w| if w.is_empty() { "ε" } else { w.as_str() }).collect();
        println!("{e}  (nullable: {})", e.nullable());
        println!("  up to {bound}: {{{}}}", shown.join(", "));
    }
}
