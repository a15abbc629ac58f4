//! Word derivatives and membership.
//!
//! ```text
//! cargo run --example partial_derivatives -- 'T[mirror(2)](a+, b+, a+, b+)' abba
//! ```

use multitilde::derivative::{derive_word, member};
use multitilde::parse_expr;

fn main() {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "T[mirror(2)](a+, b+, a+, b+)".into());
    let word: Vec<char> = args.next().unwrap_or_else(|| "abba".into()).chars().collect();
    let e = parse_expr(&text).expect("valid expression");

    println!("E = {e}");
    for k in 0..=word.len() {
        let prefix: String = word[..k].iter().collect();
        let terms = derive_word(&e, &word[..k]);
        println!("δ[{}] = {terms}", if prefix.is_empty() { "ε" } else { &prefix });
    }
    let w: String = word.iter().collect();
    println!("{w} ∈ L(E): {}", member(&e, &word));
}
