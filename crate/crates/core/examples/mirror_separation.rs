//! Linear-size expressions whose automata must be exponential.
//!
//! For each `n`, the mirror expression has `2n` symbols. Its fooling set has
//! `2^n` pairs, so no NFA has fewer states, and the minimal DFA grows
//! accordingly.

use multitilde::bench::{fooling_set, size_report};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    println!("{:>2} {:>7} {:>5} {:>8} {:>7} {:>7}", "n", "symbols", "dta", "glushkov", "min dfa", "fooling");
    for n in 1..=max {
        match size_report(n) {
            Ok(r) => println!(
                "{:>2} {:>7} {:>5} {:>8} {:>7} {:>7}",
                r.n, r.symbols, r.dta_states, r.glushkov_states, r.min_dfa_states, r.fooling_bound
            ),
            Err(e) => {
                eprintln!("n={n}: {e}");
                break;
            }
        }
    }

    println!("\nfooling pairs for n = 2:");
    for pair in fooling_set(2).expect("verified") {
        let show = |w: &[String]| if w.is_empty() { "ε".to_string() } else { w.concat() };
        let tag: String = pair.tag.iter().map(|&b| if b { '1' } else { '0' }).collect();
        println!("  {tag}: {} | {}", show(&pair.prefix), show(&pair.suffix));
    }
}
