//! Satisfiability of a formula, with the branches explored by the splitting
//! procedure and the models listed in canonical order.
//!
//! ```text
//! cargo run --example formula_sat -- '!(1 & 2) & (1 & 3)'
//! ```

use multitilde::formula::satisfying_interpretations;
use multitilde::parse_formula;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "!(1 & 2) & (1 & 3)".into());
    let phi = match parse_formula(&text) {
        Ok(phi) => phi,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };

    let (sat, trace) = phi.satisfiability_trace();
    println!("formula: {phi}");
    for step in &trace {
        println!("  {} := {:<5} -> {}", step.atom, step.value, step.reduced);
    }
    println!("satisfiable: {sat}");

    let width = phi.max_atom() as usize;
    let models = satisfying_interpretations(&phi, width).expect("width within cap");
    let shown: Vec<String> = models.iter().map(|i| i.to_string()).collect();
    println!("models over {width} atoms: {}", shown.join(" "));
}
