//! Command-line front end.
//!
//! Exit status is 0 on success, 1 when `sat`, `member` or `equiv` answers
//! false, and 2 on usage, parse or evaluation errors.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;

use clap::{Parser, Subcommand};

use crate::automaton::{self, Nfa};
use crate::bench::size_report;
use crate::derivative::{derive_word, derived_term_automaton, member};
use crate::error::Error;
use crate::expr::{show_word, Expr};
use crate::glushkov::glushkov_automaton;
use crate::syntax::{parse_expr, parse_formula};

#[derive(Debug, Parser)]
#[command(name = "multitilde", version, about = "Regular expressions with constrained multi-tildes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide satisfiability of a formula and show the splitting trace
    Sat { formula: String },
    /// Parse an expression and print it back
    Parse { expr: String },
    /// Whether the empty word belongs to the language
    Null { expr: String },
    /// Whether a word belongs to the language
    Member { expr: String, word: String },
    /// Print the partial derivatives by a word, one per line
    Derive { expr: String, word: String },
    /// List every word of the language up to a length bound
    Enum {
        expr: String,
        #[arg(long)]
        bound: usize,
    },
    /// Build the derived-term automaton
    Dta {
        expr: String,
        #[arg(long)]
        dot: bool,
        /// Extra symbols to add to the alphabet
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Build the Glushkov automaton
    Glushkov {
        expr: String,
        #[arg(long)]
        dot: bool,
    },
    /// Decide whether two expressions denote the same language
    Equiv { lhs: String, rhs: String },
    /// Size report for a benchmark family
    Bench {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// T[mirror(n)](a1, ..., a2n)
    Mirror { n: usize },
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(cli.command, out) {
        Ok(status) => status,
        Err(Failure { input, error }) => {
            let _ = writeln!(err, "error: {error}");
            if let (Some(input), Error::Syntax { pos, .. }) = (input, &error) {
                let column = input[..*pos.min(&input.len())].chars().count();
                let _ = writeln!(err, "  {input}");
                let _ = writeln!(err, "  {}^", " ".repeat(column));
            }
            2
        }
    }
}

struct Failure {
    input: Option<String>,
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { input: None, error }
    }
}

fn expr(text: &str) -> Result<Expr<char>, Failure> {
    parse_expr(text).map_err(|error| Failure { input: Some(text.to_owned()), error })
}

fn answer(out: &mut dyn Write, value: bool) -> i32 {
    let _ = writeln!(out, "{value}");
    if value {
        0
    } else {
        1
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Sat { formula } => {
            let phi = parse_formula(&formula).map_err(|error| Failure { input: Some(formula.clone()), error })?;
            let (sat, trace) = phi.satisfiability_trace();
            for step in &trace {
                let _ = writeln!(out, "{} := {} -> {}", step.atom, step.value, step.reduced);
            }
            Ok(answer(out, sat))
        }
        Command::Parse { expr: text } => {
            let _ = writeln!(out, "{}", expr(&text)?);
            Ok(0)
        }
        Command::Null { expr: text } => {
            let _ = writeln!(out, "{}", expr(&text)?.nullable());
            Ok(0)
        }
        Command::Member { expr: text, word } => {
            let e = expr(&text)?;
            let w: Vec<char> = word.chars().collect();
            Ok(answer(out, member(&e, &w)))
        }
        Command::Derive { expr: text, word } => {
            let e = expr(&text)?;
            let w: Vec<char> = word.chars().collect();
            for term in derive_word(&e, &w).iter() {
                let _ = writeln!(out, "{term}");
            }
            Ok(0)
        }
        Command::Enum { expr: text, bound } => {
            for w in expr(&text)?.language_upto(bound).iter() {
                let _ = writeln!(out, "{}", show_word(w));
            }
            Ok(0)
        }
        Command::Dta { expr: text, dot, alphabet } => {
            let e = expr(&text)?;
            let mut symbols = e.symbols();
            symbols.extend(alphabet.unwrap_or_default().chars());
            let nfa = derived_term_automaton(&e, symbols)?;
            write_automaton(out, &nfa, dot);
            Ok(0)
        }
        Command::Glushkov { expr: text, dot } => {
            let nfa = glushkov_automaton(&expr(&text)?)?;
            write_automaton(out, &nfa, dot);
            Ok(0)
        }
        Command::Equiv { lhs, rhs } => {
            let (l, r) = (expr(&lhs)?, expr(&rhs)?);
            let l = derived_term_automaton(&l, l.symbols())?;
            let r = derived_term_automaton(&r, r.symbols())?;
            Ok(answer(out, automaton::equivalent(&l, &r)))
        }
        Command::Bench { family: Family::Mirror { n } } => {
            for line in size_report(n)?.lines() {
                let _ = writeln!(out, "{line}");
            }
            Ok(0)
        }
    }
}

fn write_automaton<Q: Clone + Ord + Display>(out: &mut dyn Write, nfa: &Nfa<Q, char>, dot: bool) {
    if dot {
        let _ = out.write_all(nfa.to_dot(|q| q.to_string()).as_bytes());
        return;
    }
    let _ = writeln!(
        out,
        "states={} finals={} transitions={}",
        nfa.state_count(),
        nfa.finals().len(),
        nfa.transition_count()
    );
    for (id, q) in nfa.states().iter().enumerate() {
        let mut marks = Vec::new();
        if nfa.initial().contains(&id) {
            marks.push("initial");
        }
        if nfa.is_final(id) {
            marks.push("final");
        }
        let marks = if marks.is_empty() { String::new() } else { format!(" [{}]", marks.join(", ")) };
        let _ = writeln!(out, "q{id}{marks}: {q}");
    }
    for (from, a, to) in nfa.transitions() {
        let _ = writeln!(out, "q{from} -{a}-> q{to}");
    }
}
