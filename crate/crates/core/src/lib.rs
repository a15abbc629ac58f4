//! Regular expressions extended with constrained multi-tildes.
//!
//! A tilde `T[φ](E1, …, En)` denotes the catenations `E1 ⋯ En` in which the
//! operands whose atoms are made true by a model of `φ` are replaced by the
//! empty word. The crate provides
//!
//! * Boolean formulas with a splitting satisfiability procedure ([`formula`]),
//! * expressions with a bounded language oracle ([`expr`]) and a text syntax
//!   ([`syntax`]),
//! * partial derivatives and the derived-term automaton ([`derivative`]),
//! * position functions and the Glushkov automaton ([`glushkov`]),
//! * determinization, minimization, equivalence and DOT export
//!   ([`automaton`]),
//! * the mirror benchmark family with its fooling set ([`bench`]).
//!
//! See the `examples/` directory for a runnable tour.
//!
//! ```
//! use multitilde::{derivative::member, syntax::parse_expr};
//!
//! let e = parse_expr("T[mirror(2)](a, b, a, b)").unwrap();
//! assert!(member(&e, &['b', 'a']));
//! assert!(!member(&e, &['a', 'a']));
//! ```

pub mod automaton;
pub mod bench;
pub mod cli;
pub mod derivative;
pub mod error;
pub mod expr;
pub mod formula;
pub mod glushkov;
pub mod syntax;

pub use automaton::Nfa;
pub use error::{Error, Result};
pub use expr::{Expr, LangSample, Word};
pub use formula::{Formula, Interpretation};
pub use syntax::{parse_expr, parse_formula};
