//! # fibrecon
//!
//! Generation, recognition and reconstruction of Fibonacci-grammar words.
//!
//! The Fibonacci grammar is the D0L system with axiom `0` and rules
//! `0 -> 1`, `1 -> 01`. Its generations are
//!
//! ```text
//! 0, 1, 01, 101, 01101, 10101101, 0110110101101, ...
//! ```
//!
//! This crate provides:
//!
//! - [`grammar`]: binary D0L systems, forward derivation, the Fibonacci
//!   length index, forbidden n-gram detection and rule-image ambiguity.
//! - [`automaton`]: a generic deterministic one-way two-tape finite
//!   automaton with explicit configurations, partial transition tables,
//!   delta-encoded traces and head-gap measurement.
//! - [`reverser`]: the concrete reconstruction machine, which reads `g(n)` on
//!   tape 1 and writes `g(n-1)` on tape 2, and the recursive membership
//!   decision built on top of it.
//! - [`oracle`]: brute-force preimage enumeration and exhaustive membership
//!   checks that validate the machine independently.
//! - [`cli`]: the command implementations behind the `fibrecon` binary.
//!
//! ## Example
//!
//! ```
//! use fibrecon::{grammar::LSystem, reverser, Word};
//!
//! let g4 = LSystem::fib().generate(4);
//! assert_eq!(g4.to_string(), "01101");
//!
//! let pass = reverser::reverse_pass(&g4);
//! assert_eq!(pass.output().unwrap().to_string(), "101");
//!
//! let word: Word = "0110110101101".parse().unwrap();
//! assert_eq!(reverser::generation_index(&word), Some(6));
//! ```
//!
//! The `examples/` directory of this crate holds one runnable program per
//! capability (`cargo run -p fibrecon --example <name>`).

pub mod automaton;
pub mod cli;
pub mod grammar;
pub mod oracle;
pub mod reverser;

pub use grammar::{LSystem, ParseWordError, Symbol, Word};
