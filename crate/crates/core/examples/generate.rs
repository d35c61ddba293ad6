//! Prints the first generations of the Fibonacci grammar and its mirror.
//!
//! cargo run -p fibrecon --example generate -- 8

use fibrecon::grammar::{fibonacci_index_of_length, LSystem};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("generation count"))
        .unwrap_or(7);

    for (name, grammar) in [("fib", LSystem::fib()), ("bif", LSystem::bif())] {
        println!("{name}:");
        for (i, g) in grammar.generations(n).iter().enumerate() {
            println!("  g{i:<2} {g} ({} symbols)", g.len());
        }
    }

    let len = LSystem::fib().generate(n).len();
    println!(
        "length {len} first appears at generation {:?}",
        fibonacci_index_of_length(len)
    );
}
