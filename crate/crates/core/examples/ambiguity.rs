//! Contrasts the Fibonacci grammar with its mirror: local ambiguity of the
//! rule images, and the preimages that survive globally.

use fibrecon::grammar::LSystem;
use fibrecon::oracle::enumerate_preimages;

fn main() {
    for (name, grammar) in [("fib", LSystem::fib()), ("bif", LSystem::bif())] {
        let ambiguous = grammar.first_symbol_ambiguity();
        println!("{name}: first-symbol ambiguity at {ambiguous:?}");
        for (n, g) in grammar.generations(8).iter().enumerate().skip(1) {
            let pre = enumerate_preimages(&grammar, g);
            println!("  g{n}: {} preimage(s)", pre.len());
        }
    }
}
