//! Renders the step-by-step trace of one pass and audits the head gap.
//!
//! cargo run -p fibrecon --example trace -- 01101

use fibrecon::automaton::{max_head_gap, render_trace};
use fibrecon::grammar::LSystem;
use fibrecon::reverser::fib_machine;
use fibrecon::Word;

fn main() {
    let word: Word = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "01101".into())
        .parse()
        .expect("binary word");

    let run = fib_machine().run(&word);
    print!("{}", render_trace(&run));
    println!("\nverdict: {:?}", run.verdict);
    println!("max head gap: {}", max_head_gap(run.trace.steps()));

    println!("\nhead gap by generation:");
    let machine = fib_machine();
    for (n, g) in LSystem::fib().generations(12).iter().enumerate().skip(1) {
        let run = machine.run(g);
        println!(
            "  g{n:<2} |g| = {:<4} max gap {:<3} gap at end of pass {}",
            g.len(),
            max_head_gap(run.trace.steps()),
            run.pass_end_gap()
        );
    }
}
