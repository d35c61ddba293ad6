//! Walks a generation back to the axiom one machine pass at a time.
//!
//! cargo run -p fibrecon --example reverse_pass -- 0110110101101

use fibrecon::reverser::{reverse_pass, PassOutcome};
use fibrecon::Word;

fn main() {
    let mut word: Word = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "0110110101101".into())
        .parse()
        .expect("binary word");

    loop {
        print!("{word}");
        if word.to_string() == "0" {
            println!("  (axiom)");
            break;
        }
        match reverse_pass(&word) {
            PassOutcome::Reconstructed { output, run } => {
                println!(
                    "  -> {} rule steps, {} sweep steps",
                    run.trace.rule_steps(),
                    run.trace.sweep_steps()
                );
                word = output;
            }
            PassOutcome::Rejected { reason, .. } => {
                println!("  rejected: {reason}");
                break;
            }
        }
    }
}
