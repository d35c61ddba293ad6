//! Compares the machine with the brute-force oracle on every binary word up
//! to a length.
//!
//! cargo run --release -p fibrecon --example exhaustive_check -- 18

use std::time::Instant;

use fibrecon::oracle::exhaustive_membership_check;

fn main() {
    let max_len: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("maximum length"))
        .unwrap_or(13);
    let started = Instant::now();
    let report = exhaustive_membership_check(max_len);
    println!(
        "checked {} words up to length {max_len} in {:?}",
        report.checked,
        started.elapsed()
    );
    for word in &report.accepted {
        println!("  accepted {word}");
    }
    if report.agrees() {
        println!("machine and oracle agree");
    } else {
        for m in &report.mismatches {
            println!(
                "  MISMATCH {}: machine {:?}, oracle {:?}",
                m.word, m.machine, m.oracle
            );
        }
        std::process::exit(1);
    }
}
