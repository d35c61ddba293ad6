//! Decides membership for a handful of words, or for the ones given on the
//! command line.
//!
//! cargo run -p fibrecon --example membership -- 10101101 1101 0101

use fibrecon::reverser::decide_membership;
use fibrecon::Word;

fn main() {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = [
            "0",
            "1",
            "01101",
            "10101101",
            "1101",
            "10",
            "0110110101101",
            "011011011",
        ]
        .map(String::from)
        .to_vec();
    }
    for text in inputs {
        let word: Word = match text.parse() {
            Ok(w) => w,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        let report = decide_membership(&word);
        let verdict = match (report.generation_index, report.rejection()) {
            (Some(n), _) => format!("generation {n}"),
            (None, Some((pass, reason))) => format!("not a generation (pass {pass}: {reason})"),
            (None, None) => "not a generation".to_owned(),
        };
        println!(
            "{text:>22}  {verdict}; fibonacci length: {}",
            report.length_is_fibonacci
        );
    }
}
