//! Builds a small two-tape machine by hand on the generic engine: it
//! complements its input onto tape 2 and rejects the factor `11`.

use fibrecon::automaton::{render_trace, Move, TapeCell, TransitionRule, TransitionTable};
use fibrecon::Word;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut table = TransitionTable::new();
    let after_zero = table.add_state("after_zero", true)?;
    let after_one = table.add_state("after_one", true)?;

    for (from, read, to, write) in [
        (after_zero, TapeCell::Zero, after_zero, TapeCell::One),
        (after_zero, TapeCell::One, after_one, TapeCell::Zero),
        (after_one, TapeCell::Zero, after_zero, TapeCell::One),
    ] {
        table.add_rule(TransitionRule {
            from,
            read1: read,
            read2: TapeCell::Blank,
            to,
            write1: read,
            write2: write,
            move1: Move::Right,
            move2: Move::Right,
            label: None,
        })?;
    }

    for text in ["01001", "0110"] {
        let word: Word = text.parse()?;
        let run = table.run(after_zero, &word)?;
        println!("{text}: {:?}", run.verdict);
        print!("{}", render_trace(&run));
        println!();
    }
    Ok(())
}
