//! The Fibonacci reconstruction machine.
//!
//! Reading a generation `g(n)` of the Fibonacci grammar left to right, every
//! `0` is the start of a `01` constituent (the image of `1`) and every other
//! `1` stands alone (the image of `0`). The machine writes one tape-2 symbol
//! per constituent and so leaves `g(n-1)` on tape 2:
//!
//! | label | state, tape 1, tape 2 | next state | write on tape 2 | moves |
//! |-------|-----------------------|------------|-----------------|-------|
//! | 1 | `q_start`/`q_one`/`q_two`, `0`, `ε` | `q_pending` | `0` | R, S |
//! | 2 | `q_pending`, `1`, `0` | `q_one` | `1` | R, R |
//! | 3 | `q_start`, `1`, `ε` | `q_one` | `0` | R, R |
//! | 3 | `q_one`, `1`, `ε` | `q_two` | `0` | R, R |
//!
//! `q_pending` holds a tentative `0` under the tape-2 head until the `1`
//! closing the constituent arrives. `q_one` and `q_two` count consecutive
//! ones. A second zero in `q_pending` and a third one in `q_two` have no
//! rule: those are the forbidden factors `00` and `111`.

use std::sync::OnceLock;

use crate::automaton::{
    self, Move, RunResult, StateId, TapeCell, TransitionRule, TransitionTable, Verdict,
};
use crate::grammar::{fibonacci_index_of_length, Ngram, Symbol, Word};

/// The reconstruction machine: its table and the ids of its four states.
#[derive(Debug, Clone)]
pub struct FibMachine {
    pub table: TransitionTable,
    pub start: StateId,
    pub pending: StateId,
    pub one: StateId,
    pub two: StateId,
}

impl FibMachine {
    pub fn is_accepting(&self, state: StateId) -> bool {
        state == self.one || state == self.two
    }

    pub fn run(&self, input: &[Symbol]) -> RunResult {
        automaton::run(&self.table, self.start, |s| self.is_accepting(s), input)
            .expect("reconstruction table never faults")
    }
}

pub fn build_fib_machine() -> FibMachine {
    use Move::{Right, Stay};
    use TapeCell::{Blank, One, Zero};

    let mut table = TransitionTable::new();
    let mut state = |name, accepting| table.add_state(name, accepting).expect("fresh name");
    let start = state("q_start", false);
    let pending = state("q_pending", false);
    let one = state("q_one", true);
    let two = state("q_two", true);

    let rule = |label, from, read1, read2, to, write2, move2| TransitionRule {
        from,
        read1,
        read2,
        to,
        write1: read1,
        write2,
        move1: Right,
        move2,
        label: Some(label),
    };
    let rules = [
        rule(1, start, Zero, Blank, pending, Zero, Stay),
        rule(1, one, Zero, Blank, pending, Zero, Stay),
        rule(1, two, Zero, Blank, pending, Zero, Stay),
        rule(2, pending, One, Zero, one, One, Right),
        rule(3, start, One, Blank, one, Zero, Right),
        rule(3, one, One, Blank, two, Zero, Right),
    ];
    for r in rules {
        table.add_rule(r).expect("deterministic table");
    }

    FibMachine {
        table,
        start,
        pending,
        one,
        two,
    }
}

/// Shared instance, built on first use.
pub fn fib_machine() -> &'static FibMachine {
    static MACHINE: OnceLock<FibMachine> = OnceLock::new();
    MACHINE.get_or_init(build_fib_machine)
}

/// Why a reverse pass could not reconstruct a previous generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    /// The machine hit a missing transition.
    ForbiddenNgram {
        ngram: Ngram,
        /// 0-based start of the factor in the input.
        start: usize,
        /// 0-based input index of the symbol the machine faulted on.
        fault: usize,
    },
    /// Input of length one or more ends inside an open `01` constituent.
    TrailingZero,
    Empty,
}

impl std::fmt::Display for RejectReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RejectReason::ForbiddenNgram { ngram, start, .. } => {
                write!(f, "forbidden n-gram {ngram} at {start}")
            }
            RejectReason::TrailingZero => f.write_str("trailing zero"),
            RejectReason::Empty => f.write_str("empty input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PassOutcome {
    Reconstructed {
        output: Word,
        run: RunResult,
    },
    Rejected {
        reason: RejectReason,
        run: RunResult,
    },
}

impl PassOutcome {
    pub fn output(&self) -> Option<&Word> {
        match self {
            PassOutcome::Reconstructed { output, .. } => Some(output),
            PassOutcome::Rejected { .. } => None,
        }
    }

    pub fn reason(&self) -> Option<RejectReason> {
        match self {
            PassOutcome::Rejected { reason, .. } => Some(*reason),
            PassOutcome::Reconstructed { .. } => None,
        }
    }

    pub fn run(&self) -> &RunResult {
        match self {
            PassOutcome::Reconstructed { run, .. } | PassOutcome::Rejected { run, .. } => run,
        }
    }
}

/// One run of the reconstruction machine over `input`.
pub fn reverse_pass(input: &[Symbol]) -> PassOutcome {
    let machine = fib_machine();
    let run = machine.run(input);
    match run.verdict {
        Verdict::AcceptedAtEnd => {
            let output = run.final_config.tape2.written_prefix();
            debug_assert!(run.final_config.tape2.body()[output.len()..]
                .iter()
                .all(|&c| c == TapeCell::Blank));
            PassOutcome::Reconstructed { output, run }
        }
        Verdict::UndefinedTransition(undefined) => {
            let fault = undefined.position - 1;
            let (ngram, start) = if undefined.state == machine.two {
                (Ngram::TripleOne, fault - 2)
            } else {
                debug_assert_eq!(undefined.state, machine.pending);
                (Ngram::DoubleZero, fault - 1)
            };
            PassOutcome::Rejected {
                reason: RejectReason::ForbiddenNgram {
                    ngram,
                    start,
                    fault,
                },
                run,
            }
        }
        Verdict::NonAcceptingAtEnd(state) => {
            let reason = if state == machine.pending {
                RejectReason::TrailingZero
            } else {
                RejectReason::Empty
            };
            PassOutcome::Rejected { reason, run }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    pub member: bool,
    /// Number of passes that led back to the axiom.
    pub generation_index: Option<usize>,
    pub passes: Vec<PassOutcome>,
    pub length_is_fibonacci: bool,
}

impl MembershipReport {
    /// The pass that ended a failed decision.
    pub fn rejection(&self) -> Option<(usize, RejectReason)> {
        let last = self.passes.last()?;
        last.reason().map(|r| (self.passes.len(), r))
    }
}

/// Decides whether `input` is a generation of the Fibonacci grammar by
/// reverse passes until only the axiom `0` is left.
pub fn decide_membership(input: &[Symbol]) -> MembershipReport {
    let length_is_fibonacci = fibonacci_index_of_length(input.len()).is_some();
    let mut passes = Vec::new();
    let mut current = Word::from(input);
    // Each pass shortens its input unless the input is all ones, and an
    // all-ones input longer than 2 is rejected outright.
    let limit = input.len() + 2;

    let generation_index = loop {
        if current.symbols() == [Symbol::Zero] {
            break Some(passes.len());
        }
        if passes.len() >= limit {
            break None;
        }
        let pass = reverse_pass(&current);
        let next = pass.output().cloned();
        passes.push(pass);
        match next {
            Some(output) => current = output,
            None => break None,
        }
    };

    MembershipReport {
        member: generation_index.is_some(),
        generation_index,
        passes,
        length_is_fibonacci,
    }
}

pub fn generation_index(input: &[Symbol]) -> Option<usize> {
    decide_membership(input).generation_index
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{max_head_gap, render_trace, StepOutcome};
    use crate::grammar::LSystem;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn table_has_exactly_six_rules() {
        let m = build_fib_machine();
        assert_eq!(m.table.len(), 6);
        assert!(m
            .table
            .rules()
            .iter()
            .all(|r| matches!(r.label, Some(1..=3))));
        assert!(m.table.rules().iter().all(|r| r.write1 == r.read1));
        assert_eq!(m.table.state_count(), 4);
    }

    #[test]
    fn lookups() {
        let m = build_fib_machine();
        let r = m
            .table
            .lookup(m.start, TapeCell::Zero, TapeCell::Blank)
            .unwrap();
        assert_eq!(r.label, Some(1));
        assert_eq!((r.move1, r.move2), (Move::Right, Move::Stay));
        for read2 in [TapeCell::Zero, TapeCell::One, TapeCell::Blank] {
            assert!(m.table.lookup(m.pending, TapeCell::Zero, read2).is_none());
        }
        assert!(m
            .table
            .lookup(m.two, TapeCell::One, TapeCell::Blank)
            .is_none());
    }

    #[test]
    fn step_examples() {
        let m = build_fib_machine();
        let c = automaton::Configuration::initial(m.start, &w("01"));
        let StepOutcome::Moved { next, rule } = automaton::step(&m.table, &c).unwrap() else {
            panic!("rule 1 should fire");
        };
        assert_eq!(rule.label, Some(1));
        assert_eq!(next.state, m.pending);
        assert_eq!(next.tape2.cells()[1], TapeCell::Zero);
        assert_eq!(next.heads(), (2, 1));

        let StepOutcome::Moved { next: after2, rule } = automaton::step(&m.table, &next).unwrap()
        else {
            panic!("rule 2 should fire");
        };
        assert_eq!(rule.label, Some(2));
        assert_eq!(after2.state, m.one);
        assert_eq!(after2.tape2.cells()[1], TapeCell::One);
        assert_eq!(after2.heads(), (3, 2));

        let c = automaton::Configuration::initial(m.start, &w("00"));
        let StepOutcome::Moved { next, .. } = automaton::step(&m.table, &c).unwrap() else {
            panic!()
        };
        assert!(matches!(
            automaton::step(&m.table, &next).unwrap(),
            StepOutcome::Undefined(u) if u.state == m.pending && u.read1 == TapeCell::Zero
        ));
    }

    #[test]
    fn run_examples() {
        let m = fib_machine();
        let r = m.run(&w("01101"));
        assert!(r.is_accepted());
        assert_eq!(r.trace.rule_labels(), [1, 2, 3, 1, 2].map(Some).to_vec());

        let r = m.run(&w("100"));
        let Verdict::UndefinedTransition(u) = r.verdict else {
            panic!("expected fault, got {:?}", r.verdict)
        };
        assert_eq!(u.position, 3);
        assert_eq!((u.read1, u.read2), (TapeCell::Zero, TapeCell::Zero));

        let r = m.run(&[]);
        assert_eq!(r.verdict, Verdict::NonAcceptingAtEnd(m.start));
        assert!(r.trace.is_empty());
    }

    #[test]
    fn head_gap_examples() {
        let m = fib_machine();
        assert_eq!(max_head_gap(m.run(&w("01101")).trace.steps()), 2);
        assert_eq!(max_head_gap(m.run(&w("10101101")).trace.steps()), 3);
    }

    #[test]
    fn render_examples() {
        let r = fib_machine().run(&w("01101"));
        let text = render_trace(&r);
        let blocks: Vec<&str> = text.trim_end().split("\n\n").collect();
        assert_eq!(blocks[0], "T1 ▷[0]1101◁\nT2 ▷0εεεε◁ (by 1)");
        assert_eq!(blocks[4], "T1 ▷[01101]◁\nT2 ▷101εε◁ (by 2)");
        assert_eq!(blocks.len(), 7);
        assert!(blocks[5].ends_with("(sweep, head 2 at 5)"));
        assert!(blocks[6].ends_with("(sweep, head 2 at 6)"));
    }

    #[test]
    fn reverse_pass_examples() {
        assert_eq!(reverse_pass(&w("01101")).output(), Some(&w("101")));
        assert_eq!(
            reverse_pass(&w("0111")).reason(),
            Some(RejectReason::ForbiddenNgram {
                ngram: Ngram::TripleOne,
                start: 1,
                fault: 3
            })
        );
        assert_eq!(
            reverse_pass(&w("10")).reason(),
            Some(RejectReason::TrailingZero)
        );
        assert_eq!(reverse_pass(&w("10101101")).output(), Some(&w("01101")));
        assert_eq!(reverse_pass(&w("")).reason(), Some(RejectReason::Empty));
        assert_eq!(
            reverse_pass(&w("0")).reason(),
            Some(RejectReason::TrailingZero)
        );
        assert_eq!(
            reverse_pass(&w("100")).reason(),
            Some(RejectReason::ForbiddenNgram {
                ngram: Ngram::DoubleZero,
                start: 1,
                fault: 2
            })
        );
    }

    #[test]
    fn membership_examples() {
        let r = decide_membership(&w("0"));
        assert!(r.member);
        assert_eq!(r.generation_index, Some(0));
        assert!(r.passes.is_empty());

        let r = decide_membership(&w("0110110101101"));
        assert_eq!(r.generation_index, Some(6));
        assert!(r.length_is_fibonacci);

        let r = decide_membership(&w("1101"));
        assert!(!r.member);
        assert!(!r.length_is_fibonacci);
        assert_eq!(r.passes.len(), 2);
        assert_eq!(r.passes[0].output(), Some(&w("001")));
        assert_eq!(
            r.rejection(),
            Some((
                2,
                RejectReason::ForbiddenNgram {
                    ngram: Ngram::DoubleZero,
                    start: 0,
                    fault: 1
                }
            ))
        );

        assert_eq!(decide_membership(&w("10101101")).generation_index, Some(5));
        assert!(!decide_membership(&w("")).member);
    }

    #[test]
    fn generation_index_examples() {
        assert_eq!(generation_index(&w("01101")), Some(4));
        assert_eq!(generation_index(&w("11")), None);
        assert_eq!(generation_index(&w("1")), Some(1));
    }

    #[test]
    fn pass_soundness_on_small_words() {
        let fib = LSystem::fib();
        for len in 0..=12 {
            for word in Word::all_of_length(len) {
                if let Some(out) = reverse_pass(&word).output() {
                    assert_eq!(fib.derive_step(out), word);
                }
            }
        }
    }

    #[test]
    fn output_length_matches_zero_count() {
        let gens = LSystem::fib().generations(20);
        for n in 2..=20 {
            let pass = reverse_pass(&gens[n]);
            let out = pass.output().unwrap();
            assert_eq!(out.len(), gens[n - 1].len());
            assert_eq!(gens[n].len() - out.len(), gens[n].count(Symbol::Zero));
        }
    }
}
