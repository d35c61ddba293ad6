//! Command implementations for the `fibrecon` binary.
//!
//! Each command returns a [`CommandOutput`] instead of printing, so the
//! binary stays a thin wrapper and the commands can be tested in-process.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};

use crate::automaton::{max_head_gap, render_trace};
use crate::grammar::{LSystem, Symbol, Word};
use crate::oracle::enumerate_preimages;
use crate::reverser::{decide_membership, fib_machine, reverse_pass, PassOutcome};

/// Process exit status: 0 success or member, 1 an expected negative
/// answer, 2 misuse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus {
    pub code: i32,
}

impl ExitStatus {
    pub const SUCCESS: ExitStatus = ExitStatus { code: 0 };
    pub const NEGATIVE: ExitStatus = ExitStatus { code: 1 };
    pub const USAGE: ExitStatus = ExitStatus { code: 2 };

    fn from_outcome(positive: bool) -> Self {
        if positive {
            Self::SUCCESS
        } else {
            Self::NEGATIVE
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub status: ExitStatus,
}

impl CommandOutput {
    fn ok(stdout: String, positive: bool) -> Self {
        CommandOutput {
            stdout,
            stderr: String::new(),
            status: ExitStatus::from_outcome(positive),
        }
    }

    fn usage(stderr: String) -> Self {
        CommandOutput {
            stdout: String::new(),
            stderr,
            status: ExitStatus::USAGE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GrammarName {
    Fib,
    Bif,
}

impl GrammarName {
    fn lsystem(self) -> LSystem {
        match self {
            GrammarName::Fib => LSystem::fib(),
            GrammarName::Bif => LSystem::bif(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "fibrecon",
    version,
    about = "Generate, recognise and reconstruct Fibonacci-grammar words"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print generation N and its length
    Generate {
        n: usize,
        #[arg(long, value_enum, default_value = "fib")]
        grammar: GrammarName,
    },
    /// Reconstruct the previous generation with one machine pass
    Reverse { word: String },
    /// Decide whether WORD is a Fibonacci-grammar generation
    Member {
        word: String,
        #[arg(long)]
        show_passes: bool,
    },
    /// Print the step-by-step trace of one machine pass
    Trace { word: String },
    /// Compare rule-image ambiguity of the fib and bif grammars
    Ambiguity,
    /// List every one-step preimage of WORD by brute force
    Preimages {
        word: String,
        #[arg(long, value_enum, default_value = "fib")]
        grammar: GrammarName,
    },
}

/// Parses `args` (program name first) and runs the selected command.
pub fn execute<I, T>(args: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(cli.command),
        Err(err) => {
            let text = err.render().to_string();
            if err.use_stderr() {
                CommandOutput::usage(text)
            } else {
                // --help and --version
                CommandOutput::ok(text, true)
            }
        }
    }
}

pub fn dispatch(command: Command) -> CommandOutput {
    match command {
        Command::Generate { n, grammar } => cmd_generate(n, grammar),
        Command::Reverse { word } => with_word(&word, cmd_reverse),
        Command::Member { word, show_passes } => with_word(&word, |w| cmd_member(w, show_passes)),
        Command::Trace { word } => with_word(&word, cmd_trace),
        Command::Ambiguity => cmd_ambiguity(),
        Command::Preimages { word, grammar } => with_word(&word, |w| cmd_preimages(w, grammar)),
    }
}

fn with_word(text: &str, f: impl FnOnce(&Word) -> CommandOutput) -> CommandOutput {
    match text.trim_end_matches(['\n', '\r']).parse::<Word>() {
        Ok(word) => f(&word),
        Err(err) => CommandOutput::usage(format!("error: {err}\n")),
    }
}

pub fn cmd_generate(n: usize, grammar: GrammarName) -> CommandOutput {
    let word = grammar.lsystem().generate(n);
    CommandOutput::ok(format!("{word} ({} symbols)\n", word.len()), true)
}

pub fn cmd_reverse(word: &Word) -> CommandOutput {
    match reverse_pass(word) {
        PassOutcome::Reconstructed { output, .. } => CommandOutput::ok(format!("{output}\n"), true),
        PassOutcome::Rejected { reason, .. } => {
            CommandOutput::ok(format!("rejected: {reason}\n"), false)
        }
    }
}

pub fn cmd_member(word: &Word, show_passes: bool) -> CommandOutput {
    let report = decide_membership(word);
    let mut out = String::new();
    if show_passes {
        for (i, pass) in report.passes.iter().enumerate() {
            match pass {
                PassOutcome::Reconstructed { output, .. } => {
                    let _ = writeln!(out, "pass {}: {output}", i + 1);
                }
                PassOutcome::Rejected { reason, .. } => {
                    let _ = writeln!(out, "pass {}: rejected: {reason}", i + 1);
                }
            }
        }
    }
    match (report.generation_index, report.rejection()) {
        (Some(n), _) => {
            let _ = writeln!(out, "member: generation {n}");
        }
        (None, Some((pass, reason))) => {
            let _ = writeln!(out, "non-member (pass {pass} rejected: {reason})");
        }
        (None, None) => out.push_str("non-member\n"),
    }
    let _ = writeln!(
        out,
        "fibonacci length: {}",
        if report.length_is_fibonacci {
            "yes"
        } else {
            "no"
        }
    );
    CommandOutput::ok(out, report.member)
}

pub fn cmd_trace(word: &Word) -> CommandOutput {
    let pass = reverse_pass(word);
    let run = pass.run();
    let mut out = render_trace(run);
    if !out.is_empty() {
        out.push('\n');
    }
    match &pass {
        PassOutcome::Reconstructed { output, .. } => {
            let _ = writeln!(out, "verdict: accepted, tape 2 holds {output}");
        }
        PassOutcome::Rejected { reason, .. } => {
            let _ = writeln!(out, "verdict: rejected: {reason}");
        }
    }
    let _ = writeln!(out, "max head gap: {}", max_head_gap(run.trace.steps()));
    let state = &fib_machine().table.state(run.final_config.state).name;
    let _ = writeln!(out, "final state: {state}");
    CommandOutput::ok(out, pass.output().is_some())
}

pub fn cmd_ambiguity() -> CommandOutput {
    let mut out = String::new();
    for (name, grammar) in [("fib", LSystem::fib()), ("bif", LSystem::bif())] {
        let ambiguous = grammar.first_symbol_ambiguity();
        let rules = format!(
            "0 -> {}, 1 -> {}",
            grammar.image(Symbol::Zero),
            grammar.image(Symbol::One)
        );
        if ambiguous.is_empty() {
            let _ = writeln!(out, "{name}: unambiguous ({rules})");
            let _ = writeln!(
                out,
                "  no single-symbol image also starts a longer image, so left-to-right grouping is forced"
            );
        } else {
            let list: Vec<String> = ambiguous.iter().map(|s| s.to_string()).collect();
            let _ = writeln!(out, "{name}: ambiguous at {} ({rules})", list.join(", "));
            let _ = writeln!(
                out,
                "  each such symbol may be a whole constituent or the start of a longer one"
            );
        }
    }
    CommandOutput::ok(out, true)
}

pub fn cmd_preimages(word: &Word, grammar: GrammarName) -> CommandOutput {
    let set = enumerate_preimages(&grammar.lsystem(), word);
    if set.is_empty() {
        return CommandOutput::ok("no preimages\n".to_owned(), false);
    }
    let mut out = String::new();
    for pre in &set.preimages {
        let _ = writeln!(out, "{pre}");
    }
    CommandOutput::ok(out, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CommandOutput {
        execute(std::iter::once("fibrecon").chain(args.iter().copied()))
    }

    #[test]
    fn generate_examples() {
        assert_eq!(run(&["generate", "4"]).stdout, "01101 (5 symbols)\n");
        assert_eq!(run(&["generate", "0"]).stdout, "0 (1 symbols)\n");
        assert_eq!(
            run(&["generate", "--grammar", "bif", "3"]).stdout,
            "101 (3 symbols)\n"
        );
        assert_eq!(run(&["generate", "x"]).status, ExitStatus::USAGE);
        assert_eq!(run(&["generate", "-1"]).status, ExitStatus::USAGE);
    }

    #[test]
    fn reverse_examples() {
        let out = run(&["reverse", "01101"]);
        assert_eq!(
            (out.stdout.as_str(), out.status),
            ("101\n", ExitStatus::SUCCESS)
        );
        let out = run(&["reverse", "100"]);
        assert_eq!(out.stdout, "rejected: forbidden n-gram 00 at 1\n");
        assert_eq!(out.status, ExitStatus::NEGATIVE);
        let out = run(&["reverse", "10"]);
        assert_eq!(out.stdout, "rejected: trailing zero\n");
        assert_eq!(out.status, ExitStatus::NEGATIVE);
        assert_eq!(run(&["reverse", "012"]).status, ExitStatus::USAGE);
    }

    #[test]
    fn member_examples() {
        let out = run(&["member", "0110110101101"]);
        assert!(out.stdout.starts_with("member: generation 6\n"));
        assert_eq!(out.status, ExitStatus::SUCCESS);

        let out = run(&["member", "1101", "--show-passes"]);
        assert_eq!(
            out.stdout,
            "pass 1: 001\n\
             pass 2: rejected: forbidden n-gram 00 at 0\n\
             non-member (pass 2 rejected: forbidden n-gram 00 at 0)\n\
             fibonacci length: no\n"
        );
        assert_eq!(out.status, ExitStatus::NEGATIVE);

        let out = run(&["member", "0"]);
        assert_eq!(out.stdout, "member: generation 0\nfibonacci length: yes\n");
        assert_eq!(run(&["member", "0a"]).status, ExitStatus::USAGE);
    }

    #[test]
    fn trace_examples() {
        let out = run(&["trace", "01101"]);
        assert_eq!(out.status, ExitStatus::SUCCESS);
        assert_eq!(out.stdout.matches("(by ").count(), 5);
        assert!(out.stdout.contains("max head gap: 2\n"));

        assert!(run(&["trace", "10101101"])
            .stdout
            .contains("max head gap: 3\n"));

        let out = run(&["trace", "0"]);
        assert_eq!(out.stdout.matches("(by 1)").count(), 1);
        assert!(out.stdout.contains("verdict: rejected: trailing zero"));
        assert_eq!(out.status, ExitStatus::NEGATIVE);
    }

    #[test]
    fn ambiguity_examples() {
        let out = run(&["ambiguity"]);
        assert!(out.stdout.contains("fib: unambiguous"));
        assert!(out.stdout.contains("bif: ambiguous at 1"));
        assert_eq!(out.status, ExitStatus::SUCCESS);
        assert_eq!(run(&["ambiguity", "extra"]).status, ExitStatus::USAGE);
    }

    #[test]
    fn preimages_command() {
        assert_eq!(run(&["preimages", "01101"]).stdout, "101\n");
        assert_eq!(
            run(&["preimages", "--grammar", "bif", "101"]).stdout,
            "10\n"
        );
        assert_eq!(run(&["preimages", "00"]).status, ExitStatus::NEGATIVE);
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        assert_eq!(run(&["frobnicate"]).status, ExitStatus::USAGE);
        assert_eq!(run(&[]).status, ExitStatus::USAGE);
    }
}
