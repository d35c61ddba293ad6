//! Brute-force ground truth, independent of the automaton.
//!
//! Nothing here touches [`crate::automaton`]: preimages come from
//! backtracking over rule images and membership from direct comparison with
//! forward-generated words.

use std::collections::{BTreeSet, HashMap};

use crate::grammar::{LSystem, Symbol, Word};
use crate::reverser::decide_membership;

/// Every `t` with `derive_step(grammar, t) == source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreimageSet {
    pub source: Word,
    pub grammar: LSystem,
    pub preimages: BTreeSet<Word>,
}

impl PreimageSet {
    pub fn len(&self) -> usize {
        self.preimages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.preimages.is_empty()
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.preimages.contains(word)
    }
}

/// All preimages of `source` under one application of `grammar`.
///
/// At each position every rule image that matches is tried, `0`'s image
/// first. The number of preimages can be exponential in `|source|` for
/// grammars whose images are prefixes of one another.
pub fn enumerate_preimages(grammar: &LSystem, source: &[Symbol]) -> PreimageSet {
    let mut preimages = BTreeSet::new();
    let mut partial = Vec::new();
    backtrack(grammar, source, 0, &mut partial, &mut preimages);
    PreimageSet {
        source: Word::from(source),
        grammar: grammar.clone(),
        preimages,
    }
}

fn backtrack(
    grammar: &LSystem,
    source: &[Symbol],
    at: usize,
    partial: &mut Vec<Symbol>,
    found: &mut BTreeSet<Word>,
) {
    if at == source.len() {
        found.insert(Word::from(partial.as_slice()));
        return;
    }
    for symbol in Symbol::ALL {
        let image = grammar.image(symbol);
        if source[at..].starts_with(image) {
            partial.push(symbol);
            backtrack(grammar, source, at + image.len(), partial, found);
            partial.pop();
        }
    }
}

/// Fibonacci-grammar generations `g(0)..=g(max_n)`, indexed by content.
#[derive(Debug, Clone)]
pub struct GenerationOracle {
    index: HashMap<Word, usize>,
    max_n: usize,
}

impl GenerationOracle {
    pub fn new(max_n: usize) -> Self {
        let mut index = HashMap::new();
        for (n, g) in LSystem::fib().generations(max_n).into_iter().enumerate() {
            index.insert(g, n);
        }
        GenerationOracle { index, max_n }
    }

    /// Every generation with at most `len` symbols.
    pub fn covering(len: usize) -> Self {
        let mut n = 0;
        while fib_length(n + 1) <= len {
            n += 1;
        }
        Self::new(n)
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn lookup(&self, word: &[Symbol]) -> Option<usize> {
        self.index.get(word).copied()
    }
}

fn fib_length(n: usize) -> usize {
    let (mut a, mut b) = (1usize, 1usize);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// The `n <= max_n` with `generate(FIB, n) == word`, by direct comparison.
pub fn oracle_membership(word: &[Symbol], max_n: usize) -> Option<usize> {
    let fib = LSystem::fib();
    let mut current = fib.axiom().clone();
    for n in 0..=max_n {
        if current.symbols() == word {
            return Some(n);
        }
        if current.len() > word.len() && n >= 1 {
            return None;
        }
        current = fib.derive_step(&current);
    }
    None
}

/// A word on which the machine and the oracle disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub word: Word,
    pub machine: Option<usize>,
    pub oracle: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExhaustiveReport {
    pub max_len: usize,
    pub checked: usize,
    /// Words the machine accepted, shortest first.
    pub accepted: Vec<Word>,
    pub mismatches: Vec<Mismatch>,
}

impl ExhaustiveReport {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares [`decide_membership`] with the oracle on every binary word of
/// length `1..=max_len`. Generation indices must match too, not only the
/// member bit.
pub fn exhaustive_membership_check(max_len: usize) -> ExhaustiveReport {
    let oracle = GenerationOracle::covering(max_len);
    let mut report = ExhaustiveReport {
        max_len,
        ..Default::default()
    };
    for len in 1..=max_len {
        for word in Word::all_of_length(len) {
            let decision = decide_membership(&word);
            let expected = oracle.lookup(&word);
            report.checked += 1;
            if decision.member {
                report.accepted.push(word.clone());
            }
            if decision.generation_index != expected {
                report.mismatches.push(Mismatch {
                    word,
                    machine: decision.generation_index,
                    oracle: expected,
                });
            }
        }
    }
    report
}

/// Number of Fibonacci-grammar generations with at most `max_len` symbols.
pub fn expected_member_count(max_len: usize) -> usize {
    (0..).take_while(|&n| fib_length(n) <= max_len).count()
}
