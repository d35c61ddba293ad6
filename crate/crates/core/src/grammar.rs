//! Binary D0L systems and the combinatorics of their words.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use thiserror::Error;

/// A letter of the binary alphabet `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Zero,
    One,
}

impl Symbol {
    pub const ALL: [Symbol; 2] = [Symbol::Zero, Symbol::One];

    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
        }
    }

    fn index(self) -> usize {
        match self {
            Symbol::Zero => 0,
            Symbol::One => 1,
        }
    }
}

impl TryFrom<char> for Symbol {
    type Error = ParseWordError;

    fn try_from(c: char) -> Result<Self, Self::Error> {
        match c {
            '0' => Ok(Symbol::Zero),
            '1' => Ok(Symbol::One),
            other => Err(ParseWordError {
                position: 0,
                found: other,
            }),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Returned when text contains something other than `0` and `1`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid symbol {found:?} at position {position}: only '0' and '1' are allowed")]
pub struct ParseWordError {
    pub position: usize,
    pub found: char,
}

/// A finite sequence of [`Symbol`]s. Renders as a plain string of `0`/`1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    pub fn push(&mut self, symbol: Symbol) {
        self.0.push(symbol);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn count(&self, symbol: Symbol) -> usize {
        self.0.iter().filter(|&&s| s == symbol).count()
    }

    /// Every word of exactly `len` symbols, in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        assert!(
            len < usize::BITS as usize,
            "length {len} is too large to enumerate"
        );
        (0..1usize << len).map(move |bits| {
            (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 1 {
                        Symbol::One
                    } else {
                        Symbol::Zero
                    }
                })
                .collect()
        })
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl std::borrow::Borrow<[Symbol]> for Word {
    fn borrow(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }
}

impl From<&[Symbol]> for Word {
    fn from(symbols: &[Symbol]) -> Self {
        Word(symbols.to_vec())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(position, c)| {
                Symbol::try_from(c).map_err(|_| ParseWordError { position, found: c })
            })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self.0.iter().map(|s| s.as_char()).collect();
        f.write_str(&text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LSystemError {
    #[error("the axiom must not be empty")]
    EmptyAxiom,
    #[error("the image of {0} must not be empty")]
    EmptyImage(Symbol),
}

/// A propagating D0L system over `{0, 1}`: an axiom plus one rewriting rule
/// per symbol.
///
/// Totality holds by construction since both images are always present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LSystem {
    axiom: Word,
    images: [Word; 2],
}

impl LSystem {
    pub fn new(axiom: Word, zero_image: Word, one_image: Word) -> Result<Self, LSystemError> {
        if axiom.is_empty() {
            return Err(LSystemError::EmptyAxiom);
        }
        if zero_image.is_empty() {
            return Err(LSystemError::EmptyImage(Symbol::Zero));
        }
        if one_image.is_empty() {
            return Err(LSystemError::EmptyImage(Symbol::One));
        }
        Ok(LSystem {
            axiom,
            images: [zero_image, one_image],
        })
    }

    /// The Fibonacci grammar: axiom `0`, rules `0 -> 1`, `1 -> 01`.
    pub fn fib() -> Self {
        Self::from_literals("0", "1", "01")
    }

    /// The mirrored grammar: axiom `0`, rules `0 -> 1`, `1 -> 10`.
    pub fn bif() -> Self {
        Self::from_literals("0", "1", "10")
    }

    fn from_literals(axiom: &str, zero: &str, one: &str) -> Self {
        let parse = |s: &str| s.parse::<Word>().expect("built-in literal");
        Self::new(parse(axiom), parse(zero), parse(one)).expect("built-in grammar")
    }

    pub fn axiom(&self) -> &Word {
        &self.axiom
    }

    pub fn image(&self, symbol: Symbol) -> &Word {
        &self.images[symbol.index()]
    }

    /// Rewrites every symbol of `word` in parallel.
    pub fn derive_step(&self, word: &[Symbol]) -> Word {
        let mut out = Word(Vec::with_capacity(word.len() * 2));
        for &symbol in word {
            out.extend_from(self.image(symbol));
        }
        out
    }

    /// Generation `n`: the axiom rewritten `n` times.
    ///
    /// Lengths grow geometrically; keep `n` around 40 or below.
    pub fn generate(&self, n: usize) -> Word {
        (0..n).fold(self.axiom.clone(), |word, _| self.derive_step(&word))
    }

    /// Generations `0..=n`, sharing work between consecutive steps.
    pub fn generations(&self, n: usize) -> Vec<Word> {
        let mut out = Vec::with_capacity(n + 1);
        let mut current = self.axiom.clone();
        for _ in 0..n {
            let next = self.derive_step(&current);
            out.push(std::mem::replace(&mut current, next));
        }
        out.push(current);
        out
    }

    /// Symbols that are the whole image of some rule while also being a
    /// proper prefix of another image.
    ///
    /// A left-to-right reader meeting such a symbol cannot tell whether it
    /// closes a one-symbol constituent or opens a longer one.
    pub fn first_symbol_ambiguity(&self) -> BTreeSet<Symbol> {
        Symbol::ALL
            .into_iter()
            .filter(|&candidate| {
                let whole_image = self.images.iter().any(|img| img[..] == [candidate]);
                let opens_longer = self
                    .images
                    .iter()
                    .any(|img| img.len() > 1 && img[0] == candidate);
                whole_image && opens_longer
            })
            .collect()
    }
}

/// The smallest `n` such that the Fibonacci-grammar generation `n` has
/// `len` symbols.
///
/// Generations 0 and 1 both have one symbol; the tie goes to 0.
pub fn fibonacci_index_of_length(len: usize) -> Option<usize> {
    if len == 1 {
        return Some(0);
    }
    let (mut prev, mut cur, mut index) = (1usize, 1usize, 1usize);
    while cur < len {
        let next = prev.checked_add(cur)?;
        prev = cur;
        cur = next;
        index += 1;
    }
    (cur == len).then_some(index)
}

/// A factor that never occurs in a Fibonacci-grammar generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ngram {
    DoubleZero,
    TripleOne,
}

impl Ngram {
    pub fn as_str(self) -> &'static str {
        match self {
            Ngram::DoubleZero => "00",
            Ngram::TripleOne => "111",
        }
    }
}

impl fmt::Display for Ngram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForbiddenNgram {
    /// 0-based start of the factor.
    pub position: usize,
    pub ngram: Ngram,
}

/// Leftmost occurrence of `00` or `111`.
pub fn find_forbidden_ngram(word: &[Symbol]) -> Option<ForbiddenNgram> {
    use Symbol::{One, Zero};
    (0..word.len()).find_map(|position| {
        let rest = &word[position..];
        // `00` wins a tie: the machine faults on the second zero first.
        if rest.starts_with(&[Zero, Zero]) {
            Some(ForbiddenNgram {
                position,
                ngram: Ngram::DoubleZero,
            })
        } else if rest.starts_with(&[One, One, One]) {
            Some(ForbiddenNgram {
                position,
                ngram: Ngram::TripleOne,
            })
        } else {
            None
        }
    })
}
