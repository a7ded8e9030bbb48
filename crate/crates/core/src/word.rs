//! Dyck words over the alphabet `{x, D}`.
//!
//! A word is stored as a sequence of [`Symbol`]s and is only constructible
//! once it has been checked: no prefix has more `D`s than `x`s, and the two
//! counts agree over the whole word. The empty word is a valid [`DyckWord`],
//! although it has no Dyck matrix.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// Up step, multiplication by `x`.
    X,
    /// Down step, differentiation.
    D,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::X => 'x',
            Symbol::D => 'D',
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Errors raised while reading a Dyck word. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("InvalidChar at {position}")]
    InvalidChar { position: usize },
    #[error("PrefixViolation at {position}")]
    PrefixViolation { position: usize },
    #[error("Unbalanced: {x_count} x, {d_count} D")]
    Unbalanced { x_count: usize, d_count: usize },
    #[error("EmptyWord")]
    EmptyWord,
    #[error("alphabet characters must be distinct, got {0:?} twice")]
    DegenerateAlphabet(char),
}

/// Mapping of two input characters onto `x` and `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alphabet {
    x: char,
    d: char,
}

impl Alphabet {
    pub const CANONICAL: Alphabet = Alphabet { x: 'x', d: 'D' };

    pub fn new(x: char, d: char) -> Result<Self, WordError> {
        if x == d {
            return Err(WordError::DegenerateAlphabet(x));
        }
        Ok(Alphabet { x, d })
    }

    pub fn symbol(&self, c: char) -> Option<Symbol> {
        if c == self.x {
            Some(Symbol::X)
        } else if c == self.d {
            Some(Symbol::D)
        } else {
            None
        }
    }

    pub fn char_for(&self, s: Symbol) -> char {
        match s {
            Symbol::X => self.x,
            Symbol::D => self.d,
        }
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::CANONICAL
    }
}

/// Running prefix check shared by every reader of symbol streams.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct BalanceTracker {
    x_count: usize,
    d_count: usize,
}

impl BalanceTracker {
    /// Records the symbol at 1-based `position`.
    pub(crate) fn push(&mut self, s: Symbol, position: usize) -> Result<(), WordError> {
        match s {
            Symbol::X => self.x_count += 1,
            Symbol::D => {
                self.d_count += 1;
                if self.d_count > self.x_count {
                    return Err(WordError::PrefixViolation { position });
                }
            }
        }
        Ok(())
    }

    pub(crate) fn finish(&self) -> Result<(), WordError> {
        if self.x_count != self.d_count {
            return Err(WordError::Unbalanced {
                x_count: self.x_count,
                d_count: self.d_count,
            });
        }
        Ok(())
    }
}

/// A validated Dyck word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DyckWord {
    symbols: Vec<Symbol>,
}

impl DyckWord {
    pub fn empty() -> Self {
        DyckWord::default()
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Result<Self, WordError> {
        let mut tracker = BalanceTracker::default();
        for (i, &s) in symbols.iter().enumerate() {
            tracker.push(s, i + 1)?;
        }
        tracker.finish()?;
        Ok(DyckWord { symbols })
    }

    /// Parses `text` under `alphabet`. Every character must belong to the
    /// alphabet; no whitespace is skipped.
    pub fn parse_with(text: &str, alphabet: &Alphabet) -> Result<Self, WordError> {
        let mut tracker = BalanceTracker::default();
        let mut symbols = Vec::with_capacity(text.len());
        for (i, c) in text.chars().enumerate() {
            let s = alphabet
                .symbol(c)
                .ok_or(WordError::InvalidChar { position: i + 1 })?;
            tracker.push(s, i + 1)?;
            symbols.push(s);
        }
        tracker.finish()?;
        Ok(DyckWord { symbols })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of `x` symbols, which is half the length.
    pub fn semilength(&self) -> usize {
        self.symbols.len() / 2
    }

    /// Renders the word with an arbitrary alphabet.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.symbols.iter().map(|&s| alphabet.char_for(s)).collect()
    }

    /// Splits the word into maximal slope/descent pairs, one per peak.
    pub fn decompose(&self) -> Result<PeakDecomposition, WordError> {
        if self.is_empty() {
            return Err(WordError::EmptyWord);
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut prev = None;
        for &s in &self.symbols {
            match (prev, s) {
                (Some(Symbol::X), Symbol::X) => pairs.last_mut().unwrap().0 += 1,
                (_, Symbol::X) => pairs.push((1, 0)),
                (_, Symbol::D) => pairs.last_mut().unwrap().1 += 1,
            }
            prev = Some(s);
        }
        Ok(PeakDecomposition { pairs })
    }

    pub fn to_path(&self) -> LatticePath {
        LatticePath {
            steps: self
                .symbols
                .iter()
                .map(|s| match s {
                    Symbol::X => Step::North,
                    Symbol::D => Step::East,
                })
                .collect(),
        }
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for DyckWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DyckWord::parse_with(s, &Alphabet::CANONICAL)
    }
}

/// Parses `text` under `alphabet`.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<DyckWord, WordError> {
    DyckWord::parse_with(text, alphabet)
}

/// The `(slope, descent)` lengths of a non-empty Dyck word, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeakDecomposition {
    pairs: Vec<(usize, usize)>,
}

impl PeakDecomposition {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of peaks.
    pub fn peak_count(&self) -> usize {
        self.pairs.len()
    }

    /// Concatenates `x^u D^d` for every pair.
    pub fn to_word(&self) -> DyckWord {
        let symbols = self
            .pairs
            .iter()
            .flat_map(|&(u, d)| {
                std::iter::repeat_n(Symbol::X, u).chain(std::iter::repeat_n(Symbol::D, d))
            })
            .collect();
        DyckWord { symbols }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    North,
    East,
}

/// Lattice path from the origin, North for `x` and East for `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Final point as `(east, north)`.
    pub fn endpoint(&self) -> (usize, usize) {
        let north = self.steps.iter().filter(|&&s| s == Step::North).count();
        (self.steps.len() - north, north)
    }

    /// Every point visited, starting at the origin.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut p = (0, 0);
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            match s {
                Step::North => p.1 += 1,
                Step::East => p.0 += 1,
            }
            out.push(p);
        }
        out
    }

    /// ASCII picture of the path on its bounding grid, north at the top.
    pub fn render_grid(&self) -> String {
        let (w, h) = self.endpoint();
        let mut grid = vec![vec!['.'; w + 1]; h + 1];
        for (x, y) in self.points() {
            grid[y][x] = '#';
        }
        let mut out = String::new();
        for row in grid.iter().rev() {
            out.extend(row.iter());
            out.push('\n');
        }
        out
    }
}

/// Catalan number `C_n`, computed with the multiplicative recurrence.
pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// All Dyck words of semilength `n`, in lexicographic order with `x < D`.
pub fn enumerate_words(n: usize) -> DyckWords {
    DyckWords::new(n)
}

/// Iterator behind [`enumerate_words`]. Each word is derived from the
/// previous one in place, so memory stays at one word.
#[derive(Debug, Clone)]
pub struct DyckWords {
    current: Option<Vec<Symbol>>,
}

impl DyckWords {
    fn new(n: usize) -> Self {
        let mut first = vec![Symbol::X; n];
        first.extend(std::iter::repeat_n(Symbol::D, n));
        DyckWords {
            current: Some(first),
        }
    }

    // Successor: flip the rightmost `x` that can become `D`, then refill the
    // suffix with all remaining `x`s followed by all remaining `D`s.
    fn advance(word: &mut [Symbol]) -> bool {
        let n = word.len() / 2;
        let mut heights = Vec::with_capacity(word.len());
        let mut h = 0isize;
        for &s in word.iter() {
            heights.push(h);
            h += if s == Symbol::X { 1 } else { -1 };
        }
        let mut xs_before = word.iter().filter(|&&s| s == Symbol::X).count();
        for i in (0..word.len()).rev() {
            if word[i] == Symbol::X {
                xs_before -= 1;
                // Changing to D needs height >= 1 before i and an x left to place.
                if heights[i] >= 1 && xs_before < n {
                    word[i] = Symbol::D;
                    let remaining_x = n - xs_before;
                    let tail = &mut word[i + 1..];
                    let (xs, ds) = tail.split_at_mut(remaining_x);
                    xs.fill(Symbol::X);
                    ds.fill(Symbol::D);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for DyckWords {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        let word = self.current.as_mut()?;
        let out = DyckWord {
            symbols: word.clone(),
        };
        if !Self::advance(word) {
            self.current = None;
        }
        Some(out)
    }
}
