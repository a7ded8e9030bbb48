//! The two directions of the word/matrix bijection.
//!
//! [`MatrixBuilder`] consumes a word one symbol at a time and writes a new
//! matrix row at every valley (a `D` followed by an `x`) and once more at the
//! end of input. Each new row keeps the first `shared` ones of the row above,
//! where `shared` is the height of the path at the valley, then appends the
//! slope's fresh ones in new columns. Earlier rows are padded with zeros.
//!
//! [`get_dyck_word`] goes the other way: it slides a vertical two-cell window
//! over the matrix framed by zero rows, emitting `x` for `(0, 1)` and `D` for
//! `(1, 0)`.

use std::io::{BufRead, Read};

use thiserror::Error;

use crate::matrix::{DyckMatrix, MatrixError};
use crate::word::{Alphabet, DyckWord, Symbol, WordError};

#[derive(Debug, Error)]
pub enum ConvertError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("InvalidMatrix: {0}")]
    InvalidMatrix(#[from] MatrixError),
    #[error("read error: {0}")]
    Io(#[from] std::io::Error),
}

/// Counters of the streaming word-to-matrix conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConverterState {
    /// `x`s of the current slope, plus the height carried in from the last valley.
    pub x_count: usize,
    /// `D`s of the current descent.
    pub d_count: usize,
    /// Ones the next row keeps from the previous row.
    pub shared: usize,
    pub prev: Symbol,
}

impl Default for ConverterState {
    fn default() -> Self {
        ConverterState {
            x_count: 0,
            d_count: 0,
            shared: 0,
            prev: Symbol::X,
        }
    }
}

/// Incremental word-to-matrix converter.
#[derive(Debug, Clone, Default)]
pub struct MatrixBuilder {
    state: ConverterState,
    rows: Vec<Vec<bool>>,
    position: usize,
    total_x: usize,
    total_d: usize,
}

impl MatrixBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn state(&self) -> ConverterState {
        self.state
    }

    /// Rows written so far. Only the finished matrix is canonical: later
    /// slopes still widen these rows.
    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    pub fn push(&mut self, symbol: Symbol) -> Result<(), WordError> {
        self.position += 1;
        match symbol {
            Symbol::D => {
                self.total_d += 1;
                self.state.prev = Symbol::D;
                self.state.d_count += 1;
                if self.state.d_count > self.state.x_count {
                    return Err(WordError::PrefixViolation {
                        position: self.position,
                    });
                }
            }
            Symbol::X => {
                self.total_x += 1;
                if self.state.prev == Symbol::X {
                    self.state.x_count += 1;
                } else {
                    self.emit_row();
                    let shared = self.state.x_count - self.state.d_count;
                    self.state = ConverterState {
                        x_count: shared + 1,
                        d_count: 0,
                        shared,
                        prev: Symbol::X,
                    };
                }
            }
        }
        Ok(())
    }

    /// Pushes a character read under `alphabet`.
    pub fn push_char(&mut self, c: char, alphabet: &Alphabet) -> Result<(), WordError> {
        let symbol = alphabet.symbol(c).ok_or(WordError::InvalidChar {
            position: self.position + 1,
        })?;
        self.push(symbol)
    }

    pub fn finish(mut self) -> Result<DyckMatrix, WordError> {
        if self.position == 0 {
            return Err(WordError::EmptyWord);
        }
        if self.total_x != self.total_d {
            return Err(WordError::Unbalanced {
                x_count: self.total_x,
                d_count: self.total_d,
            });
        }
        self.emit_row();
        Ok(DyckMatrix::from_rows_unchecked(self.rows))
    }

    fn emit_row(&mut self) {
        let ConverterState {
            x_count, shared, ..
        } = self.state;
        let fresh = x_count - shared;
        let mut row = match self.rows.last() {
            Some(prev) => {
                let mut kept = 0;
                prev.iter()
                    .map(|&b| {
                        let keep = b && kept < shared;
                        kept += usize::from(keep);
                        keep
                    })
                    .collect()
            }
            None => Vec::new(),
        };
        row.extend(std::iter::repeat_n(true, fresh));
        for r in &mut self.rows {
            r.extend(std::iter::repeat_n(false, fresh));
        }
        self.rows.push(row);
    }
}

/// Converts a symbol stream into its Dyck matrix.
pub fn get_matrix<I: IntoIterator<Item = Symbol>>(symbols: I) -> Result<DyckMatrix, WordError> {
    let mut builder = MatrixBuilder::new();
    for s in symbols {
        builder.push(s)?;
    }
    builder.finish()
}

/// Converts a word read from `reader` one character at a time. A single
/// trailing newline is accepted; anything else outside the alphabet is an
/// [`WordError::InvalidChar`].
pub fn get_matrix_from_reader<R: Read>(
    reader: R,
    alphabet: &Alphabet,
) -> Result<DyckMatrix, ConvertError> {
    let mut reader = std::io::BufReader::new(reader);
    let mut builder = MatrixBuilder::new();
    let mut position = 0;
    loop {
        let buf = reader.fill_buf()?;
        let Some(&byte) = buf.first() else { break };
        reader.consume(1);
        position += 1;
        if byte == b'\n' && reader.fill_buf()?.is_empty() {
            break;
        }
        if !byte.is_ascii() {
            return Err(WordError::InvalidChar { position }.into());
        }
        builder.push_char(char::from(byte), alphabet)?;
    }
    Ok(builder.finish()?)
}

/// The vertical scanning window `(m[i-1][j], m[i][j])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub above: bool,
    pub below: bool,
}

impl Window {
    pub fn emit(self) -> Option<Symbol> {
        check_window(self.above, self.below)
    }
}

/// `(1, 0)` ends a vertex's run of cycles, `(0, 1)` starts one.
pub fn check_window(above: bool, below: bool) -> Option<Symbol> {
    match (above, below) {
        (true, false) => Some(Symbol::D),
        (false, true) => Some(Symbol::X),
        _ => None,
    }
}

/// Scans the zero-framed matrix row by row and returns its Dyck word.
pub fn get_dyck_word(matrix: &DyckMatrix) -> DyckWord {
    let view = matrix.padded_view();
    let mut symbols = Vec::with_capacity(2 * matrix.cols());
    for i in 1..view.rows() {
        for j in 0..view.cols() {
            let window = Window {
                above: view.get(i - 1, j),
                below: view.get(i, j),
            };
            symbols.extend(window.emit());
        }
    }
    DyckWord::from_symbols(symbols).expect("window scan of a Dyck matrix yields a Dyck word")
}

/// Validates `raw` first, then scans it.
pub fn get_dyck_word_from_grid<R: AsRef<[u8]>>(raw: &[R]) -> Result<DyckWord, ConvertError> {
    let m = DyckMatrix::from_grid(raw)?;
    Ok(get_dyck_word(&m))
}
