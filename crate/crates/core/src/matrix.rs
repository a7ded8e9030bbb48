//! Dyck matrices: binary matrices whose rows are the vertex supports of an
//! ordered family of cycles.
//!
//! Rows and columns are reported 1-based in errors and in [`RowTransition`],
//! matching the usual `m_{i,j}` notation; [`DyckMatrix::get`] takes 0-based
//! indices like a slice.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// The clause of the row-transition condition that failed, in check order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum M2Clause {
    /// Indices `a <= b < c` do not exist.
    Existence,
    /// Columns before `a` are not copied from the row above.
    CopyPrefix,
    /// Columns `a..=b` are not all zero.
    ClearGap,
    /// Columns `b+1..=c` are not all one.
    FillRun,
    /// Columns after `c` are not all zero.
    ClearTail,
}

impl fmt::Display for M2Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            M2Clause::Existence => "M2",
            M2Clause::CopyPrefix => "M2.1",
            M2Clause::ClearGap => "M2.2",
            M2Clause::FillRun => "M2.3",
            M2Clause::ClearTail => "M2.4",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("EmptyMatrix")]
    Empty,
    #[error("NotRectangular at row {row}")]
    NotRectangular { row: usize },
    #[error("NotBinary at row {row}, column {col}")]
    NotBinary { row: usize, col: usize },
    #[error("M1Violation")]
    M1Violation,
    #[error("M2Violation at transition {transition} ({clause})")]
    M2Violation { transition: usize, clause: M2Clause },
    #[error("EmptyColumn {col}")]
    EmptyColumn { col: usize },
    #[error("OutOfRange {0}")]
    OutOfRange(usize),
}

/// Errors from the line-oriented matrix text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixTextError {
    #[error("blank line {line}")]
    BlankLine { line: usize },
    #[error("invalid character at line {line}, column {col}")]
    InvalidChar { line: usize, col: usize },
    #[error(transparent)]
    Invalid(#[from] MatrixError),
}

/// The indices `a <= b < c` of the transition from row `i` to row `i + 1`,
/// all 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowTransition {
    pub row: usize,
    /// Smallest column with a one in row `i` and a zero in row `i + 1`.
    pub a: usize,
    /// Last one of row `i`.
    pub b: usize,
    /// Last one of row `i + 1`.
    pub c: usize,
}

/// A validated Dyck matrix, stored as dense row-major bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl DyckMatrix {
    /// Validates a raw grid of 0/1 entries.
    pub fn from_grid<R: AsRef<[u8]>>(raw: &[R]) -> Result<Self, MatrixError> {
        let first = raw.first().ok_or(MatrixError::Empty)?.as_ref();
        let cols = first.len();
        if cols == 0 {
            return Err(MatrixError::Empty);
        }
        let mut bits = Vec::with_capacity(raw.len() * cols);
        for (r, row) in raw.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(MatrixError::NotRectangular { row: r + 1 });
            }
            for (c, &v) in row.iter().enumerate() {
                match v {
                    0 => bits.push(false),
                    1 => bits.push(true),
                    _ => {
                        return Err(MatrixError::NotBinary {
                            row: r + 1,
                            col: c + 1,
                        })
                    }
                }
            }
        }
        let m = DyckMatrix {
            rows: raw.len(),
            cols,
            bits,
        };
        m.check()?;
        Ok(m)
    }

    /// Built by the converter, which only produces valid matrices.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<bool>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let m = DyckMatrix {
            rows: rows.len(),
            cols,
            bits: rows.into_iter().flatten().collect(),
        };
        debug_assert_eq!(m.check(), Ok(()));
        m
    }

    fn check(&self) -> Result<(), MatrixError> {
        // M1: first row is a non-empty block of ones followed by zeros.
        let first = self.row(0);
        let h = first.iter().take_while(|&&b| b).count();
        if h == 0 || first[h..].iter().any(|&b| b) {
            return Err(MatrixError::M1Violation);
        }
        for i in 0..self.rows - 1 {
            check_transition(self.row(i), self.row(i + 1))
                .map_err(|clause| MatrixError::M2Violation {
                    transition: i + 1,
                    clause,
                })?;
        }
        // Only trailing columns can be empty once M1/M2 hold.
        if let Some(j) = (0..self.cols).find(|&j| (0..self.rows).all(|i| !self.get(i, j))) {
            return Err(MatrixError::EmptyColumn { col: j + 1 });
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[bool] {
        &self.bits[row * self.cols..(row + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[bool]> {
        self.bits.chunks(self.cols)
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn to_grid(&self) -> Vec<Vec<u8>> {
        self.iter_rows()
            .map(|r| r.iter().map(|&b| u8::from(b)).collect())
            .collect()
    }

    /// Transition indices between 1-based rows `i` and `i + 1`.
    pub fn row_transition(&self, i: usize) -> Result<RowTransition, MatrixError> {
        if i == 0 || i >= self.rows {
            return Err(MatrixError::OutOfRange(i));
        }
        let (upper, lower) = (self.row(i - 1), self.row(i));
        let a = (0..self.cols).find(|&j| upper[j] && !lower[j]).unwrap();
        let b = last_one(upper).unwrap();
        let c = last_one(lower).unwrap();
        Ok(RowTransition {
            row: i,
            a: a + 1,
            b: b + 1,
            c: c + 1,
        })
    }

    /// The matrix framed by a virtual zero row above and below.
    pub fn padded_view(&self) -> PaddedView<'_> {
        PaddedView { matrix: self }
    }

    /// True iff every column of the padded view reads `0+ 1+ 0+`.
    pub fn column_structure_check(&self) -> bool {
        let view = self.padded_view();
        (0..self.cols).all(|j| {
            let mut rises = 0;
            let mut falls = 0;
            for i in 1..view.rows() {
                match (view.get(i - 1, j), view.get(i, j)) {
                    (false, true) => rises += 1,
                    (true, false) => falls += 1,
                    _ => {}
                }
            }
            !view.get(0, j) && rises == 1 && falls == 1
        })
    }

    /// Unspaced text form, one row per line, no trailing newline.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses the text format; rows may be written `11100` or `1 1 1 0 0`.
    pub fn parse_text(text: &str) -> Result<Self, MatrixTextError> {
        let body = text.strip_suffix('\n').unwrap_or(text);
        let mut grid = Vec::new();
        for (l, line) in body.split('\n').enumerate() {
            if line.is_empty() {
                return Err(MatrixTextError::BlankLine { line: l + 1 });
            }
            grid.push(parse_row(line, l + 1)?);
        }
        Ok(DyckMatrix::from_grid(&grid)?)
    }
}

fn parse_row(line: &str, line_no: usize) -> Result<Vec<u8>, MatrixTextError> {
    let spaced = line.contains(' ');
    let mut row = Vec::with_capacity(line.len());
    for (i, c) in line.chars().enumerate() {
        let bad = || MatrixTextError::InvalidChar {
            line: line_no,
            col: i + 1,
        };
        if spaced && i % 2 == 1 {
            if c != ' ' {
                return Err(bad());
            }
            continue;
        }
        match c {
            '0' => row.push(0),
            '1' => row.push(1),
            _ => return Err(bad()),
        }
    }
    if spaced && line.len().is_multiple_of(2) {
        // trailing separator
        return Err(MatrixTextError::InvalidChar {
            line: line_no,
            col: line.len(),
        });
    }
    Ok(row)
}

fn last_one(row: &[bool]) -> Option<usize> {
    row.iter().rposition(|&b| b)
}

fn check_transition(upper: &[bool], lower: &[bool]) -> Result<(), M2Clause> {
    let a = (0..upper.len()).find(|&j| upper[j] && !lower[j]);
    let (Some(a), Some(b), Some(c)) = (a, last_one(upper), last_one(lower)) else {
        return Err(M2Clause::Existence);
    };
    if !(a <= b && b < c) {
        return Err(M2Clause::Existence);
    }
    if upper[..a] != lower[..a] {
        return Err(M2Clause::CopyPrefix);
    }
    if lower[a..=b].iter().any(|&x| x) {
        return Err(M2Clause::ClearGap);
    }
    if !lower[b + 1..=c].iter().all(|&x| x) {
        return Err(M2Clause::FillRun);
    }
    if lower[c + 1..].iter().any(|&x| x) {
        return Err(M2Clause::ClearTail);
    }
    Ok(())
}

/// Validates a raw grid; see [`DyckMatrix::from_grid`].
pub fn validate_matrix<R: AsRef<[u8]>>(raw: &[R]) -> Result<DyckMatrix, MatrixError> {
    DyckMatrix::from_grid(raw)
}

impl fmt::Display for DyckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.iter_rows().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for &b in row {
                f.write_str(if b { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

impl FromStr for DyckMatrix {
    type Err = MatrixTextError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DyckMatrix::parse_text(s)
    }
}

/// `(n + 2) x k` view with zero rows at index `0` and `n + 1`.
#[derive(Debug, Clone, Copy)]
pub struct PaddedView<'a> {
    matrix: &'a DyckMatrix,
}

impl PaddedView<'_> {
    pub fn rows(&self) -> usize {
        self.matrix.rows + 2
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows() && col < self.cols(), "index out of view");
        if row == 0 || row == self.matrix.rows + 1 {
            false
        } else {
            self.matrix.get(row - 1, col)
        }
    }

    pub fn to_grid(&self) -> Vec<Vec<u8>> {
        (0..self.rows())
            .map(|i| (0..self.cols()).map(|j| u8::from(self.get(i, j))).collect())
            .collect()
    }
}
