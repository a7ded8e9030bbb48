//! Dyck words, Dyck matrices and ordered Eulerian digraphs.
//!
//! A Dyck word of semilength `k` with `n` peaks corresponds to an `n x k`
//! binary matrix whose rows are the vertex sets of `n` directed cycles on
//! `k` vertices. [`convert`] implements both directions of that
//! correspondence, [`matrix`] validates matrices, and [`digraph`] turns
//! matrices into labelled cycle systems and back.

pub mod cli;
pub mod convert;
pub mod digraph;
pub mod matrix;
pub mod word;

pub use convert::{check_window, get_dyck_word, get_matrix, ConvertError, MatrixBuilder};
pub use digraph::{digraph_to_matrix, matrix_to_digraph, FamilyReport, LabelledEulerianDigraph};
pub use matrix::{validate_matrix, DyckMatrix, MatrixError};
pub use word::{enumerate_words, parse_word, Alphabet, DyckWord, Symbol, WordError};
