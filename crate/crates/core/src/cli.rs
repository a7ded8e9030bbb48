//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when the input is not a Dyck word or Dyck
//! matrix (or a check fails), 2 on usage and I/O errors. Payload goes to the
//! output sink, diagnostics to the error stream.

use std::collections::HashSet;
use std::fs::File;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::convert::{get_dyck_word, get_matrix, get_matrix_from_reader, ConvertError};
use crate::digraph::matrix_to_digraph;
use crate::matrix::DyckMatrix;
use crate::word::{catalan, enumerate_words, parse_word, Alphabet, DyckWord};

pub const DEFAULT_SAFETY_LIMIT: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "dyckmat", version, about = "Dyck words, Dyck matrices and their Eulerian digraphs")]
pub struct Cli {
    /// Two characters standing for x and D in word input, e.g. "()".
    #[arg(long, global = true, value_parser = parse_alphabet, default_value = "xD")]
    pub alphabet: Alphabet,
    /// Read input from this file instead of standard input.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Largest semilength accepted by enumerate and roundtrip-check.
    #[arg(long, global = true, default_value_t = DEFAULT_SAFETY_LIMIT)]
    pub limit: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that the input is a Dyck word and print its semilength.
    Validate,
    /// Convert a Dyck word into its Dyck matrix.
    ToMatrix,
    /// Convert a Dyck matrix into its Dyck word.
    ToWord,
    /// Print the digraph of a Dyck word or Dyck matrix in DOT format.
    ToDigraph,
    /// List every Dyck word of the given semilength.
    Enumerate {
        /// Semilength.
        n: usize,
    },
    /// Check both conversions and all invariants for every semilength up to --max-n.
    RoundtripCheck {
        #[arg(long)]
        max_n: usize,
    },
}

fn parse_alphabet(s: &str) -> Result<Alphabet, String> {
    let chars: Vec<char> = s.chars().collect();
    let [x, d] = chars[..] else {
        return Err("expected exactly two characters".into());
    };
    if !chars.iter().all(|c| c.is_ascii_graphic()) {
        return Err("alphabet characters must be printable ASCII".into());
    }
    Alphabet::new(x, d).map_err(|e| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Usage(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<ConvertError> for Failure {
    fn from(e: ConvertError) -> Self {
        match e {
            ConvertError::Io(e) => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

/// Runs a parsed command against the given streams and returns the exit code.
pub fn run(cli: &Cli, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut input: Box<dyn Read + '_> = match &cli.input {
        Some(path) => match File::open(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                let _ = writeln!(stderr, "error: {}: {e}", path.display());
                return 2;
            }
        },
        None => Box::new(stdin),
    };
    let mut buffer = Vec::new();
    let result = execute(cli, &mut input, &mut buffer, stderr);
    let code = match result {
        Ok(code) => code,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 2;
        }
    };
    let written = match &cli.output {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(&buffer)),
        None => stdout.write_all(&buffer).and_then(|_| stdout.flush()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 2;
    }
    code
}

fn execute(
    cli: &Cli,
    input: &mut dyn Read,
    out: &mut Vec<u8>,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    match &cli.command {
        Command::Validate => {
            let text = read_text(input)?;
            let word = parse_word(strip_newline(&text), &cli.alphabet)
                .map_err(|e| Failure::Domain(e.to_string()))?;
            writeln!(out, "OK {}", word.semilength())?;
        }
        Command::ToMatrix => {
            let m = get_matrix_from_reader(input, &cli.alphabet)?;
            writeln!(out, "{m}")?;
        }
        Command::ToWord => {
            let text = read_text(input)?;
            let m = DyckMatrix::parse_text(&text).map_err(|e| Failure::Domain(e.to_string()))?;
            writeln!(out, "{}", get_dyck_word(&m))?;
        }
        Command::ToDigraph => {
            let text = read_text(input)?;
            let m = if looks_like_matrix(&text, &cli.alphabet) {
                DyckMatrix::parse_text(&text).map_err(|e| Failure::Domain(e.to_string()))?
            } else {
                let word = parse_word(strip_newline(&text), &cli.alphabet)
                    .map_err(|e| Failure::Domain(e.to_string()))?;
                get_matrix(word.symbols().iter().copied())
                    .map_err(|e| Failure::Domain(e.to_string()))?
            };
            write!(out, "{}", matrix_to_digraph(&m).to_dot())?;
        }
        Command::Enumerate { n } => {
            check_bound(*n, 0, cli.limit)?;
            for w in enumerate_words(*n) {
                writeln!(out, "{w}")?;
            }
        }
        Command::RoundtripCheck { max_n } => {
            check_bound(*max_n, 1, cli.limit)?;
            let mut all_pass = true;
            for n in 1..=*max_n {
                let report = check_semilength(n);
                let status = if report.witness.is_none() { "pass" } else { "FAIL" };
                writeln!(out, "n={n} words={} {status}", report.words)?;
                if let Some(w) = report.witness {
                    writeln!(err, "counterexample at n={n}: {w}")?;
                    all_pass = false;
                }
            }
            writeln!(out, "{}", if all_pass { "all pass" } else { "FAILED" })?;
            return Ok(if all_pass { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn check_bound(n: usize, min: usize, limit: usize) -> Result<(), Failure> {
    if n < min || n > limit {
        return Err(Failure::Usage(format!(
            "semilength {n} outside {min}..={limit}"
        )));
    }
    Ok(())
}

fn read_text(input: &mut dyn Read) -> Result<String, Failure> {
    let mut bytes = Vec::new();
    input.read_to_end(&mut bytes)?;
    Ok(String::from_utf8_lossy(&bytes).into_owned())
}

fn strip_newline(s: &str) -> &str {
    s.strip_suffix('\n').unwrap_or(s)
}

/// Matrix text uses only `0`, `1`, spaces and newlines. When the word
/// alphabet is itself made of `0` and `1`, input is always a word.
fn looks_like_matrix(text: &str, alphabet: &Alphabet) -> bool {
    let binary_alphabet = ['0', '1']
        .iter()
        .any(|&c| alphabet.symbol(c).is_some());
    !binary_alphabet
        && !text.is_empty()
        && text.chars().all(|c| matches!(c, '0' | '1' | ' ' | '\n'))
}

/// Outcome of checking every word of one semilength.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemilengthReport {
    pub words: usize,
    /// First failing word and the broken property, if any.
    pub witness: Option<String>,
}

/// Runs both conversions on every Dyck word of semilength `n` and checks
/// matrix validity, the column shape, the family conditions, degree
/// balance, injectivity and the word count.
pub fn check_semilength(n: usize) -> SemilengthReport {
    let mut words = 0;
    let mut seen = HashSet::new();
    let fail = |words, msg: String| SemilengthReport {
        words,
        witness: Some(msg),
    };
    for w in enumerate_words(n) {
        words += 1;
        if let Err(msg) = check_word(&w) {
            return fail(words, format!("{w}: {msg}"));
        }
        let m = get_matrix(w.symbols().iter().copied()).expect("checked above");
        if !seen.insert(m) {
            return fail(words, format!("{w}: matrix already produced by another word"));
        }
    }
    if words as u128 != catalan(n) {
        return fail(words, format!("expected {} words", catalan(n)));
    }
    SemilengthReport {
        words,
        witness: None,
    }
}

fn check_word(w: &DyckWord) -> Result<(), String> {
    let m = get_matrix(w.symbols().iter().copied()).map_err(|e| e.to_string())?;
    DyckMatrix::from_grid(&m.to_grid()).map_err(|e| e.to_string())?;
    if m.cols() != w.semilength() {
        return Err(format!("{} columns", m.cols()));
    }
    if !m.column_structure_check() {
        return Err("column structure".into());
    }
    let back = get_dyck_word(&m);
    if &back != w {
        return Err(format!("word roundtrip gave {back}"));
    }
    if get_matrix(back.symbols().iter().copied()).ok().as_ref() != Some(&m) {
        return Err("matrix roundtrip".into());
    }
    let g = matrix_to_digraph(&m);
    let report = g.verify_family();
    if let Some(v) = report.violations.first() {
        return Err(v.to_string());
    }
    if !g.is_balanced() {
        return Err("unbalanced degrees".into());
    }
    if g.to_matrix().ok().as_ref() != Some(&m) {
        return Err("digraph roundtrip".into());
    }
    Ok(())
}
