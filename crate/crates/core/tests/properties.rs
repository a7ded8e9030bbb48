mod common;

use std::collections::HashSet;

use proptest::prelude::*;

use dyckmat::convert::{check_window, get_dyck_word, get_matrix, get_matrix_from_reader};
use dyckmat::digraph::matrix_to_digraph;
use dyckmat::matrix::DyckMatrix;
use dyckmat::word::{enumerate_words, parse_word, Alphabet, DyckWord, Step, Symbol};

use common::{brute_force_words, naive_window_scan};

/// Random walk that never dips below zero, closed with the needed `D`s.
fn dyck_word(max_steps: usize) -> impl Strategy<Value = DyckWord> {
    prop::collection::vec(any::<bool>(), 0..max_steps).prop_map(|steps| {
        let mut h = 0usize;
        let mut symbols = Vec::new();
        for up in steps {
            if up || h == 0 {
                symbols.push(Symbol::X);
                h += 1;
            } else {
                symbols.push(Symbol::D);
                h -= 1;
            }
        }
        symbols.extend(std::iter::repeat_n(Symbol::D, h));
        DyckWord::from_symbols(symbols).unwrap()
    })
}

fn nonempty_dyck_word(max_steps: usize) -> impl Strategy<Value = DyckWord> {
    dyck_word(max_steps).prop_filter("non-empty", |w| !w.is_empty())
}

fn matrix_of(w: &DyckWord) -> DyckMatrix {
    get_matrix(w.symbols().iter().copied()).unwrap()
}

fn support(row: &[bool]) -> HashSet<usize> {
    row.iter()
        .enumerate()
        .filter_map(|(j, &b)| b.then_some(j))
        .collect()
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(w in dyck_word(60), a in 33u8..127, b in 33u8..127) {
        prop_assume!(a != b);
        let alphabet = Alphabet::new(char::from(a), char::from(b)).unwrap();
        prop_assert_eq!(parse_word(&w.render(&alphabet), &alphabet).unwrap(), w);
    }

    #[test]
    fn decomposition_concatenates_back(w in nonempty_dyck_word(60)) {
        let d = w.decompose().unwrap();
        prop_assert!(d.pairs().iter().all(|&(u, d)| u >= 1 && d >= 1));
        prop_assert_eq!(d.to_word(), w);
    }

    #[test]
    fn path_stays_above_diagonal(w in dyck_word(60)) {
        let mut north = 0;
        let mut east = 0;
        for s in w.to_path().steps() {
            match s {
                Step::North => north += 1,
                Step::East => east += 1,
            }
            prop_assert!(east <= north);
        }
        prop_assert_eq!((east, north), (w.semilength(), w.semilength()));
    }

    #[test]
    fn both_roundtrips(w in nonempty_dyck_word(120)) {
        let m = matrix_of(&w);
        prop_assert_eq!(m.cols(), w.semilength());
        let back = get_dyck_word(&m);
        prop_assert_eq!(&back, &w);
        prop_assert_eq!(matrix_of(&back), m);
    }

    #[test]
    fn rows_follow_the_peaks(w in nonempty_dyck_word(120)) {
        let m = matrix_of(&w);
        let pairs = w.decompose().unwrap().pairs().to_vec();
        prop_assert_eq!(m.rows(), pairs.len());
        let mut shared = 0;
        for (i, &(u, d)) in pairs.iter().enumerate() {
            let ones = m.row(i).iter().filter(|&&b| b).count();
            prop_assert_eq!(ones, shared + u);
            shared = shared + u - d;
        }
    }

    #[test]
    fn window_rows_are_valleys(w in nonempty_dyck_word(120)) {
        let m = matrix_of(&w);
        let view = m.padded_view();
        for i in 1..view.rows() {
            let emitted: Vec<Symbol> = (0..view.cols())
                .filter_map(|j| check_window(view.get(i - 1, j), view.get(i, j)))
                .collect();
            if i == 1 {
                prop_assert!(emitted.iter().all(|&s| s == Symbol::X));
            }
            let first_x = emitted.iter().position(|&s| s == Symbol::X).unwrap_or(emitted.len());
            prop_assert!(emitted[first_x..].iter().all(|&s| s == Symbol::X));
        }
    }

    #[test]
    fn window_scan_matches_oracle(w in nonempty_dyck_word(120)) {
        let m = matrix_of(&w);
        let scanned = naive_window_scan(&m.to_grid());
        let mut h = 0i64;
        for c in scanned.chars() {
            h += if c == 'x' { 1 } else { -1 };
            prop_assert!(h >= 0);
        }
        prop_assert_eq!(scanned, get_dyck_word(&m).to_string());
    }

    #[test]
    fn transitions_climb(w in nonempty_dyck_word(120)) {
        let m = matrix_of(&w);
        for i in 1..m.rows() {
            let t = m.row_transition(i).unwrap();
            prop_assert!(1 <= t.a && t.a <= t.b && t.b < t.c && t.c <= m.cols());
            if i + 1 < m.rows() {
                prop_assert_eq!(m.row_transition(i + 1).unwrap().b, t.c);
            }
        }
        prop_assert!(m.column_structure_check());
    }

    #[test]
    fn text_format_roundtrip(w in nonempty_dyck_word(80)) {
        let m = matrix_of(&w);
        prop_assert_eq!(m.to_text().parse::<DyckMatrix>().unwrap(), m.clone());
        let spaced: String = m
            .to_text()
            .lines()
            .map(|l| l.chars().map(String::from).collect::<Vec<_>>().join(" ") + "\n")
            .collect();
        prop_assert_eq!(spaced.parse::<DyckMatrix>().unwrap(), m);
    }

    #[test]
    fn reader_matches_iterator(w in nonempty_dyck_word(80)) {
        let text = format!("{w}\n");
        let m = get_matrix_from_reader(text.as_bytes(), &Alphabet::CANONICAL).unwrap();
        prop_assert_eq!(m, matrix_of(&w));
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=8 {
        let listed: Vec<String> = enumerate_words(n).map(|w| w.to_string()).collect();
        assert_eq!(listed, brute_force_words(n), "n = {n}");
    }
}

#[test]
fn matrices_are_distinct_up_to_eight() {
    for n in 1..=8 {
        let mut seen = HashSet::new();
        for w in enumerate_words(n) {
            assert!(seen.insert(matrix_of(&w)), "{w}");
        }
        assert_eq!(seen.len(), brute_force_words(n).len());
    }
}

#[test]
fn row_supports_form_an_antichain() {
    for n in 1..=8 {
        for w in enumerate_words(n) {
            let m = matrix_of(&w);
            let rows: Vec<HashSet<usize>> = m.iter_rows().map(support).collect();
            for i in 0..rows.len() {
                for j in 0..rows.len() {
                    assert!(i == j || !rows[i].is_subset(&rows[j]), "{w}: rows {i}, {j}");
                }
            }
        }
    }
}

#[test]
fn digraphs_of_all_small_words() {
    for n in 1..=8 {
        for w in enumerate_words(n) {
            let m = matrix_of(&w);
            let g = matrix_to_digraph(&m);
            assert!(g.verify_family().passes(), "{w}");
            assert!(g.is_balanced(), "{w}");
            assert_eq!(g.to_matrix().unwrap(), m, "{w}");
            assert_eq!(g.edges().count(), m.ones());
            assert_eq!(g.vertex_count(), n);
            assert_eq!(g.cycle_lengths().iter().sum::<usize>(), m.ones());
            assert_eq!(g.cycles().len(), w.decompose().unwrap().peak_count());
        }
    }
}
