//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's validation or conversion code.

#![allow(dead_code, clippy::needless_range_loop)]

/// Every string of length `2n` over `{x, D}` whose prefixes never have more
/// `D`s than `x`s and whose counts agree, by filtering all `4^n` strings.
/// Ordered by the bit pattern read with `x = 0`, i.e. lexicographically.
pub fn brute_force_words(n: usize) -> Vec<String> {
    let len = 2 * n;
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << len) {
        let s: String = (0..len)
            .map(|i| if bits >> (len - 1 - i) & 1 == 0 { 'x' } else { 'D' })
            .collect();
        let mut h = 0i64;
        let mut ok = true;
        for c in s.chars() {
            h += if c == 'x' { 1 } else { -1 };
            if h < 0 {
                ok = false;
                break;
            }
        }
        if ok && h == 0 {
            out.push(s);
        }
    }
    out
}

/// Literal reading of the Dyck-matrix conditions, quantifier by quantifier,
/// using 1-based indices, plus the requirement that no column is all zero.
pub fn naive_is_dyck_matrix(g: &[Vec<u8>]) -> bool {
    let n = g.len();
    if n == 0 || g[0].is_empty() {
        return false;
    }
    let k = g[0].len();
    if g.iter().any(|r| r.len() != k || r.iter().any(|&v| v > 1)) {
        return false;
    }
    let m = |i: usize, j: usize| g[i - 1][j - 1];

    // M1
    let m1 = (1..=k).any(|h| (1..=k).all(|j| (m(1, j) == 1) == (j <= h)));
    if !m1 {
        return false;
    }

    // M2
    for i in 1..n {
        let mut found = false;
        for a in 1..=k {
            let a_smallest = m(i, a) == 1
                && m(i + 1, a) == 0
                && (1..a).all(|j| !(m(i, j) == 1 && m(i + 1, j) == 0));
            if !a_smallest {
                continue;
            }
            for b in a..=k {
                let b_greatest = m(i, b) == 1 && (b + 1..=k).all(|j| m(i, j) == 0);
                if !b_greatest {
                    continue;
                }
                for c in b + 1..=k {
                    let c_greatest = m(i + 1, c) == 1 && (c + 1..=k).all(|j| m(i + 1, j) == 0);
                    if !c_greatest {
                        continue;
                    }
                    let m21 = (1..a).all(|j| m(i + 1, j) == m(i, j));
                    let m22 = (a..=b).all(|j| m(i + 1, j) == 0);
                    let m23 = (b + 1..=c).all(|j| m(i + 1, j) == 1);
                    let m24 = (c + 1..=k).all(|j| m(i + 1, j) == 0);
                    if m21 && m22 && m23 && m24 {
                        found = true;
                    }
                }
            }
        }
        if !found {
            return false;
        }
    }

    (1..=k).all(|j| (1..=n).any(|i| m(i, j) == 1))
}

/// All `rows x cols` 0/1 grids, in counting order.
pub fn all_grids(rows: usize, cols: usize) -> impl Iterator<Item = Vec<Vec<u8>>> {
    let cells = rows * cols;
    (0u64..(1u64 << cells)).map(move |bits| {
        (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|c| (bits >> (r * cols + c) & 1) as u8)
                    .collect()
            })
            .collect()
    })
}

/// Hand-rolled window scan over a raw grid framed by zero rows.
pub fn naive_window_scan(g: &[Vec<u8>]) -> String {
    let k = g[0].len();
    let zero = vec![0u8; k];
    let mut framed = vec![zero.clone()];
    framed.extend(g.iter().cloned());
    framed.push(zero);
    let mut s = String::new();
    for i in 1..framed.len() {
        for j in 0..k {
            match (framed[i - 1][j], framed[i][j]) {
                (1, 0) => s.push('D'),
                (0, 1) => s.push('x'),
                _ => {}
            }
        }
    }
    s
}

/// Ordered cycle systems with at most `max_cycles` cycles on at most
/// `max_vertices` vertices, labelled in order of first appearance
/// (1, 2, 3, ...). `keep` is called on every non-empty prefix; returning
/// false prunes all of its extensions. `visit` sees every kept system.
pub fn for_each_cycle_system(
    max_cycles: usize,
    max_vertices: usize,
    keep: &mut dyn FnMut(&[Vec<usize>]) -> bool,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    let mut system = Vec::new();
    extend_system(&mut system, 0, max_cycles, max_vertices, keep, visit);
}

fn extend_system(
    system: &mut Vec<Vec<usize>>,
    used: usize,
    max_cycles: usize,
    max_vertices: usize,
    keep: &mut dyn FnMut(&[Vec<usize>]) -> bool,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if system.len() == max_cycles {
        return;
    }
    let mut cycle = Vec::new();
    extend_cycle(system, &mut cycle, used, max_cycles, max_vertices, keep, visit);
}

fn extend_cycle(
    system: &mut Vec<Vec<usize>>,
    cycle: &mut Vec<usize>,
    used: usize,
    max_cycles: usize,
    max_vertices: usize,
    keep: &mut dyn FnMut(&[Vec<usize>]) -> bool,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if !cycle.is_empty() {
        system.push(cycle.clone());
        if keep(system) {
            visit(system);
            extend_system(system, used, max_cycles, max_vertices, keep, visit);
        }
        system.pop();
    }
    // old vertices not yet in this cycle, or the next fresh label
    for v in 1..=(used + 1).min(max_vertices) {
        if cycle.contains(&v) {
            continue;
        }
        cycle.push(v);
        extend_cycle(system, cycle, used.max(v), max_cycles, max_vertices, keep, visit);
        cycle.pop();
    }
}
