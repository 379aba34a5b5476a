//! Independent oracles shared by the integration tests. They deliberately
//! avoid the library's own enumeration and decoding helpers.
#![allow(dead_code)]

use nalgebra::DMatrix;

/// Calls `f` on every map `0..len → 0..radix`.
pub fn for_each_map(len: usize, radix: usize, mut f: impl FnMut(&[usize])) {
    let total = radix.pow(len as u32);
    let mut map = vec![0; len];
    for mut k in 0..total {
        for slot in map.iter_mut().rev() {
            *slot = k % radix;
            k /= radix;
        }
        f(&map);
    }
}

/// Row bits of Alice's eight-valued output, most significant first.
fn bits8(v: usize) -> [usize; 3] {
    [(v >> 2) & 1, (v >> 1) & 1, v & 1]
}

/// All three Magic Square requirements over eight outputs per party.
pub fn magic_square_full8(x: usize, y: usize, a: usize, b: usize) -> bool {
    let (ra, rb) = (bits8(a), bits8(b));
    ra.iter().sum::<usize>() % 2 == 0 && rb.iter().sum::<usize>() % 2 == 1 && ra[y] == rb[x]
}

/// Four-valued codes carry the first two bits; the third is the parity
/// completion (even for Alice, odd for Bob).
pub fn magic_square_restricted4(x: usize, y: usize, a: usize, b: usize) -> bool {
    let ra = [a >> 1, a & 1, (a >> 1) ^ (a & 1)];
    let rb = [b >> 1, b & 1, (b >> 1) ^ (b & 1) ^ 1];
    ra[y] == rb[x]
}

pub fn wins(
    m_a: usize,
    m_b: usize,
    a_map: &[usize],
    b_map: &[usize],
    rule: impl Fn(usize, usize, usize, usize) -> bool,
) -> usize {
    let mut w = 0;
    for (x, &a) in a_map.iter().enumerate().take(m_a) {
        for (y, &b) in b_map.iter().enumerate().take(m_b) {
            w += rule(x, y, a, b) as usize;
        }
    }
    w
}

/// Maximum number of won input pairs over all deterministic strategies.
pub fn brute_force_best(
    dims: (usize, usize, usize, usize),
    rule: impl Fn(usize, usize, usize, usize) -> bool + Copy,
) -> usize {
    let (m_a, m_b, n_a, n_b) = dims;
    let mut best = 0;
    for_each_map(m_a, n_a, |a_map| {
        for_each_map(m_b, n_b, |b_map| {
            best = best.max(wins(m_a, m_b, a_map, b_map, rule));
        })
    });
    best
}

pub fn brute_force_winnable(
    dims: (usize, usize, usize, usize),
    rule: impl Fn(usize, usize, usize, usize) -> bool + Copy,
) -> bool {
    brute_force_best(dims, rule) == dims.0 * dims.1
}

/// Rank by singular values above `1e-8 · max(1, σ_max)`.
pub fn float_rank(rows: &[Vec<i64>], cols: usize) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    let m = DMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j] as f64);
    let sv = m.singular_values();
    let top = sv.iter().cloned().fold(0.0, f64::max);
    sv.iter().filter(|&&s| s > 1e-8 * top.max(1.0)).count()
}
