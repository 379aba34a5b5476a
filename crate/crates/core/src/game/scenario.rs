use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `m_A·m_B·n_A·n_B` accepted for a dense table.
pub const MAX_TABLE_ENTRIES: usize = 1 << 24;

/// Input and output cardinalities of a bipartite scenario: Alice answers
/// `a ∈ 0..n_a` to `x ∈ 0..m_a`, Bob answers `b ∈ 0..n_b` to `y ∈ 0..m_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Scenario {
    pub m_a: usize,
    pub m_b: usize,
    pub n_a: usize,
    pub n_b: usize,
}

impl Scenario {
    pub fn new(m_a: usize, m_b: usize, n_a: usize, n_b: usize) -> Result<Self> {
        if m_a == 0 || m_b == 0 || n_a == 0 || n_b == 0 {
            return Err(Error::InvalidScenario(format!(
                "all cardinalities must be at least 1, got ({m_a}, {m_b}, {n_a}, {n_b})"
            )));
        }
        let len = m_a
            .checked_mul(m_b)
            .and_then(|v| v.checked_mul(n_a))
            .and_then(|v| v.checked_mul(n_b));
        match len {
            Some(len) if len <= MAX_TABLE_ENTRIES => Ok(Scenario { m_a, m_b, n_a, n_b }),
            _ => Err(Error::InvalidScenario(format!(
                "({m_a}, {m_b}, {n_a}, {n_b}) exceeds {MAX_TABLE_ENTRIES} table entries"
            ))),
        }
    }

    /// Same counts for both parties.
    pub fn symmetric(m: usize, n: usize) -> Result<Self> {
        Self::new(m, m, n, n)
    }

    pub fn input_pairs(&self) -> usize {
        self.m_a * self.m_b
    }

    pub fn table_len(&self) -> usize {
        self.m_a * self.m_b * self.n_a * self.n_b
    }

    #[inline]
    pub fn index(&self, x: usize, y: usize, a: usize, b: usize) -> usize {
        ((x * self.m_b + y) * self.n_a + a) * self.n_b + b
    }

    pub fn quadruple(&self, index: usize) -> (usize, usize, usize, usize) {
        let b = index % self.n_b;
        let rest = index / self.n_b;
        let a = rest % self.n_a;
        let rest = rest / self.n_a;
        (rest / self.m_b, rest % self.m_b, a, b)
    }

    /// All `(x, y, a, b)` in table order.
    pub fn quadruples(&self) -> impl Iterator<Item = (usize, usize, usize, usize)> {
        let s = *self;
        (0..s.table_len()).map(move |i| s.quadruple(i))
    }

    pub fn check_quadruple(&self, x: usize, y: usize, a: usize, b: usize) -> Result<()> {
        if x >= self.m_a || y >= self.m_b || a >= self.n_a || b >= self.n_b {
            return Err(Error::OutOfRange(format!(
                "({x}, {y}, {a}, {b}) outside ({}, {}, {}, {})",
                self.m_a, self.m_b, self.n_a, self.n_b
            )));
        }
        Ok(())
    }

    /// `n_A^m_A · n_B^m_B`.
    pub fn strategy_count(&self) -> BigUint {
        power(self.n_a, self.m_a) * power(self.n_b, self.m_b)
    }
}

fn power(base: usize, exp: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    let base = BigUint::from(base);
    for _ in 0..exp {
        acc *= &base;
    }
    acc
}

/// Number of deterministic strategies, `n_A^m_A · n_B^m_B`, exactly.
pub fn count_deterministic(m_a: usize, m_b: usize, n_a: usize, n_b: usize) -> Result<BigUint> {
    if m_a == 0 || m_b == 0 || n_a == 0 || n_b == 0 {
        return Err(Error::InvalidScenario(
            "all cardinalities must be at least 1".to_string(),
        ));
    }
    Ok(power(n_a, m_a) * power(n_b, m_b))
}
