//! Conditional probability tables `Pr[a, b | x, y]`.

use crate::error::{Error, Result};
use crate::game::{DeterministicStrategy, Scenario};

/// Default tolerance on `Σ_{a,b} Pr[a,b|x,y] = 1`.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct Behavior {
    scenario: Scenario,
    probs: Vec<f64>,
}

impl Behavior {
    /// Wraps a table in `(x, y, a, b)` order. Does not check normalization.
    pub fn new(scenario: Scenario, probs: Vec<f64>) -> Result<Self> {
        if probs.len() != scenario.table_len() {
            return Err(Error::DimensionMismatch(format!(
                "{} probabilities for a table of {}",
                probs.len(),
                scenario.table_len()
            )));
        }
        Ok(Behavior { scenario, probs })
    }

    pub fn from_fn(scenario: Scenario, mut f: impl FnMut(usize, usize, usize, usize) -> f64) -> Self {
        let probs = scenario.quadruples().map(|(x, y, a, b)| f(x, y, a, b)).collect();
        Behavior { scenario, probs }
    }

    /// Unstructured noise, `1 / (n_A·n_B)` everywhere.
    pub fn uniform(scenario: Scenario) -> Self {
        let p = 1.0 / (scenario.n_a * scenario.n_b) as f64;
        Behavior {
            scenario,
            probs: vec![p; scenario.table_len()],
        }
    }

    /// `δ_{a,a(x)} δ_{b,b(y)}`.
    pub fn from_strategy(scenario: Scenario, strategy: &DeterministicStrategy) -> Result<Self> {
        strategy.validate(&scenario)?;
        Ok(Self::from_fn(scenario, |x, y, a, b| {
            if strategy.alice(x) == a && strategy.bob(y) == b {
                1.0
            } else {
                0.0
            }
        }))
    }

    pub fn scenario(&self) -> Scenario {
        self.scenario
    }

    pub fn get(&self, x: usize, y: usize, a: usize, b: usize) -> f64 {
        self.probs[self.scenario.index(x, y, a, b)]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.probs
    }

    /// `λ·self + (1−λ)·other`.
    pub fn mixture(&self, other: &Behavior, lambda: f64) -> Result<Behavior> {
        if self.scenario != other.scenario {
            return Err(Error::DimensionMismatch("mixing behaviors of different scenarios".into()));
        }
        let probs = self
            .probs
            .iter()
            .zip(&other.probs)
            .map(|(p, q)| lambda * p + (1.0 - lambda) * q)
            .collect();
        Ok(Behavior {
            scenario: self.scenario,
            probs,
        })
    }

    /// Checks every `(x, y)` block sums to one and no entry is negative
    /// beyond `tolerance`.
    pub fn check_normalized(&self, tolerance: f64) -> Result<()> {
        let s = self.scenario;
        let block = s.n_a * s.n_b;
        for (k, chunk) in self.probs.chunks(block).enumerate() {
            let total: f64 = chunk.iter().sum();
            let negative = chunk.iter().any(|&p| p < -tolerance || !p.is_finite());
            if negative || (total - 1.0).abs() > tolerance {
                return Err(Error::Unnormalized {
                    x: k / s.m_b,
                    y: k % s.m_b,
                    total,
                });
            }
        }
        Ok(())
    }
}
