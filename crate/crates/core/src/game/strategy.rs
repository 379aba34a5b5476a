use serde::{Deserialize, Serialize};

use super::Scenario;
use crate::error::{Error, Result};

/// A pair of output tables, `x ↦ a(x)` and `y ↦ b(y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DeterministicStrategy {
    a_map: Vec<usize>,
    b_map: Vec<usize>,
}

impl DeterministicStrategy {
    pub fn new(a_map: Vec<usize>, b_map: Vec<usize>) -> Self {
        DeterministicStrategy { a_map, b_map }
    }

    /// Both parties always answer the given outputs.
    pub fn constant(scenario: &Scenario, a: usize, b: usize) -> Self {
        Self::new(vec![a; scenario.m_a], vec![b; scenario.m_b])
    }

    pub fn a_map(&self) -> &[usize] {
        &self.a_map
    }

    pub fn b_map(&self) -> &[usize] {
        &self.b_map
    }

    pub fn alice(&self, x: usize) -> usize {
        self.a_map[x]
    }

    pub fn bob(&self, y: usize) -> usize {
        self.b_map[y]
    }

    pub fn validate(&self, scenario: &Scenario) -> Result<()> {
        if self.a_map.len() != scenario.m_a || self.b_map.len() != scenario.m_b {
            return Err(Error::StrategyMismatch(format!(
                "maps of length ({}, {}) for {} x {} inputs",
                self.a_map.len(),
                self.b_map.len(),
                scenario.m_a,
                scenario.m_b
            )));
        }
        if let Some((x, a)) = self.a_map.iter().enumerate().find(|(_, &a)| a >= scenario.n_a) {
            return Err(Error::StrategyMismatch(format!(
                "a({x}) = {a} but n_A = {}",
                scenario.n_a
            )));
        }
        if let Some((y, b)) = self.b_map.iter().enumerate().find(|(_, &b)| b >= scenario.n_b) {
            return Err(Error::StrategyMismatch(format!(
                "b({y}) = {b} but n_B = {}",
                scenario.n_b
            )));
        }
        Ok(())
    }
}

/// Odometer over all maps `0..len → 0..radix` in lexicographic order, the
/// first position most significant.
#[derive(Debug, Clone)]
pub struct OutputMaps {
    radix: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl OutputMaps {
    pub fn new(len: usize, radix: usize) -> Self {
        OutputMaps {
            radix,
            current: vec![0; len],
            started: false,
            done: radix == 0,
        }
    }

    pub fn next_map(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        for digit in self.current.iter_mut().rev() {
            *digit += 1;
            if *digit < self.radix {
                return Some(&self.current);
            }
            *digit = 0;
        }
        self.done = true;
        None
    }
}

/// Every deterministic strategy of a scenario, lexicographic in
/// `(a_map, b_map)`.
#[derive(Debug, Clone)]
pub struct StrategyIter {
    scenario: Scenario,
    alice: OutputMaps,
    bob: OutputMaps,
    a_map: Option<Vec<usize>>,
}

impl StrategyIter {
    pub fn new(scenario: Scenario) -> Self {
        let mut alice = OutputMaps::new(scenario.m_a, scenario.n_a);
        let a_map = alice.next_map().map(<[usize]>::to_vec);
        StrategyIter {
            scenario,
            alice,
            bob: OutputMaps::new(scenario.m_b, scenario.n_b),
            a_map,
        }
    }
}

impl Iterator for StrategyIter {
    type Item = DeterministicStrategy;

    fn next(&mut self) -> Option<DeterministicStrategy> {
        loop {
            let a_map = self.a_map.as_ref()?;
            if let Some(b_map) = self.bob.next_map() {
                return Some(DeterministicStrategy::new(a_map.clone(), b_map.to_vec()));
            }
            self.a_map = self.alice.next_map().map(<[usize]>::to_vec);
            self.bob = OutputMaps::new(self.scenario.m_b, self.scenario.n_b);
        }
    }
}
