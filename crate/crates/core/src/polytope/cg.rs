use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::game::{DeterministicStrategy, Scenario};
use crate::rational::Rational;

/// `m_A·m_B·(n_A−1)(n_B−1) + m_A(n_A−1) + m_B(n_B−1)`.
pub fn cg_dimension(params: &Scenario) -> usize {
    CgLayout::new(*params).dimension()
}

/// Component ordering: Alice marginals `Pr[a|x]` (x-major, `a < n_A−1`), Bob
/// marginals, then joints `Pr[a,b|x,y]` for `a < n_A−1`, `b < n_B−1` in
/// `(x, y, a, b)` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CgLayout {
    scenario: Scenario,
}

impl CgLayout {
    pub fn new(scenario: Scenario) -> Self {
        CgLayout { scenario }
    }

    fn ka(&self) -> usize {
        self.scenario.n_a - 1
    }

    fn kb(&self) -> usize {
        self.scenario.n_b - 1
    }

    pub fn alice_len(&self) -> usize {
        self.scenario.m_a * self.ka()
    }

    pub fn bob_len(&self) -> usize {
        self.scenario.m_b * self.kb()
    }

    pub fn dimension(&self) -> usize {
        self.alice_len() + self.bob_len() + self.scenario.m_a * self.scenario.m_b * self.ka() * self.kb()
    }

    /// Requires `a < n_A − 1`.
    pub fn alice(&self, x: usize, a: usize) -> usize {
        x * self.ka() + a
    }

    pub fn bob(&self, y: usize, b: usize) -> usize {
        self.alice_len() + y * self.kb() + b
    }

    pub fn joint(&self, x: usize, y: usize, a: usize, b: usize) -> usize {
        self.alice_len() + self.bob_len() + ((x * self.scenario.m_b + y) * self.ka() + a) * self.kb() + b
    }
}

/// A no-signalling behavior in Collins–Gisin coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollinsGisinVector {
    scenario: Scenario,
    entries: Vec<Rational>,
}

impl CollinsGisinVector {
    pub fn new(scenario: Scenario, entries: Vec<Rational>) -> Result<Self> {
        let d = cg_dimension(&scenario);
        if entries.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for dimension {d}",
                entries.len()
            )));
        }
        Ok(CollinsGisinVector { scenario, entries })
    }

    /// Projects a full table in `(x, y, a, b)` order. Marginals are read off
    /// `y = 0` and `x = 0`; the table is assumed no-signalling.
    pub fn from_full_probabilities(scenario: Scenario, table: &[Rational]) -> Result<Self> {
        if table.len() != scenario.table_len() {
            return Err(Error::DimensionMismatch(format!(
                "{} probabilities for a table of {}",
                table.len(),
                scenario.table_len()
            )));
        }
        let layout = CgLayout::new(scenario);
        let mut entries = vec![Rational::zero(); layout.dimension()];
        let p = |x, y, a, b| table[scenario.index(x, y, a, b)];
        for x in 0..scenario.m_a {
            for a in 0..layout.ka() {
                entries[layout.alice(x, a)] = (0..scenario.n_b).map(|b| p(x, 0, a, b)).sum();
            }
        }
        for y in 0..scenario.m_b {
            for b in 0..layout.kb() {
                entries[layout.bob(y, b)] = (0..scenario.n_a).map(|a| p(0, y, a, b)).sum();
            }
        }
        for x in 0..scenario.m_a {
            for y in 0..scenario.m_b {
                for a in 0..layout.ka() {
                    for b in 0..layout.kb() {
                        entries[layout.joint(x, y, a, b)] = p(x, y, a, b);
                    }
                }
            }
        }
        Ok(CollinsGisinVector { scenario, entries })
    }

    pub fn scenario(&self) -> Scenario {
        self.scenario
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Reconstructs `Pr[a,b|x,y]`, filling the dropped last outcomes from
    /// normalization.
    pub fn to_full_probabilities(&self) -> Vec<Rational> {
        let s = self.scenario;
        let layout = CgLayout::new(s);
        let (la, lb) = (s.n_a - 1, s.n_b - 1);
        let pa = |x, a| -> Rational {
            if a < la {
                self.entries[layout.alice(x, a)]
            } else {
                Rational::one() - (0..la).map(|a| self.entries[layout.alice(x, a)]).sum::<Rational>()
            }
        };
        let pb = |y, b| -> Rational {
            if b < lb {
                self.entries[layout.bob(y, b)]
            } else {
                Rational::one() - (0..lb).map(|b| self.entries[layout.bob(y, b)]).sum::<Rational>()
            }
        };
        // joint with the last outcome of either party completed from marginals
        let joint = |x, y, a, b| -> Rational {
            match (a < la, b < lb) {
                (true, true) => self.entries[layout.joint(x, y, a, b)],
                (true, false) => pa(x, a) - (0..lb).map(|b| self.entries[layout.joint(x, y, a, b)]).sum::<Rational>(),
                (false, true) => pb(y, b) - (0..la).map(|a| self.entries[layout.joint(x, y, a, b)]).sum::<Rational>(),
                (false, false) => {
                    let mut r = Rational::one();
                    for a in 0..la {
                        r -= pa(x, a);
                    }
                    for b in 0..lb {
                        r -= pb(y, b);
                    }
                    for a in 0..la {
                        for b in 0..lb {
                            r += self.entries[layout.joint(x, y, a, b)];
                        }
                    }
                    r
                }
            }
        };
        s.quadruples().map(|(x, y, a, b)| joint(x, y, a, b)).collect()
    }

    /// Entries as integers, if all are.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.entries
            .iter()
            .map(|r| r.is_integer().then(|| r.to_integer()))
            .collect()
    }
}

/// Kronecker-delta marginals and joints of a deterministic strategy.
pub fn strategy_to_cg(strategy: &DeterministicStrategy, params: &Scenario) -> Result<CollinsGisinVector> {
    strategy.validate(params)?;
    let layout = CgLayout::new(*params);
    let mut entries = vec![Rational::zero(); layout.dimension()];
    for_each_one(&layout, strategy.a_map(), strategy.b_map(), |i| entries[i] = Rational::one());
    Ok(CollinsGisinVector {
        scenario: *params,
        entries,
    })
}

/// Calls `f` on every coordinate equal to one for the strategy `(a_map, b_map)`.
pub(crate) fn for_each_one(layout: &CgLayout, a_map: &[usize], b_map: &[usize], mut f: impl FnMut(usize)) {
    let (la, lb) = (layout.ka(), layout.kb());
    for (x, &a) in a_map.iter().enumerate() {
        if a < la {
            f(layout.alice(x, a));
        }
    }
    for (y, &b) in b_map.iter().enumerate() {
        if b < lb {
            f(layout.bob(y, b));
        }
    }
    for (x, &a) in a_map.iter().enumerate() {
        for (y, &b) in b_map.iter().enumerate() {
            if a < la && b < lb {
                f(layout.joint(x, y, a, b));
            }
        }
    }
}
