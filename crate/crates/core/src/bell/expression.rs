use num_traits::{CheckedAdd, CheckedMul, Zero};
use serde::{Deserialize, Serialize};

use crate::behavior::{Behavior, NORMALIZATION_TOLERANCE};
use crate::error::{Error, Result};
use crate::game::{
    magic_square_game, DeterministicStrategy, GameRelation, MagicSquareEncoding, Scenario,
};
use crate::rational::{to_f64, Rational};

/// `Σ c(x,y,a,b) Pr[a,b|x,y] ≤ local_bound`, coefficients dense in table order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellExpression {
    scenario: Scenario,
    coefficients: Vec<Rational>,
    local_bound: Rational,
}

impl BellExpression {
    pub fn zero(scenario: Scenario, local_bound: Rational) -> Self {
        BellExpression {
            scenario,
            coefficients: vec![Rational::zero(); scenario.table_len()],
            local_bound,
        }
    }

    /// Coefficient one on every winning quadruple: the expression is the sum
    /// of the per-input success probabilities.
    pub fn from_game(game: &GameRelation, local_bound: Rational) -> Self {
        let mut expr = Self::zero(game.scenario(), local_bound);
        for (x, y, a, b) in game.winning_quadruples() {
            let i = expr.scenario.index(x, y, a, b);
            expr.coefficients[i] = Rational::from_integer(1);
        }
        expr
    }

    pub fn scenario(&self) -> Scenario {
        self.scenario
    }

    pub fn local_bound(&self) -> Rational {
        self.local_bound
    }

    pub fn with_bound(mut self, local_bound: Rational) -> Self {
        self.local_bound = local_bound;
        self
    }

    /// The same coefficients in a scenario with at least as many inputs and
    /// outputs; new entries are zero.
    pub fn embedded_in(&self, scenario: Scenario) -> Result<Self> {
        let s = self.scenario;
        if scenario.m_a < s.m_a || scenario.m_b < s.m_b || scenario.n_a < s.n_a || scenario.n_b < s.n_b {
            return Err(Error::DimensionMismatch(format!("cannot embed {s:?} into {scenario:?}")));
        }
        let mut out = Self::zero(scenario, self.local_bound);
        for ((x, y, a, b), c) in self.nonzero() {
            out.coefficients[scenario.index(x, y, a, b)] = c;
        }
        Ok(out)
    }

    pub fn coefficient(&self, x: usize, y: usize, a: usize, b: usize) -> Rational {
        self.coefficients[self.scenario.index(x, y, a, b)]
    }

    pub fn set_coefficient(&mut self, x: usize, y: usize, a: usize, b: usize, value: Rational) -> Result<()> {
        self.scenario.check_quadruple(x, y, a, b)?;
        let i = self.scenario.index(x, y, a, b);
        self.coefficients[i] = value;
        Ok(())
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Non-zero coefficients in table order.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize, usize), Rational)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.scenario.quadruple(i), *c))
    }

    /// Coefficients and bound scaled by the common denominator.
    pub fn integer_form(&self) -> Result<IntegerForm> {
        let mut denom: i128 = 1;
        for r in self.coefficients.iter().chain(std::iter::once(&self.local_bound)) {
            denom = lcm(denom, *r.denom() as i128).ok_or(Error::Overflow)?;
        }
        let scale = |r: &Rational| -> Result<i128> {
            (*r.numer() as i128)
                .checked_mul(denom / *r.denom() as i128)
                .ok_or(Error::Overflow)
        };
        Ok(IntegerForm {
            scenario: self.scenario,
            coefficients: self.coefficients.iter().map(scale).collect::<Result<_>>()?,
            bound: scale(&self.local_bound)?,
            denominator: denom,
        })
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

fn lcm(a: i128, b: i128) -> Option<i128> {
    (a / gcd(a, b)).checked_mul(b)
}

/// An expression with integer coefficients, `value / denominator` being the
/// rational value. Used for fast exact enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerForm {
    pub scenario: Scenario,
    pub coefficients: Vec<i128>,
    pub bound: i128,
    pub denominator: i128,
}

impl IntegerForm {
    /// Scaled value of a strategy, without validating it.
    pub fn value_of_maps(&self, a_map: &[usize], b_map: &[usize]) -> Result<i128> {
        let mut total: i128 = 0;
        for (x, &a) in a_map.iter().enumerate() {
            for (y, &b) in b_map.iter().enumerate() {
                let c = self.coefficients[self.scenario.index(x, y, a, b)];
                total = total.checked_add(c).ok_or(Error::Overflow)?;
            }
        }
        Ok(total)
    }
}

/// `Σ_{x,y} max_{a,b} c(x,y,a,b)`, an upper bound for every behavior. A
/// behavior reaching it attains it exactly.
pub fn algebraic_maximum(expr: &BellExpression) -> Result<Rational> {
    let s = expr.scenario;
    let cell = s.n_a * s.n_b;
    let mut total = Rational::zero();
    for block in expr.coefficients.chunks(cell) {
        let best = block.iter().max().copied().unwrap_or_else(Rational::zero);
        total = total.checked_add(&best).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// `Σ_{x,y} c(x, y, a(x), b(y))`.
pub fn evaluate_on_strategy(expr: &BellExpression, strategy: &DeterministicStrategy) -> Result<Rational> {
    strategy.validate(&expr.scenario)?;
    let mut total = Rational::zero();
    for (x, &a) in strategy.a_map().iter().enumerate() {
        for (y, &b) in strategy.b_map().iter().enumerate() {
            total = total
                .checked_add(&expr.coefficient(x, y, a, b))
                .ok_or(Error::Overflow)?;
        }
    }
    Ok(total)
}

/// `Σ c(x,y,a,b) Pr[a,b|x,y]` for a table normalized within `1e-10`.
pub fn evaluate_on_distribution(expr: &BellExpression, behavior: &Behavior) -> Result<f64> {
    if behavior.scenario() != expr.scenario {
        return Err(Error::DimensionMismatch(format!(
            "expression on {:?}, behavior on {:?}",
            expr.scenario,
            behavior.scenario()
        )));
    }
    behavior.check_normalized(NORMALIZATION_TOLERANCE)?;
    Ok(expr
        .coefficients
        .iter()
        .zip(behavior.as_slice())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, p)| to_f64(c) * p)
        .sum())
}

/// Value on unstructured noise, `Σ c / (n_A·n_B)`.
pub fn uniform_noise_value(expr: &BellExpression) -> Result<Rational> {
    let mut total = Rational::zero();
    for c in &expr.coefficients {
        total = total.checked_add(c).ok_or(Error::Overflow)?;
    }
    let cells = Rational::new(1, (expr.scenario.n_a * expr.scenario.n_b) as i64);
    total.checked_mul(&cells).ok_or(Error::Overflow)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MagicSquareForm {
    /// All three requirements over eight outcomes per party.
    Full8,
    /// Intersection agreement over parity-completed four-outcome codes.
    Restricted4,
    /// The four-outcome form written with modular bit extractions only.
    Abstract4,
}

/// Bit extractions from a four-valued output `v`.
#[derive(Debug, Clone, Copy)]
enum Extract {
    /// `((v − v mod 2)/2) mod 2`
    Half,
    /// `v mod 2`
    Low,
    /// `((v + v mod 2)/2) mod 2`
    HalfCarry,
    /// `((v + v mod 2)/2 + 1) mod 2`
    HalfCarryPlusOne,
}

impl Extract {
    fn apply(self, v: i64) -> i64 {
        match self {
            Extract::Half => ((v - v % 2) / 2) % 2,
            Extract::Low => v % 2,
            Extract::HalfCarry => ((v + v % 2) / 2) % 2,
            Extract::HalfCarryPlusOne => ((v + v % 2) / 2 + 1) % 2,
        }
    }
}

/// The nine terms `Pr[f(a^{(x)}) ≡ g(b^{(y)}) mod 2]` as `(x, y, f, g)`.
const ABSTRACT_TERMS: [(usize, usize, Extract, Extract); 9] = {
    use Extract::*;
    [
        (0, 0, Half, Half),
        (1, 0, Half, Low),
        (2, 0, Half, HalfCarryPlusOne),
        (0, 1, Low, Half),
        (1, 1, Low, Low),
        (2, 1, Low, HalfCarryPlusOne),
        (0, 2, HalfCarry, Half),
        (1, 2, HalfCarry, Low),
        (2, 2, HalfCarry, HalfCarryPlusOne),
    ]
};

/// The Magic Square inequality with local bound 8.
pub fn magic_square_inequality(form: MagicSquareForm) -> BellExpression {
    let bound = Rational::from_integer(8);
    match form {
        MagicSquareForm::Full8 => {
            BellExpression::from_game(&magic_square_game(MagicSquareEncoding::Full8), bound)
        }
        MagicSquareForm::Restricted4 => {
            BellExpression::from_game(&magic_square_game(MagicSquareEncoding::Restricted4), bound)
        }
        MagicSquareForm::Abstract4 => {
            let scenario = MagicSquareEncoding::Restricted4.scenario();
            let mut expr = BellExpression::zero(scenario, bound);
            for (x, y, f, g) in ABSTRACT_TERMS {
                for a in 0..4 {
                    for b in 0..4 {
                        if (f.apply(a) - g.apply(b)).rem_euclid(2) == 0 {
                            let i = scenario.index(x, y, a as usize, b as usize);
                            expr.coefficients[i] = Rational::from_integer(1);
                        }
                    }
                }
            }
            expr
        }
    }
}
