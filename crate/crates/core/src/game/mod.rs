//! Bipartite games, deterministic strategies and exact classical values.
//!
//! A game is a relation `W ⊆ X × Y × A × B` stored densely as a bitset.
//! Inputs are weighted uniformly, so the value of a strategy is the number of
//! input pairs it wins divided by `m_A·m_B`.

mod format;
mod magic_square;
mod scenario;
mod strategy;

pub use format::{parse_game, write_game};
pub use magic_square::{
    literal_table_strategy, magic_square_game, table_to_strategy, MagicSquareEncoding, MagicSquareTable, Party,
    TripleOutcome,
};
pub use scenario::{count_deterministic, Scenario, MAX_TABLE_ENTRIES};
pub use strategy::{DeterministicStrategy, OutputMaps, StrategyIter};

use bitvec::vec::BitVec;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Upper bound on `n_A^m_A · n_B^m_B` for any operation that enumerates
/// deterministic strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget(pub u64);

impl EnumerationBudget {
    pub const DEFAULT: EnumerationBudget = EnumerationBudget(100_000_000);

    pub fn check(&self, scenario: &Scenario) -> Result<()> {
        let required = scenario.strategy_count();
        if required > self.0.into() {
            return Err(Error::BudgetExceeded {
                required,
                budget: self.0,
            });
        }
        Ok(())
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameRelation {
    scenario: Scenario,
    wins: BitVec,
}

impl GameRelation {
    /// The game nobody can win.
    pub fn empty(scenario: Scenario) -> Self {
        let wins = BitVec::repeat(false, scenario.table_len());
        GameRelation { scenario, wins }
    }

    /// The game every output wins.
    pub fn full(scenario: Scenario) -> Self {
        let wins = BitVec::repeat(true, scenario.table_len());
        GameRelation { scenario, wins }
    }

    pub fn from_predicate(
        scenario: Scenario,
        mut wins: impl FnMut(usize, usize, usize, usize) -> bool,
    ) -> Self {
        let mut game = Self::empty(scenario);
        for (x, y, a, b) in scenario.quadruples() {
            if wins(x, y, a, b) {
                let i = scenario.index(x, y, a, b);
                game.wins.set(i, true);
            }
        }
        game
    }

    /// Builds a game from its winning quadruples; duplicates are harmless.
    pub fn from_winning(
        scenario: Scenario,
        winning: impl IntoIterator<Item = (usize, usize, usize, usize)>,
    ) -> Result<Self> {
        let mut game = Self::empty(scenario);
        for (x, y, a, b) in winning {
            game.set(x, y, a, b, true)?;
        }
        Ok(game)
    }

    /// CHSH: two inputs and two outputs per party, win iff `a ⊕ b = x·y`.
    pub fn chsh() -> Self {
        let scenario = Scenario::new(2, 2, 2, 2).expect("valid scenario");
        Self::from_predicate(scenario, |x, y, a, b| (a ^ b) == (x & y))
    }

    pub fn scenario(&self) -> Scenario {
        self.scenario
    }

    pub fn set(&mut self, x: usize, y: usize, a: usize, b: usize, win: bool) -> Result<()> {
        self.scenario.check_quadruple(x, y, a, b)?;
        let i = self.scenario.index(x, y, a, b);
        self.wins.set(i, win);
        Ok(())
    }

    /// Membership test. Out-of-range indices are losing.
    #[inline]
    pub fn wins(&self, x: usize, y: usize, a: usize, b: usize) -> bool {
        let s = &self.scenario;
        if x >= s.m_a || y >= s.m_b || a >= s.n_a || b >= s.n_b {
            return false;
        }
        self.wins[s.index(x, y, a, b)]
    }

    pub fn winning_count(&self) -> usize {
        self.wins.count_ones()
    }

    /// Winning quadruples in lexicographic `(x, y, a, b)` order.
    pub fn winning_quadruples(&self) -> impl Iterator<Item = (usize, usize, usize, usize)> + '_ {
        self.wins
            .iter_ones()
            .map(move |i| self.scenario.quadruple(i))
    }

    /// Keeps only the listed Alice inputs, renumbered in the given order.
    pub fn restrict_alice_inputs(&self, inputs: &[usize]) -> Result<GameRelation> {
        let s = self.scenario;
        if let Some(&bad) = inputs.iter().find(|&&x| x >= s.m_a) {
            return Err(Error::OutOfRange(format!(
                "Alice input {bad} (m_A = {})",
                s.m_a
            )));
        }
        let sub = Scenario::new(inputs.len(), s.m_b, s.n_a, s.n_b)?;
        Ok(Self::from_predicate(sub, |x, y, a, b| {
            self.wins(inputs[x], y, a, b)
        }))
    }

    /// Relabels inputs and outputs; `perm_x[x]` is the new label of input `x`
    /// and likewise for the others.
    pub fn relabeled(
        &self,
        perm_x: &[usize],
        perm_y: &[usize],
        perm_a: &[usize],
        perm_b: &[usize],
    ) -> Result<GameRelation> {
        let s = self.scenario;
        check_permutation(perm_x, s.m_a, "Alice inputs")?;
        check_permutation(perm_y, s.m_b, "Bob inputs")?;
        check_permutation(perm_a, s.n_a, "Alice outputs")?;
        check_permutation(perm_b, s.n_b, "Bob outputs")?;
        let mut out = Self::empty(s);
        for (x, y, a, b) in self.winning_quadruples() {
            out.set(perm_x[x], perm_y[y], perm_a[a], perm_b[b], true)?;
        }
        Ok(out)
    }

    /// Number of input pairs the strategy wins.
    pub fn wins_of(&self, strategy: &DeterministicStrategy) -> Result<usize> {
        strategy.validate(&self.scenario)?;
        Ok(self.count_wins_unchecked(strategy.a_map(), strategy.b_map()))
    }

    fn count_wins_unchecked(&self, a_map: &[usize], b_map: &[usize]) -> usize {
        let mut count = 0;
        for (x, &a) in a_map.iter().enumerate() {
            for (y, &b) in b_map.iter().enumerate() {
                if self.wins(x, y, a, b) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Success probability of a deterministic strategy under uniform inputs.
    pub fn strategy_value(&self, strategy: &DeterministicStrategy) -> Result<Rational> {
        let wins = self.wins_of(strategy)?;
        Ok(Rational::new(wins as i64, self.scenario.input_pairs() as i64))
    }
}

fn check_permutation(perm: &[usize], n: usize, what: &str) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::InvalidScenario(format!(
            "permutation of {what} has length {}, expected {n}",
            perm.len()
        )));
    }
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidScenario(format!(
                "{perm:?} is not a permutation of {what}"
            )));
        }
    }
    Ok(())
}

/// Result of [`classical_value`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalValue {
    pub value: Rational,
    pub winning_pairs: usize,
    /// First maximizer in lexicographic `(a_map, b_map)` order.
    pub witness: DeterministicStrategy,
}

/// Bob's best reply to a fixed Alice map: for each `y`, the smallest `b`
/// winning the most `x`. Returns the total and writes the reply into `reply`.
fn best_reply(game: &GameRelation, a_map: &[usize], reply: &mut [usize]) -> usize {
    let s = game.scenario;
    let mut total = 0;
    for (y, slot) in reply.iter_mut().enumerate() {
        let mut best = (0, 0);
        for b in 0..s.n_b {
            let wins = a_map
                .iter()
                .enumerate()
                .filter(|&(x, &a)| game.wins(x, y, a, b))
                .count();
            if wins > best.1 || b == 0 {
                best = (b, wins);
            }
        }
        *slot = best.0;
        total += best.1;
    }
    total
}

/// The best success probability of a classical strategy.
///
/// Every Alice map is enumerated; for each, Bob's best reply is computed input
/// by input, which reaches the same maximum as enumerating Bob's maps and
/// returns the lexicographically first maximizing `(a_map, b_map)`.
pub fn classical_value(game: &GameRelation, budget: EnumerationBudget) -> Result<ClassicalValue> {
    let s = game.scenario;
    budget.check(&s)?;
    let target = s.input_pairs();
    let mut reply = vec![0; s.m_b];
    let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
    let mut alice = OutputMaps::new(s.m_a, s.n_a);
    while let Some(a_map) = alice.next_map() {
        let wins = best_reply(game, a_map, &mut reply);
        if best.as_ref().is_none_or(|(w, _, _)| wins > *w) {
            best = Some((wins, a_map.to_vec(), reply.clone()));
            if wins == target {
                break;
            }
        }
    }
    let (winning_pairs, a_map, b_map) = best.expect("at least one Alice map");
    Ok(ClassicalValue {
        value: Rational::new(winning_pairs as i64, target as i64),
        winning_pairs,
        witness: DeterministicStrategy::new(a_map, b_map),
    })
}

/// Whether some deterministic strategy wins on every input pair. Stops at the
/// first such strategy.
pub fn is_classically_winnable(game: &GameRelation, budget: EnumerationBudget) -> Result<bool> {
    Ok(winning_classical_strategy(game, budget)?.is_some())
}

/// First perfect deterministic strategy in lexicographic order, if any.
pub fn winning_classical_strategy(
    game: &GameRelation,
    budget: EnumerationBudget,
) -> Result<Option<DeterministicStrategy>> {
    let s = game.scenario;
    budget.check(&s)?;
    let mut alice = OutputMaps::new(s.m_a, s.n_a);
    'alice: while let Some(a_map) = alice.next_map() {
        let mut b_map = Vec::with_capacity(s.m_b);
        for y in 0..s.m_b {
            let reply = (0..s.n_b).find(|&b| {
                a_map
                    .iter()
                    .enumerate()
                    .all(|(x, &a)| game.wins(x, y, a, b))
            });
            match reply {
                Some(b) => b_map.push(b),
                None => continue 'alice,
            }
        }
        return Ok(Some(DeterministicStrategy::new(a_map.to_vec(), b_map)));
    }
    Ok(None)
}

/// Compatible output pair for a game where Alice has two inputs: outputs
/// `(a⁰, a¹)` such that every `y` admits a `b` winning both `(0, y, a⁰, b)`
/// and `(1, y, a¹, b)`. Such a pair is exactly a perfect classical strategy.
///
/// Runs in `O(n_A² · m_B · n_B)`.
pub fn compatible_pair_2xn(game: &GameRelation) -> Result<Option<DeterministicStrategy>> {
    let s = game.scenario;
    if s.m_a != 2 {
        return Err(Error::NotTwoInputs(s.m_a));
    }
    for a0 in 0..s.n_a {
        'pair: for a1 in 0..s.n_a {
            let mut b_map = Vec::with_capacity(s.m_b);
            for y in 0..s.m_b {
                match (0..s.n_b).find(|&b| game.wins(0, y, a0, b) && game.wins(1, y, a1, b)) {
                    Some(b) => b_map.push(b),
                    None => continue 'pair,
                }
            }
            return Ok(Some(DeterministicStrategy::new(vec![a0, a1], b_map)));
        }
    }
    Ok(None)
}

pub fn winnable_2xn(game: &GameRelation) -> Result<bool> {
    Ok(compatible_pair_2xn(game)?.is_some())
}
