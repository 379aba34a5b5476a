//! Classical strategy hidden in a perfect quantum strategy when Alice has two
//! inputs.
//!
//! Alice's outcome `a` on input `x` leaves the residual vector
//! `|φ_a⟩ = (P_a^{(x)} ⊗ 1)|Ψ⟩`. Since both of Alice's measurements resolve the
//! identity, `Σ_{a⁰,a¹} ⟨φ_{a⁰}|φ_{a¹}⟩ = 1`, so some pair of residuals from the
//! two inputs overlaps. For that pair and every `y`, some Bob outcome `b` has
//! non-zero probability against both residuals. Each such `(x, y, a, b)`
//! occurs with positive probability, so a perfect quantum strategy makes all
//! of them winning, and `{a⁰, a¹; b(y)}` is a perfect classical strategy.

use num_complex::Complex64;

use super::matrix::{frobenius_inner, CMatrix};
use super::strategy::{winning_probability, QuantumStrategy};
use crate::error::{Error, Result};
use crate::game::{DeterministicStrategy, GameRelation};

/// Overlaps and probabilities at or below this are treated as zero.
pub const OVERLAP_THRESHOLD: f64 = 1e-9;

/// How far below one a "perfect" winning probability may fall.
pub const WINNING_TOLERANCE: f64 = 1e-9;

/// Checks that `strategy` wins `game` with probability one (within
/// [`WINNING_TOLERANCE`]) and runs the extraction.
pub fn extract_classical_strategy(
    strategy: &QuantumStrategy,
    game: &GameRelation,
) -> Result<DeterministicStrategy> {
    let m_a = game.scenario().m_a;
    if m_a != 2 {
        return Err(Error::NotTwoInputs(m_a));
    }
    let p = winning_probability(strategy, game)?;
    if p < 1.0 - WINNING_TOLERANCE {
        return Err(Error::NotWinning(p));
    }
    extract_classical_strategy_unchecked(strategy)
}

/// The extraction without the winning check. On a strategy that is not
/// perfect the result is some deterministic strategy with no guarantee.
pub fn extract_classical_strategy_unchecked(strategy: &QuantumStrategy) -> Result<DeterministicStrategy> {
    let alice = strategy.alice_measurements();
    if alice.len() != 2 {
        return Err(Error::NotTwoInputs(alice.len()));
    }
    let m = strategy.state().as_matrix();
    let residuals = |x: usize| -> Vec<(usize, CMatrix)> {
        alice[x].outcomes().iter().map(|(a, p)| (*a, p * &m)).collect()
    };
    let (first, second) = (residuals(0), residuals(1));

    // the most overlapping pair, first in label order on ties
    let mut best: Option<(f64, usize, usize)> = None;
    for (a0, r0) in &first {
        for (a1, r1) in &second {
            let overlap = frobenius_inner(r0, r1).norm();
            if overlap > OVERLAP_THRESHOLD && best.is_none_or(|(o, _, _)| overlap > o) {
                best = Some((overlap, *a0, *a1));
            }
        }
    }
    let (_, a0, a1) = best.ok_or(Error::NoOverlappingPair)?;
    let r0 = &first.iter().find(|(a, _)| *a == a0).expect("label present").1;
    let r1 = &second.iter().find(|(a, _)| *a == a1).expect("label present").1;

    // ⟨φ|1 ⊗ P_b|φ⟩ in matrix form
    let weight = |r: &CMatrix, pb: &CMatrix| -> f64 {
        let v: Complex64 = frobenius_inner(r, &(r * pb.transpose()));
        v.re
    };
    let mut outcomes: Vec<_> = alice[0].outcomes().iter().map(|(a, _)| *a).collect();
    outcomes.sort_unstable();
    let b_map = strategy
        .bob_measurements()
        .iter()
        .enumerate()
        .map(|(y, bob)| {
            let mut candidates: Vec<_> = bob.outcomes().iter().collect();
            candidates.sort_by_key(|(b, _)| *b);
            candidates
                .into_iter()
                .find(|(_, pb)| weight(r0, pb) > OVERLAP_THRESHOLD && weight(r1, pb) > OVERLAP_THRESHOLD)
                .map(|(b, _)| *b)
                .ok_or(Error::NoCompatibleOutcome(y))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DeterministicStrategy::new(vec![a0, a1], b_map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{magic_square_game, MagicSquareEncoding, Scenario};
    use crate::quantum::measurement::computational_basis;
    use crate::quantum::state::StateVector;
    use crate::quantum::strategy::{chsh_quantum_strategy, magic_square_quantum_strategy};

    #[test]
    fn magic_square_sub_game_yields_perfect_classical_strategy() {
        let rows = [0, 1];
        let game = magic_square_game(MagicSquareEncoding::Restricted4)
            .restrict_alice_inputs(&rows)
            .unwrap();
        let quantum = magic_square_quantum_strategy().restrict_alice_inputs(&rows).unwrap();
        let classical = extract_classical_strategy(&quantum, &game).unwrap();
        assert_eq!(game.wins_of(&classical).unwrap(), 6);
    }

    #[test]
    fn product_state_reproduces_its_outputs() {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        // Alice holds |1⟩ of a qutrit, Bob |2⟩ of a qutrit
        let state = StateVector::product(&[zero, one, zero], &[zero, zero, one]).unwrap();
        let basis = computational_basis(3);
        let quantum = QuantumStrategy::new(
            state,
            vec![basis.clone(), basis.clone()],
            vec![basis.clone(), basis.clone(), basis],
            3,
            3,
        )
        .unwrap();
        let game = GameRelation::from_predicate(Scenario::new(2, 3, 3, 3).unwrap(), |_, _, a, b| {
            a == 1 && b == 2
        });
        let classical = extract_classical_strategy(&quantum, &game).unwrap();
        assert_eq!(classical, DeterministicStrategy::new(vec![1, 1], vec![2, 2, 2]));
    }

    #[test]
    fn imperfect_strategy_fails_the_precondition() {
        let chsh = GameRelation::chsh();
        let quantum = chsh_quantum_strategy();
        assert!(matches!(
            extract_classical_strategy(&quantum, &chsh),
            Err(Error::NotWinning(p)) if p < 0.86
        ));
        let classical = extract_classical_strategy_unchecked(&quantum).unwrap();
        assert!(chsh.wins_of(&classical).unwrap() <= 3);
    }

    #[test]
    fn needs_two_alice_inputs() {
        let game = magic_square_game(MagicSquareEncoding::Restricted4);
        let quantum = magic_square_quantum_strategy();
        assert_eq!(extract_classical_strategy(&quantum, &game), Err(Error::NotTwoInputs(3)));
        assert_eq!(extract_classical_strategy_unchecked(&quantum), Err(Error::NotTwoInputs(3)));
    }
}
