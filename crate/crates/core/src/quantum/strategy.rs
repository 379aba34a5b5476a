use num_complex::Complex64;

use super::matrix::{frobenius_inner, CMatrix};
use super::measurement::{binary_measurement, joint_measurement, ProjectiveMeasurement};
use super::pauli::{mermin_peres_square, MerminPeresSquare, Pauli};
use super::state::StateVector;
use crate::behavior::Behavior;
use crate::error::{Error, Result};
use crate::game::{GameRelation, Party, Scenario, TripleOutcome};

/// Largest imaginary part tolerated in a computed probability.
pub const PROBABILITY_IMAGINARY_TOLERANCE: f64 = 1e-10;

/// A shared state with one projective measurement per input on each side.
/// Outcome labels are the game's outputs; every label in `0..n` appears
/// exactly once per measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumStrategy {
    state: StateVector,
    alice: Vec<ProjectiveMeasurement<usize>>,
    bob: Vec<ProjectiveMeasurement<usize>>,
    n_a: usize,
    n_b: usize,
}

fn check_side(
    side: &[ProjectiveMeasurement<usize>],
    dim: usize,
    outputs: usize,
    who: &str,
) -> Result<()> {
    if side.is_empty() {
        return Err(Error::DimensionMismatch(format!("{who} has no measurements")));
    }
    for (input, m) in side.iter().enumerate() {
        if m.dim() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{who}'s measurement {input} acts on dimension {}, state has {dim}",
                m.dim()
            )));
        }
        let mut labels: Vec<usize> = m.labels().copied().collect();
        labels.sort_unstable();
        if labels != (0..outputs).collect::<Vec<_>>() {
            return Err(Error::DimensionMismatch(format!(
                "{who}'s measurement {input} has labels {labels:?}, expected 0..{outputs}"
            )));
        }
    }
    Ok(())
}

impl QuantumStrategy {
    pub fn new(
        state: StateVector,
        alice: Vec<ProjectiveMeasurement<usize>>,
        bob: Vec<ProjectiveMeasurement<usize>>,
        n_a: usize,
        n_b: usize,
    ) -> Result<Self> {
        check_side(&alice, state.dim_a(), n_a, "Alice")?;
        check_side(&bob, state.dim_b(), n_b, "Bob")?;
        Ok(QuantumStrategy {
            state,
            alice,
            bob,
            n_a,
            n_b,
        })
    }

    pub fn state(&self) -> &StateVector {
        &self.state
    }

    pub fn alice_measurements(&self) -> &[ProjectiveMeasurement<usize>] {
        &self.alice
    }

    pub fn bob_measurements(&self) -> &[ProjectiveMeasurement<usize>] {
        &self.bob
    }

    pub fn scenario(&self) -> Result<Scenario> {
        Scenario::new(self.alice.len(), self.bob.len(), self.n_a, self.n_b)
    }

    /// Keeps only the listed Alice inputs, in the given order.
    pub fn restrict_alice_inputs(&self, inputs: &[usize]) -> Result<QuantumStrategy> {
        let alice = inputs
            .iter()
            .map(|&x| {
                self.alice
                    .get(x)
                    .cloned()
                    .ok_or_else(|| Error::OutOfRange(format!("Alice input {x}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.state.clone(), alice, self.bob.clone(), self.n_a, self.n_b)
    }

    /// The same strategy seen after `U_A ⊗ U_B`: the state is rotated and
    /// every projector conjugated.
    pub fn apply_local_unitaries(&self, u_a: &CMatrix, u_b: &CMatrix) -> Result<QuantumStrategy> {
        let state = self.state.apply_local(u_a, u_b)?;
        let alice = self.alice.iter().map(|m| m.conjugated(u_a)).collect::<Result<_>>()?;
        let bob = self.bob.iter().map(|m| m.conjugated(u_b)).collect::<Result<_>>()?;
        Self::new(state, alice, bob, self.n_a, self.n_b)
    }

    /// `Pr[a, b | x, y]` for every quadruple.
    pub fn behavior(&self) -> Result<Behavior> {
        let scenario = self.scenario()?;
        let m = self.state.as_matrix();
        let mut probs = vec![0.0; scenario.table_len()];
        for (x, alice) in self.alice.iter().enumerate() {
            for (a, pa) in alice.outcomes() {
                let left = pa * &m;
                for (y, bob) in self.bob.iter().enumerate() {
                    for (b, pb) in bob.outcomes() {
                        let amp: Complex64 = frobenius_inner(&m, &(&left * pb.transpose()));
                        if amp.im.abs() > PROBABILITY_IMAGINARY_TOLERANCE {
                            return Err(Error::ImaginaryResidue(amp.im));
                        }
                        probs[scenario.index(x, y, *a, *b)] = amp.re;
                    }
                }
            }
        }
        Behavior::new(scenario, probs)
    }

    /// Winning probability for each input pair, in `(x, y)` order.
    pub fn success_terms(&self, game: &GameRelation) -> Result<Vec<f64>> {
        let scenario = self.scenario()?;
        if scenario != game.scenario() {
            return Err(Error::DimensionMismatch(format!(
                "strategy for {scenario:?} played on {:?}",
                game.scenario()
            )));
        }
        let behavior = self.behavior()?;
        let mut terms = vec![0.0; scenario.input_pairs()];
        for (x, y, a, b) in game.winning_quadruples() {
            terms[x * scenario.m_b + y] += behavior.get(x, y, a, b);
        }
        Ok(terms)
    }
}

/// Success probability under uniformly random inputs.
pub fn winning_probability(strategy: &QuantumStrategy, game: &GameRelation) -> Result<f64> {
    let terms = strategy.success_terms(game)?;
    Ok(terms.iter().sum::<f64>() / terms.len() as f64)
}

/// The entanglement-assisted Magic Square strategy in the four-outcome
/// encoding, built from the standard square.
pub fn magic_square_quantum_strategy() -> QuantumStrategy {
    magic_square_strategy_from(&mermin_peres_square()).expect("the standard square is valid")
}

/// Alice measures row `x` of `square` jointly, Bob column `y`, both on
/// `|Φ⁺⟩⊗|Φ⁺⟩`. Outcome bits `(t₀, t₁, t₂)` are reported as the code
/// `2·t₀ + t₁`; the third bit is implied by the party's parity.
pub fn magic_square_strategy_from(square: &MerminPeresSquare) -> Result<QuantumStrategy> {
    let code = |party: Party| {
        move |bits: &Vec<u8>| TripleOutcome::complete(bits[0], bits[1], party).code()
    };
    let alice = (0..3)
        .map(|x| Ok(joint_measurement(&square.row(x))?.map_labels(code(Party::Alice))))
        .collect::<Result<Vec<_>>>()?;
    let bob = (0..3)
        .map(|y| Ok(joint_measurement(&square.column(y))?.map_labels(code(Party::Bob))))
        .collect::<Result<Vec<_>>>()?;
    QuantumStrategy::new(StateVector::phi_plus_pair(), alice, bob, 4, 4)
}

/// Optimal CHSH strategy on the singlet: Alice measures `Z` then `X`, Bob
/// along `(Z+X)/√2` then `(Z−X)/√2`, and Bob flips his outcome to turn the
/// singlet's anticorrelation into correlation.
pub fn chsh_quantum_strategy() -> QuantumStrategy {
    let (z, x) = (Pauli::Z.matrix(), Pauli::X.matrix());
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let binary = |o: &CMatrix| binary_measurement(o).expect("Pauli observables are involutions");
    let alice = vec![binary(&z), binary(&x)];
    let bob = [(&z + &x) * h, (&z - &x) * h]
        .iter()
        .map(|o| binary(o).map_labels(|t| 1 - t))
        .collect();
    QuantumStrategy::new(StateVector::singlet(), alice, bob, 2, 2).expect("valid strategy")
}
