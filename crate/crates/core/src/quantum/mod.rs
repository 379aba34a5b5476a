//! Dense state-vector simulation of bipartite quantum strategies.
//!
//! A bipartite pure state of dimension `D = D_A·D_B` is stored with basis index
//! `i_A·D_B + i_B`. For the two-pair state used by the Magic Square strategy
//! that index is `A₁·8 + A₂·4 + B₁·2 + B₂`: Alice holds qubits `A₁A₂`, Bob holds
//! `B₁B₂`, and the pairs `A₁B₁`, `A₂B₂` are each maximally entangled.
//!
//! Probabilities are computed from the `D_A × D_B` amplitude matrix `M`:
//! `⟨Ψ|P ⊗ Q|Ψ⟩ = tr(M† P M Qᵀ)`, so no `D × D` operator is ever formed.

mod export;
mod extract;
mod matrix;
mod measurement;
mod pauli;
mod state;
mod strategy;

pub use export::strategy_document;
pub use extract::{
    extract_classical_strategy, extract_classical_strategy_unchecked, OVERLAP_THRESHOLD,
    WINNING_TOLERANCE,
};
pub use matrix::{commutator, identity, max_abs, CMatrix};
pub use measurement::{
    binary_measurement, computational_basis, joint_measurement, joint_measurement_of,
    MeasurementResiduals, ProjectiveMeasurement, MEASUREMENT_TOLERANCE,
};
pub use pauli::{mermin_peres_square, MerminPeresSquare, Pauli, SignedPauliString, SquareInvariants};
pub use state::{StateVector, NORM_TOLERANCE};
pub use strategy::{
    chsh_quantum_strategy, magic_square_quantum_strategy, magic_square_strategy_from,
    winning_probability, QuantumStrategy, PROBABILITY_IMAGINARY_TOLERANCE,
};
