use nalgebra::DVector;
use num_complex::Complex64;

use super::matrix::CMatrix;
use crate::error::{Error, Result};

/// Allowed deviation of `‖Ψ‖` from one.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// A pure state of a bipartite system, basis index `i_A·D_B + i_B`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: DVector<Complex64>,
    dim_a: usize,
    dim_b: usize,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>, dim_a: usize, dim_b: usize) -> Result<Self> {
        if dim_a == 0 || dim_b == 0 || amplitudes.len() != dim_a * dim_b {
            return Err(Error::DimensionMismatch(format!(
                "{} amplitudes for dimensions {dim_a} x {dim_b}",
                amplitudes.len()
            )));
        }
        let amplitudes = DVector::from_vec(amplitudes);
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized(norm));
        }
        Ok(StateVector {
            amplitudes,
            dim_a,
            dim_b,
        })
    }

    /// Rescales to unit norm first.
    pub fn normalized(amplitudes: Vec<Complex64>, dim_a: usize, dim_b: usize) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized(norm));
        }
        Self::new(amplitudes.into_iter().map(|z| z / norm).collect(), dim_a, dim_b)
    }

    /// `|ψ_A⟩ ⊗ |ψ_B⟩`, each factor normalized.
    pub fn product(alice: &[Complex64], bob: &[Complex64]) -> Result<Self> {
        let amps = alice.iter().flat_map(|a| bob.iter().map(move |b| a * b)).collect();
        Self::normalized(amps, alice.len(), bob.len())
    }

    /// `(|00⟩ + |11⟩)/√2`.
    pub fn phi_plus() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let z = Complex64::new(0.0, 0.0);
        Self::new(vec![h, z, z, h], 2, 2).expect("normalized")
    }

    /// `(|01⟩ − |10⟩)/√2`.
    pub fn singlet() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let z = Complex64::new(0.0, 0.0);
        Self::new(vec![z, h, -h, z], 2, 2).expect("normalized")
    }

    /// `|Φ⁺⟩_{A₁B₁} ⊗ |Φ⁺⟩_{A₂B₂}` regrouped so Alice holds `A₁A₂` and Bob
    /// `B₁B₂`.
    pub fn phi_plus_pair() -> Self {
        let pair = Self::phi_plus();
        // qubit order A₁ B₁ A₂ B₂
        let raw = pair.amplitudes.kronecker(&pair.amplitudes);
        let mut amps = vec![Complex64::new(0.0, 0.0); 16];
        for (i, amp) in raw.iter().enumerate() {
            let (a1, b1, a2, b2) = ((i >> 3) & 1, (i >> 2) & 1, (i >> 1) & 1, i & 1);
            amps[a1 << 3 | a2 << 2 | b1 << 1 | b2] = *amp;
        }
        Self::new(amps, 4, 4).expect("normalized")
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    /// `M` with `M[i_A, i_B] = Ψ[i_A·D_B + i_B]`.
    pub fn as_matrix(&self) -> CMatrix {
        CMatrix::from_fn(self.dim_a, self.dim_b, |i, j| self.amplitudes[i * self.dim_b + j])
    }

    /// `(U_A ⊗ U_B)|Ψ⟩`.
    pub fn apply_local(&self, u_a: &CMatrix, u_b: &CMatrix) -> Result<Self> {
        if u_a.shape() != (self.dim_a, self.dim_a) || u_b.shape() != (self.dim_b, self.dim_b) {
            return Err(Error::DimensionMismatch("local unitaries do not fit the state".into()));
        }
        let m = u_a * self.as_matrix() * u_b.transpose();
        let amps = (0..self.dim_a)
            .flat_map(|i| (0..self.dim_b).map(move |j| (i, j)))
            .map(|(i, j)| m[(i, j)])
            .collect();
        Self::normalized(amps, self.dim_a, self.dim_b)
    }
}
