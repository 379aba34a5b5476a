//! Projective measurements.

use std::fmt::Debug;

use num_complex::Complex64;

use super::matrix::{commutator, identity, max_abs, CMatrix};
use super::pauli::SignedPauliString;
use crate::error::{Error, Result};

/// Tolerance on `P² = P`, `P = P†`, `P_i P_j = 0` and `Σ P = 1`.
pub const MEASUREMENT_TOLERANCE: f64 = 1e-10;

/// A resolution of the identity into orthogonal projectors, each tagged with
/// an outcome label.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveMeasurement<L = usize> {
    dim: usize,
    outcomes: Vec<(L, CMatrix)>,
}

/// Max-norm violations of the projective-measurement identities.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct MeasurementResiduals {
    pub hermiticity: f64,
    pub idempotence: f64,
    pub orthogonality: f64,
    pub completeness: f64,
}

impl MeasurementResiduals {
    pub fn max(&self) -> f64 {
        self.hermiticity
            .max(self.idempotence)
            .max(self.orthogonality)
            .max(self.completeness)
    }
}

impl<L: Clone + PartialEq + Debug> ProjectiveMeasurement<L> {
    /// Validates at [`MEASUREMENT_TOLERANCE`]; labels must be distinct.
    pub fn new(dim: usize, outcomes: Vec<(L, CMatrix)>) -> Result<Self> {
        let m = ProjectiveMeasurement { dim, outcomes };
        m.validate(MEASUREMENT_TOLERANCE)?;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn outcomes(&self) -> &[(L, CMatrix)] {
        &self.outcomes
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.outcomes.iter().map(|(l, _)| l)
    }

    pub fn projector(&self, label: &L) -> Option<&CMatrix> {
        self.outcomes.iter().find(|(l, _)| l == label).map(|(_, p)| p)
    }

    pub fn residuals(&self) -> MeasurementResiduals {
        let mut r = MeasurementResiduals::default();
        let mut sum = CMatrix::zeros(self.dim, self.dim);
        for (i, (_, p)) in self.outcomes.iter().enumerate() {
            r.hermiticity = r.hermiticity.max(max_abs(&(p.adjoint() - p)));
            r.idempotence = r.idempotence.max(max_abs(&(p * p - p)));
            for (_, q) in &self.outcomes[i + 1..] {
                r.orthogonality = r.orthogonality.max(max_abs(&(p * q)));
            }
            sum += p;
        }
        r.completeness = max_abs(&(sum - identity(self.dim)));
        r
    }

    pub fn validate(&self, tolerance: f64) -> Result<()> {
        for (i, (label, p)) in self.outcomes.iter().enumerate() {
            if p.nrows() != self.dim || p.ncols() != self.dim {
                return Err(Error::InvalidMeasurement(format!(
                    "projector {label:?} is {}x{}, expected {}x{}",
                    p.nrows(),
                    p.ncols(),
                    self.dim,
                    self.dim
                )));
            }
            if self.outcomes[..i].iter().any(|(l, _)| l == label) {
                return Err(Error::InvalidMeasurement(format!("label {label:?} repeated")));
            }
        }
        let r = self.residuals();
        let checks = [
            (r.hermiticity, "Hermitian"),
            (r.idempotence, "idempotent"),
            (r.orthogonality, "mutually orthogonal"),
            (r.completeness, "complete"),
        ];
        for (residual, what) in checks {
            if residual > tolerance {
                return Err(Error::InvalidMeasurement(format!(
                    "projectors are not {what} (residual {residual:e})"
                )));
            }
        }
        Ok(())
    }

    /// Relabels outcomes; projectors whose labels coincide are summed.
    pub fn map_labels<M: Clone + PartialEq + Debug>(
        &self,
        mut f: impl FnMut(&L) -> M,
    ) -> ProjectiveMeasurement<M> {
        let mut outcomes: Vec<(M, CMatrix)> = Vec::new();
        for (label, p) in &self.outcomes {
            let new = f(label);
            match outcomes.iter_mut().find(|(l, _)| *l == new) {
                Some((_, q)) => *q += p,
                None => outcomes.push((new, p.clone())),
            }
        }
        ProjectiveMeasurement {
            dim: self.dim,
            outcomes,
        }
    }

    /// `U P U†` for every projector.
    pub fn conjugated(&self, unitary: &CMatrix) -> Result<Self> {
        if unitary.nrows() != self.dim || unitary.ncols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} unitary on a {}-dimensional measurement",
                unitary.nrows(),
                unitary.ncols(),
                self.dim
            )));
        }
        let adj = unitary.adjoint();
        Ok(ProjectiveMeasurement {
            dim: self.dim,
            outcomes: self
                .outcomes
                .iter()
                .map(|(l, p)| (l.clone(), unitary * p * &adj))
                .collect(),
        })
    }
}

fn check_involution(o: &CMatrix, index: usize) -> Result<()> {
    let n = o.nrows();
    if o.ncols() != n {
        return Err(Error::InvalidMeasurement(format!("observable {index} is not square")));
    }
    if max_abs(&(o.adjoint() - o)) > MEASUREMENT_TOLERANCE
        || max_abs(&(o * o - identity(n))) > MEASUREMENT_TOLERANCE
    {
        return Err(Error::InvalidMeasurement(format!(
            "observable {index} is not a Hermitian involution"
        )));
    }
    Ok(())
}

/// Spectral projectors `(1 + (−1)^t O)/2` of a `±1`-valued observable,
/// labelled `t ∈ {0, 1}`; empty eigenspaces are dropped.
pub fn binary_measurement(observable: &CMatrix) -> Result<ProjectiveMeasurement<usize>> {
    Ok(joint_measurement_of(std::slice::from_ref(observable))?.map_labels(|bits| bits[0] as usize))
}

/// Joint measurement of commuting `±1`-valued Pauli observables. Outcome
/// `(t₀, t₁, …)` has projector `Π_i (1 + (−1)^{t_i} O_i)/2`.
pub fn joint_measurement(observables: &[SignedPauliString]) -> Result<ProjectiveMeasurement<Vec<u8>>> {
    let matrices: Vec<_> = observables.iter().map(SignedPauliString::matrix).collect();
    joint_measurement_of(&matrices)
}

/// [`joint_measurement`] for arbitrary Hermitian involutions.
pub fn joint_measurement_of(observables: &[CMatrix]) -> Result<ProjectiveMeasurement<Vec<u8>>> {
    let Some(first) = observables.first() else {
        return Err(Error::InvalidMeasurement("no observables".to_string()));
    };
    let dim = first.nrows();
    for (i, o) in observables.iter().enumerate() {
        if o.nrows() != dim {
            return Err(Error::DimensionMismatch(format!(
                "observable {i} has dimension {}, expected {dim}",
                o.nrows()
            )));
        }
        check_involution(o, i)?;
    }
    for i in 0..observables.len() {
        for j in i + 1..observables.len() {
            let norm = max_abs(&commutator(&observables[i], &observables[j]));
            if norm > MEASUREMENT_TOLERANCE {
                return Err(Error::NonCommuting {
                    first: i,
                    second: j,
                    norm,
                });
            }
        }
    }
    let id = identity(dim);
    let half = Complex64::new(0.5, 0.0);
    let k = observables.len();
    let mut outcomes = Vec::new();
    for pattern in 0..1usize << k {
        let bits: Vec<u8> = (0..k).map(|i| ((pattern >> (k - 1 - i)) & 1) as u8).collect();
        let mut projector = id.clone();
        for (o, &t) in observables.iter().zip(&bits) {
            let factor = if t == 0 { &id + o } else { &id - o };
            projector = projector * factor * half;
        }
        if max_abs(&projector) > MEASUREMENT_TOLERANCE {
            outcomes.push((bits, projector));
        }
    }
    ProjectiveMeasurement::new(dim, outcomes)
}

/// Rank-one projectors onto the standard basis, labelled by basis index.
pub fn computational_basis(dim: usize) -> ProjectiveMeasurement<usize> {
    let outcomes = (0..dim)
        .map(|i| {
            let mut p = CMatrix::zeros(dim, dim);
            p[(i, i)] = Complex64::new(1.0, 0.0);
            (i, p)
        })
        .collect();
    ProjectiveMeasurement { dim, outcomes }
}
