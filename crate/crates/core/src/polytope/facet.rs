//! Facet verification by exact rank of the saturating vertices.
//!
//! A valid inequality defines a facet of the local polytope when the
//! deterministic strategies attaining its bound span an affine space of
//! dimension `d − 1`. The guarded test checks exactly that, via the rank of
//! the vertex matrix with a column of ones appended. Without the guard only
//! the linear rank is compared with `d`, which is equivalent for proper faces
//! whose hyperplane misses the Collins–Gisin origin.

use std::fmt;

use num_bigint::BigUint;

use super::cg::{cg_dimension, for_each_one, CgLayout};
use super::matrix::IntMatrix;
use super::rank::rank_exact;
use crate::bell::BellExpression;
use crate::error::{Error, Result};
use crate::game::{DeterministicStrategy, EnumerationBudget, OutputMaps, Scenario};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FacetOptions {
    pub budget: EnumerationBudget,
    /// Reject invalid inequalities and improper faces, and use the affine
    /// rank. Disabling it is only useful as a negative control.
    pub proper_face_guard: bool,
}

impl Default for FacetOptions {
    fn default() -> Self {
        FacetOptions {
            budget: EnumerationBudget::DEFAULT,
            proper_face_guard: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FacetReason {
    Facet,
    /// Some deterministic strategy exceeds the bound.
    BoundViolated,
    /// Every deterministic strategy saturates.
    NotProperFace,
    RankDeficient,
}

impl fmt::Display for FacetReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FacetReason::Facet => "saturating vertices span a hyperplane",
            FacetReason::BoundViolated => "a deterministic strategy exceeds the bound",
            FacetReason::NotProperFace => "every vertex saturates: not a proper face",
            FacetReason::RankDeficient => "saturating vertices do not span a hyperplane",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetCertificate {
    pub scenario: Scenario,
    pub bound: Rational,
    /// Maximum over deterministic strategies.
    pub max_value: Rational,
    pub vertex_count: usize,
    pub total_vertices: BigUint,
    /// Linear rank of the saturating vertices in Collins–Gisin coordinates.
    pub rank: usize,
    /// Affine dimension plus one.
    pub affine_rank: usize,
    pub dimension: usize,
    pub guarded: bool,
    pub is_facet: bool,
    pub reason: FacetReason,
}

#[derive(Debug, Clone)]
pub struct FacetAnalysis {
    pub certificate: FacetCertificate,
    pub vertices: Vec<DeterministicStrategy>,
    /// One Collins–Gisin row per saturating vertex.
    pub matrix: IntMatrix,
}

/// Every deterministic strategy whose value equals the local bound, in
/// lexicographic order.
pub fn saturating_vertices(expr: &BellExpression, budget: EnumerationBudget) -> Result<Vec<DeterministicStrategy>> {
    Ok(scan(expr, budget)?.0)
}

fn scan(expr: &BellExpression, budget: EnumerationBudget) -> Result<(Vec<DeterministicStrategy>, i128)> {
    let s = expr.scenario();
    budget.check(&s)?;
    let form = expr.integer_form()?;
    let mut out = Vec::new();
    let mut max = i128::MIN;
    let mut alice = OutputMaps::new(s.m_a, s.n_a);
    while let Some(a_map) = alice.next_map() {
        let mut bob = OutputMaps::new(s.m_b, s.n_b);
        while let Some(b_map) = bob.next_map() {
            let v = form.value_of_maps(a_map, b_map)?;
            max = max.max(v);
            if v == form.bound {
                out.push(DeterministicStrategy::new(a_map.to_vec(), b_map.to_vec()));
            }
        }
    }
    Ok((out, max))
}

/// Stacks the Collins–Gisin vectors of `vertices` as rows.
pub fn cg_matrix(vertices: &[DeterministicStrategy], params: &Scenario) -> Result<IntMatrix> {
    let layout = CgLayout::new(*params);
    let mut m = IntMatrix::zeros(vertices.len(), layout.dimension());
    for (i, v) in vertices.iter().enumerate() {
        v.validate(params)?;
        for_each_one(&layout, v.a_map(), v.b_map(), |j| m.set(i, j, 1));
    }
    Ok(m)
}

pub fn analyze_facet(expr: &BellExpression, options: FacetOptions) -> Result<FacetAnalysis> {
    let s = expr.scenario();
    let form = expr.integer_form()?;
    let (vertices, max_scaled) = scan(expr, options.budget)?;
    if vertices.is_empty() {
        return Err(Error::Degenerate);
    }
    let max_value = scaled_to_rational(max_scaled, form.denominator)?;
    let matrix = cg_matrix(&vertices, &s)?;
    let d = cg_dimension(&s);
    let rank = rank_exact(&matrix);
    let affine_rank = rank_exact(&matrix.homogenized());
    let total_vertices = s.strategy_count();

    let reason = if options.proper_face_guard {
        if max_value > expr.local_bound() {
            FacetReason::BoundViolated
        } else if BigUint::from(vertices.len()) == total_vertices {
            FacetReason::NotProperFace
        } else if affine_rank == d {
            FacetReason::Facet
        } else {
            FacetReason::RankDeficient
        }
    } else if rank == d {
        FacetReason::Facet
    } else {
        FacetReason::RankDeficient
    };
    Ok(FacetAnalysis {
        certificate: FacetCertificate {
            scenario: s,
            bound: expr.local_bound(),
            max_value,
            vertex_count: vertices.len(),
            total_vertices,
            rank,
            affine_rank,
            dimension: d,
            guarded: options.proper_face_guard,
            is_facet: reason == FacetReason::Facet,
            reason,
        },
        vertices,
        matrix,
    })
}

pub fn is_facet(expr: &BellExpression, options: FacetOptions) -> Result<FacetCertificate> {
    Ok(analyze_facet(expr, options)?.certificate)
}

fn scaled_to_rational(value: i128, denominator: i128) -> Result<Rational> {
    let g = gcd(value, denominator);
    let n = i64::try_from(value / g).map_err(|_| Error::Overflow)?;
    let d = i64::try_from(denominator / g).map_err(|_| Error::Overflow)?;
    Ok(Rational::new(n, d))
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs().max(1)
}
