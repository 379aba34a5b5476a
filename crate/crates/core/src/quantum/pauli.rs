//! Two-qubit Pauli observables and the Mermin–Peres square.

use std::fmt;

use num_complex::Complex64;

use super::matrix::{commutator, identity, max_abs, CMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn matrix(self) -> CMatrix {
        let (o, l, i) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0));
        let entries = match self {
            Pauli::I => [l, o, o, l],
            Pauli::X => [o, l, l, o],
            Pauli::Y => [o, -i, i, o],
            Pauli::Z => [l, o, o, -l],
        };
        CMatrix::from_row_slice(2, 2, &entries)
    }

    fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// `±P₁⊗P₂`, the first letter acting on the more significant qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedPauliString {
    negative: bool,
    letters: [Pauli; 2],
}

impl SignedPauliString {
    pub fn plus(first: Pauli, second: Pauli) -> Self {
        SignedPauliString {
            negative: false,
            letters: [first, second],
        }
    }

    pub fn minus(first: Pauli, second: Pauli) -> Self {
        SignedPauliString {
            negative: true,
            letters: [first, second],
        }
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn letters(&self) -> [Pauli; 2] {
        self.letters
    }

    pub fn negated(self) -> Self {
        SignedPauliString {
            negative: !self.negative,
            ..self
        }
    }

    pub fn matrix(&self) -> CMatrix {
        let m = self.letters[0].matrix().kronecker(&self.letters[1].matrix());
        if self.negative {
            -m
        } else {
            m
        }
    }
}

impl fmt::Display for SignedPauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { '-' } else { '+' };
        write!(f, "{sign}{}{}", self.letters[0].symbol(), self.letters[1].symbol())
    }
}

/// A 3×3 table of two-qubit observables. Alice measures row `x`, Bob
/// column `y`; the winning strategy needs commuting rows multiplying to `+1`,
/// commuting columns multiplying to `−1`, and transpose-invariant entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MerminPeresSquare {
    entries: [[SignedPauliString; 3]; 3],
}

pub fn mermin_peres_square() -> MerminPeresSquare {
    use Pauli::*;
    let p = SignedPauliString::plus;
    let m = SignedPauliString::minus;
    MerminPeresSquare {
        entries: [
            [p(I, Z), p(Z, I), p(Z, Z)],
            [p(X, I), p(I, X), p(X, X)],
            [m(X, Z), m(Z, X), p(Y, Y)],
        ],
    }
}

impl MerminPeresSquare {
    pub fn new(entries: [[SignedPauliString; 3]; 3]) -> Self {
        MerminPeresSquare { entries }
    }

    pub fn entry(&self, x: usize, y: usize) -> SignedPauliString {
        self.entries[x][y]
    }

    pub fn row(&self, x: usize) -> [SignedPauliString; 3] {
        self.entries[x]
    }

    pub fn column(&self, y: usize) -> [SignedPauliString; 3] {
        [self.entries[0][y], self.entries[1][y], self.entries[2][y]]
    }

    /// Same square with the sign of one entry flipped.
    pub fn with_flipped_sign(mut self, x: usize, y: usize) -> Self {
        self.entries[x][y] = self.entries[x][y].negated();
        self
    }

    pub fn invariants(&self) -> SquareInvariants {
        let id = identity(4);
        let product = |obs: [SignedPauliString; 3]| obs[0].matrix() * obs[1].matrix() * obs[2].matrix();
        let commute = |obs: [SignedPauliString; 3]| {
            let m: Vec<_> = obs.iter().map(SignedPauliString::matrix).collect();
            [(0, 1), (0, 2), (1, 2)]
                .iter()
                .map(|&(i, j)| max_abs(&commutator(&m[i], &m[j])))
                .fold(0.0, f64::max)
        };
        let mut inv = SquareInvariants::default();
        for k in 0..3 {
            inv.row_product_residual[k] = max_abs(&(product(self.row(k)) - &id));
            inv.column_product_residual[k] = max_abs(&(product(self.column(k)) + &id));
            inv.max_commutator = inv.max_commutator.max(commute(self.row(k))).max(commute(self.column(k)));
        }
        for obs in self.entries.iter().flatten() {
            let m = obs.matrix();
            inv.max_transpose_residual = inv.max_transpose_residual.max(max_abs(&(m.transpose() - &m)));
        }
        inv
    }
}

/// Max-norm residuals of the square's defining identities.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SquareInvariants {
    /// `‖O_{x,0} O_{x,1} O_{x,2} − 1‖` per row.
    pub row_product_residual: [f64; 3],
    /// `‖O_{0,y} O_{1,y} O_{2,y} + 1‖` per column.
    pub column_product_residual: [f64; 3],
    /// Largest commutator within a row or column.
    pub max_commutator: f64,
    /// Largest `‖Oᵀ − O‖`.
    pub max_transpose_residual: f64,
}

impl SquareInvariants {
    pub fn holds(&self, tolerance: f64) -> bool {
        self.row_product_residual
            .iter()
            .chain(&self.column_product_residual)
            .chain([&self.max_commutator, &self.max_transpose_residual])
            .all(|&r| r <= tolerance)
    }

    /// Human-readable list of the identities that fail.
    pub fn violations(&self, tolerance: f64) -> Vec<String> {
        let mut out = Vec::new();
        for k in 0..3 {
            if self.row_product_residual[k] > tolerance {
                out.push(format!("row {k} product is not +identity"));
            }
            if self.column_product_residual[k] > tolerance {
                out.push(format!("column {k} product is not -identity"));
            }
        }
        if self.max_commutator > tolerance {
            out.push("a row or column contains non-commuting observables".to_string());
        }
        if self.max_transpose_residual > tolerance {
            out.push("an observable is not transpose-invariant".to_string());
        }
        out
    }
}
