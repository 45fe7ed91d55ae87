use alloc::vec::Vec;

use num_traits::Zero;

use super::{Monomial, PolyError, Polynomial};
use crate::linalg::Matrix;

/// Linear change of coordinates `x ↦ A x` on `ℚ^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<Self, PolyError> {
        if matrix.rows() != matrix.cols() {
            return Err(PolyError::Shape {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        Ok(LinearMap { matrix })
    }

    pub fn identity(n: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        self.matrix.inverse().map(|matrix| LinearMap { matrix })
    }

    pub fn is_invertible(&self) -> bool {
        !self.matrix.determinant().is_zero()
    }
}

impl Polynomial {
    /// `f ∘ A`, i.e. substitutes `x_i ↦ Σ_j a_ij x_j`.
    pub fn apply_linear(&self, map: &LinearMap) -> Result<Polynomial, PolyError> {
        let n = self.nvars();
        if map.dim() != n {
            return Err(PolyError::Shape {
                expected: n,
                found: map.dim(),
            });
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                let terms = (0..n).map(|j| (Monomial::var(n, j), map.matrix.get(i, j).clone()));
                Polynomial::from_terms(self.ring(), terms)
            })
            .collect::<Result<_, _>>()?;
        self.substitute(&images)
    }
}
