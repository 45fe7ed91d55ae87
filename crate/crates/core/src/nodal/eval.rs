//! Evaluation of the quadratic sections `1, t, t²` of `O(2)` at marked points.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::NodalError;
use crate::linalg::Matrix;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MarkedPoint {
    Finite(Rational),
    Infinity,
}

impl MarkedPoint {
    /// `(1, t, t²)`, or `(0, 0, 1)` at infinity.
    pub fn column(&self) -> [Rational; 3] {
        match self {
            MarkedPoint::Finite(t) => [Rational::one(), t.clone(), t * t],
            MarkedPoint::Infinity => [Rational::zero(), Rational::zero(), Rational::one()],
        }
    }
}

/// Pairwise distinct points of `ℙ¹ = ℚ ∪ {∞}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedPointList(Vec<MarkedPoint>);

impl MarkedPointList {
    pub fn new(points: Vec<MarkedPoint>) -> Result<Self, NodalError> {
        for (index, p) in points.iter().enumerate() {
            if points[..index].contains(p) {
                return Err(NodalError::DuplicateMarkedPoint { index });
            }
        }
        Ok(MarkedPointList(points))
    }

    pub fn points(&self) -> &[MarkedPoint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The `3 × k` matrix whose columns are the evaluations at the points.
pub fn eval_matrix(pts: &MarkedPointList) -> Matrix {
    let mut m = Matrix::zeros(3, pts.len());
    for (j, p) in pts.points().iter().enumerate() {
        for (i, v) in p.column().into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub columns: [usize; 3],
    pub minor: Rational,
}

/// Why the evaluation matrix has rank below 3. Distinct points rule out any
/// other degeneration, since three distinct columns are always independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degeneracy {
    /// No points (`g = 0`): the matrix is empty.
    Empty,
    /// One or two points (`g = 1`).
    FewPoints,
}

impl Degeneracy {
    pub fn label(&self) -> &'static str {
        match self {
            Degeneracy::Empty => "g=0",
            Degeneracy::FewPoints => "g=1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankAnalysis {
    pub rank: usize,
    /// The lexicographically first column triple with nonzero minor.
    pub witness: Option<Witness>,
    pub degeneracy: Option<Degeneracy>,
}

pub fn eval_rank_analysis(pts: &MarkedPointList) -> RankAnalysis {
    let m = eval_matrix(pts);
    let rank = m.rank();
    let k = pts.len();
    if rank < 3 {
        let degeneracy = if k == 0 { Degeneracy::Empty } else { Degeneracy::FewPoints };
        return RankAnalysis {
            rank,
            witness: None,
            degeneracy: Some(degeneracy),
        };
    }
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                let minor = m.select_columns(&[a, b, c]).determinant();
                if !minor.is_zero() {
                    return RankAnalysis {
                        rank,
                        witness: Some(Witness {
                            columns: [a, b, c],
                            minor,
                        }),
                        degeneracy: None,
                    };
                }
            }
        }
    }
    unreachable!("rank 3 without a nonzero 3x3 minor")
}
