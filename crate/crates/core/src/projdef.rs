//! First-order deformations of projective hypersurfaces.
//!
//! An infinitesimal projective change of coordinates `I + t·M` with
//! `M ∈ sl_n` moves a form `F` by `δ_M F = Σ_{i,j} m_ij x_j ∂F/∂x_i`. A
//! first-order deformation `F + t·G` is trivial exactly when
//! `G = δ_M F + c·F` for some `M` and `c`; [`triviality_test`] decides this
//! by exact linear algebra on monomial coefficients.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::linalg::Matrix;
use crate::polyring::{same_ring, Monomial, MonomialOrdering, PolyError, Polynomial};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProjDefError {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has nonzero trace {trace}")]
    NotTraceless { trace: Rational },
    #[error("{which} is not homogeneous")]
    NotHomogeneous { which: &'static str },
    #[error("degree mismatch: F has degree {f}, G has degree {g}")]
    DegreeMismatch { f: u32, g: u32 },
    #[error("F must be nonzero")]
    ZeroForm,
    #[error("matrix is {found}x{found} but the ring has {expected} variables")]
    Shape { expected: usize, found: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// An element of `sl_n(ℚ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracelessMatrix(Matrix);

impl TracelessMatrix {
    pub fn new(m: Matrix) -> Result<Self, ProjDefError> {
        if m.rows() != m.cols() {
            return Err(ProjDefError::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let trace: Rational = (0..m.rows()).map(|i| m.get(i, i).clone()).sum();
        if !trace.is_zero() {
            return Err(ProjDefError::NotTraceless { trace });
        }
        Ok(TracelessMatrix(m))
    }

    pub fn zero(n: usize) -> Self {
        TracelessMatrix(Matrix::zeros(n, n))
    }

    /// `c·E_ij` for `i ≠ j`.
    pub fn elementary(n: usize, i: usize, j: usize, c: Rational) -> Result<Self, ProjDefError> {
        let mut m = Matrix::zeros(n, n);
        m.set(i, j, c);
        TracelessMatrix::new(m)
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.0.get(i, j)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        (0..self.dim()).all(|i| self.0.row(i).iter().all(Zero::is_zero))
    }
}

fn degree_of(f: &Polynomial, which: &'static str) -> Result<Option<u32>, ProjDefError> {
    let h = f.is_homogeneous().ok_or(ProjDefError::NotHomogeneous { which })?;
    Ok((!h.degenerate).then_some(h.degree))
}

/// `δ_M F = Σ_{i,j} m_ij x_j ∂F/∂x_i`.
pub fn sl_action(m: &TracelessMatrix, f: &Polynomial) -> Result<Polynomial, ProjDefError> {
    degree_of(f, "F")?;
    let n = f.nvars();
    if m.dim() != n {
        return Err(ProjDefError::Shape {
            expected: n,
            found: m.dim(),
        });
    }
    let mut out = Polynomial::zero(f.ring());
    for i in 0..n {
        let d = f.differentiate(i)?;
        if d.is_zero() {
            continue;
        }
        for j in 0..n {
            let c = m.get(i, j);
            if c.is_zero() {
                continue;
            }
            out = &out + &d.mul_monomial(&Monomial::var(n, j), c);
        }
    }
    Ok(out)
}

/// Unknown of the triviality system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Unknown {
    /// Entry `m_ij`; `m_nn` is eliminated through the trace condition.
    Entry(usize, usize),
    /// The rescaling coefficient `c`.
    Scale,
}

/// The linear system `δ_M F + c·F = G` on monomial coefficients.
///
/// Rows are all degree-`d` monomials in decreasing degrevlex order; columns
/// are the entries `m_ij` in lexicographic order without `m_nn`, then `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialitySystem {
    pub rows: Vec<Monomial>,
    pub unknowns: Vec<Unknown>,
    pub matrix: Matrix,
    pub rhs: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrivialityVerdict {
    Trivial {
        m: TracelessMatrix,
        c: Rational,
    },
    /// `certificate` is a linear functional `φ = Σ λ_u u` on forms of degree
    /// `d`, pairing by `φ(H) = Σ λ_u · coeff_u(H)`. It kills every `δ_M F + c·F`
    /// and `φ(G) ≠ 0`. `monomial` is the first row at which the system became
    /// inconsistent.
    Nontrivial {
        monomial: Monomial,
        certificate: Polynomial,
    },
}

impl TrivialityVerdict {
    pub fn is_trivial(&self) -> bool {
        matches!(self, TrivialityVerdict::Trivial { .. })
    }
}

/// `Σ_u coeff_u(φ) · coeff_u(h)`.
pub fn pairing(functional: &Polynomial, h: &Polynomial) -> Rational {
    functional
        .terms()
        .map(|(m, c)| c * h.coefficient(m))
        .sum()
}

fn check_pair(f: &Polynomial, g: &Polynomial) -> Result<u32, ProjDefError> {
    if !same_ring(f.ring(), g.ring()) {
        return Err(PolyError::RingMismatch.into());
    }
    let df = degree_of(f, "F")?.ok_or(ProjDefError::ZeroForm)?;
    if let Some(dg) = degree_of(g, "G")? {
        if dg != df {
            return Err(ProjDefError::DegreeMismatch { f: df, g: dg });
        }
    }
    Ok(df)
}

fn unknown_column(f: &Polynomial, u: Unknown) -> Result<Polynomial, ProjDefError> {
    let n = f.nvars();
    match u {
        Unknown::Scale => Ok(f.clone()),
        Unknown::Entry(i, j) if i == j => {
            // m_nn = −Σ m_ii
            let last = n - 1;
            let a = f.differentiate(i)?.mul_monomial(&Monomial::var(n, i), &Rational::one());
            let b = f.differentiate(last)?.mul_monomial(&Monomial::var(n, last), &Rational::one());
            Ok(&a - &b)
        }
        Unknown::Entry(i, j) => Ok(f.differentiate(i)?.mul_monomial(&Monomial::var(n, j), &Rational::one())),
    }
}

pub fn triviality_system(f: &Polynomial, g: &Polynomial) -> Result<TrivialitySystem, ProjDefError> {
    let d = check_pair(f, g)?;
    let n = f.nvars();
    let ord = MonomialOrdering::degrevlex(n);
    let mut rows = Monomial::all_of_degree(n, d);
    rows.sort_by(|a, b| ord.cmp(b, a));
    let mut unknowns: Vec<Unknown> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !(i == n - 1 && j == n - 1) {
                unknowns.push(Unknown::Entry(i, j));
            }
        }
    }
    unknowns.push(Unknown::Scale);
    let columns = unknowns
        .iter()
        .map(|&u| unknown_column(f, u))
        .collect::<Result<Vec<_>, _>>()?;
    let data: Vec<Vec<Rational>> = rows
        .iter()
        .map(|m| columns.iter().map(|c| c.coefficient(m)).collect())
        .collect();
    let matrix = if data.is_empty() {
        Matrix::zeros(0, unknowns.len())
    } else {
        Matrix::from_rows(data).expect("rows have equal length")
    };
    let rhs = rows.iter().map(|m| g.coefficient(m)).collect();
    Ok(TrivialitySystem {
        rows,
        unknowns,
        matrix,
        rhs,
    })
}

struct EchelonRow {
    pivot: usize,
    coeffs: Vec<Rational>,
    rhs: Rational,
    combo: Vec<Rational>,
}

fn sub_scaled(dst: &mut [Rational], src: &[Rational], f: &Rational) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= f * s;
        }
    }
}

/// Column order used for pivoting: `c` first, then the entries.
fn pivot_order(sys: &TrivialitySystem) -> Vec<usize> {
    let scale = sys.unknowns.len() - 1;
    core::iter::once(scale).chain(0..scale).collect()
}

pub fn triviality_test(f: &Polynomial, g: &Polynomial) -> Result<TrivialityVerdict, ProjDefError> {
    let sys = triviality_system(f, g)?;
    let order = pivot_order(&sys);
    let ncols = sys.unknowns.len();
    let nrows = sys.rows.len();
    let mut basis: Vec<EchelonRow> = Vec::new();
    for k in 0..nrows {
        let mut coeffs: Vec<Rational> = order.iter().map(|&c| sys.matrix.get(k, c).clone()).collect();
        let mut rhs = sys.rhs[k].clone();
        let mut combo = vec![Rational::zero(); nrows];
        combo[k] = Rational::one();
        for b in &basis {
            let factor = coeffs[b.pivot].clone();
            if factor.is_zero() {
                continue;
            }
            sub_scaled(&mut coeffs, &b.coeffs, &factor);
            sub_scaled(&mut combo, &b.combo, &factor);
            rhs -= &factor * &b.rhs;
        }
        match coeffs.iter().position(|c| !c.is_zero()) {
            Some(pivot) => {
                let inv = coeffs[pivot].recip();
                for c in coeffs.iter_mut().chain(combo.iter_mut()) {
                    *c *= &inv;
                }
                rhs *= &inv;
                basis.push(EchelonRow {
                    pivot,
                    coeffs,
                    rhs,
                    combo,
                });
            }
            None if rhs.is_zero() => {}
            None => {
                let certificate = Polynomial::from_terms(
                    f.ring(),
                    sys.rows.iter().cloned().zip(combo).filter(|(_, c)| !c.is_zero()),
                )?;
                return Ok(TrivialityVerdict::Nontrivial {
                    monomial: sys.rows[k].clone(),
                    certificate,
                });
            }
        }
    }
    // each row vanishes at earlier pivots, so solve from the last row back
    let mut x = vec![Rational::zero(); ncols];
    for b in basis.iter().rev() {
        let mut v = b.rhs.clone();
        for (c, a) in b.coeffs.iter().enumerate() {
            if c != b.pivot && !a.is_zero() {
                v -= a * &x[c];
            }
        }
        x[b.pivot] = v;
    }
    let mut values = vec![Rational::zero(); ncols];
    for (pos, &col) in order.iter().enumerate() {
        values[col] = x[pos].clone();
    }
    let n = f.nvars();
    let mut m = Matrix::zeros(n, n);
    let mut trace = Rational::zero();
    for (u, v) in sys.unknowns.iter().zip(&values) {
        if let Unknown::Entry(i, j) = *u {
            if i == j {
                trace += v;
            }
            m.set(i, j, v.clone());
        }
    }
    m.set(n - 1, n - 1, -trace);
    let m = TracelessMatrix::new(m)?;
    let c = values[ncols - 1].clone();
    let check = &sl_action(&m, f)? + &f.scale(&c);
    assert_eq!(&check, g, "triviality witness failed verification");
    Ok(TrivialityVerdict::Trivial { m, c })
}

/// A cone over `Y` is non-rigid whenever `H¹(Y, T_Y) ≠ 0`.
pub fn cone_nonrigid(h1_ty_dim: u64) -> bool {
    h1_ty_dim > 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmoothCurveDims {
    pub dim_t1: u64,
    pub h0_omega_sq: u64,
    pub rigid: bool,
}

/// First-order deformations of a smooth projective curve of genus `g`:
/// `dim H¹(X, T_X) = h⁰(X, ω_X^{⊗2})`.
pub fn smooth_curve_table(g: u64) -> SmoothCurveDims {
    let dim = match g {
        0 => 0,
        1 => 1,
        _ => 3 * g - 3,
    };
    SmoothCurveDims {
        dim_t1: dim,
        h0_omega_sq: dim,
        rigid: g == 0,
    }
}
