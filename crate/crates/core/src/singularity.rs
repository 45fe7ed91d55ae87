//! Local deformation theory of hypersurfaces and complete intersections.
//!
//! All local computations translate the base point to the origin and work
//! with Mora standard bases under the local ordering, i.e. in the local ring
//! `ℚ[x]_(x)`. For `X = V(f_1, …, f_r)` a complete intersection, the first
//! order deformation space at `p` is
//!
//! ```text
//! T¹_{X,p} = O^r / (J·O^n + (f_1, …, f_r)·O^r)
//! ```
//!
//! where `J` is the Jacobian matrix; for a hypersurface this is the Tjurina
//! algebra `O / (f, ∂f/∂x_1, …, ∂f/∂x_n)`.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::gbasis::{
    module_standard_basis, standard_basis, FreeModuleElement, GbError, Ideal, Limits, QuotientDimension,
    StandardBasis, Submodule,
};
use crate::linalg::Matrix;
use crate::polyring::{same_ring, Monomial, MonomialOrdering, PolyError, Polynomial};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SingularityError {
    #[error("no defining equations given")]
    NoEquations,
    #[error("defining equation {index} is the zero polynomial")]
    ZeroEquation { index: usize },
    #[error("point has {found} coordinates but the ring has {expected} variables")]
    PointShape { expected: usize, found: usize },
    #[error("point is not on the variety: equation {index} evaluates to {value}")]
    NotOnVariety { index: usize, value: Rational },
    #[error("a complete intersection needs r <= n equations, got r = {r}, n = {n}")]
    TooManyEquations { r: usize, n: usize },
    #[error("equation {index} lies in the ideal of the previous ones, not a regular sequence")]
    NotRegularSequence { index: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Basis(#[from] GbError),
}

/// A point with rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSpec(Vec<Rational>);

impl PointSpec {
    pub fn new(coordinates: Vec<Rational>) -> Self {
        PointSpec(coordinates)
    }

    pub fn origin(n: usize) -> Self {
        PointSpec(alloc::vec![Rational::zero(); n])
    }

    pub fn coordinates(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// `J_f = (∂f_i/∂x_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianMatrix {
    entries: Vec<Vec<Polynomial>>,
    cols: usize,
}

impl JacobianMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i]
    }

    pub fn evaluate(&self, point: &PointSpec) -> Result<Matrix, PolyError> {
        let rows = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.evaluate(point.coordinates())).collect())
            .collect::<Result<Vec<Vec<Rational>>, _>>()?;
        if rows.is_empty() {
            return Ok(Matrix::zeros(0, self.cols));
        }
        Ok(Matrix::from_rows(rows).expect("jacobian rows have equal length"))
    }
}

/// First-order deformation verdict at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum T1Verdict {
    /// `T¹ = 0`.
    Smooth,
    /// `0 < dim T¹ = tau < ∞`.
    IsolatedSingular { tau: usize },
    /// `T¹` is infinite-dimensional; the singular locus has the given
    /// positive dimension through the point.
    NonIsolated { sing_dim: usize },
}

impl T1Verdict {
    fn from_dimension(d: QuotientDimension) -> T1Verdict {
        match d {
            QuotientDimension::Finite(0) => T1Verdict::Smooth,
            QuotientDimension::Finite(tau) => T1Verdict::IsolatedSingular { tau },
            QuotientDimension::Infinite(sing_dim) => T1Verdict::NonIsolated { sing_dim },
        }
    }

    /// `dim T¹` when finite (0 at smooth points).
    pub fn tau(&self) -> Option<usize> {
        match *self {
            T1Verdict::Smooth => Some(0),
            T1Verdict::IsolatedSingular { tau } => Some(tau),
            T1Verdict::NonIsolated { .. } => None,
        }
    }

    pub fn is_smooth(&self) -> bool {
        *self == T1Verdict::Smooth
    }

    /// Rigid germs are exactly those with `T¹ = 0`.
    pub fn is_rigid(&self) -> bool {
        self.is_smooth()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T1Result {
    pub verdict: T1Verdict,
    /// Standard monomials `(component, monomial)` spanning `T¹` when it is
    /// finite-dimensional, in coordinates centred at the point, ordered by
    /// component and increasing degree.
    pub basis: Option<Vec<(usize, Monomial)>>,
}

impl T1Result {
    fn from_basis(b: &StandardBasis) -> T1Result {
        let verdict = T1Verdict::from_dimension(b.quotient_dimension());
        let basis = match verdict {
            T1Verdict::NonIsolated { .. } => None,
            _ => b.standard_monomials(),
        };
        T1Result { verdict, basis }
    }
}

/// Composite report combining the Jacobian criterion with the T¹ verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointReport {
    pub on_variety: bool,
    pub codimension: usize,
    pub jacobian_rank: usize,
    /// `None` when the point is not on the variety.
    pub verdict: Option<T1Verdict>,
    /// Reduced degrevlex Gröbner basis of the singular-locus ideal, sorted by
/// decreasing leading monomial.
    pub singular_locus: Vec<Polynomial>,
}

fn check_equations(fs: &[Polynomial]) -> Result<(), SingularityError> {
    let first = fs.first().ok_or(SingularityError::NoEquations)?;
    if fs.iter().any(|f| !same_ring(f.ring(), first.ring())) {
        return Err(PolyError::RingMismatch.into());
    }
    Ok(())
}

pub fn jacobian(fs: &[Polynomial]) -> Result<JacobianMatrix, SingularityError> {
    check_equations(fs)?;
    let n = fs[0].nvars();
    let entries = fs
        .iter()
        .map(|f| (0..n).map(|j| f.differentiate(j)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(JacobianMatrix { entries, cols: n })
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Determinant by cofactor expansion along the first row.
fn poly_determinant(m: &[Vec<&Polynomial>], one: &Polynomial) -> Polynomial {
    match m.len() {
        0 => one.clone(),
        1 => m[0][0].clone(),
        2 => &(m[0][0] * m[1][1]) - &(m[0][1] * m[1][0]),
        size => {
            let mut acc = Polynomial::zero(one.ring());
            for col in 0..size {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<&Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, p)| *p)
                            .collect()
                    })
                    .collect();
                let term = m[0][col] * &poly_determinant(&minor, one);
                acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Ideal generated by all `size × size` minors; the zero ideal when no such
/// minor exists.
pub fn minors(j: &JacobianMatrix, size: usize) -> Ideal {
    let ring = j.entries[0][0].ring().clone();
    if size > j.rows() || size > j.cols() {
        return Ideal::zero(&ring);
    }
    let one = Polynomial::one(&ring);
    let mut gens = Vec::new();
    for rows in combinations(j.rows(), size) {
        for cols in combinations(j.cols(), size) {
            let sub: Vec<Vec<&Polynomial>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| &j.entries[r][c]).collect())
                .collect();
            let d = poly_determinant(&sub, &one);
            if !d.is_zero() && !gens.contains(&d) {
                gens.push(d);
            }
        }
    }
    Ideal::new(&ring, gens).expect("minors share the ring")
}

/// `(f_1, …, f_r) + I_r(J_f)`.
pub fn singular_locus_ideal(fs: &[Polynomial]) -> Result<Ideal, SingularityError> {
    let j = jacobian(fs)?;
    let eqs = Ideal::new(fs[0].ring(), fs.to_vec())?;
    Ok(eqs.sum(&minors(&j, fs.len()))?)
}

fn check_point(fs: &[Polynomial], p: &PointSpec) -> Result<(), SingularityError> {
    let n = fs[0].nvars();
    if p.coordinates().len() != n {
        return Err(SingularityError::PointShape {
            expected: n,
            found: p.coordinates().len(),
        });
    }
    for (index, f) in fs.iter().enumerate() {
        if f.is_zero() {
            return Err(SingularityError::ZeroEquation { index });
        }
        let value = f.evaluate(p.coordinates())?;
        if !value.is_zero() {
            return Err(SingularityError::NotOnVariety { index, value });
        }
    }
    Ok(())
}

fn centred(fs: &[Polynomial], p: &PointSpec) -> Result<Vec<Polynomial>, SingularityError> {
    check_equations(fs)?;
    check_point(fs, p)?;
    Ok(fs
        .iter()
        .map(|f| f.translate(p.coordinates()))
        .collect::<Result<Vec<_>, _>>()?)
}

fn local_basis(gens: Vec<Polynomial>, limits: &Limits) -> Result<StandardBasis, SingularityError> {
    let ring = gens[0].ring().clone();
    let ord = MonomialOrdering::local(ring.nvars());
    Ok(standard_basis(&Ideal::new(&ring, gens)?, &ord, limits)?)
}

fn tjurina_at_origin(g: &Polynomial, limits: &Limits) -> Result<T1Result, SingularityError> {
    let mut gens = alloc::vec![g.clone()];
    for i in 0..g.nvars() {
        gens.push(g.differentiate(i)?);
    }
    Ok(T1Result::from_basis(&local_basis(gens, limits)?))
}

/// Tjurina algebra `O_p / (f, ∂f/∂x_1, …, ∂f/∂x_n)` of a hypersurface.
pub fn tjurina_hypersurface(f: &Polynomial, p: &PointSpec, limits: &Limits) -> Result<T1Result, SingularityError> {
    let g = centred(core::slice::from_ref(f), p)?;
    tjurina_at_origin(&g[0], limits)
}

/// Milnor algebra `O_p / (∂f/∂x_1, …, ∂f/∂x_n)`.
pub fn milnor_number(f: &Polynomial, p: &PointSpec, limits: &Limits) -> Result<QuotientDimension, SingularityError> {
    let g = centred(core::slice::from_ref(f), p)?.remove(0);
    let gens = (0..g.nvars())
        .map(|i| g.differentiate(i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(local_basis(gens, limits)?.quotient_dimension())
}

fn ci_prepare(fs: &[Polynomial], p: &PointSpec, limits: &Limits) -> Result<Vec<Polynomial>, SingularityError> {
    check_equations(fs)?;
    let (r, n) = (fs.len(), fs[0].nvars());
    if r > n {
        return Err(SingularityError::TooManyEquations { r, n });
    }
    let gs = centred(fs, p)?;
    for index in 1..r {
        let prev = local_basis(gs[..index].to_vec(), limits)?;
        if prev.contains(&gs[index])? {
            return Err(SingularityError::NotRegularSequence { index });
        }
    }
    Ok(gs)
}

fn ci_module_at_origin(gs: &[Polynomial], limits: &Limits) -> Result<T1Result, SingularityError> {
    let ring = gs[0].ring().clone();
    let (r, n) = (gs.len(), ring.nvars());
    let j = jacobian(gs)?;
    let mut gens = Vec::with_capacity(n + r * r);
    for col in 0..n {
        let column = (0..r).map(|row| j.entry(row, col).clone()).collect();
        gens.push(FreeModuleElement::new(&ring, column)?);
    }
    for g in gs {
        for k in 0..r {
            gens.push(FreeModuleElement::scaled_unit(g, r, k));
        }
    }
    let module = Submodule::new(&ring, r, gens)?;
    let b = module_standard_basis(&module, &MonomialOrdering::local(n), limits)?;
    Ok(T1Result::from_basis(&b))
}

/// `T¹` of a complete intersection `V(f_1, …, f_r)` at `p`. The caller
/// asserts that the equations form a regular sequence at `p`; only the
/// cheap check that no `f_i` lies in the ideal of its predecessors is made.
/// A single equation goes through the hypersurface path.
pub fn t1_ci_dimension(fs: &[Polynomial], p: &PointSpec, limits: &Limits) -> Result<T1Result, SingularityError> {
    let gs = ci_prepare(fs, p, limits)?;
    if gs.len() == 1 {
        return tjurina_at_origin(&gs[0], limits);
    }
    ci_module_at_origin(&gs, limits)
}

/// Same as [`t1_ci_dimension`] but always builds the cokernel module, also
/// for hypersurfaces.
pub fn t1_ci_module_path(fs: &[Polynomial], p: &PointSpec, limits: &Limits) -> Result<T1Result, SingularityError> {
    let gs = ci_prepare(fs, p, limits)?;
    ci_module_at_origin(&gs, limits)
}

/// Rank of the Jacobian matrix evaluated at `p`.
pub fn jacobian_rank_at(fs: &[Polynomial], p: &PointSpec) -> Result<usize, SingularityError> {
    let j = jacobian(fs)?;
    if p.coordinates().len() != j.cols() {
        return Err(SingularityError::PointShape {
            expected: j.cols(),
            found: p.coordinates().len(),
        });
    }
    Ok(j.evaluate(p)?.rank())
}

/// Krull dimension of the singular locus in the local ring at `p`; `None`
/// when `p` is not in the singular locus.
pub fn singular_locus_local_dimension(
    fs: &[Polynomial],
    p: &PointSpec,
    limits: &Limits,
) -> Result<Option<usize>, SingularityError> {
    let gs = centred(fs, p)?;
    let ideal = singular_locus_ideal(&gs)?;
    let gens = ideal.generators().to_vec();
    let b = local_basis(gens, limits)?;
    if b.is_whole_module() {
        return Ok(None);
    }
    Ok(Some(b.krull_dimension()))
}

/// Reduced degrevlex Gröbner basis of the singular-locus ideal, sorted by
/// decreasing leading monomial.
pub fn singular_locus_basis(fs: &[Polynomial], limits: &Limits) -> Result<Vec<Polynomial>, SingularityError> {
    let ideal = singular_locus_ideal(fs)?;
    let ord = MonomialOrdering::degrevlex(ideal.ring().nvars());
    let mut polys = standard_basis(&ideal, &ord, limits)?.polynomials();
    polys.sort_by(|a, b| {
        let la = a.leading_term(&ord).map(|t| t.0);
        let lb = b.leading_term(&ord).map(|t| t.0);
        match (la, lb) {
            (Some(x), Some(y)) => ord.cmp(y, x),
            _ => core::cmp::Ordering::Equal,
        }
    });
    Ok(polys)
}

pub fn classify_point(fs: &[Polynomial], p: &PointSpec, limits: &Limits) -> Result<PointReport, SingularityError> {
    check_equations(fs)?;
    let jacobian_rank = jacobian_rank_at(fs, p)?;
    let on_variety = match check_point(fs, p) {
        Ok(()) => true,
        Err(SingularityError::NotOnVariety { .. }) => false,
        Err(e) => return Err(e),
    };
    let verdict = if on_variety {
        Some(t1_ci_dimension(fs, p, limits)?.verdict)
    } else {
        None
    };
    Ok(PointReport {
        on_variety,
        codimension: fs.len(),
        jacobian_rank,
        verdict,
        singular_locus: singular_locus_basis(fs, limits)?,
    })
}
