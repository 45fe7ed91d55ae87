//! Exact first-order deformation theory of singular curves and hypersurfaces.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is computed over
//! the rationals with arbitrary precision:
//!
//! - [`polyring`]: sparse multivariate polynomials, monomial orderings,
//!   parsing, differentiation and linear substitutions.
//! - [`linalg`]: dense exact matrices (rank, reduced echelon form, determinants).
//! - [`gbasis`]: Gröbner bases (Buchberger) and local standard bases (Mora),
//!   for ideals and submodules of free modules, with quotient dimensions.
//! - [`singularity`]: Jacobians, singular loci, Tjurina and Milnor numbers,
//!   the T¹ module of complete intersections.
//! - [`projdef`]: the infinitesimal `sl_n` action on homogeneous forms and the
//!   triviality test for first-order deformations of projective hypersurfaces.
//! - [`nodal`]: dimension formulas for curves glued from projective lines and
//!   the evaluation-matrix rank analysis on ℙ¹.
#![no_std]

extern crate alloc;

pub mod gbasis;
pub mod linalg;
pub mod nodal;
pub mod polyring;
pub mod projdef;
pub mod singularity;

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

pub use gbasis::{Ideal, Limits, QuotientDimension, StandardBasis};
pub use polyring::{LinearMap, Monomial, MonomialOrdering, Polynomial, Ring};
