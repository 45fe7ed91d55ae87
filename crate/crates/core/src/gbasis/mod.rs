//! Standard bases of ideals and of submodules of free modules.
//!
//! Global orderings run Buchberger's algorithm; local orderings run Mora's
//! tangent-cone algorithm, whose weak normal form works in the localization
//! of the polynomial ring at the origin. Modules use the position-over-term
//! extension of the ambient ordering.

mod dimension;
mod engine;
mod vector;

use alloc::sync::Arc;
use alloc::vec::Vec;

use engine::Elem;
use vector::{ModuleOrder, Term, Vector};

use crate::polyring::{same_ring, Monomial, MonomialOrdering, Polynomial, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum GbError {
    #[error("critical-pair queue exceeded {limit} entries")]
    PairLimit { limit: usize },
    #[error("degree cap {limit} exceeded")]
    DegreeLimit { limit: u32 },
    #[error("generators live in different rings")]
    RingMismatch,
    #[error("free module rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("ordering has {found} variables but the ring has {expected}")]
    OrderingMismatch { expected: usize, found: usize },
    #[error("rings with more than 64 variables are not supported")]
    TooManyVariables,
}

impl GbError {
    /// Whether this is a resource-cap abort rather than an input problem.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, GbError::PairLimit { .. } | GbError::DegreeLimit { .. })
    }
}

/// Resource caps for standard-basis computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_pairs: usize,
    pub max_degree: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 100_000,
            max_degree: 64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuotientDimension {
    /// Finite vector-space dimension of the quotient.
    Finite(usize),
    /// Infinite-dimensional quotient of the given Krull dimension (≥ 1).
    Infinite(usize),
}

impl QuotientDimension {
    pub fn is_finite(&self) -> bool {
        matches!(self, QuotientDimension::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match *self {
            QuotientDimension::Finite(d) => Some(d),
            QuotientDimension::Infinite(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Ideal, GbError> {
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(GbError::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// `I + J`.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal, GbError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(GbError::RingMismatch);
        }
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        Ok(Ideal {
            ring: self.ring.clone(),
            generators,
        })
    }
}

/// Element of the free module `R^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModuleElement {
    ring: Arc<Ring>,
    components: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn new(ring: &Arc<Ring>, components: Vec<Polynomial>) -> Result<Self, GbError> {
        if components.iter().any(|c| !same_ring(c.ring(), ring)) {
            return Err(GbError::RingMismatch);
        }
        Ok(FreeModuleElement {
            ring: ring.clone(),
            components,
        })
    }

    /// `f · e_i` in `R^rank`.
    pub fn scaled_unit(f: &Polynomial, rank: usize, i: usize) -> Self {
        let mut components = alloc::vec![Polynomial::zero(f.ring()); rank];
        components[i] = f.clone();
        FreeModuleElement {
            ring: f.ring().clone(),
            components,
        }
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    fn to_vector(&self, ord: &ModuleOrder) -> Vector {
        let terms = self
            .components
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| {
                p.terms().map(move |(m, c)| Term {
                    comp,
                    mon: m.clone(),
                    coeff: c.clone(),
                })
            })
            .collect();
        Vector::from_unsorted(terms, ord)
    }

    fn from_vector(ring: &Arc<Ring>, rank: usize, v: &Vector) -> Self {
        let mut components = alloc::vec![Polynomial::zero(ring); rank];
        for t in &v.terms {
            components[t.comp].add_term(t.mon.clone(), t.coeff.clone());
        }
        FreeModuleElement {
            ring: ring.clone(),
            components,
        }
    }
}

/// Submodule of `R^rank` given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule {
    ring: Arc<Ring>,
    rank: usize,
    generators: Vec<FreeModuleElement>,
}

impl Submodule {
    pub fn new(ring: &Arc<Ring>, rank: usize, generators: Vec<FreeModuleElement>) -> Result<Self, GbError> {
        for g in &generators {
            if !same_ring(&g.ring, ring) {
                return Err(GbError::RingMismatch);
            }
            if g.rank() != rank {
                return Err(GbError::RankMismatch {
                    expected: rank,
                    found: g.rank(),
                });
            }
        }
        Ok(Submodule {
            ring: ring.clone(),
            rank,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[FreeModuleElement] {
        &self.generators
    }
}

/// A standard basis under a fixed ordering; immutable once computed.
#[derive(Debug, Clone)]
pub struct StandardBasis {
    ring: Arc<Ring>,
    order: ModuleOrder,
    rank: usize,
    elements: Vec<Elem>,
    limits: Limits,
}

fn check_ordering(ring: &Ring, ord: &MonomialOrdering) -> Result<(), GbError> {
    if ord.nvars() != ring.nvars() {
        return Err(GbError::OrderingMismatch {
            expected: ring.nvars(),
            found: ord.nvars(),
        });
    }
    if ring.nvars() > 64 {
        return Err(GbError::TooManyVariables);
    }
    Ok(())
}

pub fn standard_basis(ideal: &Ideal, ord: &MonomialOrdering, limits: &Limits) -> Result<StandardBasis, GbError> {
    check_ordering(&ideal.ring, ord)?;
    let order = ModuleOrder { base: ord.clone() };
    let gens = ideal
        .generators
        .iter()
        .map(|g| FreeModuleElement::scaled_unit(g, 1, 0).to_vector(&order))
        .collect();
    finish(ideal.ring.clone(), order, 1, gens, limits, true)
}

pub fn module_standard_basis(module: &Submodule, ord: &MonomialOrdering, limits: &Limits) -> Result<StandardBasis, GbError> {
    check_ordering(&module.ring, ord)?;
    let order = ModuleOrder { base: ord.clone() };
    let gens = module.generators.iter().map(|g| g.to_vector(&order)).collect();
    finish(module.ring.clone(), order, module.rank, gens, limits, module.rank == 1)
}

fn finish(
    ring: Arc<Ring>,
    order: ModuleOrder,
    rank: usize,
    gens: Vec<Vector>,
    limits: &Limits,
    ideal: bool,
) -> Result<StandardBasis, GbError> {
    let basis = engine::minimize(engine::complete(gens, &order, limits, ideal)?);
    let elements = if order.base.is_local() {
        basis
            .into_iter()
            .map(|mut e| {
                e.v.make_monic();
                Elem::new(e.v)
            })
            .collect()
    } else {
        engine::interreduce(basis, &order, limits)?
    };
    Ok(StandardBasis {
        ring,
        order,
        rank,
        elements,
        limits: *limits,
    })
}

impl StandardBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn ordering(&self) -> &MonomialOrdering {
        &self.order.base
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Basis elements as polynomials (component 0 of each element).
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.vectors()
            .into_iter()
            .map(|v| v.components[0].clone())
            .collect()
    }

    pub fn vectors(&self) -> Vec<FreeModuleElement> {
        self.elements
            .iter()
            .map(|e| FreeModuleElement::from_vector(&self.ring, self.rank, &e.v))
            .collect()
    }

    /// Leading module monomials `(component, monomial)`.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elements.iter().map(|e| (e.comp, e.mon.clone())).collect()
    }

    fn leads_in(&self, comp: usize) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter(|e| e.comp == comp)
            .map(|e| e.mon.clone())
            .collect()
    }

    /// True when the quotient is zero: every component has leading term 1.
    pub fn is_whole_module(&self) -> bool {
        (0..self.rank).all(|c| self.leads_in(c).iter().any(Monomial::is_one))
    }

    fn vector_of(&self, f: &FreeModuleElement) -> Result<Vector, GbError> {
        if !same_ring(&f.ring, &self.ring) {
            return Err(GbError::RingMismatch);
        }
        if f.rank() != self.rank {
            return Err(GbError::RankMismatch {
                expected: self.rank,
                found: f.rank(),
            });
        }
        Ok(f.to_vector(&self.order))
    }

    /// Remainder with no term divisible by a leading term; zero iff `f`
    /// lies in the submodule (of the local ring, for local orderings).
    ///
    /// For local orderings with a finite quotient the result is the unique
    /// representative in the span of the standard monomials. With an infinite
    /// quotient the tail is reduced by repeated weak normal forms, which
    /// represents `f` only up to units of the local ring and fails with a
    /// degree error if the tail does not terminate within the cap.
    pub fn normal_form_vector(&self, f: &FreeModuleElement) -> Result<FreeModuleElement, GbError> {
        let v = self.vector_of(f)?;
        let r = if !self.order.base.is_local() {
            engine::full_reduce(v, &self.elements, &self.order, &self.limits)?
        } else if let Some(corner) = self.highest_corner_degree() {
            engine::truncated_reduce(v, &self.elements, &self.order, corner)
        } else {
            engine::mora_full_reduce(v, &self.elements, &self.order, &self.limits)?
        };
        Ok(FreeModuleElement::from_vector(&self.ring, self.rank, &r))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, GbError> {
        let v = FreeModuleElement::scaled_unit(f, 1, 0);
        if self.rank != 1 {
            return Err(GbError::RankMismatch {
                expected: self.rank,
                found: 1,
            });
        }
        Ok(self.normal_form_vector(&v)?.components[0].clone())
    }

    /// Leading term of the (weak) normal form is irreducible; only
    /// zero-ness carries meaning for local orderings.
    pub fn weak_normal_form_vector(&self, f: &FreeModuleElement) -> Result<FreeModuleElement, GbError> {
        let v = self.vector_of(f)?;
        let corner = if self.order.base.is_local() { self.highest_corner_degree() } else { None };
        let r = engine::reduce(v, &self.elements, &self.order, &self.limits, corner)?;
        Ok(FreeModuleElement::from_vector(&self.ring, self.rank, &r))
    }

    pub fn contains_vector(&self, f: &FreeModuleElement) -> Result<bool, GbError> {
        Ok(self.weak_normal_form_vector(f)?.is_zero())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, GbError> {
        if self.rank != 1 {
            return Err(GbError::RankMismatch {
                expected: self.rank,
                found: 1,
            });
        }
        if !same_ring(f.ring(), &self.ring) {
            return Err(GbError::RingMismatch);
        }
        self.contains_vector(&FreeModuleElement::scaled_unit(f, 1, 0))
    }

    /// Checks the defining property directly: every S-vector of a pair of
    /// basis elements with leading terms in the same component reduces to 0.
    pub fn spairs_reduce_to_zero(&self) -> Result<bool, GbError> {
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                if self.elements[i].comp != self.elements[j].comp {
                    continue;
                }
                let s = Vector::s_vector(&self.elements[i].v, &self.elements[j].v, &self.order);
                if !engine::reduce(s, &self.elements, &self.order, &self.limits, None)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Standard monomials `(component, monomial)` when the quotient is
    /// finite-dimensional, sorted by component then increasing degree.
    pub fn standard_monomials(&self) -> Option<Vec<(usize, Monomial)>> {
        let n = self.ring.nvars();
        let mut out = Vec::new();
        for c in 0..self.rank {
            let mut sm = dimension::standard_monomials(&self.leads_in(c), n)?;
            let ord = &self.order.base;
            sm.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| ord.cmp(b, a)));
            out.extend(sm.into_iter().map(|m| (c, m)));
        }
        Some(out)
    }

    /// A degree `d` with `m^d·O^r` inside the submodule, when the quotient is
    /// finite. For ideals this is one more than the largest standard monomial
    /// degree; in higher rank a leading term can hide lower-degree terms in
    /// later components, so the length of the quotient (which bounds its
    /// Loewy length) is used as well.
    fn highest_corner_degree(&self) -> Option<u32> {
        let sm = self.standard_monomials()?;
        let top = sm.iter().map(|(_, m)| m.degree() + 1).max().unwrap_or(0);
        if self.rank == 1 {
            Some(top)
        } else {
            Some(top.max(sm.len() as u32))
        }
    }

    /// `Finite(count)` when the staircase is finite (every variable has a
    /// pure power among the leading terms of every component), otherwise
    /// `Infinite(krull_dimension)`.
    pub fn quotient_dimension(&self) -> QuotientDimension {
        let n = self.ring.nvars();
        let finite = (0..self.rank).all(|c| dimension::pure_power_bounds(&self.leads_in(c), n).is_some());
        if finite {
            QuotientDimension::Finite(self.standard_monomials().map_or(0, |v| v.len()))
        } else {
            QuotientDimension::Infinite(self.krull_dimension())
        }
    }

    /// Krull dimension of the quotient, from maximal independent sets of the
    /// leading-term module. The zero quotient reports 0.
    pub fn krull_dimension(&self) -> usize {
        let n = self.ring.nvars();
        (0..self.rank)
            .filter_map(|c| dimension::krull_dimension(&self.leads_in(c), n))
            .max()
            .unwrap_or(0)
    }
}
