use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{same_ring, Monomial, MonomialOrdering, PolyError, Ring};
use crate::Rational;

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are stored in a map keyed by exponent vector and zero coefficients
/// are never stored, so structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Rational>,
}

/// Result of a homogeneity check. The zero polynomial is homogeneous of every
/// degree; it reports degree 0 with `degenerate` set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Homogeneity {
    pub degree: u32,
    pub degenerate: bool,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn var(ring: &Arc<Ring>, index: usize) -> Result<Self, PolyError> {
        let n = ring.nvars();
        if index >= n {
            return Err(PolyError::VariableIndex { index, nvars: n });
        }
        Ok(Self::term(ring, Monomial::var(n, index), Rational::one()))
    }

    /// Single term `c · m`. Panics if `m` has the wrong number of variables.
    pub fn term(ring: &Arc<Ring>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I>(ring: &Arc<Ring>, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(PolyError::Shape {
                    expected: ring.nvars(),
                    found: m.nvars(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars()))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Terms sorted from largest to smallest under `ord`.
    pub fn sorted_terms(&self, ord: &MonomialOrdering) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, ord: &MonomialOrdering) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
    }

    pub fn is_homogeneous(&self) -> Option<Homogeneity> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Some(Homogeneity {
                degree: 0,
                degenerate: true,
            }),
            Some(d) => degrees.all(|e| e == d).then_some(Homogeneity {
                degree: d,
                degenerate: false,
            }),
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn differentiate(&self, index: usize) -> Result<Polynomial, PolyError> {
        let n = self.nvars();
        if index >= n {
            return Err(PolyError::VariableIndex { index, nvars: n });
        }
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponent(index);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] -= 1;
            out.add_term(Monomial::new(exps), c * Rational::from_integer(e.into()));
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::Shape {
                expected: self.nvars(),
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes `x_i ↦ images[i]`. The result lives in the ring of the images.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.nvars() {
            return Err(PolyError::Shape {
                expected: self.nvars(),
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => self.ring.clone(),
        };
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(PolyError::RingMismatch);
        }
        let max_exp: Vec<u32> = (0..self.nvars())
            .map(|i| self.terms.keys().map(|m| m.exponent(i)).max().unwrap_or(0))
            .collect();
        // powers[i][k] = images[i]^k
        let powers: Vec<Vec<Polynomial>> = images
            .iter()
            .zip(&max_exp)
            .map(|(img, &top)| {
                let mut v = Vec::with_capacity(top as usize + 1);
                v.push(Polynomial::one(&target));
                for k in 1..=top as usize {
                    let next = &v[k - 1] * img;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Moves `point` to the origin: returns `f(x + point)`.
    pub fn translate(&self, point: &[Rational]) -> Result<Polynomial, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::Shape {
                expected: self.nvars(),
                found: point.len(),
            });
        }
        if point.iter().all(Zero::is_zero) {
            return Ok(self.clone());
        }
        let images: Vec<Polynomial> = point
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let mut x = Polynomial::term(&self.ring, Monomial::var(self.nvars(), i), Rational::one());
                x.add_term(Monomial::one(self.nvars()), p.clone());
                x
            })
            .collect();
        self.substitute(&images)
    }

    /// `Σ_i x_i ∂f/∂x_i`.
    pub fn euler_operator(&self) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * Rational::from_integer(m.degree().into()));
        }
        out
    }
}

fn expect_same(a: &Polynomial, b: &Polynomial) {
    assert!(
        same_ring(&a.ring, &b.ring),
        "polynomial arithmetic across different rings"
    );
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        expect_same(self, rhs);
        self.checked_add(rhs).unwrap()
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        expect_same(self, rhs);
        self.checked_sub(rhs).unwrap()
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        expect_same(self, rhs);
        self.checked_mul(rhs).unwrap()
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

pub(crate) fn fmt_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, &e) in ring.names().iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{}^{}", name, e)?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

/// Prints terms in decreasing degrevlex order, using the grammar accepted by
/// [`Polynomial::parse`].
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let ord = MonomialOrdering::degrevlex(self.nvars());
        for (k, (m, c)) in self.sorted_terms(&ord).into_iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                fmt_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::new(names.iter().copied()).unwrap()
    }

    fn p(s: &str, r: &Arc<Ring>) -> Polynomial {
        Polynomial::parse(s, r).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn nodal_cubic_derivative() {
        let r = ring(&["x", "y"]);
        let f = p("y^2 - x^3 - x^2", &r);
        assert_eq!(f.num_terms(), 3);
        assert_eq!(f.differentiate(0).unwrap(), p("-3*x^2 - 2*x", &r));
        assert_eq!(f.differentiate(1).unwrap(), p("2*y", &r));
    }

    #[test]
    fn fermat_quartic_derivatives() {
        let r = ring(&["x", "y", "z"]);
        let f = p("x^4 + y^4 + z^4", &r);
        assert_eq!(f.differentiate(0).unwrap(), p("4*x^3", &r));
        assert_eq!(f.differentiate(1).unwrap(), p("4*y^3", &r));
        assert_eq!(f.differentiate(2).unwrap(), p("4*z^3", &r));
    }

    #[test]
    fn derivative_of_constant_and_bad_index() {
        let r = ring(&["x", "y"]);
        assert!(p("7", &r).differentiate(1).unwrap().is_zero());
        assert_eq!(
            p("x", &r).differentiate(2).unwrap_err(),
            PolyError::VariableIndex { index: 2, nvars: 2 }
        );
    }

    #[test]
    fn homogeneity() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(
            p("x^4+y^4+z^4", &r).is_homogeneous(),
            Some(Homogeneity { degree: 4, degenerate: false })
        );
        assert_eq!(p("x^2+y^3", &r).is_homogeneous(), None);
        assert_eq!(
            Polynomial::zero(&r).is_homogeneous(),
            Some(Homogeneity { degree: 0, degenerate: true })
        );
    }

    #[test]
    fn display_is_canonical() {
        let r = ring(&["x", "y"]);
        assert_eq!(p("y^2 - x^3 - x^2", &r).to_string(), "-x^3 - x^2 + y^2");
        assert_eq!(p("1/4*x - 3 + y*x*2", &r).to_string(), "2*x*y + 1/4*x - 3");
        assert_eq!(p("0", &r).to_string(), "0");
        assert_eq!(p("-(x)", &r).to_string(), "-x");
    }

    #[test]
    fn evaluate_and_translate() {
        let r = ring(&["x", "y"]);
        let f = p("x^2 + x*y - 3", &r);
        assert_eq!(f.evaluate(&[q(1, 2), q(2, 1)]).unwrap(), q(-7, 4));
        let g = f.translate(&[q(1, 1), q(0, 1)]).unwrap();
        assert_eq!(g, p("(x+1)^2 + (x+1)*y - 3", &r));
        assert!(f.evaluate(&[q(1, 1)]).is_err());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = ring(&["x", "y"]);
        let b = ring(&["x", "y", "z"]);
        assert_eq!(
            p("x", &a).checked_add(&p("x", &b)).unwrap_err(),
            PolyError::RingMismatch
        );
        // rings with identical names compare equal
        let c = ring(&["x", "y"]);
        assert!(p("x", &a).checked_mul(&p("y", &c)).is_ok());
    }

    #[test]
    fn pow_and_euler() {
        let r = ring(&["x", "y"]);
        let f = p("x + y", &r);
        assert_eq!(f.pow(3), p("x^3 + 3*x^2*y + 3*x*y^2 + y^3", &r));
        assert_eq!(f.pow(0), Polynomial::one(&r));
        let h = p("x^3 - 2*x*y^2", &r);
        assert_eq!(h.euler_operator(), h.scale(&q(3, 1)));
    }

    #[test]
    fn leading_terms_follow_the_ordering() {
        let r = ring(&["x", "y"]);
        let f = p("y^2 - x^3 - x^2", &r);
        let (lm, _) = f.leading_term(&MonomialOrdering::degrevlex(2)).unwrap();
        assert_eq!(lm, &Monomial::new(vec![3, 0]));
        let (lm, _) = f.leading_term(&MonomialOrdering::local(2)).unwrap();
        assert_eq!(lm, &Monomial::new(vec![2, 0]));
    }
}
