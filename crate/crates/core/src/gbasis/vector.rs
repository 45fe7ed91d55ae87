//! Sorted term lists used inside the standard-basis engine. An ideal is the
//! rank-one case: every term sits in component 0.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::{Monomial, MonomialOrdering};
use crate::Rational;

/// Position-over-term extension of a monomial ordering: `e_0 > e_1 > …`,
/// ties broken by the monomial ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ModuleOrder {
    pub(crate) base: MonomialOrdering,
}

impl ModuleOrder {
    pub(crate) fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        b.0.cmp(&a.0).then_with(|| self.base.cmp(a.1, b.1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Term {
    pub(crate) comp: usize,
    pub(crate) mon: Monomial,
    pub(crate) coeff: Rational,
}

/// Terms in strictly decreasing module order, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct Vector {
    pub(crate) terms: Vec<Term>,
}

impl Vector {
    pub(crate) fn from_unsorted(mut terms: Vec<Term>, ord: &ModuleOrder) -> Vector {
        terms.retain(|t| !t.coeff.is_zero());
        terms.sort_by(|a, b| ord.cmp((b.comp, &b.mon), (a.comp, &a.mon)));
        // merge duplicates
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.mon == t.mon => {
                    last.coeff += t.coeff;
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push(t),
            }
        }
        Vector { terms: out }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub(crate) fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mon.degree()).max().unwrap_or(0)
    }

    pub(crate) fn ecart(&self) -> u32 {
        match self.lead() {
            Some(t) => self.max_degree() - t.mon.degree(),
            None => 0,
        }
    }

    pub(crate) fn tail(&self) -> Vector {
        Vector {
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    pub(crate) fn truncate_degree(&mut self, bound: u32) {
        self.terms.retain(|t| t.mon.degree() < bound);
    }

    /// `c · m · self`; monomial orderings are multiplicative so order is kept.
    pub(crate) fn mul_term(&self, c: &Rational, m: &Monomial) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    comp: t.comp,
                    mon: t.mon.mul(m),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    /// `self − c · m · other`, merging the two sorted term lists.
    pub(crate) fn sub_multiple(&self, c: &Rational, m: &Monomial, other: &Vector, ord: &ModuleOrder) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|t| (t.comp, t.mon.mul(m), &t.coeff)).peekable();
        loop {
            let step = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => ord.cmp((x.comp, &x.mon), (y.0, &y.1)),
            };
            match step {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (comp, mon, coeff) = b.next().unwrap();
                    out.push(Term {
                        comp,
                        mon,
                        coeff: -(coeff * c),
                    });
                }
                Ordering::Equal => {
                    let x = a.next().unwrap();
                    let (_, _, coeff) = b.next().unwrap();
                    let v = &x.coeff - coeff * c;
                    if !v.is_zero() {
                        out.push(Term {
                            comp: x.comp,
                            mon: x.mon.clone(),
                            coeff: v,
                        });
                    }
                }
            }
        }
        Vector { terms: out }
    }

    /// Cancels the leading term of `self` against `reducer`, whose leading
    /// monomial must divide it.
    pub(crate) fn reduce_lead_by(&self, reducer: &Vector, ord: &ModuleOrder) -> Vector {
        let lt = self.lead().expect("reducing the zero vector");
        let lg = reducer.lead().expect("reducing by the zero vector");
        let m = lg.mon.quotient_of(&lt.mon).expect("leading monomial does not divide");
        let c = &lt.coeff / &lg.coeff;
        self.sub_multiple(&c, &m, reducer, ord)
    }

    /// S-vector of two elements with leading terms in the same component.
    pub(crate) fn s_vector(f: &Vector, g: &Vector, ord: &ModuleOrder) -> Vector {
        let lf = f.lead().unwrap();
        let lg = g.lead().unwrap();
        debug_assert_eq!(lf.comp, lg.comp);
        let l = lf.mon.lcm(&lg.mon);
        let mf = lf.mon.quotient_of(&l).unwrap();
        let mg = lg.mon.quotient_of(&l).unwrap();
        let left = f.mul_term(&lf.coeff.recip(), &mf);
        left.sub_multiple(&lg.coeff.recip(), &mg, g, ord)
    }

    /// Scales to coprime integer coefficients with a positive leading one.
    pub(crate) fn make_primitive(&mut self) {
        let Some(first) = self.terms.first() else {
            return;
        };
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for t in &self.terms {
            den = den.lcm(t.coeff.denom());
            num = num.gcd(t.coeff.numer());
        }
        if first.coeff.is_negative() {
            num = -num;
        }
        let factor = Rational::new(den, num);
        if factor.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.coeff *= &factor;
        }
    }

    pub(crate) fn make_monic(&mut self) {
        let Some(first) = self.terms.first() else {
            return;
        };
        let inv = first.coeff.recip();
        if inv.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.coeff *= &inv;
        }
    }
}
