use core::cmp::Ordering;

use alloc::vec::Vec;

use super::{Monomial, PolyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderingKind {
    /// Degree reverse lexicographic, a well-ordering with `1` smallest.
    Degrevlex,
    /// Negative degree reverse lexicographic: lower total degree is larger,
    /// so `1 > x_i` for every variable. Models the local ring at the origin.
    NegDegrevlex,
}

/// A monomial ordering together with a variable permutation.
///
/// `permutation[k]` is the variable that plays the role of the `k`-th
/// variable in the comparison; the identity gives `x_1 > x_2 > … > x_n` on
/// linear monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrdering {
    kind: OrderingKind,
    permutation: Vec<usize>,
}

impl MonomialOrdering {
    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrdering {
            kind: OrderingKind::Degrevlex,
            permutation: (0..nvars).collect(),
        }
    }

    pub fn local(nvars: usize) -> Self {
        MonomialOrdering {
            kind: OrderingKind::NegDegrevlex,
            permutation: (0..nvars).collect(),
        }
    }

    pub fn with_permutation(kind: OrderingKind, permutation: Vec<usize>) -> Result<Self, PolyError> {
        let n = permutation.len();
        let mut seen = alloc::vec![false; n];
        for &p in &permutation {
            if p >= n || seen[p] {
                return Err(PolyError::VariableIndex { index: p, nvars: n });
            }
            seen[p] = true;
        }
        Ok(MonomialOrdering { kind, permutation })
    }

    pub fn kind(&self) -> OrderingKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.permutation.len()
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn is_local(&self) -> bool {
        self.kind == OrderingKind::NegDegrevlex
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let by_degree = a.degree().cmp(&b.degree());
        let by_degree = match self.kind {
            OrderingKind::Degrevlex => by_degree,
            OrderingKind::NegDegrevlex => by_degree.reverse(),
        };
        by_degree.then_with(|| {
            for &v in self.permutation.iter().rev() {
                match a.exponent(v).cmp(&b.exponent(v)) {
                    Ordering::Equal => continue,
                    // smaller exponent in the last differing variable wins
                    other => return other.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}
