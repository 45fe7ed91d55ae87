//! Critical-pair completion shared by Buchberger (global orderings) and Mora
//! (local orderings). The two differ only in the reduction used for S-vectors.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use super::dimension::pure_power_bounds;
use super::vector::{ModuleOrder, Vector};
use super::{GbError, Limits};
use crate::polyring::Monomial;

#[derive(Debug, Clone)]
pub(crate) struct Elem {
    pub(crate) v: Vector,
    pub(crate) comp: usize,
    pub(crate) mon: Monomial,
    pub(crate) ecart: u32,
}

impl Elem {
    pub(crate) fn new(v: Vector) -> Elem {
        let lt = v.lead().expect("zero basis element");
        Elem {
            comp: lt.comp,
            mon: lt.mon.clone(),
            ecart: v.ecart(),
            v,
        }
    }
}

fn check_degree(v: &Vector, limits: &Limits) -> Result<(), GbError> {
    if v.max_degree() > limits.max_degree {
        return Err(GbError::DegreeLimit {
            limit: limits.max_degree,
        });
    }
    Ok(())
}

fn find_divisor<'a>(basis: &'a [Elem], comp: usize, mon: &Monomial) -> Option<&'a Elem> {
    basis.iter().find(|e| e.comp == comp && e.mon.divides(mon))
}

/// Cancels leading terms while some basis leading term divides them.
pub(crate) fn top_reduce(mut h: Vector, basis: &[Elem], ord: &ModuleOrder, limits: &Limits) -> Result<Vector, GbError> {
    while let Some(lt) = h.lead() {
        let Some(g) = find_divisor(basis, lt.comp, &lt.mon) else {
            break;
        };
        h = h.reduce_lead_by(&g.v, ord);
        check_degree(&h, limits)?;
    }
    Ok(h)
}

/// Mora's weak normal form: returns `h` with `u·f − h` in the submodule for
/// some unit `u` of the local ring, and `h = 0` or its leading term not
/// divisible by any basis leading term. Reducers of minimal ecart are used;
/// ties go to the smaller leading monomial, then to the earlier reducer.
/// With a `corner`, terms of degree `>= corner` are dropped as they appear.
pub(crate) fn mora_reduce(
    mut h: Vector,
    basis: &[Elem],
    ord: &ModuleOrder,
    limits: &Limits,
    normalize: bool,
    corner: Option<u32>,
) -> Result<Vector, GbError> {
    let mut extra: Vec<Elem> = Vec::new();
    if let Some(c) = corner {
        h.truncate_degree(c);
    }
    loop {
        let Some(lt) = h.lead() else {
            return Ok(h);
        };
        check_degree(&h, limits)?;
        let mut best: Option<&Elem> = None;
        for e in basis.iter().chain(extra.iter()) {
            if e.comp != lt.comp || !e.mon.divides(&lt.mon) {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => {
                    e.ecart < b.ecart || (e.ecart == b.ecart && ord.base.cmp(&e.mon, &b.mon) == Ordering::Less)
                }
            };
            if better {
                best = Some(e);
            }
        }
        let Some(g) = best else {
            return Ok(h);
        };
        let mut next = h.reduce_lead_by(&g.v, ord);
        if let Some(c) = corner {
            next.truncate_degree(c);
        }
        if g.ecart > h.ecart() {
            extra.push(Elem::new(h));
        }
        if normalize {
            next.make_primitive();
        }
        h = next;
    }
}

pub(crate) fn reduce(h: Vector, basis: &[Elem], ord: &ModuleOrder, limits: &Limits, corner: Option<u32>) -> Result<Vector, GbError> {
    if ord.base.is_local() {
        mora_reduce(h, basis, ord, limits, true, corner)
    } else {
        top_reduce(h, basis, ord, limits)
    }
}

struct PairQueue {
    heap: BinaryHeap<Reverse<(u32, usize, usize)>>,
    pending: BTreeSet<(usize, usize)>,
}

/// Smallest `d` such that every monomial of degree `d` is divisible by a
/// leading monomial, if the staircase is finite.
fn corner_degree(basis: &[Elem], nvars: usize) -> Option<u32> {
    let leads: Vec<Monomial> = basis.iter().map(|e| e.mon.clone()).collect();
    let bounds = pure_power_bounds(&leads, nvars)?;
    let top = bounds.iter().map(|b| b.saturating_sub(1)).sum::<u32>() + 1;
    let low = leads.iter().map(Monomial::degree).min()?;
    (low..=top).find(|&d| {
        Monomial::all_of_degree(nvars, d)
            .iter()
            .all(|m| leads.iter().any(|l| l.divides(m)))
    })
}

/// For a local ordering, once the leading monomials contain all of `m^d`,
/// Nakayama gives `m^d ⊆ I` in the local ring and every term of degree
/// `>= d` can be discarded. Only sound for ideals: in a free module a
/// leading term may carry lower-degree terms in other components.
fn update_corner(basis: &mut [Elem], corner: &mut Option<u32>, nvars: usize) {
    let Some(d) = corner_degree(basis, nvars) else {
        return;
    };
    if corner.is_some_and(|c| c <= d) {
        return;
    }
    *corner = Some(d);
    for e in basis.iter_mut() {
        if e.mon.degree() < d {
            let mut v = core::mem::take(&mut e.v);
            v.truncate_degree(d);
            *e = Elem::new(v);
        }
    }
}

/// Completes `gens` to a standard basis under `ord`.
///
/// `ideal` enables the product criterion and, for local orderings, the
/// highest-corner truncation. Neither is valid in a free module of higher
/// rank.
pub(crate) fn complete(gens: Vec<Vector>, ord: &ModuleOrder, limits: &Limits, ideal: bool) -> Result<Vec<Elem>, GbError> {
    let product_criterion = ideal;
    let use_corner = ideal && ord.base.is_local();
    let nvars = ord.base.nvars();
    let mut corner: Option<u32> = None;
    let mut basis: Vec<Elem> = Vec::new();
    let mut queue = PairQueue {
        heap: BinaryHeap::new(),
        pending: BTreeSet::new(),
    };
    for mut g in gens {
        if g.is_zero() {
            continue;
        }
        check_degree(&g, limits)?;
        if let Some(c) = corner {
            g.truncate_degree(c);
            if g.is_zero() {
                continue;
            }
        }
        g.make_primitive();
        add_element(&mut basis, &mut queue, Elem::new(g), limits, product_criterion)?;
        if use_corner {
            update_corner(&mut basis, &mut corner, nvars);
        }
    }
    while let Some(Reverse((deg, i, j))) = queue.heap.pop() {
        queue.pending.remove(&(i, j));
        if corner.is_some_and(|c| deg >= c) {
            continue;
        }
        if chain_criterion(&basis, &queue.pending, i, j) {
            continue;
        }
        let s = Vector::s_vector(&basis[i].v, &basis[j].v, ord);
        check_degree(&s, limits)?;
        let mut h = reduce(s, &basis, ord, limits, corner)?;
        if h.is_zero() {
            continue;
        }
        h.make_primitive();
        add_element(&mut basis, &mut queue, Elem::new(h), limits, product_criterion)?;
        if use_corner {
            update_corner(&mut basis, &mut corner, nvars);
        }
    }
    Ok(basis)
}

fn add_element(basis: &mut Vec<Elem>, queue: &mut PairQueue, e: Elem, limits: &Limits, product_criterion: bool) -> Result<(), GbError> {
    let k = basis.len();
    for (i, b) in basis.iter().enumerate() {
        if b.comp != e.comp {
            continue;
        }
        if product_criterion && b.mon.is_coprime(&e.mon) {
            continue;
        }
        let deg = b.mon.lcm(&e.mon).degree();
        queue.heap.push(Reverse((deg, i, k)));
        queue.pending.insert((i, k));
    }
    if queue.pending.len() > limits.max_pairs {
        return Err(GbError::PairLimit {
            limit: limits.max_pairs,
        });
    }
    basis.push(e);
    Ok(())
}

/// Buchberger's chain criterion: the pair `(i, j)` is redundant if some other
/// element's leading term divides their lcm and neither `(i, k)` nor
/// `(j, k)` is still waiting to be treated.
fn chain_criterion(basis: &[Elem], pending: &BTreeSet<(usize, usize)>, i: usize, j: usize) -> bool {
    let lcm = basis[i].mon.lcm(&basis[j].mon);
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    basis.iter().enumerate().any(|(k, e)| {
        k != i
            && k != j
            && e.comp == basis[i].comp
            && e.mon.divides(&lcm)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
    })
}

/// Drops elements whose leading term is divisible by another's; among equal
/// leading terms the first one is kept.
pub(crate) fn minimize(basis: Vec<Elem>) -> Vec<Elem> {
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !basis.iter().enumerate().any(|(j, other)| {
                j != i
                    && other.comp == basis[i].comp
                    && other.mon.divides(&basis[i].mon)
                    && (other.mon != basis[i].mon || j < i)
            })
        })
        .collect();
    basis
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect()
}

/// Full reduction for global orderings: no term of the result is divisible
/// by a basis leading term.
pub(crate) fn full_reduce(mut h: Vector, basis: &[Elem], ord: &ModuleOrder, limits: &Limits) -> Result<Vector, GbError> {
    let mut done = Vec::new();
    while let Some(lt) = h.lead() {
        match find_divisor(basis, lt.comp, &lt.mon) {
            Some(g) => {
                h = h.reduce_lead_by(&g.v, ord);
                check_degree(&h, limits)?;
            }
            None => {
                done.push(h.terms.remove(0));
            }
        }
    }
    Ok(Vector { terms: done })
}

/// Local full reduction when every monomial of degree `>= corner` is a
/// leading term: such terms lie in the submodule of the local ring, so they
/// are truncated and plain division terminates.
pub(crate) fn truncated_reduce(mut h: Vector, basis: &[Elem], ord: &ModuleOrder, corner: u32) -> Vector {
    let mut done = Vec::new();
    h.truncate_degree(corner);
    while let Some(lt) = h.lead() {
        match find_divisor(basis, lt.comp, &lt.mon) {
            Some(g) => {
                h = h.reduce_lead_by(&g.v, ord);
                h.truncate_degree(corner);
            }
            None => done.push(h.terms.remove(0)),
        }
    }
    Vector { terms: done }
}

/// Local tail reduction by repeated weak normal forms; stops with a degree
/// error when the tail does not terminate within the cap.
pub(crate) fn mora_full_reduce(h: Vector, basis: &[Elem], ord: &ModuleOrder, limits: &Limits) -> Result<Vector, GbError> {
    let mut done = Vec::new();
    let mut rest = mora_reduce(h, basis, ord, limits, false, None)?;
    while let Some(lt) = rest.lead() {
        if lt.mon.degree() > limits.max_degree {
            return Err(GbError::DegreeLimit {
                limit: limits.max_degree,
            });
        }
        done.push(lt.clone());
        rest = mora_reduce(rest.tail(), basis, ord, limits, false, None)?;
    }
    Ok(Vector { terms: done })
}

/// Tail-reduces a minimal global basis to the reduced Gröbner basis.
pub(crate) fn interreduce(mut basis: Vec<Elem>, ord: &ModuleOrder, limits: &Limits) -> Result<Vec<Elem>, GbError> {
    for i in 0..basis.len() {
        let others: Vec<Elem> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, e)| e.clone())
            .collect();
        let lead = basis[i].v.terms[0].clone();
        let tail = full_reduce(basis[i].v.tail(), &others, ord, limits)?;
        let mut terms = Vec::with_capacity(tail.terms.len() + 1);
        terms.push(lead);
        terms.extend(tail.terms);
        let mut v = Vector { terms };
        v.make_monic();
        basis[i] = Elem::new(v);
    }
    Ok(basis)
}
