#![allow(dead_code)]

//! Independent brute-force oracles and shared corpora for the integration
//! tests. Nothing here calls the standard-basis engine.

use std::collections::BTreeMap;
use std::sync::Arc;

use deforma_core::polyring::{LinearMap, Monomial, Ring};
use deforma_core::{linalg::Matrix, Polynomial, Rational};
use num_traits::Zero;
use deforma_core::nodal::{Branch, DualGraphCurve};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn ring(names: &[&str]) -> Arc<Ring> {
    Ring::new(names.iter().copied()).unwrap()
}

pub fn p(s: &str, r: &Arc<Ring>) -> Polynomial {
    Polynomial::parse(s, r).unwrap()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

type Key = (usize, Monomial);

/// Span of sparse vectors, kept in echelon form keyed by each row's largest
/// key.
#[derive(Default)]
pub struct Span {
    rows: BTreeMap<Key, BTreeMap<Key, Rational>>,
}

impl Span {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Returns true if `v` was independent of the rows so far.
    pub fn insert(&mut self, mut v: BTreeMap<Key, Rational>) -> bool {
        v.retain(|_, c| !c.is_zero());
        loop {
            let Some((top, c)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
                return false;
            };
            match self.rows.get(&top) {
                Some(row) => {
                    for (k, a) in row {
                        let e = v.entry(k.clone()).or_insert_with(Rational::zero);
                        *e -= &c * a;
                        if e.is_zero() {
                            v.remove(k);
                        }
                    }
                }
                None => {
                    let inv = c.recip();
                    for a in v.values_mut() {
                        *a *= &inv;
                    }
                    self.rows.insert(top, v);
                    return true;
                }
            }
        }
    }
}

fn monomials_below(nvars: usize, d: u32) -> Vec<Monomial> {
    (0..d).flat_map(|k| Monomial::all_of_degree(nvars, k)).collect()
}

/// `dim O^r / (N + m^d O^r)` from truncated products `m · v`, `deg m < d`.
pub fn truncated_dim(gens: &[Vec<Polynomial>], rank: usize, nvars: usize, d: u32) -> usize {
    let mons = monomials_below(nvars, d);
    let mut span = Span::default();
    for v in gens {
        for m in &mons {
            let mut row = BTreeMap::new();
            for (comp, f) in v.iter().enumerate() {
                for (mon, c) in f.terms() {
                    let prod = mon.mul(m);
                    if prod.degree() < d {
                        let e = row.entry((comp, prod)).or_insert_with(Rational::zero);
                        *e += c;
                    }
                }
            }
            span.insert(row);
        }
    }
    rank * mons.len() - span.rank()
}

/// Local length of `O^r / N` at the origin, certified once two consecutive
/// truncation degrees agree; `None` if no stabilization up to `max_d`.
pub fn module_oracle(gens: &[Vec<Polynomial>], rank: usize, nvars: usize, max_d: u32) -> Option<usize> {
    let mut prev = truncated_dim(gens, rank, nvars, 1);
    for d in 2..=max_d {
        let cur = truncated_dim(gens, rank, nvars, d);
        if cur == prev {
            return Some(cur);
        }
        prev = cur;
    }
    None
}

pub fn ideal_oracle(gens: &[Polynomial], max_d: u32) -> Option<usize> {
    let nvars = gens[0].nvars();
    let vs: Vec<Vec<Polynomial>> = gens.iter().map(|g| vec![g.clone()]).collect();
    module_oracle(&vs, 1, nvars, max_d)
}

pub fn tjurina_generators(f: &Polynomial) -> Vec<Polynomial> {
    let mut g = vec![f.clone()];
    g.extend((0..f.nvars()).map(|i| f.differentiate(i).unwrap()));
    g
}

pub fn milnor_generators(f: &Polynomial) -> Vec<Polynomial> {
    (0..f.nvars()).map(|i| f.differentiate(i).unwrap()).collect()
}

/// Generators of `J·O^n + (f_1..f_r)·O^r` for the complete-intersection
/// cokernel.
pub fn ci_generators(fs: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    let r = fs.len();
    let n = fs[0].nvars();
    let ring = fs[0].ring().clone();
    let mut gens = Vec::new();
    for j in 0..n {
        gens.push(fs.iter().map(|f| f.differentiate(j).unwrap()).collect());
    }
    for f in fs {
        for k in 0..r {
            gens.push((0..r).map(|i| if i == k { f.clone() } else { Polynomial::zero(&ring) }).collect());
        }
    }
    gens
}

/// Is `b` in the column span of `a`? Columns are inserted as sparse vectors
/// keyed by row index.
pub fn column_span_contains(a: &Matrix, b: &[Rational]) -> bool {
    let key = |i: usize| (i, Monomial::one(0));
    let mut span = Span::default();
    for j in (0..a.cols()).rev() {
        let col = (0..a.rows()).map(|i| (key(i), a.get(i, j).clone())).collect();
        span.insert(col);
    }
    let target = b.iter().enumerate().map(|(i, c)| (key(i), c.clone())).collect();
    !span.insert(target)
}

pub fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=3);
    q(n, d)
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> LinearMap {
    loop {
        let rows = (0..n)
            .map(|_| (0..n).map(|_| random_rational(rng, 3)).collect())
            .collect();
        let m = Matrix::from_rows(rows).unwrap();
        if !m.determinant().is_zero() {
            return LinearMap::new(m).unwrap();
        }
    }
}

pub fn random_poly(rng: &mut ChaCha8Rng, r: &Arc<Ring>, terms: usize, max_deg: u32) -> Polynomial {
    let n = r.nvars();
    let mut out = Polynomial::zero(r);
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_deg);
        let mons = Monomial::all_of_degree(n, d);
        let m = mons[rng.gen_range(0..mons.len())].clone();
        out = &out + &Polynomial::term(r, m, random_rational(rng, 5));
    }
    out
}

pub fn random_ideal(rng: &mut ChaCha8Rng, r: &Arc<Ring>, count: usize, terms: usize, deg: u32) -> Vec<Polynomial> {
    (0..count)
        .map(|_| {
            let f = random_poly(rng, r, terms, deg);
            let c = f.constant_term();
            &f - &Polynomial::constant(r, c)
        })
        .filter(|f| !f.is_zero())
        .collect()
}

pub fn random_form(rng: &mut ChaCha8Rng, r: &Arc<Ring>, terms: usize, d: u32) -> Polynomial {
    let mons = Monomial::all_of_degree(r.nvars(), d);
    let mut out = Polynomial::zero(r);
    for _ in 0..terms {
        let m = mons[rng.gen_range(0..mons.len())].clone();
        out = &out + &Polynomial::term(r, m, random_rational(rng, 5));
    }
    out
}

/// Connected graph on `c` components: a spanning chain of nodes, then extra
/// points with 2..=4 branches.
pub fn random_graph(rng: &mut ChaCha8Rng) -> DualGraphCurve {
    let c = rng.gen_range(1..=4);
    let mut tag = 0usize;
    let mut next = |comp: usize| {
        tag += 1;
        Branch::new(comp, format!("t{tag}"))
    };
    let mut points = Vec::new();
    for i in 1..c {
        points.push(vec![next(i - 1), next(i)]);
    }
    for _ in 0..rng.gen_range(0..=6) {
        let m = rng.gen_range(2..=4);
        points.push((0..m).map(|_| next(rng.gen_range(0..c))).collect());
    }
    points.shuffle(rng);
    DualGraphCurve::new(c, points).unwrap()
}

pub fn distinct_points(rng: &mut ChaCha8Rng, k: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < k {
        let t = random_rational(rng, 50);
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expect {
    Tau(usize),
    /// Isolated, value left to the oracle.
    Finite,
    NonIsolated(usize),
}

/// Hypersurface germs at the origin with their expected verdict.
pub fn hypersurface_corpus() -> Vec<(Vec<&'static str>, &'static str, Expect)> {
    use Expect::*;
    vec![
        (vec!["x", "y"], "x*y", Tau(1)),
        (vec!["x", "y"], "y^2 - x^3 - x^2", Tau(1)),
        (vec!["x", "y"], "y^2 - x^3", Tau(2)),
        (vec!["x", "y"], "x^3 + y^3", Tau(4)),
        (vec!["x", "y"], "x^2*y + y^4", Tau(5)),
        (vec!["x", "y"], "x^3 + y^4", Tau(6)),
        (vec!["x", "y"], "x^3 + x*y^3", Tau(7)),
        (vec!["x", "y"], "x^3 + y^5", Tau(8)),
        (vec!["x", "y"], "x^4 + y^5 + x^2*y^2", Finite),
        (vec!["x", "y"], "x", Tau(0)),
        (vec!["x", "y"], "y^2", NonIsolated(1)),
        (vec!["x", "y"], "x^2*y^2", NonIsolated(1)),
        (vec!["x", "y", "z"], "x^2 + y^2", NonIsolated(1)),
        (vec!["x", "y", "z"], "x^2 + y^2 + z^2", Tau(1)),
        (vec!["x", "y", "z"], "x*y*z", NonIsolated(1)),
        (vec!["x", "y", "z"], "x^2 + y^3 + z^4", Tau(6)),
        (vec!["x", "y", "z"], "x^2*y + z^2", NonIsolated(1)),
    ]
}
