//! Deformation counts for reduced curves glued from `ℙ¹` components.
//!
//! A curve is described by its dual graph: a number of rational components
//! and a list of gluing points, each a multiset of `(component, branch tag)`
//! pairs. With `ν` the normalization and `D` the preimage of the singular
//! points, `T_X = ν_*T_X̃(−D)`, so a component carrying `d_i` branches
//! contributes `H^*(ℙ¹, O(2 − d_i))` to the tangent cohomology, and each
//! ordinary `m`-fold point contributes `m − 1` local first-order deformations.

mod eval;

pub use eval::{eval_matrix, eval_rank_analysis, Degeneracy, MarkedPoint, MarkedPointList, RankAnalysis, Witness};

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NodalError {
    #[error("a curve needs at least one component")]
    NoComponents,
    #[error("gluing point {point} has {size} branches, at least 2 are required")]
    PointTooSmall { point: usize, size: usize },
    #[error("gluing point {point} refers to component {component}, but there are only {count}")]
    ComponentIndex { point: usize, component: usize, count: usize },
    #[error("branch {tag:?} on component {component} is used more than once")]
    DuplicateBranch { component: usize, tag: String },
    #[error("the dual graph is not connected")]
    Disconnected,
    #[error("marked point {index} repeats an earlier point")]
    DuplicateMarkedPoint { index: usize },
    #[error("parameter {name} must be at least {min}, got {value}")]
    Parameter { name: &'static str, value: u64, min: u64 },
}

/// `(h⁰, h¹)` of `O(d)` on `ℙ¹`.
pub fn p1_cohomology(d: i64) -> (u64, u64) {
    let h0 = if d >= 0 { d as u64 + 1 } else { 0 };
    let h1 = if d <= -2 { (-d - 1) as u64 } else { 0 };
    (h0, h1)
}

/// Branch on a component.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Branch {
    pub component: usize,
    pub tag: String,
}

impl Branch {
    pub fn new(component: usize, tag: impl Into<String>) -> Self {
        Branch {
            component,
            tag: tag.into(),
        }
    }
}

/// The configurations whose counts are carried out explicitly in the
/// literature; anything else is computed by the same formula but flagged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WorkedShape {
    /// One component with `g` self-nodes.
    SelfNodal { g: usize },
    /// Two components meeting in `n` nodes.
    TwoP1 { n: usize },
    /// Three components: `A` meets `B` and `C` in one node each and `B`
    /// carries a self-node.
    ThreeChain,
    /// Three components through one ordinary `m`-fold point with branch
    /// counts `1, m − 2, 1`.
    ThreeStar { m: usize },
    /// Three components, each pair meeting in `n` nodes.
    ThreeTriangle { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraphCurve {
    labels: Vec<String>,
    points: Vec<Vec<Branch>>,
}

impl DualGraphCurve {
    pub fn new(components: usize, points: Vec<Vec<Branch>>) -> Result<Self, NodalError> {
        let labels = (0..components).map(|i| format!("C{i}")).collect();
        Self::with_labels(labels, points)
    }

    pub fn with_labels(labels: Vec<String>, points: Vec<Vec<Branch>>) -> Result<Self, NodalError> {
        let count = labels.len();
        if count == 0 {
            return Err(NodalError::NoComponents);
        }
        let mut seen = BTreeSet::new();
        let mut parent: Vec<usize> = (0..count).collect();
        for (p, branches) in points.iter().enumerate() {
            if branches.len() < 2 {
                return Err(NodalError::PointTooSmall {
                    point: p,
                    size: branches.len(),
                });
            }
            for b in branches {
                if b.component >= count {
                    return Err(NodalError::ComponentIndex {
                        point: p,
                        component: b.component,
                        count,
                    });
                }
                if !seen.insert((b.component, b.tag.as_str())) {
                    return Err(NodalError::DuplicateBranch {
                        component: b.component,
                        tag: b.tag.clone(),
                    });
                }
                let (x, y) = (find(&mut parent, branches[0].component), find(&mut parent, b.component));
                parent[x] = y;
            }
        }
        let root = find(&mut parent, 0);
        if (1..count).any(|c| find(&mut parent, c) != root) {
            return Err(NodalError::Disconnected);
        }
        Ok(DualGraphCurve { labels, points })
    }

    pub fn components(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn points(&self) -> &[Vec<Branch>] {
        &self.points
    }

    /// Number of branches on each component.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.components()];
        for b in self.points.iter().flatten() {
            d[b.component] += 1;
        }
        d
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.points.iter().map(Vec::len).collect()
    }

    /// One `ℙ¹` glued to itself at `g` pairs of points.
    pub fn self_nodal(g: usize) -> Self {
        let points = (1..=g)
            .map(|i| vec![Branch::new(0, format!("p{i}")), Branch::new(0, format!("q{i}"))])
            .collect();
        Self::with_labels(vec!["X".into()], points).expect("self-nodal curve is valid")
    }

    /// Two `ℙ¹` meeting transversally at `n ≥ 1` points.
    pub fn two_p1(n: usize) -> Result<Self, NodalError> {
        if n == 0 {
            return Err(NodalError::Parameter {
                name: "n",
                value: 0,
                min: 1,
            });
        }
        let points = (1..=n)
            .map(|i| vec![Branch::new(0, format!("a{i}")), Branch::new(1, format!("b{i}"))])
            .collect();
        Self::with_labels(vec!["A".into(), "B".into()], points)
    }

    /// `a1 ~ c1`, `a2 ~ b2`, `b1 ~ b3`: branch counts `2, 3, 1`.
    pub fn three_chain() -> Self {
        let points = vec![
            vec![Branch::new(0, "a1"), Branch::new(2, "c1")],
            vec![Branch::new(0, "a2"), Branch::new(1, "b2")],
            vec![Branch::new(1, "b1"), Branch::new(1, "b3")],
        ];
        Self::with_labels(vec!["A".into(), "B".into(), "C".into()], points).expect("chain is valid")
    }

    /// Three `ℙ¹` through one ordinary `m`-fold point, `m ≥ 3`, the middle
    /// component carrying `m − 2` branches.
    pub fn three_star(m: usize) -> Result<Self, NodalError> {
        if m < 3 {
            return Err(NodalError::Parameter {
                name: "m",
                value: m as u64,
                min: 3,
            });
        }
        let mut point = vec![Branch::new(0, "a1")];
        point.extend((1..=m - 2).map(|i| Branch::new(1, format!("b{i}"))));
        point.push(Branch::new(2, "c1"));
        Self::with_labels(vec!["A".into(), "B".into(), "C".into()], vec![point])
    }

    /// Three `ℙ¹`, each pair meeting in `n ≥ 1` nodes.
    pub fn three_triangle(n: usize) -> Result<Self, NodalError> {
        if n == 0 {
            return Err(NodalError::Parameter {
                name: "n",
                value: 0,
                min: 1,
            });
        }
        let names = ["a", "b", "c"];
        let mut points = Vec::with_capacity(3 * n);
        for (x, y) in [(0usize, 1usize), (1, 2), (0, 2)] {
            for i in 1..=n {
                points.push(vec![
                    Branch::new(x, format!("{}{}{}", names[x], names[y], i)),
                    Branch::new(y, format!("{}{}{}", names[y], names[x], i)),
                ]);
            }
        }
        Self::with_labels(vec!["A".into(), "B".into(), "C".into()], points)
    }

    /// `Σ_p (m_p − 1) − #components + 1`.
    pub fn arithmetic_genus(&self) -> u64 {
        let local: usize = self.points.iter().map(|p| p.len() - 1).sum();
        (local + 1 - self.components()) as u64
    }

    pub fn worked_shape(&self) -> Option<WorkedShape> {
        let comps = self.components();
        let pairs: Option<Vec<(usize, usize)>> = self
            .points
            .iter()
            .map(|p| {
                (p.len() == 2).then(|| {
                    let (a, b) = (p[0].component, p[1].component);
                    (a.min(b), a.max(b))
                })
            })
            .collect();
        match comps {
            1 => pairs.map(|p| WorkedShape::SelfNodal { g: p.len() }),
            2 => pairs
                .filter(|p| p.iter().all(|&e| e == (0, 1)))
                .map(|p| WorkedShape::TwoP1 { n: p.len() }),
            3 => {
                if let Some(p) = pairs {
                    let count = |e: (usize, usize)| p.iter().filter(|&&x| x == e).count();
                    let n = count((0, 1));
                    if n > 0 && count((1, 2)) == n && count((0, 2)) == n && p.len() == 3 * n {
                        return Some(WorkedShape::ThreeTriangle { n });
                    }
                    if p.len() == 3 {
                        let selfs: Vec<usize> = p.iter().filter(|e| e.0 == e.1).map(|e| e.0).collect();
                        if let [b] = selfs[..] {
                            let others: Vec<&(usize, usize)> = p.iter().filter(|e| e.0 != e.1).collect();
                            let a = (0..3).find(|&a| a != b && others.iter().all(|e| e.0 == a || e.1 == a));
                            if let Some(a) = a {
                                let c = 3 - a - b;
                                let mut want = [(a.min(b), a.max(b)), (a.min(c), a.max(c))];
                                let mut got = [*others[0], *others[1]];
                                want.sort();
                                got.sort();
                                if want == got {
                                    return Some(WorkedShape::ThreeChain);
                                }
                            }
                        }
                    }
                    None
                } else if self.points.len() == 1 {
                    let mut d = self.degrees();
                    d.sort();
                    (d[0] == 1 && d[1] == 1 && d[2] >= 1).then(|| WorkedShape::ThreeStar { m: d[2] + 2 })
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn deformation_report(&self) -> DeformationReport {
        let degrees = self.degrees();
        let (mut h0, mut h1) = (0u64, 0u64);
        for &d in &degrees {
            let (a, b) = p1_cohomology(2 - d as i64);
            h0 += a;
            h1 += b;
        }
        let local: u64 = self.points.iter().map(|p| p.len() as u64 - 1).sum();
        let genus = self.arithmetic_genus();
        let shape = self.worked_shape();
        DeformationReport {
            genus,
            h1_tangent: h1,
            local_t1_sum: local,
            ext1_dim: h1 + local,
            h0_tangent: h0,
            stable: h0 == 0 && genus >= 2,
            degrees,
            shape,
            formula_extrapolated: shape.is_none(),
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationReport {
    pub genus: u64,
    pub h1_tangent: u64,
    pub local_t1_sum: u64,
    pub ext1_dim: u64,
    pub h0_tangent: u64,
    pub stable: bool,
    pub degrees: Vec<usize>,
    pub shape: Option<WorkedShape>,
    pub formula_extrapolated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodalRationalDims {
    pub h1_equisingular: u64,
    pub local_sum: u64,
    pub ext1: u64,
}

/// Counts for a rational curve with `g` nodes.
pub fn nodal_rational_dims(g: u64) -> NodalRationalDims {
    let h1 = (2 * g).saturating_sub(3);
    NodalRationalDims {
        h1_equisingular: h1,
        local_sum: g,
        ext1: h1 + g,
    }
}
