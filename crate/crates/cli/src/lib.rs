//! Command-line frontend for `deforma-core`.
//!
//! Every subcommand prints one record, as a compact JSON object by default or
//! as `key: value` lines with `--format human`. Exit codes: 0 for any
//! mathematical answer, 2 for usage and input errors, 3 when a resource cap
//! aborts a computation.

pub mod graph;
pub mod output;

use std::io::Write;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use deforma_core::gbasis::{GbError, Limits};
use deforma_core::linalg::Matrix;
use deforma_core::nodal::{
    eval_rank_analysis, nodal_rational_dims, p1_cohomology, DualGraphCurve, MarkedPoint, MarkedPointList,
    NodalError, WorkedShape,
};
use deforma_core::projdef::{self, ProjDefError, TracelessMatrix, TrivialityVerdict};
use deforma_core::singularity::{self, PointSpec, SingularityError};
use deforma_core::{Polynomial, Rational, Ring};
use output::{Format, Record};
use serde_json::Value;

#[derive(Debug, Parser)]
#[command(name = "deforma", version, about = "First-order deformation computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cap on pending critical pairs.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_pairs: usize,
    /// Cap on the degree of intermediate polynomials.
    #[arg(long, global = true, default_value_t = 64)]
    max_degree: u32,
}

#[derive(Debug, Args)]
struct Hypersurface {
    /// Comma-separated variable names.
    #[arg(long)]
    vars: String,
    #[arg(long)]
    f: String,
    /// Comma-separated rational coordinates; defaults to the origin.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
}

#[derive(Debug, Args)]
struct Equations {
    #[arg(long)]
    vars: String,
    /// Defining equation; repeat for several.
    #[arg(long = "f", required = true)]
    fs: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    TwoP1,
    ThreeChain,
    ThreeStar,
    #[value(name = "three-3n")]
    Three3n,
    SelfNodal,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tjurina number of a hypersurface at a point.
    Tjurina {
        #[command(flatten)]
        input: Hypersurface,
        /// Also list a monomial basis of the Tjurina algebra.
        #[arg(long)]
        basis: bool,
    },
    /// Milnor number of a hypersurface at a point.
    Milnor {
        #[command(flatten)]
        input: Hypersurface,
    },
    /// Jacobian criterion and deformation verdict at a point.
    Classify {
        #[command(flatten)]
        input: Equations,
    },
    /// Reduced Gröbner basis of the singular locus.
    SingLocus {
        #[arg(long)]
        vars: String,
        #[arg(long = "f", required = true)]
        fs: Vec<String>,
    },
    /// First-order deformations of a complete intersection.
    T1Ci {
        #[command(flatten)]
        input: Equations,
        /// Use the cokernel-module computation also for one equation.
        #[arg(long)]
        module: bool,
        #[arg(long)]
        basis: bool,
    },
    /// Decide whether G is induced by an infinitesimal change of coordinates of F.
    Triviality {
        #[arg(long)]
        vars: String,
        #[arg(long = "F")]
        big_f: String,
        #[arg(long = "G")]
        big_g: String,
        /// Include the inconsistency certificate for nontrivial answers.
        #[arg(long)]
        detail: bool,
    },
    /// Apply the infinitesimal action of a traceless matrix to a form.
    SlAction {
        #[arg(long)]
        vars: String,
        #[arg(long = "F")]
        big_f: String,
        /// Rows separated by ';', entries by ','.
        #[arg(long = "M", allow_hyphen_values = true)]
        matrix: String,
    },
    /// Non-rigidity of a cone over Y from dim H¹(Y, T_Y).
    Cone {
        #[arg(long)]
        h1: u64,
    },
    /// Deformation dimensions of a smooth curve of genus g.
    CurveTable {
        #[arg(long)]
        genus: u64,
    },
    /// Deformation report for a curve glued from projective lines.
    Nodal {
        #[arg(long, value_enum, conflicts_with = "graph_file", required_unless_present = "graph_file")]
        graph: Option<GraphKind>,
        #[arg(long)]
        graph_file: Option<std::path::PathBuf>,
        /// Node count for two-p1 and self-nodal.
        #[arg(long)]
        nodes: Option<usize>,
        /// Branch count of the point for three-star.
        #[arg(long)]
        m: Option<usize>,
        /// Nodes per pair for three-3n.
        #[arg(long)]
        n: Option<usize>,
        /// Print the graph in file format instead of the report.
        #[arg(long)]
        emit_graph: bool,
    },
    /// Counts for a rational curve with g nodes.
    RationalNodal {
        #[arg(long)]
        g: u64,
    },
    /// Rank of the evaluation matrix of 1, t, t² at marked points.
    Vandermonde {
        /// Comma-separated rationals; `inf` for the point at infinity.
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// Cohomology of O(d) on the projective line.
    P1Cohomology {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Resource(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Resource(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Resource(m) => m,
        }
    }
}

impl From<GbError> for Failure {
    fn from(e: GbError) -> Self {
        if e.is_resource_limit() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<SingularityError> for Failure {
    fn from(e: SingularityError) -> Self {
        match e {
            SingularityError::Basis(b) => b.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

macro_rules! input_error {
    ($($t:ty),*) => {
        $(impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Input(e.to_string())
            }
        })*
    };
}

input_error!(
    deforma_core::polyring::PolyError,
    ProjDefError,
    NodalError,
    graph::GraphError
);

/// Parses `argv` (including the program name), runs the subcommand and
/// returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return 2;
            }
            let _ = write!(out, "{text}");
            return 0;
        }
    };
    let limits = Limits {
        max_pairs: cli.max_pairs,
        max_degree: cli.max_degree,
    };
    match dispatch(cli.command, &limits) {
        Ok(Output::Record(rec)) => {
            let _ = out.write_all(rec.render(cli.format).as_bytes());
            0
        }
        Ok(Output::Raw(text)) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

enum Output {
    Record(Record),
    Raw(String),
}

fn ring(vars: &str) -> Result<Arc<Ring>, Failure> {
    Ok(Ring::new(vars.split(',').map(str::trim))?)
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    let t = s.trim();
    Rational::from_str(t).map_err(|_| Failure::Input(format!("invalid rational number {t:?}")))
}

fn point(spec: Option<&str>, ring: &Arc<Ring>) -> Result<PointSpec, Failure> {
    match spec {
        None => Ok(PointSpec::origin(ring.nvars())),
        Some(s) => Ok(PointSpec::new(s.split(',').map(parse_rational).collect::<Result<_, _>>()?)),
    }
}

fn polys(texts: &[String], ring: &Arc<Ring>) -> Result<Vec<Polynomial>, Failure> {
    texts
        .iter()
        .map(|t| Polynomial::parse(t, ring).map_err(|e| Failure::Input(format!("{e} in {t:?}"))))
        .collect()
}

fn basis_field(rec: &mut Record, ring: &Arc<Ring>, basis: &[(usize, deforma_core::Monomial)], rank: usize) {
    let items: Vec<Value> = basis
        .iter()
        .map(|(c, m)| {
            if rank == 1 {
                output::monomial(ring, m)
            } else {
                let Value::String(s) = output::monomial(ring, m) else { unreachable!() };
                if m.is_one() {
                    Value::String(format!("e{}", c + 1))
                } else {
                    Value::String(format!("{s}*e{}", c + 1))
                }
            }
        })
        .collect();
    rec.put("basis", items);
}

fn shape_name(s: &WorkedShape) -> &'static str {
    match s {
        WorkedShape::SelfNodal { .. } => "self-nodal",
        WorkedShape::TwoP1 { .. } => "two-p1",
        WorkedShape::ThreeChain => "three-chain",
        WorkedShape::ThreeStar { .. } => "three-star",
        WorkedShape::ThreeTriangle { .. } => "three-3n",
    }
}

fn need(v: Option<usize>, flag: &str, graph: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Input(format!("--graph {graph} requires --{flag}")))
}

fn build_graph(kind: GraphKind, nodes: Option<usize>, m: Option<usize>, n: Option<usize>) -> Result<DualGraphCurve, Failure> {
    Ok(match kind {
        GraphKind::TwoP1 => DualGraphCurve::two_p1(need(nodes, "nodes", "two-p1")?)?,
        GraphKind::SelfNodal => DualGraphCurve::self_nodal(need(nodes, "nodes", "self-nodal")?),
        GraphKind::ThreeChain => DualGraphCurve::three_chain(),
        GraphKind::ThreeStar => DualGraphCurve::three_star(need(m, "m", "three-star")?)?,
        GraphKind::Three3n => DualGraphCurve::three_triangle(need(n, "n", "three-3n")?)?,
    })
}

fn parse_matrix(text: &str, n: usize) -> Result<TracelessMatrix, Failure> {
    let rows = text
        .split(';')
        .map(|r| r.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Failure::Input(format!("matrix must be {n}x{n}")));
    }
    let m = Matrix::from_rows(rows).map_err(|e| Failure::Input(e.to_string()))?;
    Ok(TracelessMatrix::new(m)?)
}

fn marked_points(text: &str) -> Result<MarkedPointList, Failure> {
    let pts = if text.trim().is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|s| match s.trim() {
                "inf" | "infinity" | "∞" => Ok(MarkedPoint::Infinity),
                t => parse_rational(t).map(MarkedPoint::Finite),
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(MarkedPointList::new(pts)?)
}

fn dispatch(cmd: Command, limits: &Limits) -> Result<Output, Failure> {
    let mut rec = Record::new();
    match cmd {
        Command::Tjurina { input, basis } => {
            let r = ring(&input.vars)?;
            let f = polys(std::slice::from_ref(&input.f), &r)?.remove(0);
            let p = point(input.point.as_deref(), &r)?;
            let res = singularity::tjurina_hypersurface(&f, &p, limits)?;
            output::verdict(&mut rec, &res.verdict);
            if basis {
                if let Some(b) = &res.basis {
                    basis_field(&mut rec, &r, b, 1);
                }
            }
        }
        Command::Milnor { input } => {
            let r = ring(&input.vars)?;
            let f = polys(std::slice::from_ref(&input.f), &r)?.remove(0);
            let p = point(input.point.as_deref(), &r)?;
            output::dimension(&mut rec, "mu", singularity::milnor_number(&f, &p, limits)?);
        }
        Command::Classify { input } => {
            let r = ring(&input.vars)?;
            let fs = polys(&input.fs, &r)?;
            let p = point(input.point.as_deref(), &r)?;
            let rep = singularity::classify_point(&fs, &p, limits)?;
            rec.put("on_variety", rep.on_variety)
                .put("codimension", rep.codimension)
                .put("jacobian_rank", rep.jacobian_rank);
            match &rep.verdict {
                Some(v) => output::verdict(&mut rec, v),
                None => {
                    rec.put("verdict", Value::Null);
                }
            }
            rec.put(
                "singular_locus",
                rep.singular_locus.iter().map(output::polynomial).collect::<Vec<_>>(),
            );
        }
        Command::SingLocus { vars, fs } => {
            let r = ring(&vars)?;
            let fs = polys(&fs, &r)?;
            let basis = singularity::singular_locus_basis(&fs, limits)?;
            let empty = basis.iter().any(|b| b.total_degree() == Some(0));
            rec.put("basis", basis.iter().map(output::polynomial).collect::<Vec<_>>())
                .put("empty", empty);
            if !empty {
                let ideal = deforma_core::Ideal::new(&r, basis)?;
                let sb = deforma_core::gbasis::standard_basis(
                    &ideal,
                    &deforma_core::MonomialOrdering::degrevlex(r.nvars()),
                    limits,
                )?;
                rec.put("krull_dim", sb.krull_dimension());
            }
        }
        Command::T1Ci { input, module, basis } => {
            let r = ring(&input.vars)?;
            let fs = polys(&input.fs, &r)?;
            let p = point(input.point.as_deref(), &r)?;
            let res = if module {
                singularity::t1_ci_module_path(&fs, &p, limits)?
            } else {
                singularity::t1_ci_dimension(&fs, &p, limits)?
            };
            output::verdict(&mut rec, &res.verdict);
            if basis {
                if let Some(b) = &res.basis {
                    let rank = if fs.len() == 1 && !module { 1 } else { fs.len() };
                    basis_field(&mut rec, &r, b, rank);
                }
            }
        }
        Command::Triviality {
            vars,
            big_f,
            big_g,
            detail,
        } => {
            let r = ring(&vars)?;
            let fg = polys(&[big_f, big_g], &r)?;
            match projdef::triviality_test(&fg[0], &fg[1])? {
                TrivialityVerdict::Trivial { m, c } => {
                    let rows: Vec<Value> = (0..m.dim())
                        .map(|i| Value::Array((0..m.dim()).map(|j| output::rational(m.get(i, j))).collect()))
                        .collect();
                    rec.put("verdict", "trivial").put("m", rows).put("c", output::rational(&c));
                }
                TrivialityVerdict::Nontrivial { monomial, certificate } => {
                    rec.put("verdict", "nontrivial");
                    if detail {
                        rec.put("monomial", output::monomial(&r, &monomial))
                            .put("certificate", output::polynomial(&certificate));
                    }
                }
            }
        }
        Command::SlAction { vars, big_f, matrix } => {
            let r = ring(&vars)?;
            let f = polys(&[big_f], &r)?.remove(0);
            let m = parse_matrix(&matrix, r.nvars())?;
            rec.put("result", output::polynomial(&projdef::sl_action(&m, &f)?));
        }
        Command::Cone { h1 } => {
            rec.put("h1", h1).put("nonrigid", projdef::cone_nonrigid(h1));
        }
        Command::CurveTable { genus } => {
            let t = projdef::smooth_curve_table(genus);
            rec.put("genus", genus)
                .put("dim_t1", t.dim_t1)
                .put("h0_omega_sq", t.h0_omega_sq)
                .put("rigid", t.rigid);
        }
        Command::Nodal {
            graph,
            graph_file,
            nodes,
            m,
            n,
            emit_graph,
        } => {
            let curve = match (graph, graph_file) {
                (Some(kind), _) => build_graph(kind, nodes, m, n)?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
                    graph::parse_graph(&text)?
                }
                (None, None) => return Err(Failure::Input("one of --graph or --graph-file is required".into())),
            };
            if emit_graph {
                return Ok(Output::Raw(graph::to_json(&curve)));
            }
            let rep = curve.deformation_report();
            rec.put("components", curve.components())
                .put("genus", rep.genus)
                .put("h1_tangent", rep.h1_tangent)
                .put("h0_tangent", rep.h0_tangent)
                .put("local_t1_sum", rep.local_t1_sum)
                .put("ext1", rep.ext1_dim)
                .put("stable", rep.stable)
                .put("degrees", rep.degrees.clone())
                .put("shape", rep.shape.as_ref().map(shape_name))
                .put("formula_extrapolated", rep.formula_extrapolated);
        }
        Command::RationalNodal { g } => {
            let d = nodal_rational_dims(g);
            rec.put("g", g)
                .put("h1_equisingular", d.h1_equisingular)
                .put("local_sum", d.local_sum)
                .put("ext1", d.ext1);
        }
        Command::Vandermonde { points } => {
            let pts = marked_points(&points)?;
            let a = eval_rank_analysis(&pts);
            rec.put("points", pts.len()).put("rank", a.rank);
            if let Some(w) = &a.witness {
                let mut wr = Record::new();
                wr.put("columns", w.columns.to_vec()).put("minor", output::rational(&w.minor));
                rec.put("witness", wr.into_value());
            }
            if let Some(d) = &a.degeneracy {
                rec.put("degeneracy", d.label());
            }
        }
        Command::P1Cohomology { d } => {
            let (h0, h1) = p1_cohomology(d);
            rec.put("d", d).put("h0", h0).put("h1", h1);
        }
    }
    Ok(Output::Record(rec))
}
