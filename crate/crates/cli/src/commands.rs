//! Subcommands. Each returns a report (or raw text) and an exit code:
//! 0 for a true verdict or success, 1 for a false verdict, 2 for errors and
//! inconclusive results.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tauslice::algebra::{coextension, one_point_extension, split_extension, Bimodule, PresentedAlgebra};
use tauslice::artheory::{
    ar_quiver, end_algebra, is_hereditary, relation_extension_bimodule, tau, tau_inverse, ArCaps, ArQuiver,
};
use tauslice::exactlin::Field;
use tauslice::modrep::{annihilator, decompose, Representation};
use tauslice::tautilt::{
    bb_verify, bb_verify_dual, count_support_tau_tilting, find_complete_tau_slices_in, is_complete_slice_bounded,
    is_complete_tau_slice, is_local_slice, is_presection, is_section, is_support_tau_tilting, is_tau_rigid,
    is_tau_slice, is_tau_tilting, is_tilted, is_tilting, orbit_graph, torsion_pair_of, SearchOptions,
    SliceCandidate, TiltedVerdict,
};

use crate::dot::emit_dot;
use crate::format::{parse_algebra, parse_field, parse_modules, print_algebra};
use crate::report::{Report, Verdict};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "tauslice", version, about = "τ-tilting modules and τ-slices of bound quiver algebras")]
pub struct Cli {
    /// Override enumeration caps (AR quiver nodes and search nodes).
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Override the field declared in the algebra file, e.g. `Fp:5`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ModuleArgs {
    /// `.rep` file; every module block in it becomes a summand.
    #[arg(long)]
    pub module: Vec<PathBuf>,
    /// Indecomposable picked from the AR quiver by dimension vector, e.g. `0,1,1`.
    #[arg(long)]
    pub dimvec: Vec<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CheckKind {
    TauRigid,
    TauTilting,
    SupportTauTilting,
    Tilting,
    Presection,
    TauSlice,
    CompleteTauSlice,
    Section,
    CompleteSlice,
    LocalSlice,
    Tilted,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basic data of an algebra.
    Info { algebra: PathBuf },
    /// Print the canonical form of an algebra file.
    Fmt { algebra: PathBuf },
    /// List the indecomposable modules.
    Indecomposables { algebra: PathBuf },
    /// The AR quiver as a report, or as DOT with `--dot`.
    ArQuiver {
        algebra: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// τ and τ⁻¹ of a module.
    Tau {
        algebra: PathBuf,
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Evaluate a predicate.
    Check {
        kind: CheckKind,
        algebra: PathBuf,
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Check the Brenner–Butler type correspondences for a support τ-tilting module.
    BbVerify {
        algebra: PathBuf,
        #[command(flatten)]
        module: ModuleArgs,
        /// Run the dual statement for a support τ⁻-tilting module.
        #[arg(long)]
        dual: bool,
    },
    /// The torsion pair (Fac M, Sub τM).
    TorsionPair {
        algebra: PathBuf,
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Quotient by the ideal generated by path words.
    Quotient {
        algebra: PathBuf,
        #[arg(long, required = true)]
        ideal: Vec<String>,
    },
    /// Endomorphism algebra of a module.
    Endo {
        algebra: PathBuf,
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Build an extension algebra.
    Extend {
        #[command(subcommand)]
        kind: ExtendKind,
    },
    /// Slice searches.
    Slices {
        #[command(subcommand)]
        action: SlicesAction,
    },
    /// Orbit graph of the AR component containing node 0.
    OrbitGraph { algebra: PathBuf },
    /// Number of support τ-tilting modules, zero included.
    CountStt { algebra: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum ExtendKind {
    /// `A[X]`.
    OnePoint {
        algebra: PathBuf,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value = "w")]
        vertex: String,
        /// Comma-separated labels for the new arrows.
        #[arg(long, default_value = "")]
        arrows: String,
    },
    /// `[X]A`.
    Coextend {
        algebra: PathBuf,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value = "w")]
        vertex: String,
        #[arg(long, default_value = "")]
        arrows: String,
    },
    /// `C ⋉ I` for an ideal `I` of `B` with `B / I = C`.
    Split {
        algebra: PathBuf,
        #[arg(long)]
        over: PathBuf,
        #[arg(long, required = true)]
        ideal: Vec<String>,
    },
    /// The relation extension `C ⋉ Ext²(DC, C)`.
    Trivial { algebra: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum SlicesAction {
    /// Complete τ-slices in AR-quiver discovery order.
    Find {
        algebra: PathBuf,
        #[arg(long)]
        limit: Option<usize>,
    },
}

/// What a command prints and how it exits.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl From<Report> for Output {
    fn from(r: Report) -> Output {
        let code = r.verdict.exit_code();
        Output { text: r.to_json() + "\n", code }
    }
}

struct Ctx {
    field: Option<Field>,
    caps: ArCaps,
    search: SearchOptions,
}

impl Ctx {
    fn algebra(&self, path: &Path) -> Result<Arc<PresentedAlgebra>, CliError> {
        Ok(parse_algebra(&read(path)?, self.field)?)
    }

    fn quiver(&self, a: &Arc<PresentedAlgebra>) -> Result<ArQuiver, CliError> {
        Ok(ar_quiver(a, self.caps)?)
    }

    /// Summands named by `--module` files and `--dimvec` queries.
    fn summands(&self, a: &Arc<PresentedAlgebra>, args: &ModuleArgs) -> Result<Vec<Representation>, CliError> {
        let mut out = vec![];
        for p in &args.module {
            out.extend(parse_modules(&read(p)?, a)?.into_iter().map(|m| m.module));
        }
        if !args.dimvec.is_empty() {
            let q = self.quiver(a)?;
            for d in &args.dimvec {
                out.push(resolve_dimvec(&q, d)?);
            }
        }
        if out.is_empty() {
            return Err(CliError::Usage("no module given; use --module or --dimvec".into()));
        }
        Ok(out)
    }

    /// Summands split into indecomposables.
    fn indecomposables(&self, a: &Arc<PresentedAlgebra>, args: &ModuleArgs) -> Result<Vec<Representation>, CliError> {
        let mut out = vec![];
        for m in self.summands(a, args)? {
            out.extend(decompose(&m)?.into_iter().map(|s| s.module));
        }
        Ok(out)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn resolve_dimvec(q: &ArQuiver, text: &str) -> Result<Representation, CliError> {
    let wanted: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("bad dimension vector {text}")))?;
    let hits: Vec<usize> = (0..q.len()).filter(|&i| q.nodes[i].module.dims() == wanted.as_slice()).collect();
    match hits.as_slice() {
        [i] => Ok(q.nodes[*i].module.clone()),
        [] => Err(CliError::Usage(format!("no indecomposable with dimension vector {text}"))),
        _ => Err(CliError::Usage(format!("dimension vector {text} is ambiguous: nodes {hits:?}"))),
    }
}

fn dims(ms: &[Representation]) -> Value {
    json!(ms.iter().map(|m| m.dims().to_vec()).collect::<Vec<_>>())
}

fn summands_of(m: &Representation) -> Result<Vec<Representation>, CliError> {
    if m.is_zero() {
        return Ok(vec![]);
    }
    Ok(decompose(m)?.into_iter().map(|s| s.module).collect())
}

fn words(a: &PresentedAlgebra, ws: &[String]) -> Result<Vec<Vec<tauslice::exactlin::Scalar>>, CliError> {
    ws.iter()
        .map(|w| Ok(a.element(&tauslice::algebra::parse_relation(a.field(), a.quiver(), w)?)))
        .collect()
}

fn arrow_labels(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty()).collect()
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    let field = cli.field.as_deref().map(parse_field).transpose()?;
    let mut caps = ArCaps::default();
    let mut search = SearchOptions::default();
    if let Some(c) = cli.cap {
        caps.max_nodes = c;
        search.node_cap = c;
        search.ar_caps = caps;
    }
    let ctx = Ctx { field, caps, search };
    match cli.command {
        Command::Fmt { algebra } => {
            let a = ctx.algebra(&algebra)?;
            Ok(Output { text: print_algebra(&a), code: 0 })
        }
        Command::Info { algebra } => {
            let a = ctx.algebra(&algebra)?;
            let q = a.quiver();
            let details = json!({
                "vertices": q.vertices(),
                "arrows": q.arrows().iter().map(|ar| format!("{}: {} -> {}", ar.label, q.vertex_label(ar.source), q.vertex_label(ar.target))).collect::<Vec<_>>(),
                "relations": a.relations().iter().map(|r| r.display(q)).collect::<Vec<_>>(),
                "groebner_basis": a.groebner_basis().iter().map(|r| r.display(q)).collect::<Vec<_>>(),
                "dimension": a.dim(),
                "loewy_length": a.loewy_length(),
                "hereditary": is_hereditary(&a),
                "field": a.field().to_string(),
            });
            Ok(Report::new("info", &a, Verdict::Success).with_details(details).into())
        }
        Command::Indecomposables { algebra } => {
            let a = ctx.algebra(&algebra)?;
            let q = ctx.quiver(&a)?;
            let nodes: Vec<Value> = q
                .nodes
                .iter()
                .enumerate()
                .map(|(i, n)| json!({"index": i, "dim_vector": n.module.dims(), "projective": n.projective, "injective": n.injective}))
                .collect();
            Ok(Report::new("indecomposables", &a, Verdict::Success)
                .with_details(json!({"count": q.len(), "nodes": nodes}))
                .into())
        }
        Command::ArQuiver { algebra, dot } => {
            let a = ctx.algebra(&algebra)?;
            let q = ctx.quiver(&a)?;
            if dot {
                return Ok(Output { text: emit_dot(&q), code: 0 });
            }
            let details = json!({
                "nodes": q.nodes.iter().map(|n| n.module.dims().to_vec()).collect::<Vec<_>>(),
                "arrows": q.arrows,
                "tau": q.tau,
            });
            Ok(Report::new("ar-quiver", &a, Verdict::Success).with_details(details).into())
        }
        Command::Tau { algebra, module } => {
            let a = ctx.algebra(&algebra)?;
            let m = Representation::direct_sum(&ctx.summands(&a, &module)?);
            let details = json!({
                "tau": dims(&summands_of(&tau(&m))?),
                "tau_inverse": dims(&summands_of(&tau_inverse(&m))?),
            });
            Ok(Report::new("tau", &a, Verdict::Success).with_details(details).into())
        }
        Command::Check { kind, algebra, module } => check(&ctx, kind, &algebra, &module),
        Command::BbVerify { algebra, module, dual } => {
            let a = ctx.algebra(&algebra)?;
            let m = Representation::direct_sum(&ctx.indecomposables(&a, &module)?);
            let r = if dual { bb_verify_dual(&m)? } else { bb_verify(&m)? };
            let consistent = r.part1 && r.hom_equivalence && r.ext_equivalence == r.tau_agree;
            let details = json!({
                "part1": r.part1,
                "annihilator_dim": r.annihilator.cols(),
                "end_b_dim": r.end_b_dim,
                "c_hereditary": r.c_hereditary,
                "hom_equivalence": r.hom_equivalence,
                "ext_equivalence": r.ext_equivalence,
                "tau_agree": r.tau_agree,
                "tau_a": dims(&summands_of(&r.tau_a)?),
                "tau_c": dims(&summands_of(&r.tau_c)?),
                "x_class": dims(&r.x_class),
                "y_class": dims(&r.y_class),
                "fac": dims(&r.torsion_pair.torsion),
                "sub_tau": dims(&r.torsion_pair.torsion_free),
                "end_presentation": print_algebra(&r.b.algebra),
            });
            let mut rep = Report::new(if dual { "bb-verify-dual" } else { "bb-verify" }, &a, consistent.into())
                .with_details(details);
            if let Some(w) = &r.sub_witness {
                rep = rep.witness("sub_tau_a_not_sub_tau_c", w, None);
            }
            Ok(rep.into())
        }
        Command::TorsionPair { algebra, module } => {
            let a = ctx.algebra(&algebra)?;
            let m = Representation::direct_sum(&ctx.summands(&a, &module)?);
            let q = ctx.quiver(&a)?;
            let tp = torsion_pair_of(&m, &q.modules())?;
            let details = json!({
                "torsion": dims(&tp.torsion),
                "torsion_free": dims(&tp.torsion_free),
                "neither": dims(&tp.neither),
                "splitting": tp.is_splitting(),
            });
            Ok(Report::new("torsion-pair", &a, Verdict::Success).with_details(details).into())
        }
        Command::Quotient { algebra, ideal } => {
            let a = ctx.algebra(&algebra)?;
            let b = a.quotient(&words(&a, &ideal)?)?;
            Ok(Report::new("quotient", &a, Verdict::Success)
                .with_details(json!({"presentation": print_algebra(&b), "dimension": b.dim()}))
                .into())
        }
        Command::Endo { algebra, module } => {
            let a = ctx.algebra(&algebra)?;
            let parts = ctx.indecomposables(&a, &module)?;
            let labels: Vec<String> = (1..=parts.len()).map(|i| i.to_string()).collect();
            let e = end_algebra(&parts, &labels)?;
            let details = json!({
                "presentation": print_algebra(&e.algebra),
                "dimension": e.algebra.dim(),
                "hereditary": is_hereditary(&e.algebra),
            });
            Ok(Report::new("endo", &a, Verdict::Success).with_details(details).into())
        }
        Command::Extend { kind } => extend(&ctx, kind),
        Command::Slices { action: SlicesAction::Find { algebra, limit } } => {
            let a = ctx.algebra(&algebra)?;
            let q = ctx.quiver(&a)?;
            let opts = SearchOptions { limit: limit.unwrap_or(usize::MAX), ..ctx.search };
            let found = find_complete_tau_slices_in(&q, opts)?;
            let slices: Vec<Value> = found
                .iter()
                .map(|s| json!(s.members.iter().map(|m| json!({"dim_vector": m.dims(), "index": q.find(m)})).collect::<Vec<_>>()))
                .collect();
            Ok(Report::new("slices find", &a, Verdict::Success)
                .with_details(json!({"count": found.len(), "slices": slices}))
                .into())
        }
        Command::OrbitGraph { algebra } => {
            let a = ctx.algebra(&algebra)?;
            let q = ctx.quiver(&a)?;
            let g = orbit_graph(&q, 0);
            let orbits: Vec<Value> =
                g.orbits.iter().map(|o| json!(o.iter().map(|&i| q.nodes[i].module.dims().to_vec()).collect::<Vec<_>>())).collect();
            let tree = g.is_tree();
            Ok(Report::new("orbit-graph", &a, tree.into())
                .with_details(json!({"orbits": orbits, "edges": g.edges, "tree": tree}))
                .into())
        }
        Command::CountStt { algebra } => {
            let a = ctx.algebra(&algebra)?;
            let n = count_support_tau_tilting(&a, ctx.search.node_cap.max(10_000))?;
            Ok(Report::new("count-stt", &a, Verdict::Success).with_details(json!({"count": n})).into())
        }
    }
}

fn check(ctx: &Ctx, kind: CheckKind, path: &Path, module: &ModuleArgs) -> Result<Output, CliError> {
    let a = ctx.algebra(path)?;
    let name = format!("check {}", kind.to_possible_value().expect("named").get_name());
    if let CheckKind::Tilted = kind {
        return Ok(match is_tilted(&a, ctx.search)? {
            TiltedVerdict::Tilted(w) => {
                let q = ctx.quiver(&a).ok();
                let mut r = Report::new(&name, &a, Verdict::True);
                for m in &w.members {
                    r = r.witness("slice_member", m, q.as_ref());
                }
                r
            }
            TiltedVerdict::NotTilted => {
                Report::new(&name, &a, Verdict::False).with_details(json!({"search": "complete"}))
            }
            TiltedVerdict::Inconclusive(why) => {
                Report::new(&name, &a, Verdict::Inconclusive).with_details(json!({"reason": why}))
            }
        }
        .into());
    }
    let parts = ctx.indecomposables(&a, module)?;
    let m = Representation::direct_sum(&parts);
    let slice = || SliceCandidate::new(parts.clone());
    let global = || ctx.quiver(&a);
    let verdict = match kind {
        CheckKind::TauRigid => is_tau_rigid(&m),
        CheckKind::TauTilting => is_tau_tilting(&m)?,
        CheckKind::SupportTauTilting => is_support_tau_tilting(&m)?,
        CheckKind::Tilting => is_tilting(&m)?,
        CheckKind::Presection => is_presection(&slice()?)?,
        CheckKind::TauSlice => is_tau_slice(&slice()?)?,
        CheckKind::CompleteTauSlice => is_complete_tau_slice(&slice()?)?,
        CheckKind::Section => is_section(&slice()?, &global()?)?,
        CheckKind::CompleteSlice => is_complete_slice_bounded(&slice()?, ctx.caps)?,
        CheckKind::LocalSlice => is_local_slice(&slice()?, &global()?)?,
        CheckKind::Tilted => unreachable!("handled above"),
    };
    let mut r = Report::new(&name, &a, verdict.into());
    for p in &parts {
        r = r.witness("summand", p, None);
    }
    Ok(r.into())
}

fn extend(ctx: &Ctx, kind: ExtendKind) -> Result<Output, CliError> {
    let (name, a, b) = match kind {
        ExtendKind::OnePoint { algebra, module, vertex, arrows } => {
            let a = ctx.algebra(&algebra)?;
            let x = Representation::direct_sum(&ctx.summands(&a, &module)?);
            let b = one_point_extension(&a, &x, &vertex, &arrow_labels(&arrows))?;
            ("extend one-point", a, b)
        }
        ExtendKind::Coextend { algebra, module, vertex, arrows } => {
            let a = ctx.algebra(&algebra)?;
            let x = Representation::direct_sum(&ctx.summands(&a, &module)?);
            let b = coextension(&a, &x, &vertex, &arrow_labels(&arrows))?;
            ("extend coextend", a, b)
        }
        ExtendKind::Split { algebra, over, ideal } => {
            let c = ctx.algebra(&algebra)?;
            let big = ctx.algebra(&over)?;
            let q = Bimodule::ideal_over(&big, &c, &words(&big, &ideal)?)?;
            let b = split_extension(&q)?;
            let same = b.same_presentation(&big);
            let r = Report::new("extend split", &c, Verdict::Success).with_details(json!({
                "presentation": print_algebra(&b),
                "dimension": b.dim(),
                "same_presentation_as_over": same,
            }));
            return Ok(r.into());
        }
        ExtendKind::Trivial { algebra } => {
            let c = ctx.algebra(&algebra)?;
            let e = relation_extension_bimodule(&c)?;
            let b = split_extension(&e)?;
            ("extend trivial", c, b)
        }
    };
    let _ = annihilator;
    Ok(Report::new(name, &a, Verdict::Success)
        .with_details(json!({"presentation": print_algebra(&b), "dimension": b.dim()}))
        .into())
}
