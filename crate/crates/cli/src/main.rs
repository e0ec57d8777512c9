//! `bmw`: command-line front-end for the BMW algebra engine.
//!
//! Exit status is 0 on success, 1 when a verification check fails and 2 on
//! usage or input errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bmw_core::lkrep::{
    build_z0_cached, classical_lk, classical_lk_at, r_substitution_map, CharacterCoeffs, DenseMatrix, LkModel, SpecPoint,
    ThetaCoeffs,
};
use bmw_core::verify::{
    a2_dimension_check, default_points, dims_report, generic_supported, run_suite_cached, Mode, Suite, SuiteReport,
};
use bmw_core::wordalg::{parse_word, reduce_word};
use bmw_core::{DynkinType, Root, RootSystem, Scalar, Q};

#[derive(Parser)]
#[command(name = "bmw", version, about = "Exact BMW algebras of simply laced type via generalized Lawrence-Krammer representations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Positive roots, highest root and the node set C.
    Roots {
        #[arg(long = "type", value_parser = parse_type)]
        ty: DynkinType,
        #[arg(long)]
        json: bool,
    },
    /// Rewrites a word into a combination of words of length at most |Phi+|.
    Reduce {
        #[arg(long = "type", value_parser = parse_type)]
        ty: DynkinType,
        /// Whitespace-separated letters g<i>, G<i> (inverse), e<i>.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// The coefficient T_{i,beta}.
    Tcoeff {
        #[arg(long = "type", value_parser = parse_type)]
        ty: DynkinType,
        #[arg(long)]
        node: usize,
        /// Root coefficients, comma separated.
        #[arg(long, value_parser = parse_root)]
        root: Root,
        /// Evaluate through the classical character at l=<rat>,r=<rat>.
        #[arg(long, value_parser = parse_point)]
        specialize: Option<SpecPoint>,
        #[arg(long)]
        json: bool,
        /// Directory for memoized coefficient tables.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// The node j of C with h_{beta,i} = z_j.
    Hbeta {
        #[arg(long = "type", value_parser = parse_type)]
        ty: DynkinType,
        #[arg(long, value_parser = parse_root)]
        root: Root,
        #[arg(long)]
        node: usize,
        #[arg(long)]
        json: bool,
    },
    /// Representation matrices of the generators g_i.
    Matrices {
        #[arg(long = "type", value_parser = parse_type)]
        ty: DynkinType,
        /// Push the matrices through a representation of Z_0.
        #[arg(long, value_enum)]
        theta: Option<ThetaKind>,
        /// Fix r (with m = r - 1/r) for --theta lk; otherwise r stays symbolic.
        #[arg(long, value_parser = parse_q, requires = "theta")]
        r: Option<Q>,
        /// Emit JSON, to the given file or to standard output.
        #[arg(long, num_args = 0..=1, value_name = "PATH")]
        json: Option<Option<PathBuf>>,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Runs a relation suite.
    Verify {
        #[arg(long = "type", value_parser = parse_type)]
        ty: DynkinType,
        /// braid, essential, eiproj, table1, zaction, tau_monoid, all, or
        /// a2_dimension (type A2 only).
        #[arg(long)]
        suite: String,
        /// Check at the single point l=<rat>,r=<rat> through the classical character.
        #[arg(long, value_parser = parse_point, conflicts_with = "mode")]
        specialize: Option<SpecPoint>,
        /// auto picks generic where offered and the default points otherwise.
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Dimension formulas for the type.
    Dims {
        #[arg(long = "type", value_parser = parse_type)]
        ty: DynkinType,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ThetaKind {
    /// The classical character z_j -> 1/r.
    Lk,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Auto,
    Generic,
    Specialized,
}

fn parse_type(s: &str) -> Result<DynkinType, String> {
    s.parse::<DynkinType>().map_err(|e| e.to_string())
}

fn parse_root(s: &str) -> Result<Root, String> {
    s.split(',').map(|t| t.trim().parse::<i32>().map_err(|_| format!("bad coefficient '{t}'"))).collect::<Result<_, _>>().map(Root)
}

fn parse_point(s: &str) -> Result<SpecPoint, String> {
    SpecPoint::parse(s).map_err(|e| e.to_string())
}

fn parse_q(s: &str) -> Result<Q, String> {
    s.parse::<Q>().map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<bmw_core::Error> for Failure {
    fn from(e: bmw_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<String, Failure>;

/// Pretty JSON through `Value`, whose keys are sorted, so the text is stable
/// under parse and reprint.
fn to_json(v: impl serde::Serialize) -> Out {
    let v = serde_json::to_value(v).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(serde_json::to_string_pretty(&v).expect("values always print") + "\n")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let name = cmd_name(&cli.cmd);
    match run(cli.cmd) {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("hint: see `bmw {name} --help`");
            ExitCode::from(2)
        }
    }
}

fn cmd_name(c: &Cmd) -> &'static str {
    match c {
        Cmd::Roots { .. } => "roots",
        Cmd::Reduce { .. } => "reduce",
        Cmd::Tcoeff { .. } => "tcoeff",
        Cmd::Hbeta { .. } => "hbeta",
        Cmd::Matrices { .. } => "matrices",
        Cmd::Verify { .. } => "verify",
        Cmd::Dims { .. } => "dims",
    }
}

fn run(cmd: Cmd) -> Out {
    match cmd {
        Cmd::Roots { ty, json } => roots(ty, json),
        Cmd::Reduce { ty, word, json } => reduce(ty, &word, json),
        Cmd::Tcoeff { ty, node, root, specialize, json, cache_dir } => tcoeff(ty, node, &root, specialize, json, cache_dir),
        Cmd::Hbeta { ty, root, node, json } => hbeta(ty, &root, node, json),
        Cmd::Matrices { ty, theta, r, json, cache_dir } => matrices(ty, theta, r, json, cache_dir),
        Cmd::Verify { ty, suite, specialize, mode, json, cache_dir } => verify(ty, &suite, specialize, mode, json, cache_dir),
        Cmd::Dims { ty, json } => dims(ty, json),
    }
}

fn roots(ty: DynkinType, json: bool) -> Out {
    let rs = RootSystem::build(ty);
    if json {
        return to_json(json!({
            "type": ty.to_string(),
            "positive_roots": rs.positive_roots(),
            "highest_root": rs.highest_root(),
            "c_nodes": rs.c_nodes(),
            "wc_order": rs.wc_order().to_string(),
        }));
    }
    let mut s = String::new();
    let _ = writeln!(s, "type {ty}, {} positive roots", rs.num_positive());
    for (k, r) in rs.positive_roots().iter().enumerate() {
        let _ = writeln!(s, "  {k:>3}  {r}  height {}", r.height());
    }
    let c: Vec<String> = rs.c_nodes().iter().map(|j| j.to_string()).collect();
    let _ = writeln!(s, "highest root {}", rs.highest_root());
    let _ = writeln!(s, "C = {{{}}}, |W_C| = {}", c.join(","), rs.wc_order());
    Ok(s)
}

fn reduce(ty: DynkinType, word: &str, json: bool) -> Out {
    let rs = RootSystem::build(ty);
    let w = parse_word(word, &rs)?;
    let r = reduce_word(&rs, &w);
    if json {
        return to_json(json!({
            "type": ty.to_string(),
            "word": w.to_string(),
            "result": r,
            "max_length": r.max_len(),
            "bound": rs.num_positive(),
        }));
    }
    Ok(format!("{w} = {r}\n"))
}

fn tcoeff(ty: DynkinType, node: usize, root: &Root, point: Option<SpecPoint>, json: bool, cache: Option<PathBuf>) -> Out {
    let rs = Arc::new(RootSystem::build(ty));
    rs.check_node(node)?;
    rs.require(root)?;
    let (text, value) = match &point {
        Some(p) => {
            let lk = LkModel::build(CharacterCoeffs::<Q>::classical(rs.clone(), p)?)?;
            let v = lk.t_coeff(node, root)?.clone();
            (v.to_string(), json!(v))
        }
        None => {
            require_generic(ty, "--specialize l=<rat>,r=<rat>")?;
            let lk = build_z0_cached(rs.clone(), cache.as_deref())?;
            let v = lk.t_coeff(node, root)?;
            (v.to_string(), serde_json::to_value(v).map_err(|e| Failure::Usage(e.to_string()))?)
        }
    };
    if json {
        return to_json(json!({
            "type": ty.to_string(),
            "node": node,
            "root": root,
            "specialization": point.as_ref().map(|p| p.to_string()),
            "value": value,
        }));
    }
    Ok(format!("T_{{{node},{root}}} = {text}\n"))
}

fn require_generic(ty: DynkinType, alternative: &str) -> Result<(), Failure> {
    if generic_supported(ty) {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "symbolic computation over Z_0 is offered for A1..A5, D4 and D5 only; for {ty} use {alternative}"
        )))
    }
}

fn hbeta(ty: DynkinType, root: &Root, node: usize, json: bool) -> Out {
    let rs = RootSystem::build(ty);
    rs.check_node(node)?;
    rs.require(root)?;
    let j = rs.h_beta_i(root, node)?;
    if json {
        return to_json(json!({ "type": ty.to_string(), "root": root, "node": node, "h": j }));
    }
    Ok(format!("h_{{{root},{node}}} = z_{j}\n"))
}

fn dense_json(m: &DenseMatrix<Scalar>) -> Value {
    // column-major
    Value::Array((0..m.cols()).map(|c| Value::Array((0..m.rows()).map(|r| json!(m.get(r, c))).collect())).collect())
}

fn dense_text(s: &mut String, m: &DenseMatrix<Scalar>, var: &str) {
    for c in 0..m.cols() {
        for r in 0..m.rows() {
            let v = m.get(r, c);
            if !v.is_zero() {
                let _ = writeln!(s, "  [{r},{c}] {}", v.fmt_var(var));
            }
        }
    }
}

fn matrices(ty: DynkinType, theta: Option<ThetaKind>, r: Option<Q>, json: Option<Option<PathBuf>>, cache: Option<PathBuf>) -> Out {
    let rs = Arc::new(RootSystem::build(ty));
    let (body, text) = match theta {
        None => {
            require_generic(ty, "--theta lk")?;
            let lk = build_z0_cached(rs.clone(), cache.as_deref())?;
            let n = lk.dim();
            let zero = lk.algebra().z0().zero();
            let mut mats = Vec::new();
            let mut s = format!("type {ty}, coefficients in Z_0, dimension {n}\n");
            for i in rs.nodes() {
                let cols: Vec<Value> = (0..n)
                    .map(|c| Value::Array((0..n).map(|r| json!(lk.sigma(i).get(r, c).unwrap_or(&zero))).collect()))
                    .collect();
                mats.push(json!({ "node": i, "sigma": cols }));
                let _ = writeln!(s, "sigma_{i}:");
                for c in 0..n {
                    for (r, v) in lk.sigma(i).column(c) {
                        let _ = writeln!(s, "  [{r},{c}] {v}");
                    }
                }
            }
            (json!({ "type": ty.to_string(), "theta": null, "r": null, "variable": "m", "dim": n, "matrices": mats }), s)
        }
        Some(ThetaKind::Lk) => {
            let (spec, map, var) = match &r {
                Some(r0) => {
                    let (t, m) = classical_lk_at(&rs, r0)?;
                    (t, m, "m")
                }
                None => (classical_lk(&rs), r_substitution_map(), "r"),
            };
            let lk = LkModel::build(ThetaCoeffs::new(rs.clone(), spec, map)?)?;
            let sig = lk.flattened_sigmas();
            let n = sig.first().map(|m| m.rows()).unwrap_or(0);
            let mut s = format!("type {ty}, classical character, dimension {n}\n");
            let mut mats = Vec::new();
            for (k, m) in sig.iter().enumerate() {
                mats.push(json!({ "node": k + 1, "sigma": dense_json(m) }));
                let _ = writeln!(s, "Gamma(g_{}):", k + 1);
                dense_text(&mut s, m, var);
            }
            let body = json!({
                "type": ty.to_string(),
                "theta": "lk",
                "r": r.as_ref().map(|q| q.to_string()),
                "variable": var,
                "dim": n,
                "matrices": mats,
            });
            (body, s)
        }
    };
    match json {
        None => Ok(text),
        Some(None) => to_json(body),
        Some(Some(path)) => {
            std::fs::write(&path, to_json(body)?)?;
            Ok(format!("wrote {}\n", path.display()))
        }
    }
}

fn verify(ty: DynkinType, suite: &str, point: Option<SpecPoint>, mode: ModeArg, json: bool, cache: Option<PathBuf>) -> Out {
    let report: SuiteReport = if suite == "a2_dimension" {
        if ty.to_string() != "A2" {
            return Err(Failure::Usage("suite a2_dimension needs --type A2".into()));
        }
        a2_dimension_check()?
    } else {
        let s: Suite = suite.parse()?;
        let mode = match (point, mode) {
            (Some(p), _) => Mode::Specialized(vec![p]),
            (None, ModeArg::Generic) => Mode::Generic,
            (None, ModeArg::Specialized) => Mode::Specialized(default_points()),
            (None, ModeArg::Auto) if generic_supported(ty) => Mode::Generic,
            (None, ModeArg::Auto) => Mode::Specialized(default_points()),
        };
        run_suite_cached(s, ty, &mode, cache.as_deref())?
    };
    eprintln!("wall time {:.3}s", report.wall_time.as_secs_f64());
    let out = if json {
        to_json(&report)?
    } else {
        let mut s = String::new();
        for c in &report.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{status} {} ({} instances)", c.name, c.instances);
            if let Some(w) = &c.witness {
                let _ = writeln!(s, "     witness: {w}");
            }
        }
        let ok = report.checks.iter().filter(|c| c.passed()).count();
        let _ = writeln!(s, "{} {} [{}]: {ok}/{} checks passed", report.suite, report.ty, report.mode, report.checks.len());
        s
    };
    if report.passed {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Checks)
    }
}

fn dims(ty: DynkinType, json: bool) -> Out {
    let r = dims_report(ty)?;
    if json {
        return to_json(&r);
    }
    let mut s = String::new();
    let _ = writeln!(s, "type {ty}");
    let _ = writeln!(s, "|Phi+| = {}", r.positive_roots);
    let _ = writeln!(s, "|W_C| = {}", r.wc_order);
    let _ = writeln!(s, "dim B/I_1 = |W| = {}", r.hecke_dim);
    let _ = writeln!(s, "dim I_1/I_2 = |Phi+|^2 |W_C| = {}", r.i1_mod_i2_dim);
    if let Some(layers) = &r.layers {
        for l in layers {
            let _ = writeln!(s, "  layer {}: {} x {}^2 x {} = {}", l.label, l.multiplicity, l.orbit, l.group_order, l.dim);
        }
    }
    match &r.total {
        Some(t) => {
            let tag = match t.status {
                bmw_core::verify::Status::Proved => "",
                bmw_core::verify::Status::Conjectural => " (conjectural)",
            };
            let _ = writeln!(s, "dim B = {}{tag}", t.value);
        }
        None => {
            let _ = writeln!(s, "dim B: no formula known");
        }
    }
    Ok(s)
}
