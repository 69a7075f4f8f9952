//! `hardcover`: generate, verify, solve, and export hard geometric
//! instances.
//!
//! Exit codes: 0 success or verification pass, 1 verification failure,
//! 2 usage error, 3 builder error. Diagnostics go to standard error and
//! artifacts are only written by the paths that report success.

use clap::{Parser, Subcommand, ValueEnum};
use hardcover_core::combinat::{
    exact_max_independent_set, exact_min_set_cover, exhaustive_min_vertex_cover, greedy_set_cover,
    Graph, SetSystem,
};
use hardcover_core::export::{export_obj, export_svg};
use hardcover_core::gen::{random_cover_system, random_degree3_graph};
use hardcover_core::geom3d::tri_tri_intersect;
use hardcover_core::instance::{Instance, InstanceFile, ReportFile};
use hardcover_core::rational::parse_rational;
use hardcover_core::reductions::{
    build_circles, build_fat_triangles, build_friendly, build_indep3d, build_planes, CoverGeometry,
    Triangle3DInstance, VerificationReport,
};
use hardcover_core::Rational;
use num_traits::One;
use serde::Deserialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hardcover",
    version,
    about = "Hard geometric covering instances",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an instance from a source file or a seeded random source.
    Gen {
        kind: Kind,
        /// Graph source, JSON {"n": .., "edges": [[u,v],..]} (graph kinds).
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Set-system source, JSON {"n": .., "sets": [[..],..]} (friendly).
        #[arg(long)]
        sets: Option<PathBuf>,
        /// Seeded random source.
        #[arg(long, num_args = 2, value_names = ["N", "SEED"])]
        random: Option<Vec<u64>>,
        /// Angle slack in degrees, as an integer or "p/q" (fat-tri,
        /// circles, planes; default 1).
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check every certified condition of an instance file.
    Verify {
        file: PathBuf,
        /// Also write the per-condition report as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Solve the geometric side of an instance.
    Solve {
        file: PathBuf,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        greedy: bool,
    },
    /// Render an instance to SVG (planar kinds) or OBJ (indep3d).
    Export {
        file: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        obj: Option<PathBuf>,
    },
    /// Build from a seed, verify, solve both sides, and write the instance.
    Roundtrip {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Friendly,
    FatTri,
    Circles,
    Planes,
    Indep3d,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Friendly => "friendly",
            Kind::FatTri => "fat-tri",
            Kind::Circles => "circles",
            Kind::Planes => "planes",
            Kind::Indep3d => "indep3d",
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn verification(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn builder(message: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("hardcover: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Gen {
            kind,
            graph,
            sets,
            random,
            delta,
            out,
        } => gen(kind, graph, sets, random, delta, &out),
        Cmd::Verify { file, report } => verify(&file, report.as_deref()),
        Cmd::Solve {
            file,
            exact,
            greedy,
        } => solve(&file, exact, greedy),
        Cmd::Export { file, svg, obj } => export(&file, svg, obj),
        Cmd::Roundtrip { kind, n, seed } => roundtrip(kind, n, seed),
    }
}

#[derive(Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct SetsFile {
    n: usize,
    sets: Vec<Vec<usize>>,
}

fn read_input(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn write_artifact(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Failure::builder(format!("cannot write {}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let raw: GraphFile = serde_json::from_str(&read_input(path)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Graph::new(raw.n, raw.edges).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_sets(path: &Path) -> Result<SetSystem, Failure> {
    let raw: SetsFile = serde_json::from_str(&read_input(path)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    SetSystem::new(raw.n, raw.sets).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<InstanceFile, Failure> {
    InstanceFile::from_json(&read_input(path)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Set-system shape used when `gen friendly --random n seed` draws its
/// source: n elements spread over ceil(n/2) sets.
fn random_friendly_source(n: usize, seed: u64) -> SetSystem {
    random_cover_system(n, n.div_ceil(2).max(1), seed)
}

fn parse_delta(delta: Option<String>, kind: Kind) -> Result<Rational, Failure> {
    let takes_delta = matches!(kind, Kind::FatTri | Kind::Circles | Kind::Planes);
    match delta {
        None => Ok(Rational::one()),
        Some(_) if !takes_delta => Err(Failure::usage(format!(
            "--delta does not apply to {} instances",
            kind.name()
        ))),
        Some(s) => parse_rational(&s).map_err(|e| Failure::usage(format!("--delta: {e}"))),
    }
}

enum Source {
    Graph(Graph),
    Sets(SetSystem),
}

fn resolve_source(
    kind: Kind,
    graph: Option<PathBuf>,
    sets: Option<PathBuf>,
    random: Option<Vec<u64>>,
) -> Result<(Source, Option<u64>), Failure> {
    let given = graph.is_some() as usize + sets.is_some() as usize + random.is_some() as usize;
    if given != 1 {
        return Err(Failure::usage(
            "gen needs exactly one of --graph, --sets, --random",
        ));
    }
    let wants_sets = kind == Kind::Friendly;
    if let Some(path) = graph {
        if wants_sets {
            return Err(Failure::usage("friendly instances are built from --sets"));
        }
        return Ok((Source::Graph(load_graph(&path)?), None));
    }
    if let Some(path) = sets {
        if !wants_sets {
            return Err(Failure::usage(format!(
                "{} instances are built from --graph",
                kind.name()
            )));
        }
        return Ok((Source::Sets(load_sets(&path)?), None));
    }
    let random = random.expect("one source is present");
    let n = usize::try_from(random[0]).expect("u64 to usize");
    if n == 0 {
        return Err(Failure::usage("--random needs n >= 1"));
    }
    let seed = random[1];
    let source = if wants_sets {
        Source::Sets(random_friendly_source(n, seed))
    } else {
        Source::Graph(random_degree3_graph(n, seed))
    };
    Ok((source, Some(seed)))
}

fn build(kind: Kind, source: &Source, delta: &Rational) -> Result<Instance, Failure> {
    let err = |e: hardcover_core::BuildError| Failure::builder(e.to_string());
    match (kind, source) {
        (Kind::Friendly, Source::Sets(s)) => {
            Ok(Instance::Friendly(build_friendly(s).map_err(err)?))
        }
        (Kind::FatTri, Source::Graph(g)) => Ok(Instance::FatTri(
            build_fat_triangles(g, delta).map_err(err)?,
        )),
        (Kind::Circles, Source::Graph(g)) => {
            Ok(Instance::Circles(build_circles(g, delta).map_err(err)?))
        }
        (Kind::Planes, Source::Graph(g)) => {
            let circles = build_circles(g, delta).map_err(err)?;
            Ok(Instance::Planes(build_planes(&circles).map_err(err)?))
        }
        (Kind::Indep3d, Source::Graph(g)) => Ok(Instance::Indep3d(build_indep3d(g).map_err(err)?)),
        _ => unreachable!("source shape checked during resolution"),
    }
}

fn gen(
    kind: Kind,
    graph: Option<PathBuf>,
    sets: Option<PathBuf>,
    random: Option<Vec<u64>>,
    delta: Option<String>,
    out: &Path,
) -> Result<(), Failure> {
    let delta = parse_delta(delta, kind)?;
    let (source, seed) = resolve_source(kind, graph, sets, random)?;
    let instance = build(kind, &source, &delta)?;
    write_artifact(out, &InstanceFile::new(instance, seed).to_json())
}

fn print_report(report: &VerificationReport) {
    for c in &report.conditions {
        if c.pass {
            println!("ok   {}", c.id);
        } else {
            println!("FAIL {}: {}", c.id, c.detail);
        }
    }
}

fn verify(file: &Path, report_path: Option<&Path>) -> Result<(), Failure> {
    let parsed = load_instance(file)?;
    let report = parsed.instance.verify();
    print_report(&report);
    if let Some(path) = report_path {
        let out = ReportFile::new(parsed.instance.kind_name(), &report);
        write_artifact(path, &out.to_json())?;
    }
    if report.pass {
        Ok(())
    } else {
        Err(Failure::verification(format!(
            "verification failed: {}",
            report.failing_ids().join(", ")
        )))
    }
}

fn intersection_graph_of(inst: &Triangle3DInstance) -> Graph {
    let n = inst.triangles.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if tri_tri_intersect(&inst.triangles[u], &inst.triangles[v]) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("pair scan yields a simple graph")
}

fn cover_system_of(instance: &Instance) -> Result<SetSystem, Failure> {
    let system = match instance {
        Instance::Friendly(i) => i.cover_system(),
        Instance::FatTri(i) => i.cover_system(),
        Instance::Circles(i) => i.cover_system(),
        Instance::Planes(i) => i.cover_system(),
        Instance::Indep3d(_) => unreachable!("caller routes indep3d elsewhere"),
    };
    system.map_err(|e| Failure::builder(format!("instance induces no set system: {e}")))
}

fn solve(file: &Path, exact: bool, greedy: bool) -> Result<(), Failure> {
    if exact == greedy {
        return Err(Failure::usage(
            "solve needs exactly one of --exact, --greedy",
        ));
    }
    let parsed = load_instance(file)?;
    if let Instance::Indep3d(inst) = &parsed.instance {
        if greedy {
            return Err(Failure::usage(
                "greedy solving applies to cover instances, not indep3d",
            ));
        }
        let mis = exact_max_independent_set(&intersection_graph_of(inst))
            .map_err(|e| Failure::builder(e.to_string()))?;
        println!("exact independent set: {} triangles", mis.size);
        println!("chosen: {}", join(&mis.vertices));
        return Ok(());
    }
    let system = cover_system_of(&parsed.instance)?;
    let solution = if exact {
        exact_min_set_cover(&system)
    } else {
        greedy_set_cover(&system)
    }
    .map_err(|e| Failure::builder(e.to_string()))?;
    let label = if exact { "exact" } else { "greedy" };
    println!("{label} cover: {} shapes", solution.size);
    println!("chosen: {}", join(&solution.chosen));
    Ok(())
}

fn join(ids: &[usize]) -> String {
    ids.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn export(file: &Path, svg: Option<PathBuf>, obj: Option<PathBuf>) -> Result<(), Failure> {
    let parsed = load_instance(file)?;
    match (svg, obj) {
        (Some(path), None) => {
            let doc = export_svg(&parsed.instance).map_err(Failure::usage)?;
            write_artifact(&path, &doc)
        }
        (None, Some(path)) => {
            let doc = export_obj(&parsed.instance).map_err(Failure::usage)?;
            write_artifact(&path, &doc)
        }
        _ => Err(Failure::usage("export needs exactly one of --svg, --obj")),
    }
}

/// Output directory for roundtrip artifacts; settable so sandboxed runs
/// can redirect them.
fn out_dir() -> PathBuf {
    std::env::var_os("HARDCOVER_OUT_DIR").map_or_else(|| PathBuf::from("."), PathBuf::from)
}

fn roundtrip(kind: Kind, n: usize, seed: u64) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::usage("roundtrip needs --n >= 1"));
    }
    let solver_err = |e: hardcover_core::CombinatError| Failure::builder(e.to_string());
    let delta = Rational::one();
    let (instance, source_opt) = match kind {
        Kind::Friendly => {
            let system = random_friendly_source(n, seed);
            let opt = exact_min_set_cover(&system).map_err(solver_err)?.size;
            (build(kind, &Source::Sets(system), &delta)?, opt)
        }
        Kind::Indep3d => {
            let g = random_degree3_graph(n, seed);
            let opt = exact_max_independent_set(&g).map_err(solver_err)?.size;
            (build(kind, &Source::Graph(g), &delta)?, opt)
        }
        _ => {
            let g = random_degree3_graph(n, seed);
            let opt = exhaustive_min_vertex_cover(&g).map_err(solver_err)?.len();
            (build(kind, &Source::Graph(g), &delta)?, opt)
        }
    };

    let report = instance.verify();
    if !report.pass {
        return Err(Failure::verification(format!(
            "fresh {} instance fails verification: {}",
            kind.name(),
            report.failing_ids().join(", ")
        )));
    }

    let geometric_opt = match &instance {
        Instance::Indep3d(inst) => {
            exact_max_independent_set(&intersection_graph_of(inst))
                .map_err(solver_err)?
                .size
        }
        other => {
            exact_min_set_cover(&cover_system_of(other)?)
                .map_err(solver_err)?
                .size
        }
    };
    println!("source optimum {source_opt}, geometric optimum {geometric_opt}");
    if source_opt != geometric_opt {
        return Err(Failure::verification("optimum mismatch".to_string()));
    }

    let path = out_dir().join(format!("roundtrip-{}-{n}-{seed}.json", kind.name()));
    let text = InstanceFile::new(instance, Some(seed)).to_json();
    write_artifact(&path, &text)?;
    let reread = load_instance(&path)?;
    if reread.to_json() != text {
        return Err(Failure::verification(format!(
            "{} does not round-trip byte-identically",
            path.display()
        )));
    }
    Ok(())
}
