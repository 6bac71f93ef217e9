use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sdrd_core::atlas::{right_three_cap, Pattern, CENTER_BOUND_CASES};
use sdrd_core::bounds::{bound_report, discharge, verify_discharge_certificate};
use sdrd_core::constructions::Scheme;
use sdrd_core::graph::{build_flower_snark, build_grid, build_petersen, parse_edge_list};
use sdrd_core::labeling::validate;
use sdrd_core::reproduce::{Reproduction, ATLAS_CRITERIA};
use sdrd_core::solver::{brute_force, size_limit_from_env, solve_bnb_with_limit, solve_strip_dp};
use sdrd_core::{Atlas, Constellation, Error, Family, Graph, Labeling, SolveResult, SolveSpec, Topology};

const EXIT_INVALID: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TOO_LARGE: u8 = 3;

/// Signed double Roman domination toolkit.
#[derive(Parser)]
#[command(name = "sdrd", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact minimum weight of a signed double Roman k-dominating function.
    Gamma {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 1)]
        threshold: i32,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Write the optimal labeling here as CSV.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Check a labeling; exits 1 when it is invalid.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        labeling: PathBuf,
        #[arg(long, default_value_t = 1)]
        threshold: i32,
        /// Comma-separated vertex ids whose own conditions are waived.
        #[arg(long, value_delimiter = ',')]
        exempt: Vec<usize>,
    },
    /// Emit a construction labeling and compare its weight to the closed form.
    Construct {
        #[arg(long, value_enum)]
        family: Construction,
        #[arg(long)]
        m: usize,
        /// Petersen shift, for `petersen-even` only.
        #[arg(long)]
        k: Option<usize>,
        /// Write the labeling here as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form bounds for a cubic graph.
    Bounds {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 1)]
        threshold: i32,
    },
    /// Final charges of the discharging argument for a valid labeling.
    Discharge {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        labeling: PathBuf,
    },
    /// Block constellation atlas.
    Atlas {
        #[command(subcommand)]
        action: AtlasAction,
    },
    /// Run every headline check and print a summary table.
    Reproduce {
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum AtlasAction {
    /// Solve every canonical constellation and write the CSV.
    Build {
        #[arg(long)]
        db: PathBuf,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
    },
    /// Re-check the atlas claims against a stored CSV; exits 1 on failure.
    Check {
        #[arg(long)]
        db: PathBuf,
    },
    /// Print the records matching the filters as CSV.
    Query {
        #[arg(long)]
        db: PathBuf,
        /// Records with a 3/-1 pair on both right rows, up to symmetry.
        #[arg(long)]
        right_three_cap: bool,
        /// Eight comma-separated labels or `*`, matched up to symmetry.
        #[arg(long)]
        pattern: Option<String>,
        /// The forced-center cases with their lower bounds.
        #[arg(long)]
        center_bounds: bool,
        #[arg(long, allow_hyphen_values = true)]
        min_delta: Option<i32>,
        #[arg(long, allow_hyphen_values = true)]
        max_delta: Option<i32>,
    },
}

#[derive(Args)]
struct GraphArgs {
    #[arg(long, value_enum, conflicts_with = "edges")]
    family: Option<GraphFamily>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 2)]
    rows: usize,
    #[arg(long)]
    cols: Option<usize>,
    /// Edge list: an `n m` header then one `a b` pair per line.
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFamily {
    Petersen,
    Grid,
    Snark,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Bnb,
    Dp,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    PetersenM1,
    PetersenM3,
    PetersenEven,
    Snark,
    Grid2xm,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Error carrying the process exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let too_large = matches!(error.downcast_ref::<Error>(), Some(Error::TooLarge { .. }));
        Self { code: if too_large { EXIT_TOO_LARGE } else { EXIT_USAGE }, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Gamma { graph, threshold, method, witness } => gamma(&graph, threshold, method, witness.as_deref()),
        Command::Verify { graph, labeling, threshold, exempt } => verify(&graph, &labeling, threshold, &exempt),
        Command::Construct { family, m, k, out } => construct(family, m, k, out.as_deref()),
        Command::Bounds { graph, threshold } => {
            let g = graph.load()?;
            print_json(&bound_report(&g, threshold)?)
        }
        Command::Discharge { graph, labeling } => charges(&graph, &labeling),
        Command::Atlas { action } => atlas(action),
        Command::Reproduce { jobs, only, json } => reproduce(jobs, &only, json),
    }
}

impl GraphArgs {
    fn load(&self) -> anyhow::Result<Graph> {
        if let Some(path) = &self.edges {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            return parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()));
        }
        let Some(family) = self.family else {
            bail!("give either --family or --edges");
        };
        let need_m = || self.m.context("--m is required for this family");
        let g = match family {
            GraphFamily::Petersen => build_petersen(need_m()?, self.k.context("--k is required for petersen")?)?,
            GraphFamily::Snark => build_flower_snark(need_m()?)?,
            GraphFamily::Grid => build_grid(self.rows, self.cols.or(self.m).context("--cols is required for grid")?)?,
        };
        Ok(g)
    }
}

fn read_labeling(path: &Path, g: &Graph) -> anyhow::Result<Labeling> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let lab = Labeling::read_csv(BufReader::new(file)).with_context(|| format!("parsing {}", path.display()))?;
    if lab.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), got: lab.len() }.into());
    }
    Ok(lab)
}

fn write_labeling(path: &Path, lab: &Labeling) -> anyhow::Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    lab.write_csv(BufWriter::new(file))?;
    Ok(())
}

/// Writes a line to stdout; a closed pipe (`| head`) is not an error.
fn emit(text: &str) -> anyhow::Result<()> {
    match writeln!(io::stdout().lock(), "{text}") {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn print_json<T: Serialize>(value: &T) -> Outcome {
    emit(&serde_json::to_string_pretty(value).map_err(anyhow::Error::from)?)?;
    Ok(0)
}

fn strip_topology(g: &Graph) -> Option<Topology> {
    match g.family() {
        Family::Grid { rows: 2, .. } => Some(Topology::Open),
        Family::GeneralizedPetersen { k: 1, .. } => Some(Topology::Cyclic),
        _ => None,
    }
}

#[derive(Serialize)]
struct GammaReport {
    n: usize,
    k: i32,
    method: &'static str,
    feasible: bool,
    min_weight: Option<i32>,
    witness: Option<Vec<i32>>,
    elapsed_secs: f64,
}

fn gamma(args: &GraphArgs, k: i32, method: Method, witness: Option<&Path>) -> Outcome {
    let g = args.load()?;
    let spec = SolveSpec::new(&g).with_k(k)?;
    let topology = strip_topology(&g);
    let t = Instant::now();
    let (name, result) = match (method, topology) {
        (Method::Auto | Method::Dp, Some(top)) => ("dp", solve_strip_dp(&spec, top)?),
        (Method::Dp, None) => {
            return Err(Error::UnsupportedTopology("only 2 x m grids and prisms P(m,1)".into()).into());
        }
        (Method::Auto | Method::Bnb, _) => ("bnb", solve_bnb_with_limit(&spec, size_limit_from_env())?),
        (Method::Brute, _) => ("brute", brute_force(&spec)?),
    };
    let elapsed_secs = t.elapsed().as_secs_f64();
    if let (Some(path), Some(lab)) = (witness, result.witness()) {
        write_labeling(path, lab)?;
    }
    print_json(&GammaReport {
        n: g.n(),
        k,
        method: name,
        feasible: result.is_optimal(),
        min_weight: result.min_weight(),
        witness: result.witness().map(Labeling::values),
        elapsed_secs,
    })?;
    Ok(if matches!(result, SolveResult::Infeasible) { EXIT_INVALID } else { 0 })
}

#[derive(Serialize)]
struct Violation {
    vertex: usize,
    name: String,
    condition: String,
}

#[derive(Serialize)]
struct VerifyReport {
    valid: bool,
    weight: i32,
    k: i32,
    violations: Vec<Violation>,
}

fn verify(args: &GraphArgs, path: &Path, k: i32, exempt: &[usize]) -> Outcome {
    let g = args.load()?;
    let lab = read_labeling(path, &g)?;
    if k < 1 {
        return Err(Error::Parameter(format!("threshold k = {k} must be at least 1")).into());
    }
    let report = validate(&g, &lab, k, exempt)?;
    let violations = report
        .violations()
        .into_iter()
        .map(|(v, c)| Violation { vertex: v, name: g.vertex_name(v).to_string(), condition: c.to_string() })
        .collect();
    print_json(&VerifyReport { valid: report.valid, weight: report.weight, k, violations })?;
    Ok(if report.valid { 0 } else { EXIT_INVALID })
}

#[derive(Serialize)]
struct ConstructReport {
    family: String,
    m: usize,
    n: usize,
    weight: i32,
    predicted: i32,
    valid: bool,
}

fn construct(family: Construction, m: usize, k: Option<usize>, out: Option<&Path>) -> Outcome {
    let scheme = match family {
        Construction::PetersenM1 => Scheme::PetersenM1,
        Construction::PetersenM3 => Scheme::PetersenM3,
        Construction::PetersenEven => Scheme::PetersenEvenOdd { k: k.context("--k is required for petersen-even")? },
        Construction::Snark => Scheme::FlowerSnark,
        Construction::Grid2xm => Scheme::Grid2xm,
    };
    let g = scheme.graph(m)?;
    let lab = scheme.labeling(m)?;
    let valid = validate(&g, &lab, 1, &[])?.valid;
    if let Some(path) = out {
        write_labeling(path, &lab)?;
    }
    let report = ConstructReport {
        family: format!("{scheme:?}"),
        m,
        n: g.n(),
        weight: lab.total_weight(),
        predicted: scheme.claimed_weight(m),
        valid,
    };
    let agrees = valid && report.weight == report.predicted;
    print_json(&report)?;
    Ok(if agrees { 0 } else { EXIT_INVALID })
}

#[derive(Serialize)]
struct DischargeReport {
    weight: i32,
    quarter_charges: Vec<i64>,
    min_charge: f64,
    total_charge: f64,
    totals_after_rule: [f64; 4],
    certificate: bool,
}

fn charges(args: &GraphArgs, path: &Path) -> Outcome {
    let g = args.load()?;
    let lab = read_labeling(path, &g)?;
    let cv = match discharge(&g, &lab) {
        Err(Error::InvalidLabeling) => {
            eprintln!("error: labeling is not a valid SDRDF");
            return Ok(EXIT_INVALID);
        }
        r => r?,
    };
    let certificate = verify_discharge_certificate(&g, &lab)?;
    print_json(&DischargeReport {
        weight: lab.total_weight(),
        min_charge: cv.min() as f64 / 4.0,
        total_charge: cv.total() as f64 / 4.0,
        totals_after_rule: cv.totals_after_rule.map(|t| t as f64 / 4.0),
        quarter_charges: cv.quarter_charges,
        certificate,
    })?;
    Ok(if certificate { 0 } else { EXIT_INVALID })
}

fn load_atlas(db: &Path) -> anyhow::Result<Atlas> {
    let file = File::open(db).with_context(|| format!("opening {}", db.display()))?;
    Atlas::read_csv(BufReader::new(file)).with_context(|| format!("parsing {}", db.display()))
}

fn atlas(action: AtlasAction) -> Outcome {
    match action {
        AtlasAction::Build { db, jobs } => {
            let t = Instant::now();
            let atlas = Atlas::build_with_jobs(jobs)?;
            let file = File::create(&db).with_context(|| format!("creating {}", db.display()))?;
            atlas.write_csv(BufWriter::new(file))?;
            eprintln!("{} records written to {} in {:.2} s", atlas.len(), db.display(), t.elapsed().as_secs_f64());
            Ok(0)
        }
        AtlasAction::Check { db } => {
            let repro = Reproduction::with_atlas(load_atlas(&db)?);
            let mut failed = false;
            for id in ATLAS_CRITERIA {
                let outcome = repro.run(id).expect("atlas criterion ids are registered");
                failed |= !outcome.passed;
                emit(&outcome.to_string())?;
            }
            Ok(if failed { EXIT_INVALID } else { 0 })
        }
        AtlasAction::Query { db, right_three_cap: cap, pattern, center_bounds, min_delta, max_delta } => {
            let atlas = load_atlas(&db)?;
            if center_bounds {
                return print_center_bounds(&atlas);
            }
            let mut patterns = Vec::new();
            if cap {
                patterns.push(right_three_cap());
            }
            if let Some(p) = pattern {
                patterns.push(p.parse::<Pattern>()?);
            }
            let hits: Vec<_> = atlas
                .query(|r| patterns.iter().all(|p| p.matches_orbit(&r.d)))
                .filter(|r| min_delta.is_none_or(|d| r.delta().is_some_and(|x| x >= d)))
                .filter(|r| max_delta.is_none_or(|d| r.delta().is_some_and(|x| x <= d)))
                .cloned()
                .collect();
            let count = hits.len();
            match Atlas::from_records(hits)?.write_csv(io::stdout().lock()) {
                Err(Error::Csv(e)) if e.is_io_error() => {}
                r => r?,
            }
            eprintln!("{count} matching records");
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct CenterBound {
    constellation: String,
    bound: i32,
    minweight_c: Option<i32>,
    holds: bool,
}

fn print_center_bounds(atlas: &Atlas) -> Outcome {
    let mut rows = Vec::new();
    for (top, bottom, bound) in CENTER_BOUND_CASES {
        let c = Constellation::from_rows(top, bottom)?;
        let w = atlas.lookup(&c).and_then(|r| r.minweight_c);
        rows.push(CenterBound {
            constellation: c.to_string(),
            bound,
            minweight_c: w,
            holds: w.is_none_or(|w| w >= bound),
        });
    }
    let holds = rows.iter().all(|r| r.holds);
    print_json(&rows)?;
    Ok(if holds { 0 } else { EXIT_INVALID })
}

fn reproduce(jobs: usize, only: &[u32], json: bool) -> Outcome {
    let repro = Reproduction::new(jobs);
    let mut outcomes = Vec::new();
    for &(id, ..) in sdrd_core::reproduce::CRITERIA.iter() {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let o = repro.run(id).expect("criterion ids are registered");
        if !json {
            emit(&o.to_string())?;
        }
        outcomes.push(o);
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    if json {
        print_json(&outcomes)?;
    } else {
        emit(&format!("\n{:>3}  {:<6}  {:>9}  name", "id", "result", "seconds"))?;
        for o in &outcomes {
            let result = if o.passed { "pass" } else { "FAIL" };
            emit(&format!("{:>3}  {:<6}  {:>9.2}  {}", o.id, result, o.elapsed_secs, o.name))?;
        }
        emit(&format!("{passed}/{} passed", outcomes.len()))?;
    }
    Ok(if passed == outcomes.len() { 0 } else { EXIT_INVALID })
}
