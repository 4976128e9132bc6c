//! `boxcover` command-line tool.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 unreadable or
//! malformed input, 3 invalid flags or arguments, 4 instance too large for
//! the reference solver.

mod doc;
mod points;
mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use boxcover::generators::{gen_clusters, gen_diagonal, gen_grid, gen_shared_coords, gen_uniform, unit_box};
use boxcover::{
    build_range_index, build_sorted, oracle_solve, Coord, solve_pk, validate_points, Error, Point64,
    ProblemSpec, Shape, Solution64,
};

use doc::SolutionDoc;
use points::{format_points, read_points};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_USAGE: u8 = 3;
const EXIT_LIMIT: u8 = 4;

#[derive(Parser)]
#[command(name = "boxcover", version, about = "Cover points with up to three disjoint boxes, allowing outliers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Square,
    Rect,
}

impl From<ShapeArg> for Shape {
    fn from(s: ShapeArg) -> Shape {
        match s {
            ShapeArg::Square => Shape::Square,
            ShapeArg::Rect => Shape::Rect,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

#[derive(clap::Args)]
struct ProblemArgs {
    /// Number of boxes (1 to 3)
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    p: u8,
    /// Number of points allowed to stay uncovered
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, value_enum, default_value_t = ShapeArg::Square)]
    shape: ShapeArg,
}

impl ProblemArgs {
    fn spec(&self) -> ProblemSpec {
        ProblemSpec::new(self.p as usize, self.k, self.shape.into()).expect("p checked by clap")
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance read from a points file
    Solve {
        input: PathBuf,
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        out: OutFormat,
        /// Also write a drawing of the solution
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Write a generated instance as a points file
    Gen {
        /// uniform N | clusters C PER SPREAD | diagonal V... | shared N | grid SIDE
        kind: String,
        args: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (standard output when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the solver with the brute-force reference on a small instance
    Verify {
        input: PathBuf,
        #[command(flatten)]
        problem: ProblemArgs,
    },
    /// Time preprocessing and solving on uniform random points
    Bench {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        reps: usize,
    },
    /// Draw a points file and a solution document as SVG
    Render {
        input: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        svg: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Solve {
            input,
            problem,
            out,
            svg,
        } => cmd_solve(&input, &problem, out, svg.as_deref()),
        Command::Gen {
            kind,
            args,
            seed,
            out,
        } => cmd_gen(&kind, &args, seed, out.as_deref()),
        Command::Verify { input, problem } => cmd_verify(&input, &problem),
        Command::Bench {
            problem,
            n,
            seed,
            reps,
        } => cmd_bench(&problem, n, seed, reps),
        Command::Render {
            input,
            solution,
            svg,
        } => cmd_render(&input, &solution, &svg),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, message)) => {
            eprintln!("boxcover: {message}");
            ExitCode::from(code)
        }
    }
}

type CmdResult = Result<(), (u8, String)>;

fn load(input: &Path) -> Result<Vec<Point64>, (u8, String)> {
    read_points(input).map_err(|e| (EXIT_INPUT, e.to_string()))
}

fn write_file(path: &Path, contents: &str) -> CmdResult {
    fs::write(path, contents).map_err(|e| (EXIT_INPUT, format!("cannot write {}: {e}", path.display())))
}

fn run_solver(points: Vec<Point64>, spec: &ProblemSpec) -> Solution64 {
    let set = build_sorted(points).expect("ids and coordinates checked on input");
    let idx = build_range_index(&set);
    solve_pk(&set, &idx, spec)
}

fn cmd_solve(input: &Path, problem: &ProblemArgs, out: OutFormat, svg: Option<&Path>) -> CmdResult {
    let points = load(input)?;
    let spec = problem.spec();
    let sol = run_solver(points.clone(), &spec);
    let doc = SolutionDoc::new(&spec, &sol);
    match out {
        OutFormat::Json => println!("{}", serde_json::to_string_pretty(&doc).expect("serializable")),
        OutFormat::Text => print!("{}", doc.to_text()),
    }
    if let Some(path) = svg {
        write_file(path, &svg::render(&points, &sol.boxes, &sol.outliers))?;
    }
    Ok(())
}

fn cmd_gen(kind: &str, args: &[String], seed: u64, out: Option<&Path>) -> CmdResult {
    let usage = |msg: &str| (EXIT_USAGE, format!("gen {kind}: {msg}"));
    let num = |i: usize| -> Result<f64, (u8, String)> {
        let s = args.get(i).ok_or_else(|| usage("missing argument"))?;
        s.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| usage(&format!("not a number: {s:?}")))
    };
    let count = |i: usize| -> Result<usize, (u8, String)> {
        let s = args.get(i).ok_or_else(|| usage("missing argument"))?;
        s.parse::<usize>().map_err(|_| usage(&format!("not a count: {s:?}")))
    };
    let expect_args = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(usage(&format!("expected {n} arguments, got {}", args.len())))
        }
    };
    let points = match kind {
        "uniform" => {
            expect_args(1)?;
            gen_uniform(count(0)?, seed, unit_box())
        }
        "clusters" => {
            expect_args(3)?;
            let c = count(0)?;
            if c == 0 {
                return Err(usage("need at least one cluster"));
            }
            gen_clusters(c, count(1)?, num(2)?, seed)
        }
        "diagonal" => {
            let values = (0..args.len()).map(num).collect::<Result<Vec<f64>, _>>()?;
            gen_diagonal(&values)
        }
        "shared" => {
            expect_args(1)?;
            gen_shared_coords(count(0)?, seed)
        }
        "grid" => {
            expect_args(1)?;
            gen_grid(count(0)?)
        }
        _ => {
            return Err((
                EXIT_USAGE,
                format!("unknown generator {kind:?} (uniform, clusters, diagonal, shared, grid)"),
            ))
        }
    };
    let text = format_points(&points);
    match out {
        Some(path) => write_file(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_verify(input: &Path, problem: &ProblemArgs) -> CmdResult {
    let points = load(input)?;
    let spec = problem.spec();
    let reference = match oracle_solve(&points, spec.p, spec.k, spec.shape) {
        Ok(sol) => sol,
        Err(e @ Error::OracleLimit { .. }) => return Err((EXIT_LIMIT, e.to_string())),
        Err(e) => return Err((EXIT_INPUT, e.to_string())),
    };
    let fast = run_solver(points.clone(), &spec);
    println!("solver    {:?}", fast.objective);
    println!("reference {:?}", reference.objective);
    let problems = disagreements(&points, &spec, &fast, &reference);
    if problems.is_empty() {
        println!("ok");
        Ok(())
    } else {
        for p in &problems {
            println!("{p}");
        }
        Err((EXIT_MISMATCH, "solver and reference disagree".to_string()))
    }
}

/// Everything that keeps `fast` from being accepted against `reference`.
fn disagreements(
    points: &[Point64],
    spec: &ProblemSpec,
    fast: &Solution64,
    reference: &Solution64,
) -> Vec<String> {
    let mut out = Vec::new();
    if !Coord::approx_eq(fast.objective, reference.objective) {
        out.push(format!(
            "objectives differ: solver {:?}, reference {:?}",
            fast.objective, reference.objective
        ));
    }
    for (name, sol) in [("solver", fast), ("reference", reference)] {
        if let Err(v) = validate_points(points, spec, sol) {
            out.push(format!("{name} solution invalid: {v}"));
        }
    }
    out
}

#[derive(Serialize)]
struct BenchReport {
    p: usize,
    k: usize,
    shape: String,
    n: usize,
    seed: u64,
    reps: usize,
    preprocess_seconds: Vec<f64>,
    solve_seconds: Vec<f64>,
    objective: f64,
}

fn cmd_bench(problem: &ProblemArgs, n: usize, seed: u64, reps: usize) -> CmdResult {
    if reps == 0 {
        return Err((EXIT_USAGE, "reps must be positive".to_string()));
    }
    let spec = problem.spec();
    let points = gen_uniform(n, seed, unit_box());
    let mut report = BenchReport {
        p: spec.p,
        k: spec.k,
        shape: spec.shape.to_string(),
        n,
        seed,
        reps,
        preprocess_seconds: Vec::new(),
        solve_seconds: Vec::new(),
        objective: 0.0,
    };
    let mut objective: Option<f64> = None;
    for _ in 0..reps {
        let start = Instant::now();
        let set = build_sorted(points.clone()).expect("generated points are valid");
        let idx = build_range_index(&set);
        report.preprocess_seconds.push(start.elapsed().as_secs_f64());
        let start = Instant::now();
        let sol = solve_pk(&set, &idx, &spec);
        report.solve_seconds.push(start.elapsed().as_secs_f64());
        if objective.is_some_and(|o| o != sol.objective) {
            return Err((EXIT_MISMATCH, "repetitions produced different objectives".to_string()));
        }
        objective = Some(sol.objective);
    }
    report.objective = objective.unwrap_or(0.0);
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    Ok(())
}

fn cmd_render(input: &Path, solution: &Path, svg_path: &Path) -> CmdResult {
    let points = load(input)?;
    let text = fs::read_to_string(solution)
        .map_err(|e| (EXIT_INPUT, format!("cannot read {}: {e}", solution.display())))?;
    let doc: SolutionDoc = serde_json::from_str(&text)
        .map_err(|e| (EXIT_INPUT, format!("{}: {e}", solution.display())))?;
    let boxes = doc
        .axis_boxes()
        .ok_or_else(|| (EXIT_INPUT, format!("{}: bad shape or inverted box", solution.display())))?;
    write_file(svg_path, &svg::render(&points, &boxes, &doc.outliers))
}
