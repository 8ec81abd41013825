//! Command-line front end.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::cfn::CognitiveFuzzyNumber;
use crate::distance::{DistanceParams, Measure, Order};
use crate::error::Error;
use crate::export::{
    example_pair, export_figure_datasets, write_score_sweep, write_study, write_sweep, CaseStudy,
    DEFAULT_SEED,
};
use crate::pain::{
    interpret, legacy_comparison_sweep, sensitivity_sweep, solve_programming1, unit_grid,
    AssessmentInput, Interpretation, PainSolution, DEFAULT_CONFUSION_THRESHOLD,
    DEFAULT_GRID_POINTS,
};
use crate::perturbation::{run_study, CellSummary, PerturbationConfig, DEFAULT_TRIALS};
use crate::score::score;

type Cfn = CognitiveFuzzyNumber<f64>;

#[derive(Debug, Parser)]
#[command(
    name = "cfkit",
    version,
    about = "Cognitive fuzzy number distances, scores and pain evaluation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance between two CFNs, or between the CFN pairs of a CSV file.
    Distance(DistanceArgs),
    /// Combined-distance score of a CFN.
    Score(ScoreArgs),
    /// Monte-Carlo perturbation study.
    Simulate(SimulateArgs),
    /// Solve the pain-evaluation program for an assessment.
    PainEval(PainEvalArgs),
    /// Combined and legacy pain sweeps in one CSV.
    Sweep(SweepArgs),
    /// Write every figure dataset into a directory.
    ExportFigures(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

fn parse_lambda(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if (0.0..=1.0).contains(&x) {
        Ok(x)
    } else {
        Err(format!("lambda {x} is outside [0, 1]"))
    }
}

fn parse_unit(s: &str) -> Result<f64, String> {
    parse_lambda(s).map_err(|e| e.replace("lambda", "value"))
}

#[derive(Debug, Args)]
pub struct DistanceArgs {
    #[arg(long, default_value = "c")]
    pub measure: Measure,
    /// Minkowski order (1..=64) or `inf`.
    #[arg(long, default_value = "1")]
    pub p: Order,
    #[arg(long, default_value_t = 0.5, value_parser = parse_lambda)]
    pub lambda: f64,
    /// CSV with columns u1,v1,j1,u2,v2,j2; a distance column is appended.
    #[arg(long, conflicts_with = "operands")]
    pub batch: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Two CFNs as `⟨u,v,j⟩` or `u,v,j`.
    #[arg(num_args = 0..=2)]
    pub operands: Vec<Cfn>,
}

#[derive(Debug, Args)]
pub struct ScoreArgs {
    #[arg(long, default_value = "2")]
    pub p: Order,
    #[arg(long, default_value_t = 0.5, value_parser = parse_lambda)]
    pub lambda: f64,
    /// Emit (lambda, p, s) over λ = 0, 0.01, …, 1 and p = 1..10 instead.
    #[arg(long)]
    pub sweep: bool,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    pub cfn: Cfn,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// The pair to study; the first CFN is perturbed.
    #[arg(long, num_args = 2, value_names = ["F1", "F2"])]
    pub pair: Option<Vec<Cfn>>,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, env = "CFKIT_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Repeatable; defaults to 1, 2, 3.
    #[arg(long = "p")]
    pub orders: Vec<Order>,
    /// Repeatable; defaults to 0.5.
    #[arg(long = "lambda", value_parser = parse_lambda)]
    pub lambdas: Vec<f64>,
    /// Print per-cell summary statistics as JSON instead of trial rows.
    #[arg(long)]
    pub summary: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PainEvalArgs {
    /// Assessment JSON; the worked case study is used when omitted.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_CONFUSION_THRESHOLD, value_parser = parse_unit)]
    pub threshold: f64,
    /// Sensitivity sweep over p = 1..10 and λ = 0, 0.05, …, 1 (CSV).
    #[arg(long, conflicts_with = "legacy_sweep")]
    pub sweep: bool,
    /// Same sweep with the legacy distance (CSV).
    #[arg(long)]
    pub legacy_sweep: bool,
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    pub grid_points: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    pub grid_points: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long, default_value = "figures")]
    pub out_dir: PathBuf,
    #[arg(long, env = "CFKIT_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_owned(),
        source,
    }
}

fn with_output<F>(out: &Option<PathBuf>, stdout: &mut dyn Write, body: F) -> Result<(), Error>
where
    F: FnOnce(&mut dyn Write) -> Result<(), Error>,
{
    match out {
        Some(path) => {
            let mut file = io::BufWriter::new(fs::File::create(path).map_err(io_err(path))?);
            body(&mut file)?;
            file.flush().map_err(io_err(path))
        }
        None => body(stdout),
    }
}

fn stdout_err(e: io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

fn read_text(path: &Path) -> Result<String, Error> {
    let mut text = String::new();
    fs::File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(io_err(path))?;
    Ok(text)
}

fn read_assessment(path: &Option<PathBuf>) -> Result<AssessmentInput, Error> {
    match path {
        Some(p) => Ok(serde_json::from_str(&read_text(p)?)?),
        None => Ok(AssessmentInput {
            patient_items: CaseStudy::ITEMS.to_vec(),
            sim_scale0: CaseStudy::SIM_SCALE0,
            sim_scale10: CaseStudy::SIM_SCALE10,
            p: Order::Finite(2),
            lambda: 0.5,
        }),
    }
}

pub fn dispatch(cli: Cli, stdout: &mut dyn Write) -> Result<(), Error> {
    match cli.command {
        Command::Distance(args) => distance(args, stdout),
        Command::Score(args) => score_cmd(args, stdout),
        Command::Simulate(args) => simulate(args, stdout),
        Command::PainEval(args) => pain_eval(args, stdout),
        Command::Sweep(args) => sweep(args, stdout),
        Command::ExportFigures(args) => {
            for path in export_figure_datasets(&args.out_dir, args.seed)? {
                writeln!(stdout, "{}", path.display()).map_err(stdout_err)?;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct PairRow {
    u1: f64,
    v1: f64,
    j1: f64,
    u2: f64,
    v2: f64,
    j2: f64,
}

#[derive(Serialize)]
struct PairRowOut {
    u1: f64,
    v1: f64,
    j1: f64,
    u2: f64,
    v2: f64,
    j2: f64,
    distance: f64,
}

fn distance(args: DistanceArgs, stdout: &mut dyn Write) -> Result<(), Error> {
    let params = DistanceParams::new(args.p, args.lambda)?;
    if let Some(batch) = &args.batch {
        let text = read_text(batch)?;
        let rows: Vec<PairRowOut> = csv::Reader::from_reader(text.as_bytes())
            .into_deserialize::<PairRow>()
            .map(|r| -> Result<PairRowOut, Error> {
                let r = r?;
                let a = Cfn::new(r.u1, r.v1, r.j1)?;
                let b = Cfn::new(r.u2, r.v2, r.j2)?;
                Ok(PairRowOut {
                    u1: r.u1,
                    v1: r.v1,
                    j1: r.j1,
                    u2: r.u2,
                    v2: r.v2,
                    j2: r.j2,
                    distance: args.measure.eval(&a, &b, &params),
                })
            })
            .collect::<Result<_, Error>>()?;
        return with_output(&args.out, stdout, |w| {
            let mut csv = csv::Writer::from_writer(w);
            for r in &rows {
                csv.serialize(r)?;
            }
            csv.flush().map_err(stdout_err)
        });
    }
    let [a, b] = args.operands.as_slice() else {
        return Err(Error::Usage(
            "distance needs two CFN operands or --batch FILE".into(),
        ));
    };
    let d = args.measure.eval(a, b, &params);
    with_output(&args.out, stdout, |w| {
        match args.format {
            Format::Plain => writeln!(w, "{d:.6}"),
            Format::Json => writeln!(
                w,
                "{}",
                serde_json::json!({
                    "measure": args.measure,
                    "p": args.p,
                    "lambda": args.lambda,
                    "f1": a,
                    "f2": b,
                    "distance": d,
                })
            ),
            Format::Csv => writeln!(
                w,
                "measure,p,lambda,distance\n{},{},{},{}",
                args.measure, args.p, args.lambda, d
            ),
        }
        .map_err(stdout_err)
    })
}

fn score_cmd(args: ScoreArgs, stdout: &mut dyn Write) -> Result<(), Error> {
    if args.sweep {
        return with_output(&args.out, stdout, |w| {
            write_score_sweep(&args.cfn, &Order::range(10), &unit_grid(100), w)
        });
    }
    let params = DistanceParams::new(args.p, args.lambda)?;
    let r = score(&args.cfn, &params)?;
    with_output(&args.out, stdout, |w| {
        match args.format {
            Format::Plain => writeln!(
                w,
                "s={:.6}\nd_to_worst={:.6}\nd_to_best={:.6}",
                r.s, r.d_to_worst, r.d_to_best
            ),
            Format::Json => writeln!(
                w,
                "{}",
                serde_json::json!({
                    "cfn": args.cfn,
                    "p": args.p,
                    "lambda": args.lambda,
                    "s": r.s,
                    "d_to_worst": r.d_to_worst,
                    "d_to_best": r.d_to_best,
                })
            ),
            Format::Csv => writeln!(
                w,
                "p,lambda,s,d_to_worst,d_to_best\n{},{},{},{},{}",
                args.p, args.lambda, r.s, r.d_to_worst, r.d_to_best
            ),
        }
        .map_err(stdout_err)
    })
}

fn simulate(args: SimulateArgs, stdout: &mut dyn Write) -> Result<(), Error> {
    let pair = match args.pair.as_deref() {
        Some([a, b]) => (*a, *b),
        Some(_) => return Err(Error::Usage("--pair takes exactly two CFNs".into())),
        None => example_pair(),
    };
    let mut config = PerturbationConfig::new(pair, args.seed).with_trials(args.trials);
    if !args.orders.is_empty() {
        config = config.with_orders(args.orders);
    }
    if !args.lambdas.is_empty() {
        config = config.with_lambdas(args.lambdas);
    }
    let study = run_study(&config)?;
    with_output(&args.out, stdout, |w| {
        if args.summary {
            #[derive(Serialize)]
            struct Summary<'a> {
                epsilon_lo: f64,
                epsilon_hi: f64,
                trials: usize,
                seed: u64,
                cells: &'a [CellSummary<f64>],
            }
            let summary = Summary {
                epsilon_lo: study.epsilon_range.0,
                epsilon_hi: study.epsilon_range.1,
                trials: config.trials,
                seed: config.seed,
                cells: &study.summary,
            };
            serde_json::to_writer_pretty(&mut *w, &summary)?;
            writeln!(w).map_err(stdout_err)
        } else {
            write_study(&study, w)
        }
    })
}

#[derive(Serialize)]
struct PainReport {
    #[serde(flatten)]
    solution: PainSolution<f64>,
    threshold: f64,
    final_pain_score: f64,
}

fn pain_eval(args: PainEvalArgs, stdout: &mut dyn Write) -> Result<(), Error> {
    let input = read_assessment(&args.input)?;
    let assessment = input.assessment()?;
    let (u, v, pain) = (assessment.u(), assessment.v(), assessment.patient_pain());
    if args.sweep {
        let rows = sensitivity_sweep(
            u,
            v,
            pain,
            &Order::range(10),
            &unit_grid(20),
            args.grid_points,
        )?;
        return with_output(&args.out, stdout, |w| write_sweep(&rows, w));
    }
    if args.legacy_sweep {
        let rows = legacy_comparison_sweep(u, v, pain, &Order::range(10), args.grid_points)?;
        return with_output(&args.out, stdout, |w| write_sweep(&rows, w));
    }
    let mut solution = solve_programming1(u, v, pain, &input.params()?, args.grid_points)?;
    let Interpretation {
        recommendation,
        final_pain_score,
    } = interpret(&solution, args.threshold)?;
    solution.recommendation = recommendation;
    let report = PainReport {
        solution,
        threshold: args.threshold,
        final_pain_score,
    };
    with_output(&args.out, stdout, |w| {
        serde_json::to_writer_pretty(&mut *w, &report)?;
        writeln!(w).map_err(stdout_err)
    })
}

fn sweep(args: SweepArgs, stdout: &mut dyn Write) -> Result<(), Error> {
    let input = read_assessment(&args.input)?;
    let assessment = input.assessment()?;
    let (u, v, pain) = (assessment.u(), assessment.v(), assessment.patient_pain());
    let mut rows = sensitivity_sweep(
        u,
        v,
        pain,
        &Order::range(10),
        &unit_grid(20),
        args.grid_points,
    )?;
    rows.extend(legacy_comparison_sweep(
        u,
        v,
        pain,
        &Order::range(10),
        args.grid_points,
    )?);
    with_output(&args.out, stdout, |w| write_sweep(&rows, w))
}
