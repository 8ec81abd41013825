//! CSV datasets: simulation records, trend and score sweeps, pain sweeps and
//! the bundled figure exports.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::cfn::CognitiveFuzzyNumber;
use crate::distance::{DistanceParams, Order};
use crate::error::Error;
use crate::pain::{
    legacy_comparison_sweep, sensitivity_sweep, unit_grid, SweepRow, DEFAULT_GRID_POINTS,
};
use crate::perturbation::{lambda_trend, run_study, PerturbationConfig, StudyResult};
use crate::score::score;

pub const DEFAULT_SEED: u64 = 20_210_517;

/// Operands used by the distance and score demonstrations.
pub fn example_pair() -> (CognitiveFuzzyNumber<f64>, CognitiveFuzzyNumber<f64>) {
    (
        CognitiveFuzzyNumber::new(0.8, 0.4, 0.32).expect("valid literal"),
        CognitiveFuzzyNumber::new(0.1, 0.9, 0.09).expect("valid literal"),
    )
}

/// Face-scale similarities and questionnaire total of the worked case.
pub struct CaseStudy;

impl CaseStudy {
    pub const ITEMS: [i64; 7] = [4, 5, 3, 5, 3, 5, 4];
    pub const SIM_SCALE0: f64 = 0.4;
    pub const SIM_SCALE10: f64 = 0.7;
    pub const PATIENT_PAIN: f64 = 29.0 / 70.0;
}

#[derive(Serialize)]
struct SimRow {
    trial: usize,
    epsilon: f64,
    p: Order,
    lambda: f64,
    d_m: f64,
    d_h: f64,
    d_c: f64,
    delta_d_m: f64,
    delta_d_h: f64,
    delta_d_c: f64,
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().has_headers(true).from_writer(out)
}

fn finish<W: Write>(mut w: csv::Writer<W>) -> Result<(), Error> {
    w.flush().map_err(|e| Error::Io {
        path: PathBuf::from("<csv>"),
        source: e,
    })
}

/// Columns: trial, epsilon, p, lambda, d_m, d_h, d_c, delta_d_m, delta_d_h, delta_d_c.
pub fn write_study<W: Write>(study: &StudyResult<f64>, out: W) -> Result<(), Error> {
    let mut w = csv_writer(out);
    for rec in &study.records {
        for c in &rec.cells {
            w.serialize(SimRow {
                trial: rec.trial,
                epsilon: rec.epsilon,
                p: c.p,
                lambda: c.lambda,
                d_m: c.d_m,
                d_h: c.d_h,
                d_c: c.d_c,
                delta_d_m: c.delta_d_m,
                delta_d_h: c.delta_d_h,
                delta_d_c: c.delta_d_c,
            })?;
        }
    }
    finish(w)
}

#[derive(Serialize)]
struct TrendCsvRow {
    p: Order,
    lambda: f64,
    d_m: f64,
    d_h: f64,
    d_c: f64,
}

/// Columns: p, lambda, d_m, d_h, d_c.
pub fn write_lambda_trend<W: Write>(
    pair: (&CognitiveFuzzyNumber<f64>, &CognitiveFuzzyNumber<f64>),
    orders: &[Order],
    lambdas: &[f64],
    out: W,
) -> Result<(), Error> {
    let mut w = csv_writer(out);
    for &p in orders {
        for r in lambda_trend(pair, p, lambdas)? {
            w.serialize(TrendCsvRow {
                p,
                lambda: r.lambda,
                d_m: r.d_m,
                d_h: r.d_h,
                d_c: r.d_c,
            })?;
        }
    }
    finish(w)
}

#[derive(Serialize)]
struct ScoreSweepRow {
    lambda: f64,
    p: Order,
    s: f64,
}

/// Columns: lambda, p, s.
pub fn write_score_sweep<W: Write>(
    f: &CognitiveFuzzyNumber<f64>,
    orders: &[Order],
    lambdas: &[f64],
    out: W,
) -> Result<(), Error> {
    let mut w = csv_writer(out);
    for &lambda in lambdas {
        for &p in orders {
            let s = score(f, &DistanceParams::new(p, lambda)?)?.s;
            w.serialize(ScoreSweepRow { lambda, p, s })?;
        }
    }
    finish(w)
}

#[derive(Serialize)]
struct PairScoreRow {
    lambda: f64,
    p: Order,
    s1: f64,
    s2: f64,
}

/// Columns: lambda, p, s1, s2.
pub fn write_pair_score_sweep<W: Write>(
    pair: (&CognitiveFuzzyNumber<f64>, &CognitiveFuzzyNumber<f64>),
    orders: &[Order],
    lambdas: &[f64],
    out: W,
) -> Result<(), Error> {
    let mut w = csv_writer(out);
    for &lambda in lambdas {
        for &p in orders {
            let params = DistanceParams::new(p, lambda)?;
            w.serialize(PairScoreRow {
                lambda,
                p,
                s1: score(pair.0, &params)?.s,
                s2: score(pair.1, &params)?.s,
            })?;
        }
    }
    finish(w)
}

/// Columns: mode, p, lambda, j_opt, s_opt, gap.
pub fn write_sweep<W: Write>(rows: &[SweepRow<f64>], out: W) -> Result<(), Error> {
    let mut w = csv_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    finish(w)
}

/// Case-study sweep with the combined distance over `p = 1..10`, `λ = 0, 0.05, …, 1`.
pub fn case_study_sensitivity(
    u: f64,
    v: f64,
    patient_pain: f64,
) -> Result<Vec<SweepRow<f64>>, Error> {
    Ok(sensitivity_sweep(
        u,
        v,
        patient_pain,
        &Order::range(10),
        &unit_grid(20),
        DEFAULT_GRID_POINTS,
    )?)
}

/// Case-study sweep with the legacy distance over `p = 1..10`.
pub fn case_study_legacy(u: f64, v: f64, patient_pain: f64) -> Result<Vec<SweepRow<f64>>, Error> {
    Ok(legacy_comparison_sweep(
        u,
        v,
        patient_pain,
        &Order::range(10),
        DEFAULT_GRID_POINTS,
    )?)
}

pub const FIGURE_FILES: [&str; 6] = [
    "fig2.csv", "fig3.csv", "fig4.csv", "fig5.csv", "fig7.csv", "fig8.csv",
];

fn create(path: &Path) -> Result<fs::File, Error> {
    fs::File::create(path).map_err(|e| Error::Io {
        path: path.to_owned(),
        source: e,
    })
}

/// Writes the six figure datasets into `out_dir` and returns their paths.
///
/// * `fig2.csv` — perturbation study, `p ∈ {1,2,3}`, `λ = 0.5`, 100 trials.
/// * `fig3.csv` — distances of the example pair for `λ = 0, 0.01, …, 1`, `p ∈ {1,2,3}`.
/// * `fig4.csv` — perturbation study, `λ ∈ {0, 0.25, …, 1}`, seeded with `seed + 1`.
/// * `fig5.csv` — scores of both example operands over `λ` steps of 0.01 and `p = 1..10`.
/// * `fig7.csv` / `fig8.csv` — case-study sweeps with the combined and legacy distances.
pub fn export_figure_datasets(out_dir: &Path, seed: u64) -> Result<Vec<PathBuf>, Error> {
    fs::create_dir_all(out_dir).map_err(|e| Error::Io {
        path: out_dir.to_owned(),
        source: e,
    })?;
    let (f1, f2) = example_pair();
    let path = |name: &str| out_dir.join(name);
    let percent = unit_grid::<f64>(100);
    let first_three = Order::range(3);

    let fig2 = PerturbationConfig::new((f1, f2), seed).with_orders(first_three.clone());
    write_study(&run_study(&fig2)?, create(&path("fig2.csv"))?)?;

    write_lambda_trend(
        (&f1, &f2),
        &first_three,
        &percent,
        create(&path("fig3.csv"))?,
    )?;

    let fig4 = PerturbationConfig::new((f1, f2), seed.wrapping_add(1))
        .with_orders(first_three)
        .with_lambdas(unit_grid(4));
    write_study(&run_study(&fig4)?, create(&path("fig4.csv"))?)?;

    write_pair_score_sweep(
        (&f1, &f2),
        &Order::range(10),
        &percent,
        create(&path("fig5.csv"))?,
    )?;

    let (u, v, pain) = (
        CaseStudy::SIM_SCALE0,
        CaseStudy::SIM_SCALE10,
        CaseStudy::PATIENT_PAIN,
    );
    write_sweep(
        &case_study_sensitivity(u, v, pain)?,
        create(&path("fig7.csv"))?,
    )?;
    write_sweep(&case_study_legacy(u, v, pain)?, create(&path("fig8.csv"))?)?;

    Ok(FIGURE_FILES.iter().map(|n| path(n)).collect())
}
