//! Partition-scheme sweep over `m` for a weight-scaled sequence
//! `λ_n = (1 + 1/n) λ_0`, with the scaling and shape regressions.

use anyhow::{ensure, Result};
use bendlab_core::bending::{approx_sweep, SweepResult};
use bendlab_core::Complex64;
use serde_json::json;

use super::{context, instantiate, Outcome};
use crate::config::{complex, SweepConfig};
use crate::fit::{fit_two_term, loglog_slope, TwoTermFit};
use crate::table::{Kind, ResultTable};

pub const SLOPE_RANGE: (f64, f64) = (0.7, 1.3);
/// Largest fit residual as a fraction of the largest distance.
pub const FIT_TOL: f64 = 0.1;

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub sweep: SweepResult,
    /// Log-log slope of `‖E − B‖` against `r(m)`; `None` when either
    /// column has fewer than two positive entries.
    pub slope: Option<f64>,
    pub fit: TwoTermFit,
    pub max_distance: f64,
    pub zero_column: bool,
    pub diagonal: Vec<Option<usize>>,
}

impl Report {
    pub fn slope_pass(&self) -> bool {
        self.slope.is_some_and(|s| (SLOPE_RANGE.0..=SLOPE_RANGE.1).contains(&s))
    }

    pub fn fit_pass(&self) -> bool {
        self.fit.max_residual <= FIT_TOL * self.max_distance
    }

    pub fn pass(&self) -> bool {
        self.slope_pass() && self.fit_pass() && self.zero_column
    }
}

pub fn run(cfg: &SweepConfig) -> Result<Report> {
    ensure!(!cfg.ms.is_empty() && !cfg.ns.is_empty(), "grids must be nonempty");
    let ctx = context(&cfg.group, cfg.basepoint)?;
    let source = cfg.lamination.build(ctx.surface())?;
    let limit = instantiate(&ctx, &source)?.scaled(complex(cfg.scale));
    let mut ns = cfg.ns.clone();
    if !ns.contains(&0) {
        ns.insert(0, 0);
    }
    let sequence: Vec<_> = ns
        .iter()
        .map(|&n| {
            let c = if n == 0 { 1.0 } else { 1.0 + 1.0 / n as f64 };
            (n, limit.scaled(Complex64::new(c, 0.0)))
        })
        .collect();
    let sweep = approx_sweep(&ctx, &sequence, &cfg.ms)?;
    Ok(analyse(sweep))
}

/// Regressions on a finished sweep.
pub fn analyse(sweep: SweepResult) -> Report {
    let slope = loglog_slope(&sweep.radius, &sweep.product_gap);
    let (mut u, mut v, mut y) = (Vec::new(), Vec::new(), Vec::new());
    for (a, row) in sweep.distance.iter().enumerate() {
        for (b, &d) in row.iter().enumerate() {
            u.push(sweep.radius_envelope[a]);
            v.push(sweep.epsilon[a][b]);
            y.push(d);
        }
    }
    let fit = fit_two_term(&u, &v, &y);
    let max_distance = y.iter().copied().fold(0.0, f64::max);
    let zero_column = sweep
        .ns
        .iter()
        .position(|&n| n == 0)
        .is_some_and(|k| sweep.distance.iter().all(|row| row[k] == 0.0));
    let diagonal = (0..sweep.ms.len()).map(|a| sweep.diagonal(a)).collect();
    Report {
        sweep,
        slope,
        fit,
        max_distance,
        zero_column,
        diagonal,
    }
}

pub fn outcome(report: &Report) -> Result<Outcome> {
    let s = &report.sweep;
    let mut t = ResultTable::new(&[
        ("m", Kind::Int),
        ("n", Kind::Int),
        ("radius", Kind::Real),
        ("radius_envelope", Kind::Real),
        ("product_gap", Kind::Real),
        ("distance", Kind::Real),
        ("epsilon", Kind::Real),
        ("epsilon_mass", Kind::Real),
        ("epsilon_middle", Kind::Real),
        ("fitted", Kind::Real),
        ("pass", Kind::Flag),
    ]);
    for (a, &m) in s.ms.iter().enumerate() {
        for (b, &n) in s.ns.iter().enumerate() {
            let d = s.distance[a][b];
            let fitted = report.fit.c1 * s.radius_envelope[a] + report.fit.c2 * s.epsilon[a][b];
            let mut pass = (d - fitted).abs() <= FIT_TOL * report.max_distance;
            if n == 0 {
                pass &= d == 0.0;
            }
            t.push(vec![
                m.into(),
                n.into(),
                s.radius[a].into(),
                s.radius_envelope[a].into(),
                s.product_gap[a].into(),
                d.into(),
                s.epsilon[a][b].into(),
                s.epsilon0[a][b].into(),
                s.epsilon1[a][b].into(),
                fitted.into(),
                pass.into(),
            ])?;
        }
    }
    let summary = json!({
        "ms": s.ms,
        "ns": s.ns,
        "radius": s.radius,
        "radius_envelope": s.radius_envelope,
        "product_gap": s.product_gap,
        "slope": report.slope,
        "slope_range": [SLOPE_RANGE.0, SLOPE_RANGE.1],
        "slope_pass": report.slope_pass(),
        "fit": {
            "n1": report.fit.c1,
            "n2": report.fit.c2,
            "max_residual": report.fit.max_residual,
            "max_distance": report.max_distance,
            "pass": report.fit_pass(),
        },
        "zero_column_pass": report.zero_column,
        "diagonal": s.ms.iter().zip(&report.diagonal).map(|(m, n)| json!({"m": m, "n": n})).collect::<Vec<_>>(),
        "pass": report.pass(),
    });
    let mut notes = Vec::new();
    if !report.slope_pass() {
        notes.push(match report.slope {
            Some(x) => format!("product gap slope {x:.3} outside [{}, {}]", SLOPE_RANGE.0, SLOPE_RANGE.1),
            None => "product gap slope undefined: gap or radius vanishes".into(),
        });
    }
    Ok(Outcome {
        primary: t.to_csv(),
        sidecars: vec![("summary.json".into(), serde_json::to_string_pretty(&summary)? + "\n")],
        pass: t.all_pass() && report.pass(),
        notes,
    })
}
