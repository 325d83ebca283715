//! Two leaves `(1/n, n)` and `(−1/n, −n)` with weights `±1`: the laminations
//! converge weakly to zero while their cocycles along `[e^{iθ}, i]` stay a
//! unit translation.

use std::f64::consts::FRAC_PI_2;

use anyhow::{ensure, Result};
use bendlab_core::bending::{bending_cocycle, BendingContext};
use bendlab_core::fuchsian::genus2_octagon;
use bendlab_core::hypcore::{complex_displacement, Geodesic, GeodesicSegment, H2Point, UnimodularMatrix};
use bendlab_core::laminations::{weak_eval, FiniteLamination, Leaf, Profile, SegmentProfile, TestFunction};
use bendlab_core::Complex64;

use super::Outcome;
use crate::config::{default_basepoint, CounterexampleConfig};
use crate::table::{Kind, ResultTable};

pub const LENGTH_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub n: f64,
    pub trace: Complex64,
    pub translation_length: f64,
    /// `‖C − diag(e^{1/2}, e^{−1/2})‖`.
    pub diag_distance: f64,
    /// Against the constant function `1`.
    pub weak_constant: Complex64,
    /// Against a tent along `[−1.5 + i, 1.5 + i]`.
    pub weak_tent: Complex64,
    pub pass: bool,
}

pub fn lamination(n: f64) -> Result<FiniteLamination> {
    Ok(FiniteLamination::new(
        vec![
            Leaf::new(Geodesic::new(1.0 / n, n)?, Complex64::new(1.0, 0.0)),
            Leaf::new(Geodesic::new(-1.0 / n, -n)?, Complex64::new(-1.0, 0.0)),
        ],
        None,
    )?)
}

fn tent() -> Result<TestFunction> {
    let segment = GeodesicSegment::new(H2Point::from_xy(-1.5, 1.0)?, H2Point::from_xy(1.5, 1.0)?)?;
    Ok(TestFunction::OnSegment {
        segment,
        profile: SegmentProfile::new(Profile::tent(0.1, 0.4, 0.9)?),
    })
}

pub fn run(cfg: &CounterexampleConfig) -> Result<Vec<Row>> {
    ensure!(cfg.theta > 0.0 && cfg.theta < FRAC_PI_2, "theta must lie in (0, π/2)");
    ensure!(!cfg.ns.is_empty(), "the n list is empty");
    ensure!(cfg.ns.iter().all(|&n| n >= 3.0), "every n must be at least 3");
    let ctx = BendingContext::fuchsian(genus2_octagon(), default_basepoint())?;
    let x = H2Point::new(Complex64::from_polar(1.0, cfg.theta))?;
    let y = H2Point::from_xy(0.0, 1.0)?;
    let target = UnimodularMatrix::diagonal(Complex64::new(0.5f64.exp(), 0.0));
    let constant = TestFunction::Constant(1.0);
    let tent = tent()?;
    cfg.ns
        .iter()
        .map(|&n| {
            let lam = lamination(n)?;
            let c = bending_cocycle(&ctx, &lam, x, y, Complex64::new(1.0, 0.0))?;
            let (_, z) = complex_displacement(&c)?;
            let diag_distance = c.difference_norm(&target);
            let weak_constant = weak_eval(&lam, &constant)?;
            let pass = (z.re - 1.0).abs() <= LENGTH_TOL && diag_distance <= 2.0 / n && weak_constant == Complex64::new(0.0, 0.0);
            Ok(Row {
                n,
                trace: c.trace(),
                translation_length: z.re,
                diag_distance,
                weak_constant,
                weak_tent: weak_eval(&lam, &tent)?,
                pass,
            })
        })
        .collect()
}

pub fn outcome(rows: &[Row]) -> Result<Outcome> {
    let mut t = ResultTable::new(&[
        ("n", Kind::Real),
        ("trace", Kind::Complex),
        ("translation_length", Kind::Real),
        ("diag_distance", Kind::Real),
        ("diag_bound", Kind::Real),
        ("weak_constant", Kind::Complex),
        ("weak_tent", Kind::Complex),
        ("pass", Kind::Flag),
    ]);
    for r in rows {
        t.push(vec![
            r.n.into(),
            r.trace.into(),
            r.translation_length.into(),
            r.diag_distance.into(),
            (2.0 / r.n).into(),
            r.weak_constant.into(),
            r.weak_tent.into(),
            r.pass.into(),
        ])?;
    }
    Ok(Outcome {
        primary: t.to_csv(),
        sidecars: Vec::new(),
        pass: t.all_pass(),
        notes: Vec::new(),
    })
}
