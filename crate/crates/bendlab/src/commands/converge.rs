//! Convergence of bent representations and bending vector fields along two
//! sequences of laminations tending to `μ_0`.

use anyhow::{bail, ensure, Result};
use bendlab_core::bending::{bend, bending_vector_field, rep_class_distance, BendingContext};
use bendlab_core::laminations::{ml_pp_valid, FiniteLamination, Leaf, OrbitSpec};
use bendlab_core::Complex64;

use super::{context, instantiate, Outcome};
use crate::config::{complex, parse_words, ConvergeConfig, LaminationSource};
use crate::search::{find_disjoint_curve, DisjointCurve};
use crate::table::{Kind, ResultTable};

/// Relative tolerance on `‖T_n − T_0‖ = ‖T_0‖/n`.
pub const FIELD_TOL: f64 = 0.1;
/// The last distance must be at most this fraction of the first.
pub const DECAY: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    /// `(1 + 1/n) μ_0`.
    WeightScaled,
    /// `μ_0 + (1/n) ν` for the orbit `ν` of a disjoint closed geodesic.
    AddedCurve,
}

impl SequenceKind {
    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::WeightScaled => "weight-scaled",
            SequenceKind::AddedCurve => "added-curve",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub kind: SequenceKind,
    pub n: usize,
    pub t: Complex64,
    pub distance: f64,
    /// `max_w |T_n(w) − T_0(w)|`.
    pub field_distance: f64,
    /// `max_w |T_0(w)| / n`.
    pub field_expected: f64,
    /// Union of the supports is a lamination.
    pub ml_pp: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub rows: Vec<Row>,
    pub added_curve: Option<DisjointCurve>,
    /// The added curve's word in the presentation's syntax.
    pub added_word: Option<String>,
    pub notes: Vec<String>,
}

impl Report {
    /// Distances for one sequence at one `t`, in `n` order.
    pub fn distances(&self, kind: SequenceKind, t: Complex64) -> Vec<f64> {
        self.rows
            .iter()
            .filter(|r| r.kind == kind && r.t == t)
            .map(|r| r.distance)
            .collect()
    }
}

fn sup(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn sup_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

struct Sequence {
    kind: SequenceKind,
    members: Vec<(usize, FiniteLamination)>,
    ml_pp: Vec<bool>,
}

pub fn run(cfg: &ConvergeConfig) -> Result<Report> {
    ensure!(!cfg.ns.is_empty() && !cfg.ts.is_empty() && !cfg.words.is_empty(), "grids must be nonempty");
    ensure!(cfg.ns.iter().all(|&n| n > 0), "sequence indices start at 1");
    ensure!(cfg.ns.windows(2).all(|w| w[0] < w[1]), "n grid must increase");
    let ctx = context(&cfg.group, cfg.basepoint)?;
    let words = parse_words(ctx.surface(), &cfg.words)?;
    let source = cfg.lamination.build(ctx.surface())?;
    let limit = instantiate(&ctx, &source)?;
    let mut notes = Vec::new();

    let mut sequences = vec![Sequence {
        kind: SequenceKind::WeightScaled,
        members: cfg
            .ns
            .iter()
            .map(|&n| (n, limit.scaled(Complex64::new(1.0 + 1.0 / n as f64, 0.0))))
            .collect(),
        ml_pp: vec![true; cfg.ns.len()],
    }];

    let mut added_curve = None;
    match &source {
        LaminationSource::Orbit(spec) => match added_sequence(&ctx, spec, cfg, &limit)? {
            Some((curve, seq)) => {
                added_curve = Some(curve);
                sequences.push(seq);
            }
            None => notes.push(format!(
                "NoDisjointCurveFound: no closed geodesic of word length <= {} misses the orbit",
                cfg.search_length
            )),
        },
        LaminationSource::Finite(_) => {
            notes.push("added-curve sequence needs an orbit lamination; skipped".into());
        }
    }

    let field0 = bending_vector_field(&ctx, &limit, &words)?;
    let bent0: Vec<_> = cfg.ts.iter().map(|&t| bend(&ctx, &limit, complex(t))).collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for seq in &sequences {
        let mut first: Vec<Option<f64>> = vec![None; cfg.ts.len()];
        let mut prev: Vec<Option<f64>> = vec![None; cfg.ts.len()];
        for (k, (n, lam)) in seq.members.iter().enumerate() {
            let field = bending_vector_field(&ctx, lam, &words)?;
            let field_distance = sup_diff(&field, &field0);
            let field_expected = sup(&field0) / *n as f64;
            let last = k + 1 == seq.members.len();
            for (ti, &tp) in cfg.ts.iter().enumerate() {
                let t = complex(tp);
                let bent = bend(&ctx, lam, t)?;
                let distance = rep_class_distance(&bent, &bent0[ti], &words)?;
                let mut pass = seq.ml_pp[k];
                if t == Complex64::new(0.0, 0.0) {
                    pass &= distance == 0.0;
                } else {
                    pass &= prev[ti].is_none_or(|p| distance < p);
                    if last {
                        pass &= first[ti].is_none_or(|f| distance <= DECAY * f);
                    }
                }
                if seq.kind == SequenceKind::WeightScaled {
                    pass &= (field_distance - field_expected).abs() <= FIELD_TOL * field_expected;
                }
                first[ti].get_or_insert(distance);
                prev[ti] = Some(distance);
                rows.push(Row {
                    kind: seq.kind,
                    n: *n,
                    t,
                    distance,
                    field_distance,
                    field_expected,
                    ml_pp: seq.ml_pp[k],
                    pass,
                });
            }
        }
    }
    let added_word = added_curve.as_ref().map(|c| ctx.surface().presentation().format_word(&c.word));
    Ok(Report {
        rows,
        added_curve,
        added_word,
        notes,
    })
}

fn added_sequence(
    ctx: &BendingContext,
    spec: &OrbitSpec,
    cfg: &ConvergeConfig,
    limit: &FiniteLamination,
) -> Result<Option<(DisjointCurve, Sequence)>> {
    let rho = ctx.surface();
    let avoid: Vec<_> = spec.base().iter().map(|l| l.geodesic).collect();
    let Some(curve) = find_disjoint_curve(rho, &avoid, cfg.search_length)? else {
        return Ok(None);
    };
    let extra = OrbitSpec::new(vec![Leaf::new(curve.axis, Complex64::new(1.0, 0.0))], rho.clone(), spec.cap())?;
    let added = ctx.instantiate(&extra)?;
    let mut members = Vec::with_capacity(cfg.ns.len());
    let mut ml_pp = Vec::with_capacity(cfg.ns.len());
    for &n in &cfg.ns {
        let nu = added.scaled(Complex64::new(1.0 / n as f64, 0.0));
        ml_pp.push(ml_pp_valid(limit, &nu));
        match limit.sum(&nu) {
            Ok(lam) => members.push((n, lam)),
            Err(e) => bail!("added curve {} crosses the limit lamination: {e}", rho.presentation().format_word(&curve.word)),
        }
    }
    Ok(Some((
        curve,
        Sequence {
            kind: SequenceKind::AddedCurve,
            members,
            ml_pp,
        },
    )))
}

pub fn outcome(report: &Report) -> Result<Outcome> {
    let mut t = ResultTable::new(&[
        ("sequence", Kind::Text),
        ("n", Kind::Int),
        ("t", Kind::Complex),
        ("rep_class_distance", Kind::Real),
        ("field_distance", Kind::Real),
        ("field_expected", Kind::Real),
        ("ml_pp", Kind::Flag),
        ("pass", Kind::Flag),
    ]);
    for r in &report.rows {
        t.push(vec![
            r.kind.name().into(),
            r.n.into(),
            r.t.into(),
            r.distance.into(),
            r.field_distance.into(),
            r.field_expected.into(),
            r.ml_pp.into(),
            r.pass.into(),
        ])?;
    }
    let mut notes = report.notes.clone();
    if let Some(w) = &report.added_word {
        notes.push(format!("added curve: axis of {w}"));
    }
    Ok(Outcome {
        primary: t.to_csv(),
        sidecars: Vec::new(),
        pass: t.all_pass(),
        notes,
    })
}
