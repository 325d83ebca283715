//! Disc-model figure of a lamination, a segment and orbit points.

use anyhow::{ensure, Result};
use bendlab_core::fuchsian::{group_ball, Representation};
use bendlab_core::hypcore::{GeodesicSegment, H2Point};
use bendlab_core::laminations::FiniteLamination;

use super::{context, Outcome};
use crate::config::{basepoint, LaminationSource, RenderConfig};
use crate::svg::Figure;

pub struct Scene {
    pub lamination: FiniteLamination,
    pub segment: GeodesicSegment,
    pub orbit: Vec<H2Point>,
}

pub fn scene(cfg: &RenderConfig) -> Result<Scene> {
    ensure!(cfg.size > 0.0, "figure size must be positive");
    let group: Representation = cfg.group.build()?;
    ensure!(cfg.generator < group.rank(), "generator index out of range");
    let x = basepoint(cfg.basepoint)?;
    let segment = match cfg.segment {
        Some([a, b]) => GeodesicSegment::new(H2Point::from_xy(a[0], a[1])?, H2Point::from_xy(b[0], b[1])?)?,
        None => GeodesicSegment::new(x, group.image(cfg.generator).apply_h2(x))?,
    };
    let lamination = match cfg.lamination.build(&group)? {
        LaminationSource::Finite(lam) => lam,
        LaminationSource::Orbit(spec) => context(&cfg.group, cfg.basepoint)?.instantiate(&spec)?,
    };
    let orbit = if cfg.orbit_length == 0 {
        Vec::new()
    } else {
        group_ball(&group, cfg.orbit_length)?.iter().map(|(_, g)| g.apply_h2(x)).collect()
    };
    Ok(Scene {
        lamination,
        segment,
        orbit,
    })
}

pub fn draw(scene: &Scene, size: f64) -> String {
    let mut f = Figure::new(size);
    for leaf in scene.lamination.leaves() {
        f.geodesic(&leaf.geodesic);
    }
    f.segment(&scene.segment);
    for p in &scene.orbit {
        f.point(*p);
    }
    f.finish()
}

pub fn outcome(cfg: &RenderConfig) -> Result<Outcome> {
    let s = scene(cfg)?;
    Ok(Outcome {
        primary: draw(&s, cfg.size),
        sidecars: Vec::new(),
        pass: true,
        notes: Vec::new(),
    })
}
