//! Poincaré disc figures of upper half-plane data, via `w ↦ (w − i)/(w + i)`.

use std::fmt::Write as _;

use bendlab_core::hypcore::{BoundaryPoint, Geodesic, GeodesicSegment, H2Point};
use bendlab_core::Complex64;

const SEGMENT_SAMPLES: usize = 64;

pub fn cayley(w: Complex64) -> Complex64 {
    let i = Complex64::i();
    (w - i) / (w + i)
}

pub fn cayley_boundary(p: BoundaryPoint) -> Complex64 {
    match p {
        BoundaryPoint::Infinity => Complex64::new(1.0, 0.0),
        BoundaryPoint::Finite(z) => cayley(z),
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".into()
    } else {
        s
    }
}

/// A drawing in a square of side `size` with the unit disc inscribed.
pub struct Figure {
    size: f64,
    body: String,
}

impl Figure {
    pub fn new(size: f64) -> Self {
        let mut f = Figure {
            size,
            body: String::new(),
        };
        let c = num(size / 2.0);
        let _ = writeln!(
            f.body,
            r#"  <circle class="boundary" cx="{c}" cy="{c}" r="{}" fill="none" stroke="black" stroke-width="1"/>"#,
            num(f.scale())
        );
        f
    }

    fn scale(&self) -> f64 {
        0.45 * self.size
    }

    fn xy(&self, z: Complex64) -> (String, String) {
        let h = self.size / 2.0;
        (num(h + self.scale() * z.re), num(h - self.scale() * z.im))
    }

    /// A complete geodesic, as a circular arc orthogonal to the boundary or
    /// a diameter.
    pub fn geodesic(&mut self, g: &Geodesic) {
        let p = cayley_boundary(g.first());
        let q = cayley_boundary(g.second());
        let cross = p.re * q.im - p.im * q.re;
        let (px, py) = self.xy(p);
        let (qx, qy) = self.xy(q);
        let path = if cross.abs() < 1e-9 {
            format!("M {px} {py} L {qx} {qy}")
        } else {
            // orthogonal circle: radius tan(φ/2) for the central angle φ
            let cos_phi = (p.re * q.re + p.im * q.im).clamp(-1.0, 1.0);
            let radius = ((1.0 - cos_phi) / (1.0 + cos_phi)).sqrt() * self.scale();
            let sweep = if cross > 0.0 { 1 } else { 0 };
            let r = num(radius);
            format!("M {px} {py} A {r} {r} 0 0 {sweep} {qx} {qy}")
        };
        let _ = writeln!(self.body, r#"  <path class="leaf" d="{path}" fill="none" stroke="steelblue" stroke-width="1"/>"#);
    }

    pub fn segment(&mut self, s: &GeodesicSegment) {
        let mut d = String::new();
        for k in 0..=SEGMENT_SAMPLES {
            let z = cayley(s.point_at(k as f64 / SEGMENT_SAMPLES as f64).z());
            let (x, y) = self.xy(z);
            let _ = write!(d, "{}{x} {y}", if k == 0 { "M " } else { " L " });
        }
        let _ = writeln!(self.body, r#"  <path class="segment" d="{d}" fill="none" stroke="firebrick" stroke-width="2"/>"#);
    }

    pub fn point(&mut self, p: H2Point) {
        let (x, y) = self.xy(cayley(p.z()));
        let _ = writeln!(self.body, r#"  <circle class="orbit" cx="{x}" cy="{y}" r="2" fill="black"/>"#);
    }

    pub fn finish(self) -> String {
        let s = num(self.size);
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{s}\" height=\"{s}\" viewBox=\"0 0 {s} {s}\">\n{}</svg>\n",
            self.body
        )
    }
}
