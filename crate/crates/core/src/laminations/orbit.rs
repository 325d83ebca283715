use super::finite::{FiniteLamination, Leaf, Window};
use crate::fuchsian::{for_each_translate, Representation, Word, DEFAULT_WORD_CAP};
use crate::hypcore::{cross, BoundaryPoint, Geodesic, GeodesicSegment, Intersection};
use crate::prelude::*;
use crate::Tolerances;

/// Leaves whose orbit under a Fuchsian group forms the lamination.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitSpec {
    base: Vec<Leaf>,
    group: Representation,
    cap: usize,
}

impl OrbitSpec {
    /// Checks that the base leaves are pairwise disjoint and that each one
    /// misses its own translates by words of length at most `cap`.
    pub fn new(base: Vec<Leaf>, group: Representation, cap: usize) -> Result<Self> {
        if !group.is_real(1e-10) {
            return Err(Error::NotReal);
        }
        FiniteLamination::new(base.clone(), None)?;
        for leaf in &base {
            if !g_prime_member(&leaf.geodesic, &group, cap)? {
                return Err(Error::InvalidParameter("base leaf crosses one of its translates"));
            }
        }
        Ok(OrbitSpec { base, group, cap })
    }

    pub fn base(&self) -> &[Leaf] {
        &self.base
    }

    pub fn group(&self) -> &Representation {
        &self.group
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn with_cap(&self, cap: usize) -> Self {
        OrbitSpec {
            base: self.base.clone(),
            group: self.group.clone(),
            cap,
        }
    }

    /// Same orbit with every base weight multiplied by `c`.
    pub fn scaled(&self, c: C64) -> Self {
        OrbitSpec {
            base: self.base.iter().map(|l| Leaf::new(l.geodesic, l.weight * c)).collect(),
            group: self.group.clone(),
            cap: self.cap,
        }
    }
}

/// Where orbit leaves must land to be kept.
#[derive(Clone, Debug, PartialEq)]
pub enum OrbitTarget {
    Segment(GeodesicSegment),
    Segments(Vec<GeodesicSegment>),
    Window(Window),
    /// Leaves meeting any of the listed targets.
    Union(Vec<OrbitTarget>),
}

impl OrbitTarget {
    fn meets(&self, g: &Geodesic, tol: &Tolerances) -> Result<bool> {
        match self {
            OrbitTarget::Segment(s) => Ok(s.crossing(g, tol)?.is_some()),
            OrbitTarget::Segments(v) => {
                for s in v {
                    if s.crossing(g, tol)?.is_some() {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            OrbitTarget::Window(w) => Ok(w.meets(g)),
            OrbitTarget::Union(v) => {
                for t in v {
                    if t.meets(g, tol)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
        }
    }

    fn window(&self) -> Option<Window> {
        match self {
            OrbitTarget::Window(w) => Some(*w),
            _ => None,
        }
    }
}

/// A translate `w(γ)` of a base leaf, with the shortlex-least word producing it.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitLeaf {
    pub leaf: Leaf,
    pub word: Word,
    pub base_index: usize,
}

/// Chordal tolerance for identifying two translates.
const DEDUP_TOL: f64 = 1e-7;

/// Distinct translates of the base leaves by words up to the cap that meet
/// the target. Coincident translates are kept once with the base weight.
pub fn orbit_instantiate(spec: &OrbitSpec, target: &OrbitTarget) -> Result<FiniteLamination> {
    let leaves = orbit_instantiate_with_words(spec, target)?;
    FiniteLamination::new(leaves.into_iter().map(|o| o.leaf).collect(), target.window())
}

pub fn orbit_instantiate_with_words(spec: &OrbitSpec, target: &OrbitTarget) -> Result<Vec<OrbitLeaf>> {
    check_cap(spec.cap)?;
    let tol = Tolerances::DEFAULT;
    let points: Vec<BoundaryPoint> = spec
        .base
        .iter()
        .flat_map(|l| [l.geodesic.first(), l.geodesic.second()])
        .collect();
    let mut kept: Vec<OrbitLeaf> = Vec::new();
    let mut failure = None;
    for_each_translate(&spec.group, spec.cap, &points, |rev, images| {
        if failure.is_some() {
            return false;
        }
        // a suffix stabilizing the base set only repeats translates seen with
        // a shorter word, and repeating it amplifies rounding
        if !rev.is_empty() && stabilizes(&spec.base, images) {
            return false;
        }
        for (bi, base) in spec.base.iter().enumerate() {
            let image = Geodesic::new(images[2 * bi], images[2 * bi + 1]);
            let image = match image {
                Ok(g) => g,
                Err(e) => {
                    failure = Some(e);
                    return false;
                }
            };
            match target.meets(&image, &tol) {
                Err(e) => {
                    failure = Some(e);
                    return false;
                }
                Ok(false) => {}
                Ok(true) => {
                    let word = Word::from_letters(rev.iter().rev().copied());
                    match kept.iter_mut().find(|k| k.leaf.geodesic.approx_eq(&image, DEDUP_TOL)) {
                        Some(k) if word < k.word => {
                            *k = OrbitLeaf {
                                leaf: Leaf::new(image, base.weight),
                                word,
                                base_index: bi,
                            };
                        }
                        Some(_) => {}
                        None => kept.push(OrbitLeaf {
                            leaf: Leaf::new(image, base.weight),
                            word,
                            base_index: bi,
                        }),
                    }
                }
            }
        }
        true
    });
    if let Some(e) = failure {
        return Err(e);
    }
    kept.sort_by(|a, b| a.word.cmp(&b.word));
    Ok(kept)
}

/// Whether no translate `w(γ)` with `1 ≤ |w| ≤ cap` crosses `γ` transversely.
pub fn g_prime_member(g: &Geodesic, rho: &Representation, cap: usize) -> Result<bool> {
    check_cap(cap)?;
    let mut clean = true;
    for_each_translate(rho, cap, &[g.first(), g.second()], |rev, images| {
        if !clean {
            return false;
        }
        if !rev.is_empty() {
            if let Ok(image) = Geodesic::new(images[0], images[1]) {
                if let Intersection::Transverse { .. } = cross(g, &image) {
                    clean = false;
                    return false;
                }
            }
        }
        true
    });
    Ok(clean)
}

/// Whether the translates `w(a)`, `|w| ≤ cap`, neither cross `b`
/// transversely nor coincide with it: `a` and `b` project to disjoint,
/// distinct curves as far as the ball can tell.
pub fn orbits_disjoint(a: &Geodesic, b: &Geodesic, rho: &Representation, cap: usize) -> Result<bool> {
    check_cap(cap)?;
    let mut clean = true;
    for_each_translate(rho, cap, &[a.first(), a.second()], |_, images| {
        if !clean {
            return false;
        }
        if let Ok(image) = Geodesic::new(images[0], images[1]) {
            match cross(b, &image) {
                Intersection::None if !image.approx_eq(b, DEDUP_TOL) => {}
                _ => {
                    clean = false;
                    return false;
                }
            }
        }
        true
    });
    Ok(clean)
}

fn stabilizes(base: &[Leaf], images: &[BoundaryPoint]) -> bool {
    (0..base.len()).all(|i| {
        Geodesic::new(images[2 * i], images[2 * i + 1])
            .map(|g| base.iter().any(|b| b.geodesic.approx_eq(&g, DEDUP_TOL)))
            .unwrap_or(false)
    })
}

fn check_cap(cap: usize) -> Result<()> {
    if cap > DEFAULT_WORD_CAP {
        return Err(Error::CapExceeded {
            requested: cap,
            cap: DEFAULT_WORD_CAP,
        });
    }
    Ok(())
}

/// Whether the union of the two supports is a lamination (no transverse
/// crossings). Weights are expected to be positive reals.
pub fn ml_pp_valid(nu1: &FiniteLamination, nu2: &FiniteLamination) -> bool {
    let all: Vec<&Geodesic> = nu1
        .leaves()
        .iter()
        .chain(nu2.leaves())
        .map(|l| &l.geodesic)
        .collect();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if cross(all[i], all[j]).is_transverse() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuchsian::{genus2_octagon, GroupPresentation};
    use crate::hypcore::{complex_displacement, H2Point, UnimodularMatrix};

    fn cyclic(scale: f64) -> Representation {
        let p = GroupPresentation::free(&["g"]).unwrap();
        Representation::new(p, alloc::vec![UnimodularMatrix::diagonal(C64::new(scale.sqrt(), 0.0))]).unwrap()
    }

    #[test]
    fn g_prime_examples() {
        let rho = cyclic(2f64.exp());
        let axis = Geodesic::imaginary_axis();
        assert!(g_prime_member(&axis, &rho, 5).unwrap());
        assert!(!g_prime_member(&Geodesic::new(1.0, 10.0).unwrap(), &rho, 5).unwrap());
        assert!(g_prime_member(&Geodesic::new(-1.0, 2.0).unwrap(), &rho, 10).unwrap());
        let image = Geodesic::new(1.0, 10.0).unwrap().image(&rho.image(0));
        let (u, v) = image.endpoints();
        assert!((u.finite().unwrap().re - 7.389056).abs() < 1e-6);
        assert!((v.finite().unwrap().re - 73.890561).abs() < 1e-6);
    }

    #[test]
    fn invariant_axis_gives_single_leaf() {
        let rho = cyclic(3.0);
        let base = alloc::vec![Leaf::new(Geodesic::imaginary_axis(), C64::new(1.0, 0.0))];
        let spec = OrbitSpec::new(base, rho, 4).unwrap();
        let seg = GeodesicSegment::new(
            H2Point::from_xy(-1.0, 1.0).unwrap(),
            H2Point::from_xy(1.0, 1.0).unwrap(),
        )
        .unwrap();
        let lam = orbit_instantiate(&spec, &OrbitTarget::Segment(seg)).unwrap();
        assert_eq!(lam.len(), 1);
        assert_eq!(lam.leaves()[0].geodesic.second(), BoundaryPoint::Infinity);
    }

    #[test]
    fn cap_zero_keeps_base_leaves() {
        let rho = genus2_octagon();
        let (axis, _) = complex_displacement(&rho.image(0)).unwrap();
        let base = alloc::vec![Leaf::new(axis.unoriented(), C64::new(1.0, 0.0))];
        let spec = OrbitSpec::new(base, rho, 0).unwrap();
        let window = Window::new(H2Point::I, 1.0).unwrap();
        let lam = orbit_instantiate(&spec, &OrbitTarget::Window(window)).unwrap();
        assert_eq!(lam.len(), 1);
    }

    #[test]
    fn ml_pp_examples() {
        let a = FiniteLamination::new(
            alloc::vec![Leaf::new(Geodesic::new(-1.0, 1.0).unwrap(), C64::new(1.0, 0.0))],
            None,
        )
        .unwrap();
        let b = FiniteLamination::new(
            alloc::vec![Leaf::new(Geodesic::new(0.0, 3.0).unwrap(), C64::new(1.0, 0.0))],
            None,
        )
        .unwrap();
        let c = FiniteLamination::new(
            alloc::vec![Leaf::new(Geodesic::new(2.0, 3.0).unwrap(), C64::new(1.0, 0.0))],
            None,
        )
        .unwrap();
        assert!(ml_pp_valid(&a, &a));
        assert!(!ml_pp_valid(&a, &b));
        assert!(ml_pp_valid(&a, &c));
    }
}
