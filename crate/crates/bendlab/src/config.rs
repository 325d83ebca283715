//! JSON experiment configurations.
//!
//! Complex numbers are written as `[re, im]`. Boundary points are real
//! numbers, with `null` standing for the point at infinity.

use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use bendlab_core::fuchsian::{genus2_octagon, GroupPresentation, Representation, Word};
use bendlab_core::hypcore::{complex_displacement, BoundaryPoint, Geodesic, H2Point, UnimodularMatrix};
use bendlab_core::laminations::{FiniteLamination, Leaf, OrbitSpec};
use bendlab_core::Complex64;
use serde::{Deserialize, Serialize};

pub type Pair = [f64; 2];

pub fn complex(p: Pair) -> Complex64 {
    Complex64::new(p[0], p[1])
}

/// Reads and parses a config file.
pub fn load<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GroupConfig {
    #[default]
    Genus2Octagon,
    /// Generator names, relators in the word syntax (`"a B"`, uppercase is
    /// inverse) and one `[[a], [b], [c], [d]]` matrix per generator.
    Custom {
        generators: Vec<String>,
        #[serde(default)]
        relators: Vec<String>,
        images: Vec<[Pair; 4]>,
    },
}

impl GroupConfig {
    pub fn build(&self) -> Result<Representation> {
        match self {
            GroupConfig::Genus2Octagon => Ok(genus2_octagon()),
            GroupConfig::Custom {
                generators,
                relators,
                images,
            } => {
                let names: Vec<&str> = generators.iter().map(String::as_str).collect();
                let rels: Vec<&str> = relators.iter().map(String::as_str).collect();
                let p = GroupPresentation::with_relators(&names, &rels)?;
                let mats = images
                    .iter()
                    .map(|m| UnimodularMatrix::new(complex(m[0]), complex(m[1]), complex(m[2]), complex(m[3])))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Representation::new(p, mats)?)
            }
        }
    }
}

/// The default off-axis basepoint for genus-2 experiments: the octagon
/// centre `i` moved by `0.1` in the direction at angle 1 radian.
pub fn default_basepoint() -> H2Point {
    H2Point::from_xy(0.1 * 1f64.cos(), 1.0 + 0.1 * 1f64.sin()).expect("inside the half-plane")
}

pub fn basepoint(p: Option<Pair>) -> Result<H2Point> {
    match p {
        None => Ok(default_basepoint()),
        Some([x, y]) => Ok(H2Point::from_xy(x, y)?),
    }
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct LeafConfig {
    pub ends: [Option<f64>; 2],
    pub weight: Pair,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum LaminationConfig {
    /// Translates of the axes of the listed words, each with its weight.
    Orbit {
        axes: Vec<String>,
        weights: Vec<Pair>,
        #[serde(default = "default_cap")]
        cap: usize,
    },
    Finite {
        #[serde(default)]
        leaves: Vec<LeafConfig>,
    },
}

fn default_cap() -> usize {
    6
}

impl LaminationConfig {
    /// The flagship lamination: translates of the axis of the first
    /// generator with unit weight.
    pub fn flagship() -> Self {
        LaminationConfig::Orbit {
            axes: vec!["a".into()],
            weights: vec![[1.0, 0.0]],
            cap: 6,
        }
    }
}

/// A lamination ready for use: either an orbit to instantiate or explicit leaves.
#[derive(Clone, Debug)]
pub enum LaminationSource {
    Orbit(OrbitSpec),
    Finite(FiniteLamination),
}

impl LaminationConfig {
    pub fn build(&self, group: &Representation) -> Result<LaminationSource> {
        match self {
            LaminationConfig::Orbit { axes, weights, cap } => {
                ensure!(axes.len() == weights.len(), "one weight per axis is required");
                let mut base = Vec::with_capacity(axes.len());
                for (w, z) in axes.iter().zip(weights) {
                    let word = group.presentation().parse_word(w)?;
                    base.push(Leaf::new(axis_of(group, &word)?, complex(*z)));
                }
                Ok(LaminationSource::Orbit(OrbitSpec::new(base, group.clone(), *cap)?))
            }
            LaminationConfig::Finite { leaves } => {
                let mut out = Vec::with_capacity(leaves.len());
                for l in leaves {
                    let end = |e: Option<f64>| e.map_or(BoundaryPoint::Infinity, BoundaryPoint::real);
                    out.push(Leaf::new(Geodesic::new(end(l.ends[0]), end(l.ends[1]))?, complex(l.weight)));
                }
                Ok(LaminationSource::Finite(FiniteLamination::new(out, None)?))
            }
        }
    }
}

/// Axis of the image of a word.
pub fn axis_of(group: &Representation, word: &Word) -> Result<Geodesic> {
    match complex_displacement(&group.evaluate(word)) {
        Ok((axis, _)) => Ok(axis.unoriented()),
        Err(e) => bail!("word {} has no axis: {e}", group.presentation().format_word(word)),
    }
}

pub fn parse_words(group: &Representation, words: &[String]) -> Result<Vec<Word>> {
    words
        .iter()
        .map(|w| group.presentation().parse_word(w).map_err(anyhow::Error::from))
        .collect()
}

fn default_theta() -> f64 {
    std::f64::consts::FRAC_PI_4
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CounterexampleConfig {
    #[serde(default = "default_theta")]
    pub theta: f64,
    pub ns: Vec<f64>,
}

fn default_words() -> Vec<String> {
    ["a", "b", "ab", "aC"].iter().map(|s| s.to_string()).collect()
}

fn default_ns() -> Vec<usize> {
    vec![2, 4, 8, 16, 32]
}

fn default_ts() -> Vec<Pair> {
    vec![[0.0, 0.0], [0.0, 0.1], [0.1, 0.0], [0.05, 0.05]]
}

fn default_search_len() -> usize {
    4
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ConvergeConfig {
    #[serde(default)]
    pub group: GroupConfig,
    #[serde(default)]
    pub basepoint: Option<Pair>,
    #[serde(default = "LaminationConfig::flagship")]
    pub lamination: LaminationConfig,
    #[serde(default = "default_ns")]
    pub ns: Vec<usize>,
    #[serde(default = "default_ts")]
    pub ts: Vec<Pair>,
    #[serde(default = "default_words")]
    pub words: Vec<String>,
    /// Longest word tried when searching for a disjoint curve.
    #[serde(default = "default_search_len")]
    pub search_length: usize,
}

fn default_radii() -> Vec<f64> {
    vec![0.1, 0.05, 0.025]
}

fn default_samples() -> usize {
    200
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BoundsConfig {
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_radii")]
    pub radii: Vec<f64>,
    #[serde(default = "default_samples")]
    pub samples: usize,
}

fn default_ms() -> Vec<usize> {
    vec![4, 8, 16, 32]
}

fn default_sweep_ns() -> Vec<usize> {
    vec![0, 2, 4, 8, 16, 32]
}

fn default_scale() -> Pair {
    [0.0, 0.1]
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default)]
    pub group: GroupConfig,
    #[serde(default)]
    pub basepoint: Option<Pair>,
    #[serde(default = "LaminationConfig::flagship")]
    pub lamination: LaminationConfig,
    /// Complex factor applied to the lamination weights.
    #[serde(default = "default_scale")]
    pub scale: Pair,
    #[serde(default = "default_ms")]
    pub ms: Vec<usize>,
    /// Sequence indices; `0` is the limit and is always included.
    #[serde(default = "default_sweep_ns")]
    pub ns: Vec<usize>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RenderConfig {
    #[serde(default)]
    pub group: GroupConfig,
    #[serde(default)]
    pub basepoint: Option<Pair>,
    pub lamination: LaminationConfig,
    /// Explicit segment endpoints; defaults to `[x, g_j(x)]`.
    #[serde(default)]
    pub segment: Option<[Pair; 2]>,
    #[serde(default)]
    pub generator: usize,
    /// Orbit points `w(x)` are drawn for words up to this length.
    #[serde(default)]
    pub orbit_length: usize,
    #[serde(default = "default_size")]
    pub size: f64,
}

fn default_size() -> f64 {
    400.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_fill_in() {
        let c: ConvergeConfig = serde_json::from_str("{}").unwrap();
        assert_eq!(c.lamination, LaminationConfig::flagship());
        assert_eq!(c.ns, vec![2, 4, 8, 16, 32]);
        let s: SweepConfig = serde_json::from_str(r#"{"ms": [4, 8]}"#).unwrap();
        assert_eq!(s.ms, vec![4, 8]);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        assert!(serde_json::from_str::<BoundsConfig>(r#"{"sede": 1}"#).is_err());
    }

    #[test]
    fn finite_lamination_with_infinite_end() {
        let l: LaminationConfig = serde_json::from_str(
            r#"{"kind": "finite", "leaves": [{"ends": [0.0, null], "weight": [1.0, 0.5]}]}"#,
        )
        .unwrap();
        match l.build(&genus2_octagon()).unwrap() {
            LaminationSource::Finite(f) => assert_eq!(f.len(), 1),
            _ => panic!("expected explicit leaves"),
        }
    }
}
