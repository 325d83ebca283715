use alloc::string::ToString;
use core::f64::consts::FRAC_PI_4;

use super::representation::Representation;
use super::word::GroupPresentation;
use crate::hypcore::UnimodularMatrix;
use crate::prelude::*;

/// Surface relator of the octagon side pairing, in generator order `a b c d`.
pub const OCTAGON_RELATOR: &str = "a B c D A b C d";

/// Genus-2 Fuchsian group of the regular octagon with interior angles `π/4`.
///
/// In the disc model, `g_k` translates along the diameter at angle `kπ/4`
/// with trace `2(1+√2)`; the group is then moved to the upper half-plane so
/// that the centre of the octagon sits at `i`.
pub fn genus2_octagon() -> Representation {
    let ch = 1.0 + core::f64::consts::SQRT_2;
    let sh = (ch * ch - 1.0).sqrt();
    let h = UnimodularMatrix::from_entries(ch.into(), sh.into(), sh.into(), ch.into());
    let rot = |a: f64| UnimodularMatrix::diagonal(C64::from_polar(1.0, a / 2.0));
    // Cayley map from the disc to the half-plane, 0 ↦ i
    let k = C64::new(0.0, 2.0).sqrt();
    let i = C64::i();
    let cayley = UnimodularMatrix::from_entries(i / k, i / k, -1.0 / k, 1.0 / k);
    let images = (0..4)
        .map(|n| {
            let a = n as f64 * FRAC_PI_4;
            let disc = rot(a) * h * rot(-a);
            disc.conjugate_by(&cayley).real_part()
        })
        .collect();
    let names = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
    let free = GroupPresentation::free(&["a", "b", "c", "d"]).expect("valid names");
    let relator = free.parse_word(OCTAGON_RELATOR).expect("valid relator");
    let presentation =
        GroupPresentation::new(names, alloc::vec![relator]).expect("valid presentation");
    Representation::new(presentation, images).expect("four images")
}
