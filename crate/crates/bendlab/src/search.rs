//! Word-ball search for a closed geodesic disjoint from a given orbit.

use anyhow::Result;
use bendlab_core::fuchsian::{group_ball, Representation, Word};
use bendlab_core::hypcore::{complex_displacement, Geodesic};
use bendlab_core::laminations::{g_prime_member, orbits_disjoint};

/// Word length used to decide simplicity and disjointness.
pub const CHECK_CAP: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct DisjointCurve {
    pub word: Word,
    pub axis: Geodesic,
}

/// Shortest cyclically reduced word (shortlex first) of length at most
/// `max_len` whose axis is simple and disjoint from the orbits of every
/// geodesic in `avoid`. `Ok(None)` when the ball holds no such word.
pub fn find_disjoint_curve(rho: &Representation, avoid: &[Geodesic], max_len: usize) -> Result<Option<DisjointCurve>> {
    let mut ball = group_ball(rho, max_len)?;
    ball.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    for (word, g) in ball {
        if word.is_empty() || !word.is_cyclically_reduced() {
            continue;
        }
        let Ok((axis, _)) = complex_displacement(&g) else {
            continue;
        };
        let axis = axis.unoriented();
        if !g_prime_member(&axis, rho, CHECK_CAP)? {
            continue;
        }
        let mut clean = true;
        for a in avoid {
            if !orbits_disjoint(a, &axis, rho, CHECK_CAP)? || !orbits_disjoint(&axis, a, rho, CHECK_CAP)? {
                clean = false;
                break;
            }
        }
        if clean {
            return Ok(Some(DisjointCurve { word, axis }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::axis_of;
    use bendlab_core::fuchsian::genus2_octagon;

    #[test]
    fn octagon_has_a_curve_disjoint_from_the_first_axis() {
        let rho = genus2_octagon();
        let a = axis_of(&rho, &Word::generator(0)).unwrap();
        let found = find_disjoint_curve(&rho, &[a], 4).unwrap().expect("a disjoint curve");
        assert!(orbits_disjoint(&a, &found.axis, &rho, CHECK_CAP).unwrap());
        assert!(!found.axis.approx_eq(&a, 1e-7));
    }
}
