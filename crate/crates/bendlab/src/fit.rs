//! Small least-squares helpers for the scaling experiments.

/// Least-squares slope of `ln y` against `ln x`. Pairs with a non-positive
/// or non-finite coordinate are dropped; fewer than two usable pairs, or no
/// spread in `x`, give `None`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .filter(|(x, y)| x.is_finite() && y.is_finite() && **x > 0.0 && **y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 1e-300).then(|| sxy / sxx)
}

/// Result of fitting `y ≈ c1·u + c2·v` with `c1, c2 ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoTermFit {
    pub c1: f64,
    pub c2: f64,
    /// Largest `|y − c1·u − c2·v|` over the samples.
    pub max_residual: f64,
}

/// Nonnegative least squares with two unknowns, solved by enumerating the
/// active sets.
pub fn fit_two_term(u: &[f64], v: &[f64], y: &[f64]) -> TwoTermFit {
    assert!(u.len() == y.len() && v.len() == y.len());
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(p, q)| p * q).sum::<f64>();
    let (uu, vv, uv, uy, vy) = (dot(u, u), dot(v, v), dot(u, v), dot(u, y), dot(v, y));
    let mut candidates = vec![(0.0, 0.0)];
    if uu > 0.0 {
        candidates.push(((uy / uu).max(0.0), 0.0));
    }
    if vv > 0.0 {
        candidates.push((0.0, (vy / vv).max(0.0)));
    }
    let det = uu * vv - uv * uv;
    if det.abs() > 1e-12 * (uu * vv).max(1e-300) {
        let c1 = (uy * vv - vy * uv) / det;
        let c2 = (vy * uu - uy * uv) / det;
        if c1 >= 0.0 && c2 >= 0.0 {
            candidates.push((c1, c2));
        }
    }
    let sse = |(c1, c2): (f64, f64)| -> f64 {
        u.iter().zip(v).zip(y).map(|((a, b), t)| (t - c1 * a - c2 * b).powi(2)).sum()
    };
    let (c1, c2) = candidates
        .into_iter()
        .min_by(|a, b| sse(*a).total_cmp(&sse(*b)))
        .expect("at least the zero candidate");
    let max_residual = u
        .iter()
        .zip(v)
        .zip(y)
        .map(|((a, b), t)| (t - c1 * a - c2 * b).abs())
        .fold(0.0, f64::max);
    TwoTermFit { c1, c2, max_residual }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_law() {
        let xs = [1.0, 2.0, 4.0, 8.0];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 3.0 * x.powf(1.5)).collect();
        assert!((loglog_slope(&xs, &ys).unwrap() - 1.5).abs() < 1e-12);
        assert_eq!(loglog_slope(&[1.0, 1.0], &[2.0, 3.0]), None);
        assert_eq!(loglog_slope(&[0.0, 0.0], &[0.0, 0.0]), None);
    }

    #[test]
    fn exact_two_term_data() {
        let u = [1.0, 0.5, 0.25, 0.1];
        let v = [0.2, 0.4, 0.1, 0.3];
        let y: Vec<f64> = u.iter().zip(&v).map(|(a, b)| 2.0 * a + 5.0 * b).collect();
        let f = fit_two_term(&u, &v, &y);
        assert!((f.c1 - 2.0).abs() < 1e-10 && (f.c2 - 5.0).abs() < 1e-10);
        assert!(f.max_residual < 1e-12);
    }

    #[test]
    fn zero_column_falls_back_to_one_term() {
        let u = [0.0; 3];
        let v = [1.0, 2.0, 3.0];
        let y = [2.0, 4.0, 6.0];
        let f = fit_two_term(&u, &v, &y);
        assert_eq!(f.c1, 0.0);
        assert!((f.c2 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn coefficients_stay_nonnegative() {
        let u = [1.0, 2.0, 3.0];
        let v = [1.0, 1.0, 1.0];
        let y = [3.0, 2.0, 1.0];
        let f = fit_two_term(&u, &v, &y);
        assert!(f.c1 >= 0.0 && f.c2 >= 0.0);
    }
}
