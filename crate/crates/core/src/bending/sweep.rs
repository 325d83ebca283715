use super::approx::{approx_bundle_with, chi_radius, epsilon_between, ApproxBundle, PartitionOptions};
use super::context::BendingContext;
use super::field::conjugated_distance;
use crate::laminations::FiniteLamination;
use crate::prelude::*;

/// Partition-scheme measurements over a grid of `m` and sequence indices `n`.
///
/// `distance[a][b]`, `epsilon[a][b]` and friends are indexed by `ms[a]` and
/// `ns[b]`. Suprema over `s ≥ n` run over the sequence members available.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub ms: Vec<usize>,
    pub ns: Vec<usize>,
    /// Largest cylinder radius over generators and sequence members.
    pub radius: Vec<f64>,
    /// `max_{m′ ≥ m} radius(m′)`, nonincreasing in `m`.
    pub radius_envelope: Vec<f64>,
    /// `max_j ‖E − B‖` for the limit lamination.
    pub product_gap: Vec<f64>,
    /// Conjugated distance between the `n`-th member and the limit.
    pub distance: Vec<Vec<f64>>,
    /// `ε(m, n)`.
    pub epsilon: Vec<Vec<f64>>,
    /// Cut-off mass part of `ε`.
    pub epsilon0: Vec<Vec<f64>>,
    /// Middle-weight part of `ε`.
    pub epsilon1: Vec<Vec<f64>>,
}

impl SweepResult {
    /// Smallest tabulated `n ≥ m` with `ε(m, n) ≤ 1/m`.
    pub fn diagonal(&self, m_index: usize) -> Option<usize> {
        let m = self.ms[m_index];
        self.ns
            .iter()
            .zip(&self.epsilon[m_index])
            .find(|(&n, &e)| n >= m && e <= 1.0 / m as f64)
            .map(|(&n, _)| n)
    }
}

/// Runs the partition scheme for every `m` and every member `(n, μ_n)` of a
/// sequence; the member with `n = 0` is the limit `μ_0` and must be present.
pub fn approx_sweep(
    ctx: &BendingContext,
    sequence: &[(usize, FiniteLamination)],
    ms: &[usize],
) -> Result<SweepResult> {
    let limit = sequence
        .iter()
        .position(|(n, _)| *n == 0)
        .ok_or(Error::InvalidParameter("sequence needs its limit at n = 0"))?;
    if ms.is_empty() || ms.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter("m grid must be nonempty and increasing"));
    }
    let rank = ctx.rank();
    let ns: Vec<usize> = sequence.iter().map(|(n, _)| *n).collect();
    let mut out = SweepResult {
        ms: ms.to_vec(),
        ns: ns.clone(),
        radius: Vec::new(),
        radius_envelope: Vec::new(),
        product_gap: Vec::new(),
        distance: Vec::new(),
        epsilon: Vec::new(),
        epsilon0: Vec::new(),
        epsilon1: Vec::new(),
    };
    for &m in ms {
        // one cut-off per generator, shared by the whole sequence
        let chi: Vec<f64> = (0..rank)
            .map(|j| {
                sequence
                    .iter()
                    .map(|(_, l)| chi_radius(ctx, l, j, m))
                    .fold(f64::INFINITY, f64::min)
            })
            .collect();
        let mut bundles: Vec<Vec<ApproxBundle>> = Vec::with_capacity(sequence.len());
        for (_, lam) in sequence {
            let row = (0..rank)
                .map(|j| approx_bundle_with(ctx, lam, j, m, &PartitionOptions { chi_radius: Some(chi[j]) }))
                .collect::<Result<Vec<_>>>()?;
            bundles.push(row);
        }
        let radius = bundles.iter().flatten().map(|b| b.radius).fold(0.0, f64::max);
        let gap = bundles[limit].iter().map(|b| b.product_gap).fold(0.0, f64::max);
        let mut eps_parts: Vec<(f64, f64)> = Vec::with_capacity(sequence.len());
        let mut dist_row = Vec::with_capacity(sequence.len());
        for row in &bundles {
            let (_, d) = conjugated_distance(row, &bundles[limit], ctx.target())?;
            dist_row.push(d);
            let mut e0: f64 = 0.0;
            let mut e1: f64 = 0.0;
            for (bn, b0) in row.iter().zip(&bundles[limit]) {
                let total = epsilon_between(bn, b0)?;
                let mass = (bn.chi_mass - b0.chi_mass).norm();
                e0 = e0.max(mass);
                e1 = e1.max(total - mass);
            }
            eps_parts.push((e0, e1));
        }
        // truncated suprema over members with index at least n
        let mut eps = Vec::with_capacity(ns.len());
        let mut eps0 = Vec::with_capacity(ns.len());
        let mut eps1 = Vec::with_capacity(ns.len());
        for &n in &ns {
            let (mut s, mut s0, mut s1): (f64, f64, f64) = (0.0, 0.0, 0.0);
            for (k, &nk) in ns.iter().enumerate() {
                if nk >= n && (n > 0 || nk == 0) {
                    s = s.max(eps_parts[k].0 + eps_parts[k].1);
                    s0 = s0.max(eps_parts[k].0);
                    s1 = s1.max(eps_parts[k].1);
                }
            }
            eps.push(s);
            eps0.push(s0);
            eps1.push(s1);
        }
        out.radius.push(radius);
        out.product_gap.push(gap);
        out.distance.push(dist_row);
        out.epsilon.push(eps);
        out.epsilon0.push(eps0);
        out.epsilon1.push(eps1);
    }
    let mut envelope = out.radius.clone();
    for k in (0..envelope.len().saturating_sub(1)).rev() {
        envelope[k] = envelope[k].max(envelope[k + 1]);
    }
    out.radius_envelope = envelope;
    Ok(out)
}
