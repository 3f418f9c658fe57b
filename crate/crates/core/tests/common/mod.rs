//! Random instance generators shared by the integration targets.

#![allow(dead_code)]

use polarization_core::{DiscreteDistribution, PolicyAxis};
use rand::seq::index::sample;
use rand::Rng;

pub const GRID_MAX: usize = 11;

pub fn axis() -> PolicyAxis {
    PolicyAxis::new(0.0, GRID_MAX as f64).unwrap()
}

/// Random sorted subset of `0..=GRID_MAX` with `1..=max_len` points.
pub fn random_grid<R: Rng>(rng: &mut R, max_len: usize) -> Vec<f64> {
    let n = rng.gen_range(1..=max_len.min(GRID_MAX + 1));
    let mut pts: Vec<usize> = sample(rng, GRID_MAX + 1, n).into_vec();
    pts.sort_unstable();
    pts.into_iter().map(|p| p as f64).collect()
}

/// Weights with occasional exact zeros and at least one positive entry.
pub fn random_weights<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    let mut w: Vec<f64> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.2) {
                0.0
            } else {
                rng.gen_range(0.01..1.0)
            }
        })
        .collect();
    if w.iter().all(|&x| x == 0.0) {
        let i = rng.gen_range(0..n);
        w[i] = 1.0;
    }
    let total: f64 = w.iter().sum();
    w.iter().map(|x| x / total).collect()
}

pub fn dist(support: &[f64], weights: &[f64]) -> DiscreteDistribution {
    DiscreteDistribution::new(axis(), support.to_vec(), weights.to_vec()).unwrap()
}

/// Moves mass away from `xstar` within each side: each transfer takes a
/// random share of one point's mass to a point further out on the same side.
/// Mass exactly at `xstar` never moves, so the group masses are unchanged.
pub fn outward_transfers<R: Rng>(rng: &mut R, support: &[f64], weights: &[f64], xstar: f64) -> Vec<f64> {
    let mut w = weights.to_vec();
    let left: Vec<usize> = (0..support.len()).filter(|&i| support[i] < xstar).collect();
    let right: Vec<usize> = (0..support.len()).filter(|&i| support[i] > xstar).collect();
    for _ in 0..rng.gen_range(1..=4) {
        let side = if rng.gen_bool(0.5) { &left } else { &right };
        if side.len() < 2 {
            continue;
        }
        let (a, b) = {
            let s = sample(rng, side.len(), 2).into_vec();
            (side[s[0]], side[s[1]])
        };
        // the source is the point nearer to x*
        let (src, dst) = if (support[a] - xstar).abs() < (support[b] - xstar).abs() {
            (a, b)
        } else {
            (b, a)
        };
        let moved = w[src] * rng.gen_range(0.0..=1.0);
        w[src] -= moved;
        w[dst] += moved;
    }
    w
}

/// A pair on a shared grid. Half the time the two weight vectors are
/// independent (mostly incomparable); otherwise the second is an outward
/// transfer of the first around a random center, sometimes followed by a
/// small perturbation that may break the ordering.
pub fn random_pair<R: Rng>(rng: &mut R) -> (DiscreteDistribution, DiscreteDistribution) {
    let grid = random_grid(rng, 12);
    let w = random_weights(rng, grid.len());
    let what = if rng.gen_bool(0.5) {
        random_weights(rng, grid.len())
    } else {
        let xstar = grid[rng.gen_range(0..grid.len())] + if rng.gen_bool(0.3) { 0.5 } else { 0.0 };
        let mut t = outward_transfers(rng, &grid, &w, xstar);
        if rng.gen_bool(0.25) {
            let i = rng.gen_range(0..grid.len());
            let j = rng.gen_range(0..grid.len());
            let moved = t[i] * rng.gen_range(0.0..0.3);
            t[i] -= moved;
            t[j] += moved;
        }
        t
    };
    (dist(&grid, &w), dist(&grid, &what))
}

/// Merged support of a pair, the candidate centers of the exhaustive test.
pub fn merged_grid(f: &DiscreteDistribution, fhat: &DiscreteDistribution) -> Vec<f64> {
    let mut g: Vec<f64> = f.support().iter().chain(fhat.support()).copied().collect();
    g.sort_by(f64::total_cmp);
    g.dedup();
    g
}

/// Same weights on the unit axis (positions divided by the grid span).
pub fn to_unit(d: &DiscreteDistribution) -> DiscreteDistribution {
    let s: Vec<f64> = d.support().iter().map(|x| x / GRID_MAX as f64).collect();
    DiscreteDistribution::new(PolicyAxis::unit(), s, d.weights().to_vec()).unwrap()
}
