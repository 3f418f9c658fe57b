//! Polarization orderings around a center.
//!
//! `fhat` is more polarized than `f` around `x*` when every closed interval
//! containing `x*` carries weakly less mass under `fhat`. For distributions
//! on a shared axis this is equivalent to a sign condition on the CDF
//! difference `fhat - f`: nonnegative to the left of `x*`, nonpositive to the
//! right. With atoms the left condition is read through left limits, which
//! keeps the sign test equivalent to the interval definition (see
//! [`definition1_oracle`]).

use std::fmt;
use std::io::Write;

use serde::Serialize;

use crate::distribution::{CdfConvention, DiscreteDistribution, PolicyAxis};
use crate::error::{Error, Result};

/// Absolute tolerance below which a CDF difference counts as zero.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

pub(crate) fn shared_axis(f: &DiscreteDistribution, fhat: &DiscreteDistribution) -> Result<PolicyAxis> {
    let (a, b) = (f.axis(), fhat.axis());
    if a != b {
        return Err(Error::AxisMismatch(a.min(), a.max(), b.min(), b.max()));
    }
    Ok(a)
}

/// The difference `fhat(x) - f(x)` sampled on the merged grid.
#[derive(Debug, Clone, Serialize)]
pub struct DiffCurve {
    axis: PolicyAxis,
    convention: CdfConvention,
    grid: Vec<f64>,
    diff: Vec<f64>,
    diff_left: Vec<f64>,
}

impl DiffCurve {
    pub fn new(f: &DiscreteDistribution, fhat: &DiscreteDistribution, conv: CdfConvention) -> Result<Self> {
        let axis = shared_axis(f, fhat)?;
        let mut grid: Vec<f64> = f
            .support()
            .iter()
            .chain(fhat.support())
            .copied()
            .chain([axis.min(), axis.max()])
            .collect();
        grid.sort_by(f64::total_cmp);
        grid.dedup();

        let (diff, diff_left) = match conv {
            CdfConvention::Step => grid
                .iter()
                .map(|&x| {
                    (
                        fhat.step_cdf(x) - f.step_cdf(x),
                        fhat.step_cdf_left(x) - f.step_cdf_left(x),
                    )
                })
                .unzip(),
            CdfConvention::LinearInterp => {
                let diff: Vec<f64> = grid.iter().map(|&x| fhat.linear_cdf(x) - f.linear_cdf(x)).collect();
                let mut left = diff.clone();
                left[0] = 0.0;
                (diff, left)
            }
        };

        Ok(Self {
            axis,
            convention: conv,
            grid,
            diff,
            diff_left,
        })
    }

    pub fn axis(&self) -> PolicyAxis {
        self.axis
    }

    pub fn convention(&self) -> CdfConvention {
        self.convention
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    /// Values at the grid points.
    pub fn values(&self) -> &[f64] {
        &self.diff
    }

    /// Left limits at the grid points.
    pub fn left_values(&self) -> &[f64] {
        &self.diff_left
    }

    pub fn value(&self, x: f64) -> Result<f64> {
        self.axis.check(x)?;
        let n = self.grid.partition_point(|&g| g <= x);
        // axis.min is always on the grid, so n >= 1
        let i = n - 1;
        match self.convention {
            CdfConvention::Step => Ok(self.diff[i]),
            CdfConvention::LinearInterp => {
                if i + 1 == self.grid.len() || self.grid[i] == x {
                    return Ok(self.diff[i]);
                }
                let (x0, x1) = (self.grid[i], self.grid[i + 1]);
                let (d0, d1) = (self.diff[i], self.diff[i + 1]);
                Ok(d0 + (d1 - d0) * (x - x0) / (x1 - x0))
            }
        }
    }

    pub fn left_limit(&self, x: f64) -> Result<f64> {
        self.axis.check(x)?;
        match self.grid.binary_search_by(|g| g.total_cmp(&x)) {
            Ok(i) => Ok(self.diff_left[i]),
            Err(_) => self.value(x),
        }
    }

    /// Writes `x,diff` rows at every grid point.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "x,diff")?;
        for (x, d) in self.grid.iter().zip(&self.diff) {
            writeln!(out, "{x},{d}")?;
        }
        Ok(())
    }

    fn is_zero(&self, tol: f64) -> bool {
        self.diff.iter().chain(&self.diff_left).all(|d| d.abs() <= tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    MorePolarized,
    LessPolarized,
    Equivalent,
    Incomparable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::MorePolarized => "more-polarized",
            Self::LessPolarized => "less-polarized",
            Self::Equivalent => "equivalent",
            Self::Incomparable => "incomparable",
        })
    }
}

/// Closed interval of valid centers, possibly a single point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CenterSet {
    pub lo: f64,
    pub hi: f64,
}

impl CenterSet {
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Grid points of `curve` that are valid centers.
    pub fn grid_points(&self, curve: &DiffCurve) -> Vec<f64> {
        curve.grid().iter().copied().filter(|&g| self.contains(g)).collect()
    }
}

impl fmt::Display for CenterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Grid points where the single-crossing pattern breaks: the difference is
/// negative at `negative_at` and positive further right at `positive_at`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Witness {
    pub negative_at: f64,
    pub positive_at: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossingReport {
    pub verdict: Verdict,
    pub convention: CdfConvention,
    /// Centers around which `fhat` is more polarized than `f`.
    pub centers: Option<CenterSet>,
    /// Centers around which `f` is more polarized than `fhat`.
    pub reverse_centers: Option<CenterSet>,
    pub witness: Option<Witness>,
}

pub fn diff_curve(f: &DiscreteDistribution, fhat: &DiscreteDistribution, conv: CdfConvention) -> Result<DiffCurve> {
    DiffCurve::new(f, fhat, conv)
}

pub fn is_more_polarized_around(
    f: &DiscreteDistribution,
    fhat: &DiscreteDistribution,
    xstar: f64,
    conv: CdfConvention,
) -> Result<bool> {
    is_more_polarized_around_tol(f, fhat, xstar, conv, DEFAULT_TOLERANCE)
}

pub fn is_more_polarized_around_tol(
    f: &DiscreteDistribution,
    fhat: &DiscreteDistribution,
    xstar: f64,
    conv: CdfConvention,
    tol: f64,
) -> Result<bool> {
    let curve = DiffCurve::new(f, fhat, conv)?;
    curve.axis().check(xstar)?;
    Ok(holds_around(&curve, xstar, tol))
}

/// Direct evaluation of the two sign conditions at `xstar`. Both sides are
/// piecewise constant (step) or piecewise linear, so grid points plus
/// `xstar` itself cover every extremum.
fn holds_around(curve: &DiffCurve, xstar: f64, tol: f64) -> bool {
    let at = curve.value(xstar).expect("checked");
    let left_ok = match curve.convention() {
        CdfConvention::Step => curve
            .grid()
            .iter()
            .zip(curve.values())
            .filter(|(g, _)| **g < xstar)
            .all(|(_, d)| *d >= -tol),
        CdfConvention::LinearInterp => {
            at >= -tol
                && curve
                    .grid()
                    .iter()
                    .zip(curve.values())
                    .filter(|(g, _)| **g <= xstar)
                    .all(|(_, d)| *d >= -tol)
        }
    };
    let right_ok = at <= tol
        && curve
            .grid()
            .iter()
            .zip(curve.values())
            .filter(|(g, _)| **g >= xstar)
            .all(|(_, d)| *d <= tol);
    left_ok && right_ok
}

/// Closed set of centers for the difference `sign * curve`.
fn valid_centers(curve: &DiffCurve, sign: f64, tol: f64) -> Option<CenterSet> {
    let g = curve.grid();
    let d: Vec<f64> = curve.values().iter().map(|v| sign * v).collect();
    let last = g.len() - 1;
    let first_neg = d.iter().position(|&v| v < -tol);
    let last_pos = d.iter().rposition(|&v| v > tol);

    let (lo, hi) = match curve.convention() {
        CdfConvention::Step => {
            let hi = first_neg.map_or(g[last], |i| g[i]);
            let lo = match last_pos {
                None => g[0],
                Some(i) if i == last => return None,
                Some(i) => g[i + 1],
            };
            (lo, hi)
        }
        CdfConvention::LinearInterp => {
            let hi = match first_neg {
                None => g[last],
                Some(0) => return None,
                Some(i) if d[i - 1] <= tol => g[i - 1],
                Some(i) => root(g[i - 1], d[i - 1], g[i], d[i]),
            };
            let lo = match last_pos {
                None => g[0],
                Some(i) if i == last => return None,
                Some(i) if d[i + 1] >= -tol => g[i + 1],
                Some(i) => root(g[i], d[i], g[i + 1], d[i + 1]),
            };
            (lo, hi)
        }
    };
    (lo <= hi).then_some(CenterSet { lo, hi })
}

fn root(x0: f64, d0: f64, x1: f64, d1: f64) -> f64 {
    (x0 + (x1 - x0) * d0 / (d0 - d1)).clamp(x0, x1)
}

pub fn crossing_set(
    f: &DiscreteDistribution,
    fhat: &DiscreteDistribution,
    conv: CdfConvention,
) -> Result<CrossingReport> {
    crossing_set_tol(f, fhat, conv, DEFAULT_TOLERANCE)
}

pub fn crossing_set_tol(
    f: &DiscreteDistribution,
    fhat: &DiscreteDistribution,
    conv: CdfConvention,
    tol: f64,
) -> Result<CrossingReport> {
    let curve = DiffCurve::new(f, fhat, conv)?;
    Ok(report_for_curve(&curve, tol))
}

pub fn report_for_curve(curve: &DiffCurve, tol: f64) -> CrossingReport {
    let axis = curve.axis();
    if curve.is_zero(tol) {
        let all = CenterSet {
            lo: axis.min(),
            hi: axis.max(),
        };
        return CrossingReport {
            verdict: Verdict::Equivalent,
            convention: curve.convention(),
            centers: Some(all),
            reverse_centers: Some(all),
            witness: None,
        };
    }
    let centers = valid_centers(curve, 1.0, tol);
    let reverse_centers = valid_centers(curve, -1.0, tol);
    let verdict = match (centers, reverse_centers) {
        (Some(_), _) => Verdict::MorePolarized,
        (None, Some(_)) => Verdict::LessPolarized,
        (None, None) => Verdict::Incomparable,
    };
    let witness = (verdict == Verdict::Incomparable).then(|| {
        let g = curve.grid();
        let d = curve.values();
        let neg = d
            .iter()
            .position(|&v| v < -tol)
            .expect("incomparable curve has a negative part");
        let pos = d
            .iter()
            .rposition(|&v| v > tol)
            .expect("incomparable curve has a positive part");
        Witness {
            negative_at: g[neg],
            positive_at: g[pos],
        }
    });
    CrossingReport {
        verdict,
        convention: curve.convention(),
        centers,
        reverse_centers,
        witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntervalOracleResult {
    pub holds: bool,
    /// Narrowest closed interval containing `x*` that gained mass.
    pub violating_interval: Option<(f64, f64)>,
}

/// Brute-force check of the interval definition: every closed interval with
/// endpoints on the merged grid (plus the axis ends and `xstar`) that
/// contains `xstar` must carry weakly less mass under `fhat`.
pub fn definition1_oracle(
    f: &DiscreteDistribution,
    fhat: &DiscreteDistribution,
    xstar: f64,
) -> Result<IntervalOracleResult> {
    definition1_oracle_tol(f, fhat, xstar, DEFAULT_TOLERANCE)
}

pub fn definition1_oracle_tol(
    f: &DiscreteDistribution,
    fhat: &DiscreteDistribution,
    xstar: f64,
    tol: f64,
) -> Result<IntervalOracleResult> {
    let axis = shared_axis(f, fhat)?;
    axis.check(xstar)?;
    let mut ends: Vec<f64> = f
        .support()
        .iter()
        .chain(fhat.support())
        .copied()
        .chain([axis.min(), axis.max(), xstar])
        .collect();
    ends.sort_by(f64::total_cmp);
    ends.dedup();

    let mut candidates: Vec<(f64, f64)> = Vec::new();
    for &lo in ends.iter().filter(|&&e| e <= xstar) {
        for &hi in ends.iter().filter(|&&e| e >= xstar) {
            candidates.push((lo, hi));
        }
    }
    candidates.sort_by(|a, b| (a.1 - a.0).total_cmp(&(b.1 - b.0)).then(a.0.total_cmp(&b.0)));

    for (lo, hi) in candidates {
        if fhat.interval_mass(lo, hi)? > f.interval_mass(lo, hi)? + tol {
            return Ok(IntervalOracleResult {
                holds: false,
                violating_interval: Some((lo, hi)),
            });
        }
    }
    Ok(IntervalOracleResult {
        holds: true,
        violating_interval: None,
    })
}
