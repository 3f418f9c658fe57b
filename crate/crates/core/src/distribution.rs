//! Weighted discrete distributions of positions on a bounded policy axis.
//!
//! A [`DiscreteDistribution`] is the basic object every other module works
//! with. It stores its support in increasing order together with the
//! cumulative weights, so CDF lookups are a binary search.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Inputs whose weights sum to within this distance of 1 are renormalized.
pub const NORMALIZATION_SLACK: f64 = 1e-6;

/// The closed interval of admissible policies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolicyAxis {
    min: f64,
    max: f64,
}

impl PolicyAxis {
    pub fn new(min: f64, max: f64) -> Result<Self> {
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(Error::InvalidAxis { min, max });
        }
        Ok(Self { min, max })
    }

    /// The unit axis `[0, 1]`.
    pub fn unit() -> Self {
        Self { min: 0.0, max: 1.0 }
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn width(&self) -> f64 {
        self.max - self.min
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.min && x <= self.max
    }

    pub fn is_unit(&self) -> bool {
        self.min == 0.0 && self.max == 1.0
    }

    pub(crate) fn check(&self, x: f64) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::OutOfDomain {
                x,
                min: self.min,
                max: self.max,
            })
        }
    }
}

/// How the CDF is read between support points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CdfConvention {
    /// Right-continuous step function with atoms at the support points.
    #[default]
    Step,
    /// Piecewise-linear through `(s_i, F(s_i))`, anchored at `(axis.min, 0)`.
    LinearInterp,
}

impl FromStr for CdfConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "step" => Ok(Self::Step),
            "linear" | "linear-interp" | "interp" => Ok(Self::LinearInterp),
            other => Err(format!("unknown CDF convention `{other}` (use step or linear)")),
        }
    }
}

impl fmt::Display for CdfConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Step => f.write_str("step"),
            Self::LinearInterp => f.write_str("linear"),
        }
    }
}

/// Ordered support points with nonnegative weights summing to one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscreteDistribution {
    axis: PolicyAxis,
    support: Vec<f64>,
    weights: Vec<f64>,
    #[serde(skip)]
    cumulative: Vec<f64>,
}

impl DiscreteDistribution {
    /// Builds a distribution, renormalizing weights whose total is within
    /// [`NORMALIZATION_SLACK`] of one.
    pub fn new(axis: PolicyAxis, support: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::InvalidDistribution("empty support".into()));
        }
        if support.len() != weights.len() {
            return Err(Error::InvalidDistribution(format!(
                "{} support points but {} weights",
                support.len(),
                weights.len()
            )));
        }
        for (i, &s) in support.iter().enumerate() {
            if !s.is_finite() || !axis.contains(s) {
                return Err(Error::InvalidDistribution(format!(
                    "support point {s} outside axis [{}, {}]",
                    axis.min, axis.max
                )));
            }
            if i > 0 && support[i - 1] >= s {
                return Err(Error::InvalidDistribution("support must be strictly increasing".into()));
            }
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::InvalidDistribution(format!("invalid weight {w}")));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > NORMALIZATION_SLACK {
            return Err(Error::InvalidDistribution(format!("weights sum to {total}, not 1")));
        }
        let weights: Vec<f64> = if total == 1.0 {
            weights
        } else {
            weights.into_iter().map(|w| w / total).collect()
        };

        let mut cumulative = Vec::with_capacity(weights.len());
        let mut acc = 0.0;
        for &w in &weights {
            acc += w;
            cumulative.push(acc);
        }
        // Both CDFs of any comparison must reach exactly one at the top.
        *cumulative.last_mut().unwrap() = 1.0;

        Ok(Self {
            axis,
            support,
            weights,
            cumulative,
        })
    }

    /// All mass at `x`.
    pub fn point_mass(axis: PolicyAxis, x: f64) -> Result<Self> {
        Self::new(axis, vec![x], vec![1.0])
    }

    pub fn axis(&self) -> PolicyAxis {
        self.axis
    }

    pub fn support(&self) -> &[f64] {
        &self.support
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Iterates over `(position, weight)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.support.iter().copied().zip(self.weights.iter().copied())
    }

    /// Cumulative weight of support points `<= x`, no domain check.
    pub(crate) fn step_cdf(&self, x: f64) -> f64 {
        let n = self.support.partition_point(|&s| s <= x);
        if n == 0 {
            0.0
        } else {
            self.cumulative[n - 1]
        }
    }

    /// Cumulative weight of support points `< x`, no domain check.
    pub(crate) fn step_cdf_left(&self, x: f64) -> f64 {
        let n = self.support.partition_point(|&s| s < x);
        if n == 0 {
            0.0
        } else {
            self.cumulative[n - 1]
        }
    }

    pub(crate) fn linear_cdf(&self, x: f64) -> f64 {
        let n = self.support.partition_point(|&s| s <= x);
        if n == self.support.len() {
            return 1.0;
        }
        // x lies strictly below support[n]
        let (x0, c0) = if n == 0 {
            (self.axis.min, 0.0)
        } else {
            (self.support[n - 1], self.cumulative[n - 1])
        };
        let (x1, c1) = (self.support[n], self.cumulative[n]);
        if x1 == x0 {
            return c1;
        }
        c0 + (c1 - c0) * (x - x0) / (x1 - x0)
    }

    pub fn cdf(&self, x: f64, conv: CdfConvention) -> Result<f64> {
        self.axis.check(x)?;
        Ok(match conv {
            CdfConvention::Step => self.step_cdf(x),
            CdfConvention::LinearInterp => self.linear_cdf(x),
        })
    }

    /// `lim_{t -> x-}` of the step CDF: the mass strictly below `x`.
    pub fn cdf_left_limit(&self, x: f64) -> Result<f64> {
        self.axis.check(x)?;
        Ok(self.step_cdf_left(x))
    }

    /// Mass of the closed interval `[lo, hi]`.
    pub fn interval_mass(&self, lo: f64, hi: f64) -> Result<f64> {
        self.axis.check(lo)?;
        self.axis.check(hi)?;
        if lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok((self.step_cdf(hi) - self.step_cdf_left(lo)).clamp(0.0, 1.0))
    }

    pub fn mean(&self) -> f64 {
        self.iter().map(|(s, w)| w * s).sum()
    }

    /// Population-weighted variance.
    pub fn variance(&self) -> f64 {
        let mean = self.mean();
        self.iter().map(|(s, w)| w * (s - mean) * (s - mean)).sum()
    }

    pub fn summarize(&self) -> SummaryStats {
        SummaryStats {
            mean: self.mean(),
            variance: self.variance(),
            interval_masses: Vec::new(),
        }
    }

    /// Summary plus the masses of the given closed intervals.
    pub fn summarize_with(&self, intervals: &[(f64, f64)]) -> Result<SummaryStats> {
        let mut stats = self.summarize();
        for &(lo, hi) in intervals {
            stats.interval_masses.push(IntervalMass {
                lo,
                hi,
                mass: self.interval_mass(lo, hi)?,
            });
        }
        Ok(stats)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntervalMass {
    pub lo: f64,
    pub hi: f64,
    pub mass: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryStats {
    pub mean: f64,
    pub variance: f64,
    pub interval_masses: Vec<IntervalMass>,
}
