//! Affective polarization: each voter's animosity `g(|x - m_j|)` towards the
//! opposing group's mean, averaged over all voters. Groups are split at `x*`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::distribution::DiscreteDistribution;
use crate::error::{Error, Result};
use crate::measure::{group_stats, GroupStats};

const SPOT_CHECK_POINTS: usize = 101;

/// A nonnegative, nondecreasing animosity function on distances.
#[derive(Debug, Clone, PartialEq)]
pub enum AnimosityFn {
    Identity,
    Square,
    Sqrt,
    ExpMinusOne,
    /// Linear interpolation through `(t, g(t))` pairs.
    Table {
        t: Vec<f64>,
        g: Vec<f64>,
    },
}

impl AnimosityFn {
    pub const CATALOG: [AnimosityFn; 4] = [
        AnimosityFn::Identity,
        AnimosityFn::Square,
        AnimosityFn::Sqrt,
        AnimosityFn::ExpMinusOne,
    ];

    /// Validated table; `t` strictly increasing, `g` nonnegative and
    /// nondecreasing.
    pub fn table(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidAnimosity("table needs at least two points".into()));
        }
        let (t, g): (Vec<f64>, Vec<f64>) = points.into_iter().unzip();
        if t.iter().chain(&g).any(|v| !v.is_finite()) {
            return Err(Error::InvalidAnimosity("table has non-finite entries".into()));
        }
        if t.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidAnimosity(
                "table distances must be strictly increasing".into(),
            ));
        }
        if g.iter().any(|&v| v < 0.0) {
            return Err(Error::InvalidAnimosity("table values must be nonnegative".into()));
        }
        if g.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidAnimosity("table values must be nondecreasing".into()));
        }
        Ok(Self::Table { t, g })
    }

    /// Reads a `t,g` CSV table.
    pub fn table_from_csv<R: std::io::Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let mut points = Vec::new();
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let parse = |k: usize| -> Result<f64> {
                rec.get(k).and_then(|v| v.parse().ok()).ok_or_else(|| Error::Data {
                    row: i + 1,
                    message: "expected two numeric columns t,g".into(),
                })
            };
            points.push((parse(0)?, parse(1)?));
        }
        Self::table(points)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Identity => "identity",
            Self::Square => "square",
            Self::Sqrt => "sqrt",
            Self::ExpMinusOne => "exp-minus-one",
            Self::Table { .. } => "table",
        }
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        let v = match self {
            Self::Identity => t,
            Self::Square => t * t,
            Self::Sqrt => t.sqrt(),
            Self::ExpMinusOne => t.exp_m1(),
            Self::Table { t: ts, g } => {
                let (first, last) = (ts[0], ts[ts.len() - 1]);
                if t < first || t > last {
                    return Err(Error::InvalidAnimosity(format!(
                        "distance {t} outside table range [{first}, {last}]"
                    )));
                }
                let i = ts.partition_point(|&x| x <= t).min(ts.len() - 1).max(1);
                let (t0, t1, g0, g1) = (ts[i - 1], ts[i], g[i - 1], g[i]);
                g0 + (g1 - g0) * (t - t0) / (t1 - t0)
            }
        };
        if !v.is_finite() || v < 0.0 {
            return Err(Error::InvalidAnimosity(format!(
                "{} takes value {v} at distance {t}",
                self.name()
            )));
        }
        Ok(v)
    }

    /// Spot-checks `0 <= g(t1) <= g(t2)` for `t1 <= t2` on `[0, width]`.
    pub fn validate_on(&self, width: f64) -> Result<()> {
        let mut prev = self.eval(0.0)?;
        for i in 1..SPOT_CHECK_POINTS {
            let v = self.eval(width * i as f64 / (SPOT_CHECK_POINTS - 1) as f64)?;
            if v < prev {
                return Err(Error::InvalidAnimosity(format!("{} is decreasing", self.name())));
            }
            prev = v;
        }
        Ok(())
    }
}

impl FromStr for AnimosityFn {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "identity" | "linear" => Ok(Self::Identity),
            "square" => Ok(Self::Square),
            "sqrt" | "square-root" => Ok(Self::Sqrt),
            "exp-minus-one" | "expm1" => Ok(Self::ExpMinusOne),
            other => Err(format!(
                "unknown animosity function `{other}` (identity, square, sqrt, exp-minus-one)"
            )),
        }
    }
}

impl fmt::Display for AnimosityFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AffectiveResult {
    pub level: f64,
    pub group_stats: GroupStats,
    pub xstar: f64,
}

/// `A(F) = Σ_{s<x*} w g(m_R - s) + Σ_{s>x*} w g(s - m_L)`. Voters at `x*`
/// hold no animosity but still count in the average.
pub fn affective_level(d: &DiscreteDistribution, xstar: f64, g: &AnimosityFn) -> Result<AffectiveResult> {
    let stats = group_stats(d, xstar)?;
    g.validate_on(d.axis().width())?;
    let mut level = 0.0;
    for (s, w) in d.iter() {
        if s < xstar {
            level += w * g.eval(stats.mean_right - s)?;
        } else if s > xstar {
            level += w * g.eval(s - stats.mean_left)?;
        }
    }
    Ok(AffectiveResult {
        level,
        group_stats: stats,
        xstar,
    })
}
