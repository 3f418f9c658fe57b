//! Two-issue salience model.
//!
//! A voter's position is `x = (1 - α) c + α d`, with the common-value stance
//! `c ~ G_c` confined to a narrow interval and the divisive stance `d ~ G_d`
//! spread over the whole axis. The induced CDF is
//! `F(x) = ∫ G_d[(x - (1 - α) c) / α] dG_c(c)`, evaluated by adaptive
//! quadrature split at every kink of the integrand.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;
use statrs::distribution::{Continuous, ContinuousCDF, Normal};

use crate::distribution::{CdfConvention, DiscreteDistribution, PolicyAxis};
use crate::error::{Error, Result};
use crate::polarization::{crossing_set_tol, CrossingReport};
use crate::quadrature::integrate_with_breaks;

/// Absolute quadrature tolerance used unless a model overrides it.
pub const DEFAULT_QUAD_TOLERANCE: f64 = 1e-8;
/// Default discretization step as a fraction of the axis width.
pub const DEFAULT_GRID_FRACTION: f64 = 1e-3;

/// Density normalization slack accepted at construction.
const DENSITY_SLACK: f64 = 1e-6;

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum IssueDistribution {
    Uniform {
        lo: f64,
        hi: f64,
    },
    TruncatedNormal {
        mu: f64,
        sigma: f64,
        lo: f64,
        hi: f64,
        #[serde(skip)]
        normal: Normal,
        #[serde(skip)]
        base: f64,
        #[serde(skip)]
        mass: f64,
    },
    /// Piecewise-linear CDF through `(x, cdf)` points.
    Tabulated {
        x: Vec<f64>,
        cdf: Vec<f64>,
    },
}

impl IssueDistribution {
    pub fn uniform(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidModel(format!("uniform needs lo < hi, got [{lo}, {hi}]")));
        }
        Ok(Self::Uniform { lo, hi })
    }

    pub fn truncated_normal(mu: f64, sigma: f64, lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidModel(format!(
                "truncated normal needs lo < hi, got [{lo}, {hi}]"
            )));
        }
        let normal = Normal::new(mu, sigma).map_err(|e| Error::InvalidModel(e.to_string()))?;
        let base = normal.cdf(lo);
        let mass = normal.cdf(hi) - base;
        if !(mass > 0.0) {
            return Err(Error::InvalidModel("truncation interval carries no normal mass".into()));
        }
        Ok(Self::TruncatedNormal {
            mu,
            sigma,
            lo,
            hi,
            normal,
            base,
            mass,
        })
    }

    pub fn tabulated(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidModel("tabulated CDF needs at least two points".into()));
        }
        let (x, cdf): (Vec<f64>, Vec<f64>) = points.into_iter().unzip();
        if x.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidModel("tabulated x must be strictly increasing".into()));
        }
        if cdf.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidModel("tabulated CDF must be nondecreasing".into()));
        }
        if cdf[0] != 0.0 || cdf[cdf.len() - 1] != 1.0 {
            return Err(Error::InvalidModel("tabulated CDF must run from 0 to 1".into()));
        }
        Ok(Self::Tabulated { x, cdf })
    }

    /// Reads an `x,cdf` CSV.
    pub fn tabulated_from_csv<R: std::io::Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let mut points = Vec::new();
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let get = |k: usize| -> Result<f64> {
                rec.get(k).and_then(|v| v.parse().ok()).ok_or_else(|| Error::Data {
                    row: i + 1,
                    message: "expected numeric columns x,cdf".into(),
                })
            };
            points.push((get(0)?, get(1)?));
        }
        Self::tabulated(points)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Uniform { .. } => "uniform",
            Self::TruncatedNormal { .. } => "truncated-normal",
            Self::Tabulated { .. } => "tabulated",
        }
    }

    pub fn lo(&self) -> f64 {
        match self {
            Self::Uniform { lo, .. } | Self::TruncatedNormal { lo, .. } => *lo,
            Self::Tabulated { x, .. } => x[0],
        }
    }

    pub fn hi(&self) -> f64 {
        match self {
            Self::Uniform { hi, .. } | Self::TruncatedNormal { hi, .. } => *hi,
            Self::Tabulated { x, .. } => x[x.len() - 1],
        }
    }

    pub fn cdf(&self, x: f64) -> f64 {
        if x <= self.lo() {
            return 0.0;
        }
        if x >= self.hi() {
            return 1.0;
        }
        match self {
            Self::Uniform { lo, hi } => (x - lo) / (hi - lo),
            Self::TruncatedNormal { normal, base, mass, .. } => ((normal.cdf(x) - base) / mass).clamp(0.0, 1.0),
            Self::Tabulated { x: xs, cdf } => {
                let i = xs.partition_point(|&t| t <= x);
                let (x0, x1, c0, c1) = (xs[i - 1], xs[i], cdf[i - 1], cdf[i]);
                c0 + (c1 - c0) * (x - x0) / (x1 - x0)
            }
        }
    }

    pub fn density(&self, x: f64) -> f64 {
        if x < self.lo() || x > self.hi() {
            return 0.0;
        }
        match self {
            Self::Uniform { lo, hi } => 1.0 / (hi - lo),
            Self::TruncatedNormal { normal, mass, .. } => normal.pdf(x) / mass,
            Self::Tabulated { x: xs, cdf } => {
                let i = xs.partition_point(|&t| t <= x).clamp(1, xs.len() - 1);
                (cdf[i] - cdf[i - 1]) / (xs[i] - xs[i - 1])
            }
        }
    }

    /// Points where the density may jump.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            Self::Tabulated { x, .. } => x.clone(),
            _ => vec![self.lo(), self.hi()],
        }
    }

    /// Checks that the density integrates to one.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let total = integrate_with_breaks(|x| self.density(x), self.lo(), self.hi(), &self.breakpoints(), tol)?;
        if (total.value - 1.0).abs() > DENSITY_SLACK {
            return Err(Error::InvalidModel(format!(
                "{} density integrates to {}",
                self.kind(),
                total.value
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SalienceModel {
    axis: PolicyAxis,
    gc: IssueDistribution,
    gd: IssueDistribution,
    alpha: f64,
    tolerance: f64,
}

impl SalienceModel {
    pub fn new(axis: PolicyAxis, gc: IssueDistribution, gd: IssueDistribution, alpha: f64) -> Result<Self> {
        Self::with_tolerance(axis, gc, gd, alpha, DEFAULT_QUAD_TOLERANCE)
    }

    pub fn with_tolerance(
        axis: PolicyAxis,
        gc: IssueDistribution,
        gd: IssueDistribution,
        alpha: f64,
        tolerance: f64,
    ) -> Result<Self> {
        if !(tolerance > 0.0) {
            return Err(Error::InvalidModel(format!(
                "tolerance must be positive, got {tolerance}"
            )));
        }
        check_alpha(alpha)?;
        for (name, g) in [("G_c", &gc), ("G_d", &gd)] {
            if g.lo() < axis.min() || g.hi() > axis.max() {
                return Err(Error::InvalidModel(format!(
                    "{name} support [{}, {}] leaves the axis [{}, {}]",
                    g.lo(),
                    g.hi(),
                    axis.min(),
                    axis.max()
                )));
            }
            g.validate(tolerance.min(1e-9))?;
        }
        Ok(Self {
            axis,
            gc,
            gd,
            alpha,
            tolerance,
        })
    }

    pub fn axis(&self) -> PolicyAxis {
        self.axis
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn gc(&self) -> &IssueDistribution {
        &self.gc
    }

    pub fn gd(&self) -> &IssueDistribution {
        &self.gd
    }

    /// Same issues, different salience.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(Self { alpha, ..self.clone() })
    }

    /// Kinks of `c -> G_d[(x - (1 - α) c) / α]` plus those of `G_c`.
    fn c_breaks(&self, x: f64) -> Vec<f64> {
        let a = self.alpha;
        let mut out = self.gc.breakpoints();
        if a < 1.0 {
            out.extend(self.gd.breakpoints().into_iter().map(|b| (x - a * b) / (1.0 - a)));
        }
        out
    }

    fn divisive_arg(&self, x: f64, c: f64) -> f64 {
        (x - (1.0 - self.alpha) * c) / self.alpha
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidModel(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    Ok(())
}

/// Distribution function of `x` under the model.
pub fn induced_cdf(m: &SalienceModel, x: f64) -> Result<f64> {
    m.axis.check(x)?;
    let r = integrate_with_breaks(
        |c| m.gd.cdf(m.divisive_arg(x, c)) * m.gc.density(c),
        m.gc.lo(),
        m.gc.hi(),
        &m.c_breaks(x),
        m.tolerance,
    )?;
    Ok(r.value.clamp(0.0, 1.0))
}

/// `∂F(x)/∂α = ∫ g_d[(x - (1 - α) c) / α] (c - x) / α² dG_c(c)`.
pub fn induced_cdf_alpha_derivative(m: &SalienceModel, x: f64) -> Result<f64> {
    m.axis.check(x)?;
    let a2 = m.alpha * m.alpha;
    let r = integrate_with_breaks(
        |c| m.gd.density(m.divisive_arg(x, c)) * (c - x) / a2 * m.gc.density(c),
        m.gc.lo(),
        m.gc.hi(),
        &m.c_breaks(x),
        m.tolerance,
    )?;
    Ok(r.value)
}

/// Induced CDF sampled on a uniform grid over the axis and differenced into
/// a discrete distribution supported on the grid.
pub fn discretize(m: &SalienceModel, grid_step: f64) -> Result<DiscreteDistribution> {
    let axis = m.axis;
    if !(grid_step > 0.0 && grid_step <= axis.width()) {
        return Err(Error::InvalidModel(format!(
            "grid step must lie in (0, {}], got {grid_step}",
            axis.width()
        )));
    }
    let n = (axis.width() / grid_step).round().max(1.0) as usize;
    let h = axis.width() / n as f64;
    let mut support = Vec::with_capacity(n + 1);
    let mut weights = Vec::with_capacity(n + 1);
    let mut prev = 0.0;
    for i in 0..=n {
        let x = if i == n { axis.max() } else { axis.min() + i as f64 * h };
        let c = induced_cdf(m, x)?.max(prev);
        support.push(x);
        weights.push(c - prev);
        prev = c;
    }
    DiscreteDistribution::new(axis, support, weights)
}

/// Discretizes the model at its own `α` and at `alpha2` and runs the
/// crossing test between them (step convention). Differences below twice
/// the quadrature tolerance count as zero.
pub fn salience_polarization_report(m: &SalienceModel, alpha2: f64, grid_step: f64) -> Result<CrossingReport> {
    if !(alpha2 > m.alpha) {
        return Err(Error::InvalidModel(format!(
            "alpha2 = {alpha2} must exceed alpha = {}",
            m.alpha
        )));
    }
    let before = discretize(m, grid_step)?;
    let after = discretize(&m.with_alpha(alpha2)?, grid_step)?;
    crossing_set_tol(&before, &after, CdfConvention::Step, 2.0 * m.tolerance)
}

/// Key-value model description. Every key is optional; [`build`] fills
/// defaults and validates.
///
/// ```text
/// # issue distributions: uniform | truncated-normal | tabulated
/// axis_min = 0
/// axis_max = 1
/// gc = uniform
/// gc_lo = 0.45
/// gc_hi = 0.55
/// gd = truncated-normal
/// gd_mu = 0.5
/// gd_sigma = 0.2
/// alpha = 0.5
/// alpha2 = 0.6
/// grid_step = 0.001
/// ```
///
/// [`build`]: SalienceConfig::build
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SalienceConfig {
    pub values: BTreeMap<String, String>,
}

pub const CONFIG_KEYS: [&str; 18] = [
    "axis_min",
    "axis_max",
    "gc",
    "gc_lo",
    "gc_hi",
    "gc_mu",
    "gc_sigma",
    "gc_table",
    "gd",
    "gd_lo",
    "gd_hi",
    "gd_mu",
    "gd_sigma",
    "gd_table",
    "alpha",
    "alpha2",
    "grid_step",
    "tolerance",
];

/// A fully resolved salience run.
#[derive(Debug, Clone)]
pub struct SalienceRun {
    pub model: SalienceModel,
    pub alpha2: f64,
    pub grid_step: f64,
}

impl SalienceConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .or_else(|| line.split_once(':'))
                .ok_or_else(|| Error::Config(format!("line {}: expected `key = value`", i + 1)))?;
            let k = k.trim().replace('-', "_");
            if !CONFIG_KEYS.contains(&k.as_str()) {
                return Err(Error::Config(format!("line {}: unknown key `{k}`", i + 1)));
            }
            values.insert(k, v.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn set(&mut self, key: &str, value: impl Into<String>) {
        self.values.insert(key.to_string(), value.into());
    }

    fn num(&self, key: &str) -> Result<Option<f64>> {
        self.values
            .get(key)
            .map(|v| {
                v.parse::<f64>()
                    .map_err(|_| Error::Config(format!("`{key}` is not a number: {v}")))
            })
            .transpose()
    }

    fn num_or(&self, key: &str, default: f64) -> Result<f64> {
        Ok(self.num(key)?.unwrap_or(default))
    }

    fn issue(&self, prefix: &str, axis: PolicyAxis, default_lo: f64, default_hi: f64) -> Result<IssueDistribution> {
        let kind = self.values.get(prefix).map(String::as_str).unwrap_or("uniform");
        let key = |s: &str| format!("{prefix}_{s}");
        let lo = self.num_or(&key("lo"), default_lo)?;
        let hi = self.num_or(&key("hi"), default_hi)?;
        match kind {
            "uniform" => IssueDistribution::uniform(lo, hi),
            "truncated-normal" | "truncnormal" | "normal" => {
                let mu = self.num_or(&key("mu"), 0.5 * (lo + hi))?;
                let sigma = self
                    .num(&key("sigma"))?
                    .ok_or_else(|| Error::Config(format!("`{}` is required", key("sigma"))))?;
                IssueDistribution::truncated_normal(mu, sigma, lo, hi)
            }
            "tabulated" | "table" => {
                let path = self
                    .values
                    .get(&key("table"))
                    .ok_or_else(|| Error::Config(format!("`{}` is required", key("table"))))?;
                IssueDistribution::tabulated_from_csv(std::fs::File::open(path)?)
            }
            other => Err(Error::Config(format!("unknown issue distribution `{other}`"))),
        }
        .and_then(|g| {
            if axis.contains(g.lo()) && axis.contains(g.hi()) {
                Ok(g)
            } else {
                Err(Error::InvalidModel(format!("{prefix} support leaves the axis")))
            }
        })
    }

    pub fn build(&self) -> Result<SalienceRun> {
        let axis = PolicyAxis::new(self.num_or("axis_min", 0.0)?, self.num_or("axis_max", 1.0)?)?;
        let mid = 0.5 * (axis.min() + axis.max());
        let gc = self.issue("gc", axis, mid - 0.05 * axis.width(), mid + 0.05 * axis.width())?;
        let gd = self.issue("gd", axis, axis.min(), axis.max())?;
        let alpha = self.num_or("alpha", 0.5)?;
        let alpha2 = self.num_or("alpha2", (alpha + 0.1).min(1.0))?;
        let tolerance = self.num_or("tolerance", DEFAULT_QUAD_TOLERANCE)?;
        let grid_step = self.num_or("grid_step", DEFAULT_GRID_FRACTION * axis.width())?;
        let model = SalienceModel::with_tolerance(axis, gc, gd, alpha, tolerance)?;
        Ok(SalienceRun {
            model,
            alpha2,
            grid_step,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polarization::Verdict;

    /// CDF of U + V for independent uniforms, by inclusion-exclusion on the
    /// ramp `h(t) = max(t, 0)^2 / 2`.
    fn uniform_sum_cdf(s: f64, (a1, b1): (f64, f64), (a2, b2): (f64, f64)) -> f64 {
        let h = |t: f64| if t > 0.0 { 0.5 * t * t } else { 0.0 };
        (h(s - a1 - a2) - h(s - b1 - a2) - h(s - a1 - b2) + h(s - b1 - b2)) / ((b1 - a1) * (b2 - a2))
    }

    fn narrow_model(alpha: f64) -> SalienceModel {
        SalienceModel::new(
            PolicyAxis::unit(),
            IssueDistribution::uniform(0.45, 0.55).unwrap(),
            IssueDistribution::uniform(0.0, 1.0).unwrap(),
            alpha,
        )
        .unwrap()
    }

    #[test]
    fn matches_uniform_convolution() {
        let m = narrow_model(0.5);
        let v = induced_cdf(&m, 0.25).unwrap();
        assert!((v - 0.0125).abs() < 1e-12);
        for k in 0..=40 {
            let x = k as f64 / 40.0;
            let want = uniform_sum_cdf(x, (0.5 * 0.45, 0.5 * 0.55), (0.0, 0.5)).clamp(0.0, 1.0);
            assert!((induced_cdf(&m, x).unwrap() - want).abs() < 1e-10, "x = {x}");
        }
    }

    #[test]
    fn near_degenerate_common_issue() {
        let m = SalienceModel::new(
            PolicyAxis::unit(),
            IssueDistribution::uniform(0.5 - 5e-13, 0.5 + 5e-13).unwrap(),
            IssueDistribution::uniform(0.0, 1.0).unwrap(),
            0.5,
        )
        .unwrap();
        assert!((induced_cdf(&m, 0.5).unwrap() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn full_salience_recovers_divisive_issue() {
        let gd = IssueDistribution::truncated_normal(0.3, 0.2, 0.0, 1.0).unwrap();
        let m = SalienceModel::new(
            PolicyAxis::unit(),
            IssueDistribution::uniform(0.4, 0.6).unwrap(),
            gd.clone(),
            1.0,
        )
        .unwrap();
        for k in 0..=20 {
            let x = k as f64 / 20.0;
            assert!((induced_cdf(&m, x).unwrap() - gd.cdf(x)).abs() < 1e-8);
        }
    }

    #[test]
    fn derivative_sign_outside_common_range() {
        let m = narrow_model(0.5);
        for x in [0.25, 0.3, 0.4, 0.449] {
            assert!(induced_cdf_alpha_derivative(&m, x).unwrap() > 0.0, "x = {x}");
        }
        for x in [0.551, 0.6, 0.7, 0.75] {
            assert!(induced_cdf_alpha_derivative(&m, x).unwrap() < 0.0, "x = {x}");
        }
        // antisymmetric about the centre
        assert!(induced_cdf_alpha_derivative(&m, 0.5).unwrap().abs() < 1e-12);
    }

    #[test]
    fn derivative_matches_central_difference() {
        let m = SalienceModel::with_tolerance(
            PolicyAxis::unit(),
            IssueDistribution::uniform(0.45, 0.55).unwrap(),
            IssueDistribution::truncated_normal(0.4, 0.25, 0.0, 1.0).unwrap(),
            0.5,
            1e-13,
        )
        .unwrap();
        let h = 1e-5;
        let (lo, hi) = (m.with_alpha(0.5 - h).unwrap(), m.with_alpha(0.5 + h).unwrap());
        for k in 0..20 {
            let x = 0.05 + 0.9 * (k as f64 + 0.5) / 20.0;
            let fd = (induced_cdf(&hi, x).unwrap() - induced_cdf(&lo, x).unwrap()) / (2.0 * h);
            let an = induced_cdf_alpha_derivative(&m, x).unwrap();
            assert!((an - fd).abs() <= 1e-4 * fd.abs(), "x = {x}: {an} vs {fd}");
        }
    }

    #[test]
    fn symmetric_models_polarize_around_the_centre() {
        let r = salience_polarization_report(&narrow_model(0.5), 0.6, 1e-3).unwrap();
        assert_eq!(r.verdict, Verdict::MorePolarized);
        let c = r.centers.unwrap();
        assert!(c.lo >= 0.45 && c.hi <= 0.55);
        assert!((c.lo - 0.5).abs() <= 1.5e-3);

        let m = SalienceModel::new(
            PolicyAxis::unit(),
            IssueDistribution::uniform(0.45, 0.55).unwrap(),
            IssueDistribution::truncated_normal(0.5, 0.2, 0.0, 1.0).unwrap(),
            0.5,
        )
        .unwrap();
        let r = salience_polarization_report(&m, 0.6, 1e-3).unwrap();
        assert_eq!(r.verdict, Verdict::MorePolarized);
        assert!((r.centers.unwrap().lo - 0.5).abs() <= 1.5e-3);
    }

    #[test]
    fn model_validation() {
        let unit = PolicyAxis::unit();
        let u = |a, b| IssueDistribution::uniform(a, b).unwrap();
        assert!(SalienceModel::new(unit, u(0.4, 0.6), u(0.0, 1.0), 0.0).is_err());
        assert!(SalienceModel::new(unit, u(0.4, 0.6), u(0.0, 1.0), 1.2).is_err());
        assert!(SalienceModel::new(unit, u(0.4, 1.6), u(0.0, 1.0), 0.5).is_err());
        assert!(IssueDistribution::uniform(0.5, 0.5).is_err());
        assert!(IssueDistribution::tabulated(vec![(0.0, 0.0), (1.0, 0.9)]).is_err());
        let m = narrow_model(0.5);
        assert!(induced_cdf(&m, 1.5).is_err());
        assert!(salience_polarization_report(&m, 0.4, 1e-3).is_err());
        assert!(salience_polarization_report(&m, 0.6, 0.0).is_err());
    }

    #[test]
    fn tabulated_issue_matches_uniform() {
        let tab = IssueDistribution::tabulated(vec![(0.0, 0.0), (0.5, 0.5), (1.0, 1.0)]).unwrap();
        let m1 = SalienceModel::new(
            PolicyAxis::unit(),
            IssueDistribution::uniform(0.45, 0.55).unwrap(),
            tab,
            0.5,
        )
        .unwrap();
        let m2 = narrow_model(0.5);
        for k in 0..=10 {
            let x = k as f64 / 10.0;
            assert!((induced_cdf(&m1, x).unwrap() - induced_cdf(&m2, x).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn config_round_trip() {
        let text = "# demo\naxis_min = 0\naxis_max = 1\ngc = uniform\ngc_lo = 0.45\ngc_hi = 0.55\n\
                    gd = truncated-normal\ngd_mu = 0.5\ngd_sigma = 0.2\nalpha = 0.5\nalpha2 = 0.6\ngrid_step = 0.001\n";
        let cfg = SalienceConfig::parse(text).unwrap();
        let run = cfg.build().unwrap();
        assert_eq!(run.model.alpha(), 0.5);
        assert_eq!(run.alpha2, 0.6);
        assert_eq!(run.model.gd().kind(), "truncated-normal");
        assert!(SalienceConfig::parse("bogus = 1").is_err());
        assert!(SalienceConfig::parse("alpha 0.5").is_err());
        let mut cfg = SalienceConfig::default();
        cfg.set("gd", "truncated-normal");
        assert!(matches!(cfg.build(), Err(Error::Config(_))));
    }
}
