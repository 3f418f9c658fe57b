//! Continuous polarization measure
//! `P(F, x*) = a[∫_{x<x*} F] - b[∫_{x>x*} F]` for strictly increasing `a`, `b`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::distribution::DiscreteDistribution;
use crate::error::{Error, Result};

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Number of points used to spot-check that `a` and `b` are increasing.
const MONOTONE_CHECK_POINTS: usize = 33;

/// A named pair of strictly increasing functions `(a, b)`.
#[derive(Clone)]
pub struct MeasureSpec {
    name: String,
    a: RealFn,
    b: RealFn,
    unit_axis_only: bool,
}

impl fmt::Debug for MeasureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MeasureSpec")
            .field("name", &self.name)
            .field("unit_axis_only", &self.unit_axis_only)
            .finish_non_exhaustive()
    }
}

impl MeasureSpec {
    /// `a[y] = y`, `b[y] = y`.
    pub fn identity() -> Self {
        Self {
            name: "identity".into(),
            a: Arc::new(|y| y),
            b: Arc::new(|y| y),
            unit_axis_only: false,
        }
    }

    /// The pair under which `P` equals the gap between group means,
    /// `m_R - m_L`, on the unit axis. `mass_left` is the mass strictly below
    /// `xstar` and `mass_right` the mass strictly above it.
    pub fn group_mean(xstar: f64, mass_left: f64, mass_right: f64) -> Result<Self> {
        if !(mass_left > 0.0) {
            return Err(Error::DegenerateGroup { side: "left", xstar });
        }
        if !(mass_right > 0.0) {
            return Err(Error::DegenerateGroup { side: "right", xstar });
        }
        // F(x*) seen from the right: the atom at x* counts as "below".
        let cdf_at = 1.0 - mass_right;
        Ok(Self {
            name: "group-mean".into(),
            a: Arc::new(move |y| (y - xstar * mass_left) / mass_left),
            b: Arc::new(move |y| (y - (1.0 - xstar * cdf_at)) / mass_right),
            unit_axis_only: true,
        })
    }

    /// Group-mean pair anchored at `d`'s own group masses around `xstar`.
    pub fn group_mean_for(d: &DiscreteDistribution, xstar: f64) -> Result<Self> {
        let g = group_stats(d, xstar)?;
        Self::group_mean(xstar, g.mass_left, g.mass_right)
    }

    pub fn custom<A, B>(name: impl Into<String>, a: A, b: B) -> Self
    where
        A: Fn(f64) -> f64 + Send + Sync + 'static,
        B: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            a: Arc::new(a),
            b: Arc::new(b),
            unit_axis_only: false,
        }
    }

    /// Catalog lookup; `group-mean` is anchored at `d` around `xstar`.
    pub fn from_name(name: &str, d: &DiscreteDistribution, xstar: f64) -> Result<Self> {
        match name {
            "identity" => Ok(Self::identity()),
            "group-mean" => Self::group_mean_for(d, xstar),
            other => Err(Error::InvalidSpec(format!(
                "unknown measure `{other}` (expected identity or group-mean)"
            ))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// True when the pair only has its intended meaning on `[0, 1]`.
    pub fn unit_axis_only(&self) -> bool {
        self.unit_axis_only
    }

    pub fn a(&self, y: f64) -> f64 {
        (self.a)(y)
    }

    pub fn b(&self, y: f64) -> f64 {
        (self.b)(y)
    }

    /// Spot-checks strict monotonicity of `a` on `[0, a_max]` and of `b` on
    /// `[0, b_max]`.
    pub fn check_increasing(&self, a_max: f64, b_max: f64) -> Result<()> {
        for (label, func, hi) in [("a", &self.a, a_max), ("b", &self.b, b_max)] {
            if hi <= 0.0 {
                continue;
            }
            let mut prev = func(0.0);
            for i in 1..MONOTONE_CHECK_POINTS {
                let y = hi * i as f64 / (MONOTONE_CHECK_POINTS - 1) as f64;
                let v = func(y);
                if !(v > prev) {
                    return Err(Error::InvalidSpec(format!(
                        "`{}`: {label} is not strictly increasing near {y}",
                        self.name
                    )));
                }
                prev = v;
            }
        }
        Ok(())
    }
}

/// `(∫_{min}^{x*} F(t-) dt, ∫_{x*}^{max} F(t) dt)` as exact rectangle sums of
/// the step CDF. The atom at `x*` only enters the right integral.
pub fn half_line_integrals(d: &DiscreteDistribution, xstar: f64) -> Result<(f64, f64)> {
    let axis = d.axis();
    axis.check(xstar)?;

    let rect_sum = |from: f64, to: f64| -> f64 {
        let mut total = 0.0;
        let mut prev = from;
        for &s in d.support().iter().filter(|&&s| s > from && s < to) {
            total += d.step_cdf(prev) * (s - prev);
            prev = s;
        }
        total + d.step_cdf(prev) * (to - prev)
    };

    // On [min, x*) the step CDF at the left end of each piece never sees the
    // atom at x*, so the same routine gives the left-limit integral.
    let left = if xstar > axis.min() {
        rect_sum(axis.min(), xstar)
    } else {
        0.0
    };
    let right = if xstar < axis.max() {
        rect_sum(xstar, axis.max())
    } else {
        0.0
    };
    Ok((left, right))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasureValue {
    pub value: f64,
    pub left_integral: f64,
    pub right_integral: f64,
    /// Set when a unit-axis-only spec was evaluated on another axis.
    pub off_unit_axis: bool,
}

pub fn polarization_measure(d: &DiscreteDistribution, xstar: f64, spec: &MeasureSpec) -> Result<MeasureValue> {
    let (left, right) = half_line_integrals(d, xstar)?;
    let axis = d.axis();
    spec.check_increasing(xstar - axis.min(), axis.max() - xstar)?;
    let (a, b) = (spec.a(left), spec.b(right));
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidSpec(format!(
            "`{}` is undefined at ({left}, {right})",
            spec.name()
        )));
    }
    Ok(MeasureValue {
        value: a - b,
        left_integral: left,
        right_integral: right,
        off_unit_axis: spec.unit_axis_only() && !axis.is_unit(),
    })
}

/// Masses and mean positions of the groups strictly left and strictly right
/// of `x*`. Voters exactly at `x*` belong to neither group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GroupStats {
    pub mass_left: f64,
    pub mass_right: f64,
    pub mean_left: f64,
    pub mean_right: f64,
    pub xstar: f64,
}

pub fn group_stats(d: &DiscreteDistribution, xstar: f64) -> Result<GroupStats> {
    d.axis().check(xstar)?;
    let (mut ml, mut sl, mut mr, mut sr) = (0.0, 0.0, 0.0, 0.0);
    for (s, w) in d.iter() {
        if s < xstar {
            ml += w;
            sl += w * s;
        } else if s > xstar {
            mr += w;
            sr += w * s;
        }
    }
    if ml <= 0.0 {
        return Err(Error::DegenerateGroup { side: "left", xstar });
    }
    if mr <= 0.0 {
        return Err(Error::DegenerateGroup { side: "right", xstar });
    }
    Ok(GroupStats {
        mass_left: ml,
        mass_right: mr,
        mean_left: sl / ml,
        mean_right: sr / mr,
        xstar,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::PolicyAxis;
    use crate::ingest::fixture;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn unit(support: Vec<f64>, weights: Vec<f64>) -> DiscreteDistribution {
        DiscreteDistribution::new(PolicyAxis::unit(), support, weights).unwrap()
    }

    /// ∫_{x<x*} F = Σ_{s<x*} w (x* - s);  ∫_{x>x*} F = Σ_s w (max - max(s, x*)).
    fn integrals_by_atoms(d: &DiscreteDistribution, xstar: f64) -> (f64, f64) {
        let max = d.axis().max();
        let left = d.iter().filter(|(s, _)| *s < xstar).map(|(s, w)| w * (xstar - s)).sum();
        let right = d.iter().map(|(s, w)| w * (max - s.max(xstar))).sum();
        (left, right)
    }

    #[test]
    fn integrals_on_simple_cases() {
        let point = unit(vec![0.5], vec![1.0]);
        assert_eq!(half_line_integrals(&point, 0.5).unwrap(), (0.0, 0.5));
        let ends = unit(vec![0.0, 1.0], vec![0.5, 0.5]);
        assert_eq!(half_line_integrals(&ends, 0.5).unwrap(), (0.25, 0.25));

        let d96 = fixture("anes1996").unwrap();
        let (left, right) = half_line_integrals(&d96, 5.0).unwrap();
        // Σ_{k=0..4} cdf(k) of the 1996 column
        assert!((left - 0.4296).abs() < 1e-12);
        let (l2, r2) = integrals_by_atoms(&d96, 5.0);
        assert!((left - l2).abs() < 1e-12 && (right - r2).abs() < 1e-12);
    }

    #[test]
    fn identity_measure_values() {
        let ends = unit(vec![0.0, 1.0], vec![0.5, 0.5]);
        let id = MeasureSpec::identity();
        assert_eq!(polarization_measure(&ends, 0.5, &id).unwrap().value, 0.0);
        let point = unit(vec![0.5], vec![1.0]);
        assert_eq!(polarization_measure(&point, 0.5, &id).unwrap().value, -0.5);
    }

    #[test]
    fn group_stats_cases() {
        let g = group_stats(&fixture("anes1996").unwrap(), 5.0).unwrap();
        assert!((g.mean_left - 2.899677324728659).abs() < 1e-12);
        assert!((g.mean_right - 7.489390958014273).abs() < 1e-12);
        assert!((g.mean_left - 2.8997).abs() < 1e-4 && (g.mean_right - 7.4894).abs() < 1e-4);

        let ends = unit(vec![0.0, 1.0], vec![0.5, 0.5]);
        let g = group_stats(&ends, 0.5).unwrap();
        assert_eq!((g.mean_left, g.mean_right), (0.0, 1.0));

        let sym = unit(vec![0.1, 0.3, 0.5, 0.7, 0.9], vec![0.1, 0.2, 0.4, 0.2, 0.1]);
        let g = group_stats(&sym, 0.5).unwrap();
        assert!(((0.5 - g.mean_left) - (g.mean_right - 0.5)).abs() < 1e-12);
        assert!((g.mass_left - 0.3).abs() < 1e-15);
    }

    #[test]
    fn empty_group_is_degenerate() {
        let d = unit(vec![0.5, 0.8], vec![0.5, 0.5]);
        assert!(matches!(
            group_stats(&d, 0.5),
            Err(Error::DegenerateGroup { side: "left", .. })
        ));
        assert!(matches!(
            MeasureSpec::group_mean_for(&d, 0.9),
            Err(Error::DegenerateGroup { .. })
        ));
        assert!(MeasureSpec::group_mean(0.5, 0.0, 0.5).is_err());
    }

    #[test]
    fn group_mean_spec_is_mean_gap_on_unit_axis() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 100 {
            let n = rng.gen_range(2..=12);
            let mut s: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
            s.sort_by(f64::total_cmp);
            s.dedup();
            let w: Vec<f64> = s.iter().map(|_| rng.gen::<f64>()).collect();
            let t: f64 = w.iter().sum();
            let d = unit(s.clone(), w.iter().map(|x| x / t).collect());
            let xstar = if rng.gen_bool(0.5) {
                s[rng.gen_range(0..s.len())]
            } else {
                rng.gen()
            };

            // brute force: weighted means over the strict half-lines
            let (mut ml, mut sl, mut mr, mut sr) = (0.0, 0.0, 0.0, 0.0);
            for (x, w) in d.iter() {
                if x < xstar {
                    ml += w;
                    sl += w * x;
                } else if x > xstar {
                    mr += w;
                    sr += w * x;
                }
            }
            if ml == 0.0 || mr == 0.0 {
                continue;
            }
            let gap = sr / mr - sl / ml;
            let spec = MeasureSpec::group_mean_for(&d, xstar).unwrap();
            let m = polarization_measure(&d, xstar, &spec).unwrap();
            assert!(!m.off_unit_axis);
            assert!((m.value - gap).abs() < 1e-12, "{} vs {gap}", m.value);
            let g = group_stats(&d, xstar).unwrap();
            assert!((m.value - (g.mean_right - g.mean_left)).abs() < 1e-12);
            checked += 1;
        }
    }

    #[test]
    fn group_mean_off_unit_axis_is_flagged() {
        let d = fixture("anes1996").unwrap();
        let spec = MeasureSpec::from_name("group-mean", &d, 5.0).unwrap();
        assert!(polarization_measure(&d, 5.0, &spec).unwrap().off_unit_axis);
        assert!(MeasureSpec::from_name("median", &d, 5.0).is_err());
    }

    #[test]
    fn identity_falls_when_mass_moves_inward() {
        let before = unit(vec![0.1, 0.5, 0.9], vec![0.3, 0.4, 0.3]);
        let after = unit(vec![0.1, 0.4, 0.5, 0.6, 0.9], vec![0.2, 0.1, 0.4, 0.1, 0.2]);
        let id = MeasureSpec::identity();
        let p0 = polarization_measure(&before, 0.5, &id).unwrap().value;
        let p1 = polarization_measure(&after, 0.5, &id).unwrap().value;
        assert!(p1 < p0);
    }

    #[test]
    fn non_monotone_spec_rejected() {
        let d = unit(vec![0.2, 0.8], vec![0.5, 0.5]);
        let bad = MeasureSpec::custom("square", |y| y * y - y, |y| y);
        assert!(matches!(
            polarization_measure(&d, 0.5, &bad),
            Err(Error::InvalidSpec(_))
        ));
        let ok = MeasureSpec::custom("exp", f64::exp, |y| 2.0 * y);
        assert!(polarization_measure(&d, 0.5, &ok).is_ok());
    }
}
