//! Polarization of voter-position distributions around a chosen center.
//!
//! `fhat` is more polarized than `f` around `x*` when every closed interval
//! containing `x*` holds weakly less mass under `fhat`. This crate decides
//! that ordering exactly for discrete distributions, finds every center
//! around which it holds, and ties it to a continuous polarization measure,
//! an affective-polarization level and a two-issue salience model.
//!
//! ```
//! use polarization_core::{fixture, crossing_set, CdfConvention, Verdict};
//!
//! let before = fixture("anes2004").unwrap();
//! let after = fixture("anes2016").unwrap();
//! let report = crossing_set(&before, &after, CdfConvention::Step).unwrap();
//! assert_eq!(report.verdict, Verdict::MorePolarized);
//! assert!(report.centers.unwrap().contains(7.0));
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod affective;
pub mod cli;
pub mod distribution;
pub mod error;
pub mod ingest;
pub mod measure;
pub mod polarization;
pub mod quadrature;
pub mod salience;

pub use affective::{affective_level, AffectiveResult, AnimosityFn};
pub use distribution::{CdfConvention, DiscreteDistribution, PolicyAxis, SummaryStats};
pub use error::{Error, Result};
pub use ingest::{fixture, load_survey, ShareTable};
pub use measure::{group_stats, half_line_integrals, polarization_measure, GroupStats, MeasureSpec, MeasureValue};
pub use polarization::{
    crossing_set, definition1_oracle, diff_curve, is_more_polarized_around, CenterSet, CrossingReport, DiffCurve,
    IntervalOracleResult, Verdict, Witness,
};
pub use salience::{
    induced_cdf, induced_cdf_alpha_derivative, salience_polarization_report, IssueDistribution, SalienceModel,
};
