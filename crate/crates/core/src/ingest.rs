//! Loading distributions from survey rows, share tables and the bundled
//! fixtures.
//!
//! The fixtures are the published shares of self-placements on the 0-10
//! left-right scale for 1996, 2004 and 2016, stored as percentages exactly
//! as published. The 2004 column sums to 99.999 because of rounding; it is
//! normalized by its own total.

use std::collections::HashSet;
use std::io::{Read, Write};
use std::path::PathBuf;

use serde::Serialize;

use crate::distribution::{DiscreteDistribution, PolicyAxis};
use crate::error::{Error, Result};

/// Environment variable naming a directory whose `<name>.csv` files take
/// precedence over the bundled fixtures.
pub const FIXTURE_DIR_ENV: &str = "POLARIZATION_FIXTURE_DIR";

pub const FIXTURE_NAMES: [&str; 3] = ["anes1996", "anes2004", "anes2016"];

const BUNDLED: [(&str, &str); 3] = [
    ("anes1996", include_str!("../fixtures/anes1996.csv")),
    ("anes2004", include_str!("../fixtures/anes2004.csv")),
    ("anes2016", include_str!("../fixtures/anes2016.csv")),
];

/// Share sums accepted as "percent" or "fraction" tables.
const PERCENT_SLACK: f64 = 0.1;
const FRACTION_SLACK: f64 = 1e-3;

/// The 0-10 self-placement scale.
pub fn anes_axis() -> PolicyAxis {
    PolicyAxis::new(0.0, 10.0).expect("valid axis")
}

/// One survey response. `position` is `None` for refusals and other
/// missing-data codes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurveyRow {
    pub position: Option<f64>,
    pub weight: f64,
}

impl SurveyRow {
    pub fn is_valid(&self) -> bool {
        self.position.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurveyLoad {
    pub distribution: DiscreteDistribution,
    pub valid_rows: usize,
    pub invalid_rows: usize,
}

/// Parses a `position,weight` CSV stream. Positions listed in
/// `missing_codes` mark invalid rows, which are counted and dropped.
pub fn read_survey_rows<R: Read>(reader: R, missing_codes: &HashSet<String>) -> Result<Vec<SurveyRow>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers()?.clone();
    if headers.len() < 2 || &headers[0] != "position" || &headers[1] != "weight" {
        return Err(Error::Data {
            row: 0,
            message: format!(
                "expected header `position,weight`, got `{}`",
                headers.iter().collect::<Vec<_>>().join(",")
            ),
        });
    }
    let mut rows = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let row = i + 1;
        let rec = rec?;
        let (pos, weight) = (rec.get(0).unwrap_or(""), rec.get(1).unwrap_or(""));
        if missing_codes.contains(pos) {
            rows.push(SurveyRow {
                position: None,
                weight: 0.0,
            });
            continue;
        }
        let position: f64 = pos.parse().map_err(|_| Error::Data {
            row,
            message: format!("position `{pos}` is neither numeric nor a missing-data code"),
        })?;
        let weight: f64 = weight.parse().map_err(|_| Error::Data {
            row,
            message: format!("weight `{weight}` is not numeric"),
        })?;
        if !position.is_finite() || !weight.is_finite() {
            return Err(Error::Data {
                row,
                message: "non-finite value".into(),
            });
        }
        if weight < 0.0 {
            return Err(Error::Data {
                row,
                message: format!("negative weight {weight}"),
            });
        }
        rows.push(SurveyRow {
            position: Some(position),
            weight,
        });
    }
    Ok(rows)
}

/// Aggregates rows into a distribution. The result does not depend on the
/// row order: weights are summed per position in sorted order.
pub fn aggregate_rows(rows: &[SurveyRow], axis: Option<PolicyAxis>) -> Result<SurveyLoad> {
    let mut valid: Vec<(f64, f64)> = rows.iter().filter_map(|r| r.position.map(|p| (p, r.weight))).collect();
    let invalid_rows = rows.len() - valid.len();
    if valid.is_empty() {
        return Err(Error::EmptyInput);
    }
    valid.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));

    let mut support: Vec<f64> = Vec::new();
    let mut totals: Vec<f64> = Vec::new();
    for &(p, w) in &valid {
        if support.last() == Some(&p) {
            *totals.last_mut().unwrap() += w;
        } else {
            support.push(p);
            totals.push(w);
        }
    }
    let total: f64 = totals.iter().sum();
    if !(total > 0.0) {
        return Err(Error::EmptyInput);
    }
    let axis = match axis {
        Some(a) => a,
        None => data_axis(&support)?,
    };
    let distribution = DiscreteDistribution::new(axis, support, totals.iter().map(|w| w / total).collect())?;
    Ok(SurveyLoad {
        distribution,
        valid_rows: valid.len(),
        invalid_rows,
    })
}

pub fn load_survey<R: Read>(
    reader: R,
    missing_codes: &HashSet<String>,
    axis: Option<PolicyAxis>,
) -> Result<SurveyLoad> {
    aggregate_rows(&read_survey_rows(reader, missing_codes)?, axis)
}

/// Smallest axis covering `support`; a single point gets a unit-width axis.
pub fn data_axis(support: &[f64]) -> Result<PolicyAxis> {
    let lo = support.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = support.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if lo < hi {
        PolicyAxis::new(lo, hi)
    } else {
        PolicyAxis::new(lo - 0.5, hi + 0.5)
    }
}

/// Published shares by position, as read (percent or fraction).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShareTable {
    pub label: String,
    pub entries: Vec<(f64, f64)>,
}

impl ShareTable {
    /// Reads the `position,share` distribution file format.
    pub fn from_csv<R: Read>(label: impl Into<String>, reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let headers = rdr.headers()?.clone();
        if headers.len() < 2 || &headers[0] != "position" || &headers[1] != "share" {
            return Err(Error::Data {
                row: 0,
                message: "expected header `position,share`".into(),
            });
        }
        let mut entries = Vec::new();
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let field = |k: usize, what: &str| -> Result<f64> {
                let raw = rec.get(k).unwrap_or("");
                raw.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| Error::Data {
                        row: i + 1,
                        message: format!("{what} `{raw}` is not a finite number"),
                    })
            };
            let (p, s) = (field(0, "position")?, field(1, "share")?);
            if s < 0.0 {
                return Err(Error::Data {
                    row: i + 1,
                    message: format!("negative share {s}"),
                });
            }
            entries.push((p, s));
        }
        if entries.is_empty() {
            return Err(Error::EmptyInput);
        }
        entries.sort_by(|a, b| a.0.total_cmp(&b.0));
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::Data {
                row: 0,
                message: format!("position {} listed twice", w[0].0),
            });
        }
        let table = Self {
            label: label.into(),
            entries,
        };
        table.total()?;
        Ok(table)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "position,share")?;
        for (p, s) in &self.entries {
            writeln!(out, "{p},{s}")?;
        }
        Ok(())
    }

    /// Table total, checked to be close to 100 (percent) or 1 (fractions).
    pub fn total(&self) -> Result<f64> {
        let total: f64 = self.entries.iter().map(|e| e.1).sum();
        if (total - 100.0).abs() <= PERCENT_SLACK || (total - 1.0).abs() <= FRACTION_SLACK {
            Ok(total)
        } else {
            Err(Error::InvalidDistribution(format!(
                "shares of `{}` sum to {total}, neither ~100 nor ~1",
                self.label
            )))
        }
    }

    pub fn is_percent(&self) -> bool {
        self.total().is_ok_and(|t| (t - 100.0).abs() <= PERCENT_SLACK)
    }

    /// Normalizes by the table total. Without an explicit axis, the axis is
    /// the range of listed positions.
    pub fn to_distribution(&self, axis: Option<PolicyAxis>) -> Result<DiscreteDistribution> {
        let total = self.total()?;
        let (support, weights): (Vec<f64>, Vec<f64>) = self.entries.iter().map(|&(p, s)| (p, s / total)).unzip();
        let axis = match axis {
            Some(a) => a,
            None => data_axis(&support)?,
        };
        DiscreteDistribution::new(axis, support, weights)
    }

    pub fn from_distribution(label: impl Into<String>, d: &DiscreteDistribution) -> Self {
        Self {
            label: label.into(),
            entries: d.iter().collect(),
        }
    }
}

pub fn read_distribution<R: Read>(reader: R, axis: Option<PolicyAxis>) -> Result<DiscreteDistribution> {
    ShareTable::from_csv("file", reader)?.to_distribution(axis)
}

pub fn write_distribution<W: Write>(d: &DiscreteDistribution, out: W) -> Result<()> {
    ShareTable::from_distribution("distribution", d).write_csv(out)
}

fn override_path(name: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(FIXTURE_DIR_ENV)?;
    let path = PathBuf::from(dir).join(format!("{name}.csv"));
    path.is_file().then_some(path)
}

/// The share table behind a fixture name.
pub fn fixture_table(name: &str) -> Result<ShareTable> {
    if let Some(path) = override_path(name) {
        return ShareTable::from_csv(name, std::fs::File::open(path)?);
    }
    let (_, text) = BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    ShareTable::from_csv(name, text.as_bytes())
}

/// A bundled (or overridden) fixture on the 0-10 axis.
pub fn fixture(name: &str) -> Result<DiscreteDistribution> {
    fixture_table(name)?.to_distribution(Some(anes_axis()))
}
