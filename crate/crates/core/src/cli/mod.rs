//! Command-line front end for the `polarize` binary.
//!
//! Every subcommand builds one JSON document. `--json` prints it verbatim
//! at full precision; otherwise it is rendered as aligned text with six
//! significant digits. Exit codes: 0 on success, 1 when the inputs are
//! rejected by the library, 2 on usage errors.

mod render;
mod svg;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::affective::{affective_level, AnimosityFn};
use crate::distribution::{CdfConvention, DiscreteDistribution, PolicyAxis};
use crate::error::{Error, Result};
use crate::ingest::{anes_axis, data_axis, fixture_table, ShareTable};
use crate::measure::{group_stats, polarization_measure, MeasureSpec};
use crate::polarization::{
    definition1_oracle_tol, is_more_polarized_around_tol, report_for_curve, CenterSet, CrossingReport, DiffCurve,
    DEFAULT_TOLERANCE,
};
use crate::salience::{discretize, salience_polarization_report, SalienceConfig};

pub use render::sig;

#[derive(Debug, Parser)]
#[command(
    name = "polarize",
    version,
    about = "Polarization orderings of voter-position distributions"
)]
struct Cli {
    /// Print the full-precision JSON document instead of a table.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Mean, variance and interval masses of one distribution.
    Summarize(SummarizeArgs),
    /// Decide the polarization ordering between two distributions.
    Compare(CompareArgs),
    /// CDF difference at every grid point, with valid centers marked.
    Crossings(PairArgs),
    /// Brute-force interval check of the ordering around one center.
    Oracle(OracleArgs),
    /// Polarization measure built from the half-line CDF integrals.
    Measure(MeasureArgs),
    /// Affective-polarization level of the two groups split at a center.
    Affective(AffectiveArgs),
    /// Compare the induced distributions of a two-issue salience model.
    Salience(SalienceArgs),
    /// Write the CDF difference curve as CSV (and optionally SVG).
    Plotdata(PlotArgs),
}

#[derive(Debug, Args)]
struct Source {
    /// Bundled fixture name (anes1996, anes2004, anes2016).
    #[arg(long, value_name = "NAME", conflicts_with = "file", required_unless_present = "file")]
    dist: Option<String>,
    /// `position,share` CSV file.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Policy axis as `MIN,MAX`. Defaults to 0,10 for fixtures and the
    /// data range for files.
    #[arg(long, value_name = "MIN,MAX", value_parser = parse_pair)]
    axis: Option<(f64, f64)>,
}

#[derive(Debug, Args)]
struct SummarizeArgs {
    #[command(flatten)]
    source: Source,
    /// Closed interval `LO,HI` whose mass to report; repeatable.
    #[arg(long = "interval", value_name = "LO,HI", value_parser = parse_pair)]
    intervals: Vec<(f64, f64)>,
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Baseline fixture name.
    #[arg(
        long,
        value_name = "NAME",
        conflicts_with = "from_file",
        required_unless_present = "from_file"
    )]
    from: Option<String>,
    /// Baseline `position,share` CSV file.
    #[arg(long, value_name = "PATH")]
    from_file: Option<PathBuf>,
    /// Comparison fixture name.
    #[arg(
        long,
        value_name = "NAME",
        conflicts_with = "to_file",
        required_unless_present = "to_file"
    )]
    to: Option<String>,
    /// Comparison `position,share` CSV file.
    #[arg(long, value_name = "PATH")]
    to_file: Option<PathBuf>,
    #[arg(long, value_name = "MIN,MAX", value_parser = parse_pair)]
    axis: Option<(f64, f64)>,
    /// CDF convention between support points: step or linear.
    #[arg(long, default_value = "step")]
    convention: CdfConvention,
    /// Values within this distance of zero count as zero.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Also test the ordering around this center directly.
    #[arg(long)]
    xstar: Option<f64>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long)]
    xstar: f64,
}

#[derive(Debug, Args)]
struct MeasureArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    xstar: f64,
    /// identity or group-mean.
    #[arg(long, default_value = "identity")]
    spec: String,
}

#[derive(Debug, Args)]
struct AffectiveArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    xstar: f64,
    /// Animosity function: identity, square, sqrt or exp-minus-one.
    #[arg(long, default_value = "identity", conflicts_with = "g_table")]
    g: AnimosityFn,
    /// Tabulated animosity function as a `t,g` CSV file.
    #[arg(long, value_name = "PATH")]
    g_table: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SalienceArgs {
    /// `key = value` file; flags below override its entries.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long)]
    axis_min: Option<f64>,
    #[arg(long)]
    axis_max: Option<f64>,
    /// Position distribution on the first issue: uniform, truncated-normal or tabulated.
    #[arg(long, value_name = "KIND")]
    gc: Option<String>,
    #[arg(long)]
    gc_lo: Option<f64>,
    #[arg(long)]
    gc_hi: Option<f64>,
    #[arg(long)]
    gc_mu: Option<f64>,
    #[arg(long)]
    gc_sigma: Option<f64>,
    #[arg(long, value_name = "PATH")]
    gc_table: Option<PathBuf>,
    /// Position distribution on the second issue.
    #[arg(long, value_name = "KIND")]
    gd: Option<String>,
    #[arg(long)]
    gd_lo: Option<f64>,
    #[arg(long)]
    gd_hi: Option<f64>,
    #[arg(long)]
    gd_mu: Option<f64>,
    #[arg(long)]
    gd_sigma: Option<f64>,
    #[arg(long, value_name = "PATH")]
    gd_table: Option<PathBuf>,
    /// Salience weight of the second issue in the baseline.
    #[arg(long)]
    alpha: Option<f64>,
    /// Salience weight in the comparison distribution.
    #[arg(long)]
    alpha2: Option<f64>,
    #[arg(long)]
    grid_step: Option<f64>,
    /// Absolute quadrature tolerance.
    #[arg(long)]
    tolerance: Option<f64>,
    /// Animosity function for the affective level at the center.
    #[arg(long, default_value = "identity")]
    g: AnimosityFn,
}

#[derive(Debug, Args)]
struct PlotArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Destination of the `x,diff` CSV.
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
    /// Optional SVG polyline of the same curve.
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
}

fn parse_pair(s: &str) -> std::result::Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `A,B`, got `{s}`"))?;
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("`{t}` is not a number"));
    Ok((num(a)?, num(b)?))
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(&cli.command, err) {
        Ok(doc) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n"
            } else {
                render::human(&doc)
            };
            match out.write_all(text.as_bytes()) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cmd: &Command, err: &mut dyn Write) -> Result<Value> {
    match cmd {
        Command::Summarize(a) => summarize(a),
        Command::Compare(a) => compare(a),
        Command::Crossings(a) => crossings(a),
        Command::Oracle(a) => oracle(a),
        Command::Measure(a) => measure(a, err),
        Command::Affective(a) => affective(a),
        Command::Salience(a) => salience(a),
        Command::Plotdata(a) => plotdata(a),
    }
}

struct Loaded {
    label: String,
    table: ShareTable,
    is_fixture: bool,
}

fn load(name: Option<&String>, file: Option<&PathBuf>) -> Result<Loaded> {
    match (name, file) {
        (Some(n), _) => Ok(Loaded {
            label: n.clone(),
            table: fixture_table(n)?,
            is_fixture: true,
        }),
        (None, Some(p)) => Ok(Loaded {
            label: p.display().to_string(),
            table: ShareTable::from_csv(p.display().to_string(), File::open(p)?)?,
            is_fixture: false,
        }),
        (None, None) => Err(Error::EmptyInput),
    }
}

/// Explicit axis, else the span of all inputs (fixtures contribute 0-10).
fn resolve_axis(explicit: Option<(f64, f64)>, inputs: &[&Loaded]) -> Result<PolicyAxis> {
    if let Some((lo, hi)) = explicit {
        return PolicyAxis::new(lo, hi);
    }
    let mut points: Vec<f64> = inputs
        .iter()
        .flat_map(|l| l.table.entries.iter().map(|e| e.0))
        .collect();
    if inputs.iter().any(|l| l.is_fixture) {
        points.extend([anes_axis().min(), anes_axis().max()]);
    }
    points.sort_by(f64::total_cmp);
    data_axis(&points)
}

fn single(src: &Source) -> Result<(String, DiscreteDistribution)> {
    let l = load(src.dist.as_ref(), src.file.as_ref())?;
    let axis = resolve_axis(src.axis, &[&l])?;
    Ok((l.label.clone(), l.table.to_distribution(Some(axis))?))
}

struct Pair {
    from: String,
    to: String,
    curve: DiffCurve,
    f: DiscreteDistribution,
    fhat: DiscreteDistribution,
}

fn pair(a: &PairArgs) -> Result<Pair> {
    let l = load(a.from.as_ref(), a.from_file.as_ref())?;
    let r = load(a.to.as_ref(), a.to_file.as_ref())?;
    let axis = resolve_axis(a.axis, &[&l, &r])?;
    let f = l.table.to_distribution(Some(axis))?;
    let fhat = r.table.to_distribution(Some(axis))?;
    let curve = DiffCurve::new(&f, &fhat, a.convention)?;
    Ok(Pair {
        from: l.label,
        to: r.label,
        curve,
        f,
        fhat,
    })
}

fn axis_json(axis: PolicyAxis) -> Value {
    json!({"min": axis.min(), "max": axis.max()})
}

fn centers_json(c: Option<CenterSet>) -> Value {
    c.map_or(Value::Null, |c| json!({"lo": c.lo, "hi": c.hi}))
}

fn report_json(report: &CrossingReport, curve: Option<&DiffCurve>) -> Value {
    let mut doc = json!({
        "verdict": report.verdict.to_string(),
        "convention": report.convention.to_string(),
        "centers": centers_json(report.centers),
    });
    if let (Some(curve), Some(c)) = (curve, report.centers) {
        doc["center_grid_points"] = json!(c.grid_points(curve));
    }
    doc["reverse_centers"] = centers_json(report.reverse_centers);
    doc["witness"] = report.witness.map_or(
        Value::Null,
        |w| json!({"negative_at": w.negative_at, "positive_at": w.positive_at}),
    );
    doc
}

fn merge(mut head: Value, tail: Value) -> Value {
    if let (Some(h), Value::Object(t)) = (head.as_object_mut(), tail) {
        h.extend(t);
    }
    head
}

fn summarize(a: &SummarizeArgs) -> Result<Value> {
    let (label, d) = single(&a.source)?;
    let stats = d.summarize_with(&a.intervals)?;
    let rows: Vec<Value> = d.iter().map(|(s, w)| json!({"position": s, "weight": w})).collect();
    Ok(json!({
        "source": label,
        "axis": axis_json(d.axis()),
        "mean": stats.mean,
        "variance": stats.variance,
        "interval_masses": stats.interval_masses.iter()
            .map(|m| json!({"lo": m.lo, "hi": m.hi, "mass": m.mass}))
            .collect::<Vec<_>>(),
        "distribution": rows,
    }))
}

fn compare(a: &CompareArgs) -> Result<Value> {
    let p = pair(&a.pair)?;
    let report = report_for_curve(&p.curve, a.pair.tol);
    let mut doc = merge(
        json!({"from": p.from, "to": p.to, "axis": axis_json(p.curve.axis())}),
        report_json(&report, Some(&p.curve)),
    );
    if let Some(x) = a.xstar {
        doc["xstar"] = json!(x);
        doc["more_polarized_around_xstar"] = json!(is_more_polarized_around_tol(
            &p.f,
            &p.fhat,
            x,
            a.pair.convention,
            a.pair.tol
        )?);
    }
    Ok(doc)
}

fn crossings(a: &PairArgs) -> Result<Value> {
    let p = pair(a)?;
    let report = report_for_curve(&p.curve, a.tol);
    let rows: Vec<Value> = p
        .curve
        .grid()
        .iter()
        .zip(p.curve.values())
        .zip(p.curve.left_values())
        .map(|((&x, &d), &dl)| {
            json!({
                "x": x,
                "diff": d,
                "diff_left": dl,
                "valid_center": report.centers.is_some_and(|c| c.contains(x)),
            })
        })
        .collect();
    Ok(json!({
        "from": p.from,
        "to": p.to,
        "convention": a.convention.to_string(),
        "verdict": report.verdict.to_string(),
        "rows": rows,
    }))
}

fn oracle(a: &OracleArgs) -> Result<Value> {
    let p = pair(&a.pair)?;
    let brute = definition1_oracle_tol(&p.f, &p.fhat, a.xstar, a.pair.tol)?;
    let analytic = is_more_polarized_around_tol(&p.f, &p.fhat, a.xstar, CdfConvention::Step, a.pair.tol)?;
    Ok(json!({
        "from": p.from,
        "to": p.to,
        "xstar": a.xstar,
        "holds": brute.holds,
        "violating_interval": brute.violating_interval.map_or(Value::Null, |(lo, hi)| json!({"lo": lo, "hi": hi})),
        "analytic_test": analytic,
        "agree": analytic == brute.holds,
    }))
}

fn measure(a: &MeasureArgs, err: &mut dyn Write) -> Result<Value> {
    let (label, d) = single(&a.source)?;
    let spec = MeasureSpec::from_name(&a.spec, &d, a.xstar)?;
    let m = polarization_measure(&d, a.xstar, &spec)?;
    if m.off_unit_axis {
        let _ = writeln!(
            err,
            "warning: `{}` equals the group-mean gap only on the unit axis",
            spec.name()
        );
    }
    let mut doc = json!({
        "source": label,
        "xstar": a.xstar,
        "spec": spec.name(),
        "value": m.value,
        "left_integral": m.left_integral,
        "right_integral": m.right_integral,
        "off_unit_axis": m.off_unit_axis,
    });
    if let Ok(g) = group_stats(&d, a.xstar) {
        doc["mean_gap"] = json!(g.mean_right - g.mean_left);
    }
    Ok(doc)
}

fn read_g(g: &AnimosityFn, table: Option<&PathBuf>) -> Result<AnimosityFn> {
    match table {
        Some(p) => AnimosityFn::table_from_csv(File::open(p)?),
        None => Ok(g.clone()),
    }
}

fn affective(a: &AffectiveArgs) -> Result<Value> {
    let (label, d) = single(&a.source)?;
    let g = read_g(&a.g, a.g_table.as_ref())?;
    let r = affective_level(&d, a.xstar, &g)?;
    let s = r.group_stats;
    Ok(json!({
        "source": label,
        "xstar": a.xstar,
        "g": g.name(),
        "level": r.level,
        "groups": {
            "mass_left": s.mass_left,
            "mass_right": s.mass_right,
            "mean_left": s.mean_left,
            "mean_right": s.mean_right,
        },
    }))
}

fn salience(a: &SalienceArgs) -> Result<Value> {
    let mut cfg = match &a.config {
        Some(p) => SalienceConfig::from_file(p)?,
        None => SalienceConfig::default(),
    };
    let nums = [
        ("axis_min", a.axis_min),
        ("axis_max", a.axis_max),
        ("gc_lo", a.gc_lo),
        ("gc_hi", a.gc_hi),
        ("gc_mu", a.gc_mu),
        ("gc_sigma", a.gc_sigma),
        ("gd_lo", a.gd_lo),
        ("gd_hi", a.gd_hi),
        ("gd_mu", a.gd_mu),
        ("gd_sigma", a.gd_sigma),
        ("alpha", a.alpha),
        ("alpha2", a.alpha2),
        ("grid_step", a.grid_step),
        ("tolerance", a.tolerance),
    ];
    for (k, v) in nums {
        if let Some(v) = v {
            cfg.set(k, v.to_string());
        }
    }
    let strs = [
        ("gc", a.gc.clone()),
        ("gd", a.gd.clone()),
        ("gc_table", a.gc_table.as_deref().map(path_str)),
        ("gd_table", a.gd_table.as_deref().map(path_str)),
    ];
    for (k, v) in strs {
        if let Some(v) = v {
            cfg.set(k, v);
        }
    }
    let run = cfg.build()?;
    let m = &run.model;
    let report = salience_polarization_report(m, run.alpha2, run.grid_step)?;
    let issue = |g: &crate::salience::IssueDistribution| json!({"kind": g.kind(), "lo": g.lo(), "hi": g.hi()});
    let mut doc = json!({
        "axis": axis_json(m.axis()),
        "gc": issue(m.gc()),
        "gd": issue(m.gd()),
        "alpha": m.alpha(),
        "alpha2": run.alpha2,
        "grid_step": run.grid_step,
        "tolerance": m.tolerance(),
    });
    doc = merge(doc, report_json(&report, None));
    if let Some(c) = report.centers {
        let xstar = 0.5 * (c.lo + c.hi);
        let before = discretize(m, run.grid_step)?;
        let after = discretize(&m.with_alpha(run.alpha2)?, run.grid_step)?;
        let levels = affective_level(&before, xstar, &a.g).and_then(|b| Ok((b, affective_level(&after, xstar, &a.g)?)));
        if let Ok((b, h)) = levels {
            doc["affective"] = json!({
                "xstar": xstar,
                "g": a.g.name(),
                "before": b.level,
                "after": h.level,
            });
        }
    }
    Ok(doc)
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn plotdata(a: &PlotArgs) -> Result<Value> {
    let p = pair(&a.pair)?;
    let mut w = BufWriter::new(File::create(&a.out)?);
    p.curve.write_csv(&mut w)?;
    w.flush()?;
    if let Some(path) = &a.svg {
        std::fs::write(path, svg::polyline(&p.curve))?;
    }
    let signs: String = p
        .curve
        .values()
        .iter()
        .map(|&d| {
            if d > a.pair.tol {
                '+'
            } else if d < -a.pair.tol {
                '-'
            } else {
                '0'
            }
        })
        .collect();
    Ok(json!({
        "from": p.from,
        "to": p.to,
        "convention": a.pair.convention.to_string(),
        "out": path_str(&a.out),
        "svg": a.svg.as_deref().map(path_str),
        "rows": p.curve.grid().len(),
        "signs": signs,
    }))
}
