//! Minimal SVG polyline of a CDF difference curve.

use crate::distribution::CdfConvention;
use crate::polarization::DiffCurve;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 360.0;
const MARGIN: f64 = 32.0;

pub fn polyline(curve: &DiffCurve) -> String {
    let axis = curve.axis();
    let span = curve
        .values()
        .iter()
        .fold(0.0f64, |m, d| m.max(d.abs()))
        .max(f64::MIN_POSITIVE);
    let px = |x: f64| MARGIN + (x - axis.min()) / axis.width() * (WIDTH - 2.0 * MARGIN);
    let py = |d: f64| HEIGHT / 2.0 - d / span * (HEIGHT / 2.0 - MARGIN);

    let mut pts: Vec<(f64, f64)> = Vec::new();
    let grid = curve.grid();
    let vals = curve.values();
    for i in 0..grid.len() {
        if curve.convention() == CdfConvention::Step && i > 0 {
            pts.push((px(grid[i]), py(vals[i - 1])));
        }
        pts.push((px(grid[i]), py(vals[i])));
    }
    let points = pts
        .iter()
        .map(|(x, y)| format!("{x:.2},{y:.2}"))
        .collect::<Vec<_>>()
        .join(" ");
    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n",
            "  <line x1=\"{m}\" y1=\"{z}\" x2=\"{r}\" y2=\"{z}\" stroke=\"#888\" stroke-width=\"1\"/>\n",
            "  <polyline fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"2\" points=\"{p}\"/>\n",
            "</svg>\n"
        ),
        w = WIDTH,
        h = HEIGHT,
        m = MARGIN,
        r = WIDTH - MARGIN,
        z = HEIGHT / 2.0,
        p = points
    )
}
