use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};

use crate::Column;

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: &'static str,
    pub label: &'static str,
    pub points: Vec<(f64, f64)>,
}

impl Column {
    fn header(self) -> &'static str {
        match self {
            Column::K => "k",
            Column::Energy => "energy",
        }
    }

    fn axis_label(self) -> &'static str {
        match self {
            Column::K => "k (1/bohr)",
            Column::Energy => "E (hartree)",
        }
    }
}

/// Reads `x` and the chosen column from a sweep CSV.
pub fn read_series(path: &Path, column: Column) -> Result<Series> {
    let mut reader =
        csv::Reader::from_path(path).with_context(|| format!("cannot read {}", path.display()))?;
    let headers = reader.headers().context("missing CSV header")?.clone();
    let find = |name: &str| {
        headers
            .iter()
            .position(|h| h.trim() == name)
            .with_context(|| format!("CSV header has no '{name}' column"))
    };
    let x_col = find("x")?;
    let y_col = find(column.header())?;
    let mut points = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.with_context(|| format!("malformed CSV record {}", line + 1))?;
        let field = |i: usize| -> Result<f64> {
            let raw = record
                .get(i)
                .with_context(|| format!("record {} is too short", line + 1))?;
            let v: f64 = raw
                .trim()
                .parse()
                .with_context(|| format!("record {}: '{raw}' is not a number", line + 1))?;
            if !v.is_finite() {
                bail!("record {}: non-finite value {raw}", line + 1);
            }
            Ok(v)
        };
        points.push((field(x_col)?, field(y_col)?));
    }
    if points.is_empty() {
        bail!("{} has no data rows", path.display());
    }
    Ok(Series {
        name: column.header(),
        label: column.axis_label(),
        points,
    })
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 55.0;
const TICKS: usize = 5;

fn padded_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    let span = hi - lo;
    let pad = if span > 0.0 {
        0.05 * span
    } else {
        0.5 * lo.abs().max(1.0) * 0.1
    };
    (lo - pad, hi + pad)
}

fn tick_decimals(span: f64) -> usize {
    let step = span / TICKS as f64;
    if step <= 0.0 {
        return 3;
    }
    (-(step.log10().floor()) as i64 + 1).clamp(0, 8) as usize
}

/// Self-contained SVG line chart of the series against x.
pub fn render_svg(series: &Series) -> String {
    let (x_lo, x_hi) = padded_range(series.points.iter().map(|p| p.0));
    let (y_lo, y_hi) = padded_range(series.points.iter().map(|p| p.1));
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let sy = |y: f64| TOP + (y_hi - y) / (y_hi - y_lo) * plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="22" text-anchor="middle" font-size="15">{} vs x</text>"#,
        WIDTH / 2.0,
        series.name
    );
    let _ = writeln!(
        s,
        r#"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    );

    let x_dec = tick_decimals(x_hi - x_lo);
    let y_dec = tick_decimals(y_hi - y_lo);
    for i in 0..=TICKS {
        let t = i as f64 / TICKS as f64;
        let xv = x_lo + t * (x_hi - x_lo);
        let px = sx(xv);
        let _ = writeln!(
            s,
            r#"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="black"/><text x="{px:.2}" y="{:.2}" text-anchor="middle">{xv:.x_dec$}</text>"#,
            TOP + plot_h,
            TOP + plot_h + 5.0,
            TOP + plot_h + 19.0
        );
        let yv = y_lo + t * (y_hi - y_lo);
        let py = sy(yv);
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{py:.2}" x2="{LEFT}" y2="{py:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{yv:.y_dec$}</text>"#,
            LEFT - 5.0,
            LEFT - 8.0,
            py + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">x (bohr)</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 12.0
    );
    let _ = writeln!(
        s,
        r#"<text transform="translate(18 {:.1}) rotate(-90)" text-anchor="middle">{}</text>"#,
        TOP + plot_h / 2.0,
        series.label
    );

    let path: Vec<String> = series
        .points
        .iter()
        .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
        .collect();
    let _ = writeln!(
        s,
        r#"<polyline fill="none" stroke="steelblue" stroke-width="2" points="{}"/>"#,
        path.join(" ")
    );
    for &(x, y) in &series.points {
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="steelblue"/>"#,
            sx(x),
            sy(y)
        );
    }
    s.push_str("</svg>\n");
    s
}

/// gnuplot script carrying the data in an inline datablock.
pub fn render_gnuplot(series: &Series) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# x (bohr) vs {}", series.label);
    let _ = writeln!(s, "$data << EOD");
    for &(x, y) in &series.points {
        let _ = writeln!(s, "{x:.6} {y:.6}");
    }
    let _ = writeln!(s, "EOD");
    let _ = writeln!(s, "set xlabel 'x (bohr)'");
    let _ = writeln!(s, "set ylabel '{}'", series.label);
    let _ = writeln!(
        s,
        "plot $data using 1:2 with linespoints title '{}'",
        series.name
    );
    s
}
