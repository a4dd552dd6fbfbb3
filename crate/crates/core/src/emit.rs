//! Output rendering: result CSV, metadata echo, and standalone SVG charts.
//!
//! Every renderer is a pure function of its inputs (no timestamps, no
//! environment probes), so identical results produce byte-identical files.

use crate::error::{Error, Result};
use crate::runner::AggregateResult;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// Column header of every result CSV.
pub const CSV_HEADER: &str = "checkpoint_t,mean_cum_regret,std_cum_regret";

/// Renders the per-checkpoint aggregate as CSV: header plus one row per
/// checkpoint. Values use the shortest round-trip decimal form.
pub fn render_csv(result: &AggregateResult) -> String {
    let mut out = String::with_capacity(32 * (result.checkpoints.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for ((t, mean), std) in result.checkpoints.iter().zip(&result.mean).zip(&result.std) {
        let _ = writeln!(out, "{t},{mean},{std}");
    }
    out
}

/// Parses a result CSV back into `(checkpoint, mean, std)` rows.
pub fn parse_csv(text: &str) -> Result<Vec<(u64, f64, f64)>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CSV_HEADER => {}
        other => {
            return Err(Error::InvalidParameter(format!(
                "expected header '{CSV_HEADER}', got '{}'",
                other.unwrap_or("")
            )))
        }
    }
    let mut rows = Vec::new();
    for (idx, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split(',').collect();
        let parsed = (|| -> Option<(u64, f64, f64)> {
            let [t, mean, std] = parts.as_slice() else { return None };
            Some((t.parse().ok()?, mean.parse().ok()?, std.parse().ok()?))
        })();
        let row = parsed.ok_or_else(|| {
            Error::InvalidParameter(format!("malformed CSV row {}: '{line}'", idx + 2))
        })?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::InvalidParameter("CSV holds no data rows".to_string()));
    }
    Ok(rows)
}

/// Renders the metadata file: the canonical config echo (which round-trips
/// through the config parser) plus result summary comments.
pub fn render_meta(result: &AggregateResult) -> String {
    let mut out = result.config.render();
    out.push_str("# results\n");
    let _ = writeln!(out, "# checkpoints_written = {}", result.checkpoints.len());
    let _ = writeln!(out, "# final_mean_regret = {}", result.final_mean());
    let _ = writeln!(out, "# final_std_regret = {}", result.std.last().unwrap());
    out
}

fn write_file(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })
}

/// Writes `<stem>.csv` and `<stem>.meta.txt` under `dir` (created if
/// needed), plus `<stem>.stats.csv` when the result carries a dump.
/// Returns the paths written.
pub fn write_outputs(result: &AggregateResult, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", dir.display())))
    })?;
    let stem = result.config.file_stem();
    let mut written = Vec::new();

    let csv_path = dir.join(format!("{stem}.csv"));
    write_file(&csv_path, &render_csv(result))?;
    written.push(csv_path);

    let meta_path = dir.join(format!("{stem}.meta.txt"));
    write_file(&meta_path, &render_meta(result))?;
    written.push(meta_path);

    if let Some(dump) = &result.stats_dump {
        let stats_path = dir.join(format!("{stem}.stats.csv"));
        write_file(&stats_path, dump)?;
        written.push(stats_path);
    }
    Ok(written)
}

/// One labeled curve for the chart.
#[derive(Debug, Clone)]
pub struct Series {
    pub label: String,
    /// `(round, value)` points, ascending rounds.
    pub points: Vec<(f64, f64)>,
}

const WIDTH: f64 = 880.0;
const HEIGHT: f64 = 560.0;
const LEFT: f64 = 78.0;
const RIGHT: f64 = 860.0;
const TOP: f64 = 24.0;
const BOTTOM: f64 = 500.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
];

/// Largest of 1, 2, 5 times a power of ten that divides `range` into about
/// five steps.
fn nice_step(range: f64) -> f64 {
    let raw = range / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let factor = if norm <= 1.0 {
        1.0
    } else if norm <= 2.0 {
        2.0
    } else if norm <= 5.0 {
        5.0
    } else {
        10.0
    };
    factor * mag
}

/// Renders a standalone SVG line chart of the given series. With `logx` the
/// x axis is log-scaled with decade ticks; rounds must then be >= 1.
pub fn render_svg(series: &[Series], logx: bool) -> Result<String> {
    if series.is_empty() || series.iter().any(|s| s.points.is_empty()) {
        return Err(Error::InvalidParameter(
            "chart needs at least one series with at least one point".to_string(),
        ));
    }
    let x_max = series
        .iter()
        .flat_map(|s| s.points.iter().map(|p| p.0))
        .fold(f64::NEG_INFINITY, f64::max);
    let y_max = series
        .iter()
        .flat_map(|s| s.points.iter().map(|p| p.1))
        .fold(f64::NEG_INFINITY, f64::max);
    if logx && series.iter().any(|s| s.points.iter().any(|p| p.0 < 1.0)) {
        return Err(Error::InvalidParameter(
            "log-scaled x needs all rounds >= 1".to_string(),
        ));
    }
    let y_top = if y_max > 0.0 { y_max * 1.05 } else { 1.0 };
    let x_span = if logx { x_max.log10().max(1e-9) } else { x_max.max(1e-9) };

    let x_pos = |x: f64| -> f64 {
        let frac = if logx { x.log10() / x_span } else { x / x_span };
        LEFT + frac * (RIGHT - LEFT)
    };
    let y_pos = |y: f64| -> f64 { BOTTOM - y / y_top * (BOTTOM - TOP) };

    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(s, "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>");
    let _ = writeln!(
        s,
        "<g fill=\"none\" stroke=\"#222222\" stroke-width=\"1\">\
         <line x1=\"{LEFT}\" y1=\"{BOTTOM}\" x2=\"{RIGHT}\" y2=\"{BOTTOM}\"/>\
         <line x1=\"{LEFT}\" y1=\"{TOP}\" x2=\"{LEFT}\" y2=\"{BOTTOM}\"/></g>"
    );

    // X ticks: decades under log scale, nice linear steps otherwise.
    // Multiples of the step (not running sums) keep the labels exact.
    let mut xticks: Vec<f64> = Vec::new();
    if logx {
        let mut p = 0i32;
        while 10f64.powi(p) <= x_max * 1.000001 {
            xticks.push(10f64.powi(p));
            p += 1;
        }
    } else {
        let step = nice_step(x_max);
        let mut i = 0;
        while i as f64 * step <= x_max * 1.000001 {
            xticks.push(i as f64 * step);
            i += 1;
        }
    }
    for &t in &xticks {
        let x = x_pos(t);
        let _ = writeln!(
            s,
            "<line x1=\"{x:.2}\" y1=\"{BOTTOM}\" x2=\"{x:.2}\" y2=\"{}\" stroke=\"#222222\"/>",
            BOTTOM + 5.0
        );
        let _ = writeln!(
            s,
            "<text x=\"{x:.2}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">{t}</text>",
            BOTTOM + 20.0
        );
    }
    let ystep = nice_step(y_top);
    let mut i = 0;
    while i as f64 * ystep <= y_top * 1.000001 {
        let v = i as f64 * ystep;
        let y = y_pos(v);
        let _ = writeln!(
            s,
            "<line x1=\"{}\" y1=\"{y:.2}\" x2=\"{LEFT}\" y2=\"{y:.2}\" stroke=\"#222222\"/>",
            LEFT - 5.0
        );
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{:.2}\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">{v}</text>",
            LEFT - 9.0,
            y + 4.0
        );
        i += 1;
    }

    let _ = writeln!(
        s,
        "<text x=\"{:.2}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">round</text>",
        (LEFT + RIGHT) / 2.0,
        HEIGHT - 12.0
    );
    let _ = writeln!(
        s,
        "<text transform=\"rotate(-90)\" x=\"{:.2}\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">cumulative regret</text>",
        -(TOP + BOTTOM) / 2.0
    );

    for (i, serie) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut pts = String::new();
        for &(x, y) in &serie.points {
            let _ = write!(pts, "{:.2},{:.2} ", x_pos(x), y_pos(y));
        }
        let _ = writeln!(
            s,
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>",
            pts.trim_end()
        );
    }

    for (i, serie) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let y = TOP + 16.0 + i as f64 * 18.0;
        let _ = writeln!(
            s,
            "<line x1=\"{}\" y1=\"{y:.2}\" x2=\"{}\" y2=\"{y:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>",
            LEFT + 14.0,
            LEFT + 40.0
        );
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\">{}</text>",
            LEFT + 46.0,
            y + 4.0,
            escape_xml(&serie.label)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn escape_xml(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
