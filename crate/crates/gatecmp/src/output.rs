//! Deterministic file output: fixed-format CSV (9 significant digits, '\n'
//! endings, atomic rename-into-place) and a minimal self-contained SVG line
//! plot as an optional companion to each CSV.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::GateError;

/// Canonical number format for CSV cells: 9 significant digits, scientific.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.8e}")
}

/// Literal cell used for rows where evaluation failed.
pub const ERR_DEGENERATE: &str = "ERR:DegenerateTuning";

#[derive(Debug, Clone, Default)]
pub struct Csv {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Csv {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Csv {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        let row: Vec<String> = row.into_iter().map(Into::into).collect();
        assert_eq!(row.len(), self.header.len(), "ragged CSV row");
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Write via a temp file in the same directory followed by a rename, so a
/// crash never leaves a half-written artifact.
pub fn write_atomic(path: &Path, content: &str) -> Result<(), GateError> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    fs::create_dir_all(dir)?;
    let mut tmp: PathBuf = path.to_path_buf();
    let file_name = path
        .file_name()
        .ok_or_else(|| GateError::Io(format!("not a file path: {}", path.display())))?;
    tmp.set_file_name(format!(".{}.tmp", file_name.to_string_lossy()));
    fs::write(&tmp, content)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// One named curve for the SVG renderer. Points with non-finite y are
/// skipped (they correspond to error rows in the CSV).
pub struct Series<'a> {
    pub label: &'a str,
    pub x: &'a [f64],
    pub y: &'a [f64],
}

/// Minimal standalone SVG line plot. Plots are a best-effort companion; the
/// CSV is the artifact of record.
pub fn render_svg(title: &str, log_x: bool, series: &[Series]) -> String {
    const W: f64 = 640.0;
    const H: f64 = 480.0;
    const M: f64 = 50.0;
    let colors = ["#c0392b", "#2471a3", "#229954", "#884ea0", "#b7950b"];

    let tx = |x: f64| if log_x { x.log10() } else { x };
    let mut xmin = f64::INFINITY;
    let mut xmax = f64::NEG_INFINITY;
    let mut ymin = f64::INFINITY;
    let mut ymax = f64::NEG_INFINITY;
    for s in series {
        for (&x, &y) in s.x.iter().zip(s.y) {
            if !y.is_finite() || !tx(x).is_finite() {
                continue;
            }
            xmin = xmin.min(tx(x));
            xmax = xmax.max(tx(x));
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
    }
    if !(xmin.is_finite() && ymin.is_finite()) {
        xmin = 0.0;
        xmax = 1.0;
        ymin = 0.0;
        ymax = 1.0;
    }
    if xmax - xmin < 1e-300 {
        xmax = xmin + 1.0;
    }
    if ymax - ymin < 1e-300 {
        ymax = ymin + 1.0;
    }

    let px = |x: f64| M + (tx(x) - xmin) / (xmax - xmin) * (W - 2.0 * M);
    let py = |y: f64| H - M - (y - ymin) / (ymax - ymin) * (H - 2.0 * M);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" \
         viewBox=\"0 0 {W} {H}\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>\n\
         <text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"15\">{title}</text>\n",
        W / 2.0
    ));
    svg.push_str(&format!(
        "<rect x=\"{M}\" y=\"{M}\" width=\"{}\" height=\"{}\" fill=\"none\" \
         stroke=\"#555\"/>\n",
        W - 2.0 * M,
        H - 2.0 * M
    ));
    for (i, s) in series.iter().enumerate() {
        let color = colors[i % colors.len()];
        let mut d = String::new();
        let mut pen_down = false;
        for (&x, &y) in s.x.iter().zip(s.y) {
            if !y.is_finite() || !tx(x).is_finite() {
                pen_down = false;
                continue;
            }
            d.push_str(&format!(
                "{}{:.2} {:.2} ",
                if pen_down { "L" } else { "M" },
                px(x),
                py(y)
            ));
            pen_down = true;
        }
        svg.push_str(&format!(
            "<path d=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n",
            d.trim_end()
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" \
             fill=\"{color}\">{}</text>\n",
            W - M - 170.0,
            M + 18.0 * (i as f64 + 1.0),
            s.label
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format_is_nine_significant_digits() {
        assert_eq!(fmt_num(0.569), "5.69000000e-1");
        assert_eq!(fmt_num(725.0), "7.25000000e2");
        assert_eq!(fmt_num(-1.5e-4), "-1.50000000e-4");
        assert_eq!(fmt_num(0.0), "0.00000000e0");
    }

    #[test]
    fn csv_layout() {
        let mut c = Csv::new(["a", "b"]);
        c.push_row([fmt_num(1.0), ERR_DEGENERATE.to_string()]);
        assert_eq!(c.render(), "a,b\n1.00000000e0,ERR:DegenerateTuning\n");
    }

    #[test]
    fn atomic_write_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.csv");
        write_atomic(&path, "hello\n").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "hello\n");
        // No stray temp files left behind.
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn svg_renders_all_series() {
        let x = [1.0, 2.0, 3.0];
        let y1 = [0.1, f64::NAN, 0.3];
        let y2 = [0.2, 0.25, 0.3];
        let svg = render_svg(
            "demo",
            false,
            &[
                Series {
                    label: "one",
                    x: &x,
                    y: &y1,
                },
                Series {
                    label: "two",
                    x: &x,
                    y: &y2,
                },
            ],
        );
        assert!(svg.contains("<svg"));
        assert_eq!(svg.matches("<path").count(), 2);
        assert!(svg.contains(">one<") && svg.contains(">two<"));
    }
}
