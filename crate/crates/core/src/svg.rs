//! Self-contained SVG line charts for sweep data.
//!
//! Hand-written path elements, no plotting dependency, fixed-precision
//! coordinates: identical input produces identical bytes. One polyline
//! per quantity plus axis labels and a legend.

use crate::sweep::SweepRow;
use crate::TScale;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN_L: f64 = 64.0;
const MARGIN_R: f64 = 150.0;
const MARGIN_T: f64 = 40.0;
const MARGIN_B: f64 = 48.0;

const SERIES: [(&str, &str); 5] = [
    ("C_l1", "#1f77b4"),
    ("D", "#ff7f0e"),
    ("Q", "#2ca02c"),
    ("F", "#d62728"),
    ("D^2+F", "#9467bd"),
];

fn series_value(row: &SweepRow, idx: usize) -> f64 {
    match idx {
        0 => row.c_l1,
        1 => row.foc,
        2 => row.gc,
        3 => row.cf,
        _ => row.tradeoff,
    }
}

/// Render the five measure curves over temperature. Only finite grid
/// rows are drawn (the exact limit rows live in the CSV); on a log axis
/// a `T = 0` row could not be placed anyway.
pub fn render_chart(rows: &[SweepRow], title: &str, scale: TScale) -> String {
    let finite: Vec<&SweepRow> = rows
        .iter()
        .filter(|r| r.t.is_finite() && (scale == TScale::Linear || r.t > 0.0))
        .collect();

    let xmap = |t: f64| match scale {
        TScale::Linear => t,
        TScale::Log => t.ln(),
    };
    let (mut x_lo, mut x_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let (y_lo, mut y_hi) = (0.0f64, f64::NEG_INFINITY);
    for r in &finite {
        x_lo = x_lo.min(xmap(r.t));
        x_hi = x_hi.max(xmap(r.t));
        for idx in 0..5 {
            y_hi = y_hi.max(series_value(r, idx));
        }
    }
    if !finite.is_empty() && x_hi <= x_lo {
        x_hi = x_lo + 1.0;
    }
    if y_hi <= y_lo {
        y_hi = 1.0;
    }
    y_hi *= 1.05;

    let plot_w = WIDTH - MARGIN_L - MARGIN_R;
    let plot_h = HEIGHT - MARGIN_T - MARGIN_B;
    let px = |t: f64| MARGIN_L + (xmap(t) - x_lo) / (x_hi - x_lo) * plot_w;
    let py = |v: f64| MARGIN_T + (1.0 - (v - y_lo) / (y_hi - y_lo)) * plot_h;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\" font-size=\"12\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
        MARGIN_L + plot_w / 2.0,
        xml_escape(title)
    ));

    // axes
    let x0 = MARGIN_L;
    let y0 = HEIGHT - MARGIN_B;
    svg.push_str(&format!(
        "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{:.2}\" y2=\"{y0:.2}\" stroke=\"black\"/>\n",
        MARGIN_L + plot_w
    ));
    svg.push_str(&format!(
        "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x0:.2}\" y2=\"{MARGIN_T:.2}\" stroke=\"black\"/>\n"
    ));
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">Hawking temperature T{}</text>\n",
        MARGIN_L + plot_w / 2.0,
        HEIGHT - 12.0,
        if scale == TScale::Log { " (log)" } else { "" }
    ));

    if !finite.is_empty() {
        // x tick labels at the ends, y ticks at 0 / mid / max
        svg.push_str(&format!(
            "<text x=\"{x0:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{}</text>\n",
            y0 + 16.0,
            trim(finite[0].t)
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{}</text>\n",
            MARGIN_L + plot_w,
            y0 + 16.0,
            trim(finite[finite.len() - 1].t)
        ));
        for frac in [0.0, 0.5, 1.0] {
            let v = y_lo + frac * (y_hi - y_lo);
            svg.push_str(&format!(
                "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">{}</text>\n",
                x0 - 6.0,
                py(v) + 4.0,
                trim(v)
            ));
        }
        for (idx, (name, color)) in SERIES.iter().enumerate() {
            let mut points = String::new();
            for r in &finite {
                points.push_str(&format!("{:.2},{:.2} ", px(r.t), py(series_value(r, idx))));
            }
            svg.push_str(&format!(
                "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
                points.trim_end()
            ));
            // legend
            let ly = MARGIN_T + 18.0 * idx as f64;
            let lx = WIDTH - MARGIN_R + 12.0;
            svg.push_str(&format!(
                "<line x1=\"{lx:.2}\" y1=\"{ly:.2}\" x2=\"{:.2}\" y2=\"{ly:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
                lx + 22.0
            ));
            svg.push_str(&format!(
                "<text x=\"{:.2}\" y=\"{:.2}\">{name}</text>\n",
                lx + 28.0,
                ly + 4.0
            ));
        }
    }
    svg.push_str("</svg>\n");
    svg
}

fn trim(v: f64) -> String {
    let s = format!("{v:.3}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::Scenario;
    use crate::sweep::{run_sweep, SweepConfig};

    #[test]
    fn chart_is_self_contained_and_deterministic() {
        let cfg = SweepConfig {
            t_points: 10,
            ..SweepConfig::new(Scenario::Abc3)
        };
        let rows = run_sweep(&cfg).unwrap();
        let svg1 = render_chart(&rows, "ABC sweep", TScale::Log);
        let svg2 = render_chart(&rows, "ABC sweep", TScale::Log);
        assert_eq!(svg1, svg2);
        assert!(svg1.starts_with("<svg"));
        assert!(svg1.ends_with("</svg>\n"));
        assert_eq!(svg1.matches("<polyline").count(), 5);
        assert!(svg1.contains("C_l1"));
        assert!(svg1.contains("Hawking temperature"));
    }

    #[test]
    fn chart_handles_empty_rows() {
        let svg = render_chart(&[], "empty", TScale::Linear);
        assert!(svg.contains("</svg>"));
    }
}
