//! SVG line chart of `w_b / w_a` against `m`, one polyline per `n`.

use std::fmt::Write as _;

use super::WorkloadReport;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 50.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

/// Self-contained SVG document for initial cardinality `k`.
pub fn workload_svg(report: &WorkloadReport, k: usize) -> Vec<u8> {
    let curves: Vec<(usize, Vec<(usize, f64)>)> = report
        .n_values()
        .into_iter()
        .map(|n| (n, report.ratio_curve(n, k)))
        .filter(|(_, c)| !c.is_empty())
        .collect();
    let max_m = curves.iter().flat_map(|(_, c)| c.iter().map(|p| p.0)).max().unwrap_or(1).max(1) as f64;
    let max_r = curves
        .iter()
        .flat_map(|(_, c)| c.iter().map(|p| p.1))
        .fold(1.0f64, f64::max);
    let x = |m: usize| MARGIN + (m as f64 / max_m) * (WIDTH - 2.0 * MARGIN);
    let y = |r: f64| HEIGHT - MARGIN - (r / max_r) * (HEIGHT - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (x0, y0, x1, y1) = (MARGIN, HEIGHT - MARGIN, WIDTH - MARGIN, MARGIN);
    let _ = writeln!(s, r#"<path d="M{x0} {y1} L{x0} {y0} L{x1} {y0}" stroke="black" fill="none"/>"#);
    let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">m</text>"#, WIDTH / 2.0, HEIGHT - 12.0);
    let _ = writeln!(
        s,
        r#"<text x="14" y="{}" text-anchor="middle" transform="rotate(-90 14 {})">w_b / w_a (k={k})</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );
    let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#, x1, y0 + 16.0, max_m);
    let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="end">{:.1}</text>"#, x0 - 4.0, y1 + 4.0, max_r);
    for (i, (n, curve)) in curves.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let points: Vec<String> = curve.iter().map(|&(m, r)| format!("{:.2},{:.2}", x(m), y(r))).collect();
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
            points.join(" ")
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" fill="{color}">n={n}</text>"#,
            x1 - 60.0,
            y1 + 16.0 * (i as f64 + 1.0)
        );
    }
    s.push_str("</svg>\n");
    s.into_bytes()
}
