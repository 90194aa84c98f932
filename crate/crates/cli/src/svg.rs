//! Scale drawn on a regular `c`-gon: vertex 0 at the top, clockwise.

use std::f64::consts::PI;
use std::fmt::Write;

use genscale::Scale;

pub const CANVAS: f64 = 512.0;
const CENTER: f64 = CANVAS / 2.0;
const RADIUS: f64 = 200.0;
const LABEL_RADIUS: f64 = 228.0;

fn vertex(k: u32, c: u32, radius: f64) -> (f64, f64) {
    let theta = 2.0 * PI * f64::from(k) / f64::from(c);
    (CENTER + radius * theta.sin(), CENTER - radius * theta.cos())
}

/// Renders the scale; when `path` is given, draws chords along it in order.
pub fn render(s: &Scale, path: Option<&[u32]>) -> String {
    let c = s.modulus();
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{CANVAS}\" height=\"{CANVAS}\" viewBox=\"0 0 {CANVAS} {CANVAS}\">"
    );
    let _ = writeln!(out, "  <title>{s}</title>");
    let _ = writeln!(
        out,
        "  <circle cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"{RADIUS}\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>"
    );

    if let Some(path) = path.filter(|p| p.len() > 1) {
        let points: Vec<String> = path
            .iter()
            .map(|&k| {
                let (x, y) = vertex(k, c, RADIUS);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(
            out,
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>",
            points.join(" ")
        );
    }

    for k in 0..c {
        let (x, y) = vertex(k, c, RADIUS);
        let (fill, r) = if s.contains(k) { ("#000000", 8) } else { ("#ffffff", 5) };
        let _ = writeln!(
            out,
            "  <circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"{r}\" fill=\"{fill}\" stroke=\"#000000\" stroke-width=\"1\"/>"
        );
        let (lx, ly) = vertex(k, c, LABEL_RADIUS);
        let _ = writeln!(
            out,
            "  <text x=\"{lx:.3}\" y=\"{ly:.3}\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">{k}</text>"
        );
    }
    out.push_str("</svg>\n");
    out
}
