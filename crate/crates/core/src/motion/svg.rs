use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt::Write;

use super::{MotionError, ParametricMotion, Provenance};
use crate::algebra::{to_f64, Rational};
use crate::graph::Vertex;
use crate::nac::{Color, NacColoring};

pub const RED: &str = "#d62728";
pub const BLUE: &str = "#1f77b4";
pub const NEUTRAL: &str = "#7f7f7f";
const VERTEX_FILL: &str = "#ffffff";
const VERTEX_STROKE: &str = "#333333";

const CANVAS: f64 = 600.0;
const MARGIN: f64 = 40.0;

#[derive(Clone, Debug)]
pub struct SvgOptions {
    /// Colour edges by this coloring; neutral grey otherwise.
    pub nac: Option<NacColoring>,
    pub frames: usize,
    pub duration_s: Rational,
    /// Parameter interval for `t`. Grid motions default to one full turn of
    /// the angle, everything else to `[-5, 5]`.
    pub param_range: Option<(f64, f64)>,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { nac: None, frames: 100, duration_s: Rational::from_integer(10.into()), param_range: None }
    }
}

fn frames_of(m: &ParametricMotion, opts: &SvgOptions) -> Vec<BTreeMap<Vertex, (f64, f64)>> {
    let n = opts.frames;
    let is_grid = matches!(m.provenance(), Provenance::Grid | Provenance::ZigZag);
    match (opts.param_range, is_grid) {
        (None, true) => (0..n).map(|k| m.sample_angle(TAU * k as f64 / n as f64)).collect(),
        (range, _) => {
            let (a, b) = range.unwrap_or((-5.0, 5.0));
            (0..n)
                .map(|k| {
                    let t = a + (b - a) * k as f64 / (n - 1) as f64;
                    let frame = m.sample(t);
                    if frame.values().all(|(x, y)| x.is_finite() && y.is_finite()) {
                        frame
                    } else {
                        m.sample(t + 1e-7)
                    }
                })
                .collect()
        }
    }
}

fn fmt_num(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn animate(out: &mut String, attr: &str, values: &[f64], dur: &str) {
    let vals: Vec<String> = values.iter().map(|&v| fmt_num(v)).collect();
    let _ = writeln!(
        out,
        "    <animate attributeName=\"{attr}\" values=\"{}\" dur=\"{dur}\" repeatCount=\"indefinite\"/>",
        vals.join(";")
    );
}

/// Animated SVG of the motion: one line per edge and one circle per vertex,
/// each with keyframe lists for its coordinates.
pub fn animation_svg(m: &ParametricMotion, opts: &SvgOptions) -> Result<String, MotionError> {
    if opts.frames < 2 {
        return Err(MotionError::InvalidOption(format!("at least 2 frames needed, got {}", opts.frames)));
    }
    let frames = frames_of(m, opts);
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for (x, y) in frames.iter().flat_map(|f| f.values()) {
        if x.is_finite() && y.is_finite() {
            min_x = min_x.min(*x);
            max_x = max_x.max(*x);
            min_y = min_y.min(*y);
            max_y = max_y.max(*y);
        }
    }
    if min_x > max_x {
        (min_x, max_x, min_y, max_y) = (0.0, 0.0, 0.0, 0.0);
    }
    let span = (max_x - min_x).max(max_y - min_y);
    let scale = if span > 0.0 { (CANVAS - 2.0 * MARGIN) / span } else { 1.0 };
    let sx = |x: f64| MARGIN + (x - min_x) * scale;
    let sy = |y: f64| CANVAS - MARGIN - (y - min_y) * scale;
    let track = |v: Vertex| -> (Vec<f64>, Vec<f64>) { frames.iter().map(|f| (sx(f[&v].0), sy(f[&v].1))).unzip() };
    let dur = format!("{}s", fmt_num(to_f64(&opts.duration_s)));

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{c}\" height=\"{c}\" viewBox=\"0 0 {c} {c}\">",
        c = CANVAS
    );
    out.push_str("  <g id=\"edges\" stroke-width=\"4\" stroke-linecap=\"round\">\n");
    for e in m.graph().edges() {
        let stroke = match opts.nac.as_ref().and_then(|c| c.color(e)) {
            Some(Color::Red) => RED,
            Some(Color::Blue) => BLUE,
            None => NEUTRAL,
        };
        let (x1, y1) = track(e.u());
        let (x2, y2) = track(e.v());
        let _ = writeln!(
            out,
            "   <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\">",
            fmt_num(x1[0]),
            fmt_num(y1[0]),
            fmt_num(x2[0]),
            fmt_num(y2[0])
        );
        animate(&mut out, "x1", &x1, &dur);
        animate(&mut out, "y1", &y1, &dur);
        animate(&mut out, "x2", &x2, &dur);
        animate(&mut out, "y2", &y2, &dur);
        out.push_str("   </line>\n");
    }
    out.push_str("  </g>\n");
    let _ = writeln!(out, "  <g id=\"vertices\" fill=\"{VERTEX_FILL}\" stroke=\"{VERTEX_STROKE}\" stroke-width=\"2\">");
    for &v in m.graph().vertices() {
        let (xs, ys) = track(v);
        let _ = writeln!(out, "   <circle cx=\"{}\" cy=\"{}\" r=\"9\">", fmt_num(xs[0]), fmt_num(ys[0]));
        animate(&mut out, "cx", &xs, &dur);
        animate(&mut out, "cy", &ys, &dur);
        out.push_str("   </circle>\n");
    }
    out.push_str("  </g>\n");
    let _ = writeln!(
        out,
        "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"{VERTEX_STROKE}\">"
    );
    for &v in m.graph().vertices() {
        let (xs, ys) = track(v);
        let _ = writeln!(out, "   <text x=\"{}\" y=\"{}\">{v}", fmt_num(xs[0]), fmt_num(ys[0]));
        animate(&mut out, "x", &xs, &dur);
        animate(&mut out, "y", &ys, &dur);
        out.push_str("   </text>\n");
    }
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;
    use crate::motion::grid_motion;
    use crate::nac::nac_colorings;

    #[test]
    fn prism_svg_strokes() {
        let g = catalog("ThreePrism", &[]).unwrap();
        let c = nac_colorings(&g, false).remove(0);
        let m = grid_motion(&g, &c, None).unwrap();
        let svg = animation_svg(&m, &SvgOptions { nac: Some(c), ..Default::default() }).unwrap();
        assert_eq!(svg.matches("<line ").count(), 9);
        assert_eq!(svg.matches(&format!("stroke=\"{RED}\"")).count(), 6);
        assert_eq!(svg.matches(&format!("stroke=\"{BLUE}\"")).count(), 3);
        assert!(svg.contains("repeatCount=\"indefinite\""));
    }

    #[test]
    fn two_frames() {
        let g = catalog("ThreePrism", &[]).unwrap();
        let c = nac_colorings(&g, false).remove(0);
        let m = grid_motion(&g, &c, None).unwrap();
        let svg = animation_svg(&m, &SvgOptions { frames: 2, ..Default::default() }).unwrap();
        let first = svg.lines().find(|l| l.contains("attributeName=\"x1\"")).unwrap();
        assert_eq!(first.split("values=\"").nth(1).unwrap().split('"').next().unwrap().split(';').count(), 2);
        assert!(!svg.contains(RED));
        assert!(animation_svg(&m, &SvgOptions { frames: 1, ..Default::default() }).is_err());
    }
}
