//! Orthographic SVG drawings of polygonal knots with broken under-strands.

use std::fmt::Write as _;

use crate::diagram::{perturb_axis_until_generic, DiagramError};
use crate::geometry::{project_orthographic, Direction, Polygon, Vec3};

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    /// Width of the drawing in pixels; the height follows the aspect ratio.
    pub width_px: u32,
    /// Stroke width as a fraction of the larger side of the bounding box.
    pub stroke_fraction: f64,
    /// Perturbation seed used when `axis` is not generic.
    pub seed: u64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { width_px: 480, stroke_fraction: 0.008, seed: 0 }
    }
}

/// A crossing seen by the renderer: edge indices, the parameter of the
/// passage on the lower edge, and the point in the drawing plane.
#[derive(Debug, Clone, PartialEq)]
pub struct DrawnCrossing {
    pub upper_edge: usize,
    pub lower_edge: usize,
    pub lower_param: f64,
    pub point: [f64; 2],
    pub sign: i32,
}

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

/// Crossings of the projection found by orientation tests; signs come from
/// the 3D triple product with the viewing axis.
pub fn drawn_crossings(p: &Polygon, axis: Direction) -> Vec<DrawnCrossing> {
    let n = p.len();
    let proj = project_orthographic(p, axis);
    let (pts, depth) = (&proj.points, &proj.depths);
    let w = axis.unit();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if j == i + 1 || (i == 0 && j == n - 1) {
                continue;
            }
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            let (c, d) = (pts[j], pts[(j + 1) % n]);
            let (o1, o2) = (orient(a, b, c), orient(a, b, d));
            let (o3, o4) = (orient(c, d, a), orient(c, d, b));
            if o1 * o2 >= 0.0 || o3 * o4 >= 0.0 {
                continue;
            }
            let s = o3 / (o3 - o4);
            let t = o1 / (o1 - o2);
            let hi = depth[i] + s * (depth[(i + 1) % n] - depth[i]);
            let hj = depth[j] + t * (depth[(j + 1) % n] - depth[j]);
            let point = [a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])];
            let (ei, ej): (Vec3, Vec3) = (p.edge(i), p.edge(j));
            let (upper_edge, lower_edge, lower_param, eu, el) =
                if hi > hj { (i, j, t, ei, ej) } else { (j, i, s, ej, ei) };
            let sign = if eu.cross(el).dot(w) > 0.0 { 1 } else { -1 };
            out.push(DrawnCrossing { upper_edge, lower_edge, lower_param, point, sign });
        }
    }
    out
}

/// Sum of crossing signs of the projection along `axis`.
pub fn writhe(p: &Polygon, axis: Direction) -> i32 {
    drawn_crossings(p, axis).iter().map(|c| c.sign).sum()
}

fn fmt_point(s: &mut String, cmd: char, q: [f64; 2]) {
    let _ = write!(s, "{cmd}{:.4} {:.4} ", q[0], q[1]);
}

/// SVG drawing of the projection along `axis` (perturbed to a generic
/// direction if needed). Each under-passage is a gap of three stroke widths,
/// so the drawing has one `<path>` per crossing, or a single closed path
/// when there are none.
pub fn render_svg(p: &Polygon, axis: Direction, opts: &RenderOptions) -> Result<String, DiagramError> {
    let axis = perturb_axis_until_generic(p, axis, opts.seed)?;
    let proj = project_orthographic(p, axis);
    // SVG's y axis points down
    let pts: Vec<[f64; 2]> = proj.points.iter().map(|q| [q[0], -q[1]]).collect();
    let n = pts.len();

    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for q in &pts {
        for k in 0..2 {
            lo[k] = lo[k].min(q[k]);
            hi[k] = hi[k].max(q[k]);
        }
    }
    let extent = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(f64::MIN_POSITIVE);
    let margin = 0.05 * extent;
    let (vx, vy) = (lo[0] - margin, lo[1] - margin);
    let (vw, vh) = (hi[0] - lo[0] + 2.0 * margin, hi[1] - lo[1] + 2.0 * margin);
    let stroke = opts.stroke_fraction * extent;
    let half_gap = 1.5 * stroke;
    let height_px = (opts.width_px as f64 * vh / vw).round() as u32;

    let at = |e: usize, t: f64| {
        let (a, b) = (pts[e], pts[(e + 1) % n]);
        [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]
    };

    let mut gaps: Vec<(usize, f64, f64)> = drawn_crossings(p, axis)
        .iter()
        .map(|c| {
            let e = c.lower_edge;
            let (a, b) = (pts[e], pts[(e + 1) % n]);
            let len = (b[0] - a[0]).hypot(b[1] - a[1]);
            let dt = half_gap / len;
            (e, (c.lower_param - dt).max(0.0), (c.lower_param + dt).min(1.0))
        })
        .collect();
    gaps.sort_by(|x, y| (x.0, x.1).partial_cmp(&(y.0, y.1)).expect("finite parameters"));

    let mut paths = Vec::new();
    if gaps.is_empty() {
        let mut d = String::new();
        for (k, &q) in pts.iter().enumerate() {
            fmt_point(&mut d, if k == 0 { 'M' } else { 'L' }, q);
        }
        d.push('Z');
        paths.push(d);
    } else {
        for g in 0..gaps.len() {
            let (e0, _, t0) = gaps[g];
            let (e1, t1, _) = gaps[(g + 1) % gaps.len()];
            let mut d = String::new();
            fmt_point(&mut d, 'M', at(e0, t0));
            let mut steps = (e1 + n - e0) % n;
            if steps == 0 && g + 1 == gaps.len() {
                steps = n;
            }
            for k in 1..=steps {
                fmt_point(&mut d, 'L', pts[(e0 + k) % n]);
            }
            fmt_point(&mut d, 'L', at(e1, t1));
            paths.push(d.trim_end().to_string());
        }
    }

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{:.4} {:.4} {:.4} {:.4}">"#,
        opts.width_px, height_px, vx, vy, vw, vh
    );
    let _ = writeln!(
        svg,
        r#"<g fill="none" stroke="black" stroke-width="{stroke:.4}" stroke-linecap="round" stroke-linejoin="round">"#
    );
    for d in paths {
        let _ = writeln!(svg, r#"<path d="{}"/>"#, d.trim_end());
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}
