//! SVG pictures of the standard apartment for `n = 3`.
//!
//! A vertex `[m_1, m_2, m_3]` is normalized to `[0, a, b]` with
//! `a = m_2 − m_1`, `b = m_3 − m_1`. In the plane, `b` steps one unit to the
//! right and `a` steps one unit up and to the left, so the two basis vectors
//! meet at 120° and all edges of the triangular tessellation have length 1.
//! The polytope of an order is `{x : x_i − x_j ≤ μ_ij}`; its corners are
//! lattice points and its distinguished vertices are among them.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exponent::ExponentMatrix;

/// SVG pixels per lattice edge.
pub const EDGE_PX: f64 = 40.0;

/// Fill colors cycled through when none is given.
pub const PALETTE: [&str; 4] = ["#8080ff", "#80ff80", "#ffff80", "#df80bf"];

const MARGIN_PX: f64 = 40.0;
const SQRT3_2: f64 = 0.866_025_403_784_438_6;

/// Homothety class `[0, a, b]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ApartmentPoint {
    pub a: i64,
    pub b: i64,
}

impl ApartmentPoint {
    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn from_lattice(m: &[i64]) -> Self {
        Self { a: m[1] - m[0], b: m[2] - m[0] }
    }

    /// Plane coordinates in edge units, `y` pointing up.
    pub fn plane(&self) -> (f64, f64) {
        (self.b as f64 - 0.5 * self.a as f64, SQRT3_2 * self.a as f64)
    }

    /// Integer coordinates `(2b − a, a)`, an orientation-preserving rescaling
    /// of [`plane`](Self::plane).
    fn skew(&self) -> (i64, i64) {
        (2 * self.b - self.a, self.a)
    }
}

impl std::fmt::Display for ApartmentPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[0,{},{}]", self.a, self.b)
    }
}

/// Squared plane length of the segment `p → q`; an integer since
/// `|Δ|² = Δa² − Δa·Δb + Δb²`.
pub fn squared_length(p: ApartmentPoint, q: ApartmentPoint) -> i64 {
    let (da, db) = (q.a - p.a, q.b - p.b);
    da * da - da * db + db * db
}

fn require_three(e: &ExponentMatrix) -> Result<()> {
    if e.n() != 3 {
        return Err(Error::UnsupportedDimension(e.n()));
    }
    Ok(())
}

/// The distinguished vertices `[P_j]` (columns of `μ`), normalized, with
/// duplicates removed and first occurrences kept in column order.
pub fn hull_vertices(e: &ExponentMatrix) -> Result<Vec<ApartmentPoint>> {
    require_three(e)?;
    let mut out: Vec<ApartmentPoint> = Vec::with_capacity(3);
    for j in 0..3 {
        let p = ApartmentPoint::from_lattice(&e.column(j));
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Corners of the polytope `{x_i − x_j ≤ μ_ij}` in counter-clockwise order,
/// starting from the lowest, then leftmost, corner.
pub fn polytope_vertices(e: &ExponentMatrix) -> Result<Vec<ApartmentPoint>> {
    require_three(e)?;
    let mu = |i: usize, j: usize| e.get(i, j);
    // with x_1 = 0, x_2 = a, x_3 = b
    let (a_lo, a_hi) = (-mu(0, 1), mu(1, 0));
    let (b_lo, b_hi) = (-mu(0, 2), mu(2, 0));
    let mut inside = Vec::new();
    for a in a_lo..=a_hi {
        for b in b_lo..=b_hi {
            if a - b <= mu(1, 2) && b - a <= mu(2, 1) {
                inside.push(ApartmentPoint::new(a, b));
            }
        }
    }
    Ok(convex_hull(inside))
}

fn cross(o: (i64, i64), p: (i64, i64), q: (i64, i64)) -> i64 {
    (p.0 - o.0) * (q.1 - o.1) - (p.1 - o.1) * (q.0 - o.0)
}

/// Monotone chain hull without collinear points.
fn convex_hull(mut pts: Vec<ApartmentPoint>) -> Vec<ApartmentPoint> {
    pts.sort_by_key(|p| {
        let (x, y) = p.skew();
        (y, x)
    });
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let build = |iter: &mut dyn Iterator<Item = &ApartmentPoint>| {
        let mut chain: Vec<ApartmentPoint> = Vec::new();
        for &p in iter {
            while chain.len() >= 2
                && cross(chain[chain.len() - 2].skew(), chain[chain.len() - 1].skew(), p.skew()) <= 0
            {
                chain.pop();
            }
            chain.push(p);
        }
        chain.pop();
        chain
    };
    let mut lower = build(&mut pts.iter());
    let upper = build(&mut pts.iter().rev());
    lower.extend(upper);
    lower
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub a_min: i64,
    pub a_max: i64,
    pub b_min: i64,
    pub b_max: i64,
}

impl Window {
    pub fn contains(&self, p: ApartmentPoint) -> bool {
        (self.a_min..=self.a_max).contains(&p.a) && (self.b_min..=self.b_max).contains(&p.b)
    }
}

#[derive(Debug, Clone)]
pub struct Polytope {
    pub order: ExponentMatrix,
    pub fill: String,
}

#[derive(Debug, Clone)]
pub struct ApartmentScene {
    window: Window,
    polytopes: Vec<Polytope>,
    labels: bool,
}

impl ApartmentScene {
    /// Every polytope must be `3 × 3` and its corners must lie in `window`.
    pub fn new(window: Window, polytopes: Vec<Polytope>, labels: bool) -> Result<Self> {
        for p in &polytopes {
            for v in polytope_vertices(&p.order)? {
                if !window.contains(v) {
                    return Err(Error::OutsideWindow(v.to_string()));
                }
            }
        }
        Ok(Self { window, polytopes, labels })
    }

    /// Scene whose window covers all polytopes plus `margin` lattice steps,
    /// coloring them from [`PALETTE`] in order.
    pub fn fit(orders: &[ExponentMatrix], margin: i64, labels: bool) -> Result<Self> {
        let mut corners = vec![ApartmentPoint::new(0, 0)];
        for e in orders {
            corners.extend(polytope_vertices(e)?);
        }
        let window = Window {
            a_min: corners.iter().map(|p| p.a).min().unwrap() - margin,
            a_max: corners.iter().map(|p| p.a).max().unwrap() + margin,
            b_min: corners.iter().map(|p| p.b).min().unwrap() - margin,
            b_max: corners.iter().map(|p| p.b).max().unwrap() + margin,
        };
        let polytopes = orders
            .iter()
            .enumerate()
            .map(|(k, e)| Polytope { order: e.clone(), fill: PALETTE[k % PALETTE.len()].to_string() })
            .collect();
        Self::new(window, polytopes, labels)
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn polytopes(&self) -> &[Polytope] {
        &self.polytopes
    }

    /// SVG pixel position of `p`, as used by [`render_svg`].
    pub fn pixel(&self, p: ApartmentPoint) -> (f64, f64) {
        Canvas::new(&self.window).px(p)
    }
}

/// Maps lattice points to SVG pixel coordinates for a given window.
struct Canvas {
    x0: f64,
    y0: f64,
    width: f64,
    height: f64,
}

impl Canvas {
    fn new(w: &Window) -> Self {
        let corners = [
            ApartmentPoint::new(w.a_min, w.b_min),
            ApartmentPoint::new(w.a_min, w.b_max),
            ApartmentPoint::new(w.a_max, w.b_min),
            ApartmentPoint::new(w.a_max, w.b_max),
        ];
        let xs = corners.map(|p| p.plane().0 * EDGE_PX);
        let ys = corners.map(|p| -p.plane().1 * EDGE_PX);
        let min = |v: [f64; 4]| v.into_iter().fold(f64::INFINITY, f64::min);
        let max = |v: [f64; 4]| v.into_iter().fold(f64::NEG_INFINITY, f64::max);
        Self {
            x0: MARGIN_PX - min(xs),
            y0: MARGIN_PX - min(ys),
            width: max(xs) - min(xs) + 2.0 * MARGIN_PX,
            height: max(ys) - min(ys) + 2.0 * MARGIN_PX,
        }
    }

    fn px(&self, p: ApartmentPoint) -> (f64, f64) {
        let (x, y) = p.plane();
        (self.x0 + x * EDGE_PX, self.y0 - y * EDGE_PX)
    }
}

fn fmt_pt((x, y): (f64, f64)) -> String {
    format!("{x:.2},{y:.2}")
}

/// Renders the scene as a standalone SVG 1.1 document. Output depends only
/// on the scene.
pub fn render_svg(scene: &ApartmentScene) -> String {
    let w = scene.window;
    let canvas = Canvas::new(&w);
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{:.2}" height="{:.2}" viewBox="0 0 {:.2} {:.2}">"#,
        canvas.width, canvas.height, canvas.width, canvas.height
    );
    let _ = writeln!(svg, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);

    // hulls first so the lattice stays visible on top
    let _ = writeln!(svg, r#"<g id="polytopes">"#);
    for (k, p) in scene.polytopes.iter().enumerate() {
        let corners = polytope_vertices(&p.order).expect("checked on construction");
        let pts: Vec<String> = corners.iter().map(|&c| fmt_pt(canvas.px(c))).collect();
        match corners.len() {
            1 => {
                let (x, y) = canvas.px(corners[0]);
                let _ = writeln!(
                    svg,
                    r#"<circle class="polytope" data-index="{k}" cx="{x:.2}" cy="{y:.2}" r="6" fill="{}" stroke="black"/>"#,
                    p.fill
                );
            }
            2 => {
                let _ = writeln!(
                    svg,
                    r#"<polyline class="polytope" data-index="{k}" points="{}" fill="none" stroke="{}" stroke-width="5"/>"#,
                    pts.join(" "),
                    p.fill
                );
            }
            _ => {
                let _ = writeln!(
                    svg,
                    r#"<polygon class="polytope" data-index="{k}" points="{}" fill="{}" stroke="black" stroke-width="1.5"/>"#,
                    pts.join(" "),
                    p.fill
                );
            }
        }
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r##"<g id="lattice" stroke="#404040" stroke-width="0.75">"##);
    let mut line = |p: ApartmentPoint, q: ApartmentPoint| {
        let ((x1, y1), (x2, y2)) = (canvas.px(p), canvas.px(q));
        let _ = writeln!(svg, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#);
    };
    for a in w.a_min..=w.a_max {
        line(ApartmentPoint::new(a, w.b_min), ApartmentPoint::new(a, w.b_max));
    }
    for b in w.b_min..=w.b_max {
        line(ApartmentPoint::new(w.a_min, b), ApartmentPoint::new(w.a_max, b));
    }
    // a − b = c
    for c in (w.a_min - w.b_max)..=(w.a_max - w.b_min) {
        let lo = w.a_min.max(w.b_min + c);
        let hi = w.a_max.min(w.b_max + c);
        if lo < hi {
            line(ApartmentPoint::new(lo, lo - c), ApartmentPoint::new(hi, hi - c));
        }
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r#"<g id="distinguished">"#);
    let mut marked = BTreeSet::new();
    for p in &scene.polytopes {
        for v in hull_vertices(&p.order).expect("checked on construction") {
            if marked.insert(v) {
                let (x, y) = canvas.px(v);
                let _ = writeln!(svg, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#);
            }
        }
    }
    let _ = writeln!(svg, "</g>");

    if scene.labels {
        let _ = writeln!(svg, r#"<g id="labels" font-family="serif" font-size="8" fill="black">"#);
        for a in w.a_min..=w.a_max {
            for b in w.b_min..=w.b_max {
                let v = ApartmentPoint::new(a, b);
                let (x, y) = canvas.px(v);
                let _ = writeln!(svg, r#"<text x="{:.2}" y="{:.2}">{v}</text>"#, x + 3.0, y - 3.0);
            }
        }
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(svg, "</svg>");
    svg
}
