//! SVG output for standard figures, drawings, griddings and Hasse diagrams.
//!
//! Documents use only `line`, `circle`, `text` and `path` inside the root
//! `svg` element. Lattice y grows upwards; it is flipped on output.

use std::fmt::Write;

use geomgrid::geometry::{standard_figure, LocalOrders, Realization};
use geomgrid::{GridMatrix, GriddedPermutation, SignedMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    Figure,
    Drawing,
    Gridding,
    Hasse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    pub target: Target,
    /// Pixels per lattice unit.
    pub scale: u32,
    pub labels: bool,
}

impl RenderSpec {
    pub fn new(target: Target, scale: u32, labels: bool) -> Option<Self> {
        (scale > 0).then_some(RenderSpec { target, scale, labels })
    }
}

struct Canvas {
    scale: f64,
    margin: f64,
    width: f64,
    height: f64,
    body: String,
}

impl Canvas {
    fn new(spec: &RenderSpec, cols: f64, rows: f64) -> Self {
        let scale = spec.scale as f64;
        let margin = scale / 2.0;
        Canvas {
            scale,
            margin,
            width: cols * scale + 2.0 * margin,
            height: rows * scale + 2.0 * margin,
            body: String::new(),
        }
    }

    fn px(&self, x: f64) -> f64 {
        self.margin + x * self.scale
    }

    fn py(&self, y: f64) -> f64 {
        self.height - self.margin - y * self.scale
    }

    fn line(&mut self, class: &str, from: (f64, f64), to: (f64, f64), stroke: &str, width: f64) {
        let (x1, y1, x2, y2) = (self.px(from.0), self.py(from.1), self.px(to.0), self.py(to.1));
        let _ = writeln!(
            self.body,
            r#"<line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{stroke}" stroke-width="{width}"/>"#
        );
    }

    fn circle(&mut self, class: &str, at: (f64, f64), r: f64, fill: &str) {
        let (cx, cy) = (self.px(at.0), self.py(at.1));
        let _ = writeln!(self.body, r#"<circle class="{class}" cx="{cx:.2}" cy="{cy:.2}" r="{r:.2}" fill="{fill}" stroke="black"/>"#);
    }

    fn text(&mut self, at: (f64, f64), label: &str) {
        let (x, y) = (self.px(at.0), self.py(at.1));
        let size = (self.scale / 4.0).max(8.0);
        let _ = writeln!(
            self.body,
            r#"<text x="{x:.2}" y="{y:.2}" font-size="{size:.1}" text-anchor="middle" font-family="sans-serif">{label}</text>"#
        );
    }

    /// A short arrow with its tail at `from`, pointing along `dir`.
    fn arrow(&mut self, from: (f64, f64), dir: (f64, f64)) {
        let len = 0.3;
        let (x0, y0) = (self.px(from.0), self.py(from.1));
        let (x1, y1) = (self.px(from.0 + dir.0 * len), self.py(from.1 + dir.1 * len));
        // head: two short strokes back from the tip
        let (dx, dy) = (x1 - x0, y1 - y0);
        let h = 0.3;
        let (ax, ay) = (x1 - h * dx - h * dy, y1 - h * dy + h * dx);
        let (bx, by) = (x1 - h * dx + h * dy, y1 - h * dy - h * dx);
        let _ = writeln!(
            self.body,
            r#"<path class="sign" d="M {x0:.2} {y0:.2} L {x1:.2} {y1:.2} M {ax:.2} {ay:.2} L {x1:.2} {y1:.2} L {bx:.2} {by:.2}" fill="none" stroke="black"/>"#
        );
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.0} {h:.0}\">\n{}</svg>\n",
            self.body,
            w = self.width,
            h = self.height,
        )
    }
}

fn grid_lines(c: &mut Canvas, cols: usize, rows: usize) {
    for k in 0..=cols {
        c.line("grid", (k as f64, 0.0), (k as f64, rows as f64), "#999999", 1.0);
    }
    for l in 0..=rows {
        c.line("grid", (0.0, l as f64), (cols as f64, l as f64), "#999999", 1.0);
    }
}

fn draw_figure(c: &mut Canvas, m: &GridMatrix, signs: Option<&SignedMatrix>) {
    grid_lines(c, m.cols(), m.rows());
    for s in standard_figure(m) {
        let f = |p: (i64, i64)| (p.0 as f64, p.1 as f64);
        c.line("segment", f(s.from), f(s.to), "black", 2.0);
    }
    if let Some(signs) = signs {
        let (t, u) = (m.cols() as f64, m.rows() as f64);
        for k in 0..m.cols() {
            let s = signs.col_sign(k) as f64;
            c.arrow((k as f64 + 0.5 - 0.15 * s, u + 0.25), (s, 0.0));
        }
        for l in 0..m.rows() {
            let s = signs.row_sign(l) as f64;
            c.arrow((t + 0.25, l as f64 + 0.5 - 0.15 * s), (0.0, s));
        }
    }
}

/// The standard figure of `m`, with sign arrows when `m` is a partial
/// multiplication matrix.
pub fn figure(spec: &RenderSpec, m: &GridMatrix) -> String {
    let mut c = Canvas::new(spec, m.cols() as f64, m.rows() as f64);
    let signs = m.pmm_signs();
    draw_figure(&mut c, m, signs.as_ref());
    c.finish()
}

/// Points of a realization on the standard figure.
pub fn drawing(spec: &RenderSpec, signs: &SignedMatrix, r: &Realization) -> String {
    let m = signs.matrix();
    let mut c = Canvas::new(spec, m.cols() as f64, m.rows() as f64);
    draw_figure(&mut c, m, Some(signs));
    let gp = r.read_back(m);
    let radius = (spec.scale as f64 / 15.0).max(2.0);
    let mut by_x: Vec<usize> = (0..r.len()).collect();
    by_x.sort_by_key(|&i| r.exact_point(i).0);
    for (pos, &i) in by_x.iter().enumerate() {
        let at = r.point(i);
        c.circle("point", at, radius, "black");
        if spec.labels {
            c.text((at.0 + 0.12, at.1 + 0.06), &gp.perm().value(pos).to_string());
        }
    }
    c.finish()
}

/// The plot of a gridded permutation with its division lines.
pub fn gridding(spec: &RenderSpec, gp: &GriddedPermutation) -> String {
    let n = gp.len() as f64;
    let mut c = Canvas::new(spec, n, n);
    for &d in gp.col_divs() {
        c.line("division", (d as f64, 0.0), (d as f64, n), "#3366cc", 2.0);
    }
    for &d in gp.row_divs() {
        c.line("division", (0.0, d as f64), (n, d as f64), "#3366cc", 2.0);
    }
    let radius = (spec.scale as f64 / 8.0).max(2.0);
    for i in 0..gp.len() {
        let v = gp.perm().value(i);
        let at = (i as f64 + 0.5, v as f64 - 0.5);
        c.circle("point", at, radius, "black");
        if spec.labels {
            c.text((at.0 + 0.3, at.1 + 0.2), &v.to_string());
        }
    }
    c.finish()
}

/// Layered drawing of the poset generated by the local orders: each element
/// sits one layer above the highest element it covers. Returns `None` when
/// the orders are inconsistent.
pub fn hasse(spec: &RenderSpec, orders: &LocalOrders) -> Option<String> {
    let edges = orders.hasse_edges()?;
    let order = orders.consistency()?.order;
    let n = orders.len();
    let mut layer = vec![0usize; n];
    for &b in &order {
        layer[b] = edges.iter().filter(|e| e.1 == b).map(|e| layer[e.0] + 1).max().unwrap_or(0);
    }
    let depth = layer.iter().max().map_or(0, |d| d + 1);
    let mut slot = vec![0usize; n];
    let mut widths = vec![0usize; depth];
    for i in 0..n {
        slot[i] = widths[layer[i]];
        widths[layer[i]] += 1;
    }
    let width = widths.iter().copied().max().unwrap_or(0);
    let at = |i: usize| (slot[i] as f64 + 0.5 + (width - widths[layer[i]]) as f64 / 2.0, layer[i] as f64 + 0.5);
    let mut c = Canvas::new(spec, width as f64, depth as f64);
    for &(a, b) in &edges {
        c.line("cover", at(a), at(b), "black", 1.5);
    }
    let radius = (spec.scale as f64 / 5.0).max(4.0);
    for i in 0..n {
        c.circle("node", at(i), radius, "white");
        if spec.labels {
            let (x, y) = at(i);
            c.text((x, y - 0.08), &(i + 1).to_string());
        }
    }
    Some(c.finish())
}
