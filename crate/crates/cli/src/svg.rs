//! A small deterministic SVG writer for plane figures.
//!
//! Regions are drawn cell by cell: the panel rectangle is clipped by one
//! nested clip path per half-space (a disk, a disk's complement or a
//! half-plane polygon). All coordinates are written with six decimals, and
//! the math frame has `y` pointing up.

use std::fmt::Write;

use cfdyn::arith::FloatComplex;
use cfdyn::regions::{region_sample, Circline, HalfSpace, Rect, Region, Shape};
use num_traits::ToPrimitive;

/// Formats a coordinate with six decimals, never as `-0.000000`.
pub fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

#[derive(Clone, Debug)]
pub struct Style {
    pub fill: String,
    pub stroke: Option<String>,
    pub opacity: Option<f64>,
    pub dashed: bool,
    /// Stroke colour for region cell edges, drawn inside the cell.
    pub edge: Option<String>,
}

impl Style {
    pub fn fill(color: &str) -> Self {
        Style {
            fill: color.to_string(),
            stroke: None,
            opacity: None,
            dashed: false,
            edge: None,
        }
    }

    pub fn stroke(color: &str) -> Self {
        Style {
            fill: "none".into(),
            stroke: Some(color.to_string()),
            opacity: None,
            dashed: false,
            edge: None,
        }
    }

    pub fn with_opacity(mut self, a: f64) -> Self {
        self.opacity = Some(a);
        self
    }

    pub fn edged(mut self, color: &str) -> Self {
        self.edge = Some(color.to_string());
        self
    }

    pub fn dashed(mut self) -> Self {
        self.dashed = true;
        self
    }

    fn attrs(&self) -> String {
        let mut s = format!(" fill=\"{}\"", self.fill);
        match &self.stroke {
            Some(c) => {
                let _ = write!(s, " stroke=\"{c}\" stroke-width=\"1.000000\"");
                if self.dashed {
                    s.push_str(" stroke-dasharray=\"4 3\"");
                }
            }
            None => s.push_str(" stroke=\"none\""),
        }
        if let Some(a) = self.opacity {
            let _ = write!(s, " fill-opacity=\"{}\"", num(a));
        }
        s
    }
}

#[derive(Clone, Debug)]
pub enum Layer {
    /// A closed region; each cell meeting the viewport becomes one element
    /// of class `cell` (or `edge` when unfilled), tagged with `tag` if given.
    Region {
        region: Region,
        style: Style,
        tag: Option<String>,
    },
    Circline {
        curve: Circline,
        style: Style,
    },
    Point {
        z: FloatComplex,
        radius: f64,
        style: Style,
    },
    Label {
        z: FloatComplex,
        text: String,
        size: f64,
    },
}

/// A square panel showing `viewport` in a `size`-pixel box at `(x, y)`.
#[derive(Clone, Debug)]
pub struct Panel {
    pub x: f64,
    pub y: f64,
    pub size: f64,
    pub viewport: Rect,
    pub title: Option<String>,
    pub layers: Vec<Layer>,
}

impl Panel {
    pub fn new(x: f64, y: f64, size: f64, viewport: Rect) -> Self {
        Panel {
            x,
            y,
            size,
            viewport,
            title: None,
            layers: Vec::new(),
        }
    }

    pub fn titled(mut self, title: impl Into<String>) -> Self {
        self.title = Some(title.into());
        self
    }

    pub fn region(&mut self, region: Region, style: Style, tag: Option<String>) {
        self.layers.push(Layer::Region { region, style, tag });
    }

    pub fn outline(&mut self, region: &Region, style: Style) {
        for curve in region.boundaries() {
            self.layers.push(Layer::Circline {
                curve,
                style: style.clone(),
            });
        }
    }

    pub fn label(&mut self, x: f64, y: f64, text: impl Into<String>, size: f64) {
        self.layers.push(Layer::Label {
            z: FloatComplex::new(x, y),
            text: text.into(),
            size,
        });
    }

    fn scale(&self) -> f64 {
        self.size / self.viewport.width()
    }

    fn px(&self, x: f64, y: f64) -> (f64, f64) {
        let s = self.scale();
        (
            self.x + (x - self.viewport.x_min) * s,
            self.y + (self.viewport.y_max - y) * s,
        )
    }

    /// The viewport corners, counter-clockwise, widened by `pad` units.
    fn frame(&self, pad: f64) -> Vec<(f64, f64)> {
        let v = &self.viewport;
        vec![
            (v.x_min - pad, v.y_min - pad),
            (v.x_max + pad, v.y_min - pad),
            (v.x_max + pad, v.y_max + pad),
            (v.x_min - pad, v.y_max + pad),
        ]
    }

    fn polygon(&self, pts: &[(f64, f64)]) -> String {
        let mut d = String::new();
        for (i, (x, y)) in pts.iter().enumerate() {
            let (a, b) = self.px(*x, *y);
            let _ = write!(
                d,
                "{}{} {} ",
                if i == 0 { "M" } else { "L" },
                num(a),
                num(b)
            );
        }
        d.push('Z');
        d
    }

    fn circle_path(&self, c: &FloatComplex, r: f64) -> String {
        let (cx, cy) = self.px(c.re, c.im);
        let r = r * self.scale();
        format!(
            "M{} {} A{} {} 0 1 0 {} {} A{} {} 0 1 0 {} {} Z",
            num(cx + r),
            num(cy),
            num(r),
            num(r),
            num(cx - r),
            num(cy),
            num(r),
            num(r),
            num(cx + r),
            num(cy)
        )
    }

    /// The clip element for one half-space, or `None` for the whole plane.
    /// `Err(())` means the half-space misses the viewport.
    fn clip_shape(&self, h: &HalfSpace) -> Result<Option<String>, ()> {
        let f = |q: &num_rational::BigRational| q.to_f64().unwrap_or(f64::NAN);
        match Shape::of(h) {
            Shape::Plane => Ok(None),
            Shape::Empty => Err(()),
            Shape::Disk { center, r2 } => {
                let (cx, cy) = self.px(f(&center.re), f(&center.im));
                Ok(Some(format!(
                    "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                    num(cx),
                    num(cy),
                    num(f(&r2).sqrt() * self.scale())
                )))
            }
            Shape::Exterior { center, r2 } => Ok(Some(format!(
                "<path clip-rule=\"evenodd\" d=\"{} {}\"/>",
                self.polygon(&self.frame(1.0)),
                self.circle_path(
                    &FloatComplex::new(f(&center.re), f(&center.im)),
                    f(&r2).sqrt()
                )
            ))),
            Shape::HalfPlane { b, c } => {
                // 2(bx·x + by·y) + c ≤ 0
                let (bx, by, c) = (f(&b.re), f(&b.im), f(&c));
                let g = |p: &(f64, f64)| 2.0 * (bx * p.0 + by * p.1) + c;
                let poly = clip_polygon(&self.frame(1.0), g);
                if poly.len() < 3 {
                    return Err(());
                }
                Ok(Some(format!("<path d=\"{}\"/>", self.polygon(&poly))))
            }
        }
    }
}

/// Sutherland–Hodgman clipping of a convex polygon to `{g ≤ 0}`, `g` affine.
fn clip_polygon(poly: &[(f64, f64)], g: impl Fn(&(f64, f64)) -> f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (p, q) = (poly[i], poly[(i + 1) % poly.len()]);
        let (gp, gq) = (g(&p), g(&q));
        if gp <= 0.0 {
            out.push(p);
        }
        if (gp < 0.0 && gq > 0.0) || (gp > 0.0 && gq < 0.0) {
            let t = gp / (gp - gq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

/// A figure made of panels.
#[derive(Clone, Debug)]
pub struct SvgScene {
    pub width: f64,
    pub height: f64,
    pub panels: Vec<Panel>,
}

impl SvgScene {
    pub fn new(width: f64, height: f64) -> Self {
        SvgScene {
            width,
            height,
            panels: Vec::new(),
        }
    }

    pub fn to_svg(&self) -> String {
        let mut defs = String::new();
        let mut body = String::new();
        for (pi, panel) in self.panels.iter().enumerate() {
            let frame_id = format!("p{pi}");
            let (x0, y0) = (num(panel.x), num(panel.y));
            let size = num(panel.size);
            let _ = writeln!(
                defs,
                "<clipPath id=\"{frame_id}\"><rect x=\"{x0}\" y=\"{y0}\" width=\"{size}\" height=\"{size}\"/></clipPath>"
            );
            let _ = writeln!(body, "<g class=\"panel\" clip-path=\"url(#{frame_id})\">");
            let _ = writeln!(
                body,
                "<rect x=\"{x0}\" y=\"{y0}\" width=\"{size}\" height=\"{size}\" fill=\"#ffffff\" stroke=\"none\"/>"
            );
            for (li, layer) in panel.layers.iter().enumerate() {
                render_layer(
                    panel,
                    &format!("{frame_id}l{li}"),
                    layer,
                    &mut defs,
                    &mut body,
                );
            }
            let _ = writeln!(body, "</g>");
            let _ = writeln!(
                body,
                "<rect x=\"{x0}\" y=\"{y0}\" width=\"{size}\" height=\"{size}\" fill=\"none\" stroke=\"#444444\"/>"
            );
            if let Some(t) = &panel.title {
                let _ = writeln!(
                    body,
                    "<text x=\"{}\" y=\"{}\" font-size=\"14.000000\" text-anchor=\"middle\">{}</text>",
                    num(panel.x + panel.size / 2.0),
                    num(panel.y - 6.0),
                    escape(t)
                );
            }
        }
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\" font-family=\"sans-serif\">\n<defs>\n{defs}</defs>\n{body}</svg>\n",
            w = num(self.width),
            h = num(self.height),
        )
    }
}

fn render_layer(panel: &Panel, id: &str, layer: &Layer, defs: &mut String, body: &mut String) {
    match layer {
        Layer::Region { region, style, tag } => {
            for (ci, cell) in region.cells.iter().enumerate() {
                let single = Region::from(cell.clone());
                // Only cells with interior in the viewport are drawn.
                if region_sample(&single, &panel.viewport, 1, 0, 1e-9).is_err() {
                    continue;
                }
                let mut clips = Vec::new();
                let mut visible = true;
                for (hi, h) in cell.constraints.iter().enumerate() {
                    match panel.clip_shape(h) {
                        Ok(Some(shape)) => {
                            let cid = format!("{id}c{ci}h{hi}");
                            let _ = writeln!(defs, "<clipPath id=\"{cid}\">{shape}</clipPath>");
                            clips.push(cid);
                        }
                        Ok(None) => {}
                        Err(()) => visible = false,
                    }
                }
                if !visible {
                    continue;
                }
                for cid in &clips {
                    let _ = write!(body, "<g clip-path=\"url(#{cid})\">");
                }
                let tag_attr = tag
                    .as_ref()
                    .map(|t| format!(" data-cell=\"{}\"", escape(t)))
                    .unwrap_or_default();
                let class = if style.fill == "none" { "edge" } else { "cell" };
                let _ = write!(
                    body,
                    "<rect class=\"{class}\"{tag_attr} x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"{}/>",
                    num(panel.x - 1.0),
                    num(panel.y - 1.0),
                    num(panel.size + 2.0),
                    num(panel.size + 2.0),
                    style.attrs()
                );
                if let Some(edge) = &style.edge {
                    let mut attrs =
                        format!(" fill=\"none\" stroke=\"{edge}\" stroke-width=\"2.000000\"");
                    if style.dashed {
                        attrs.push_str(" stroke-dasharray=\"4 3\"");
                    }
                    for h in &cell.constraints {
                        if let Some(e) = circline_element(panel, &h.boundary, &attrs) {
                            body.push_str(&e);
                        }
                    }
                }
                let _ = writeln!(body, "{}", "</g>".repeat(clips.len()));
            }
        }
        Layer::Circline { curve, style } => {
            if let Some(e) = circline_element(panel, curve, &style.attrs()) {
                let _ = writeln!(body, "{e}");
            }
        }
        Layer::Point { z, radius, style } => {
            let (cx, cy) = panel.px(z.re, z.im);
            let _ = writeln!(
                body,
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"{}/>",
                num(cx),
                num(cy),
                num(*radius),
                style.attrs()
            );
        }
        Layer::Label { z, text, size } => {
            let (x, y) = panel.px(z.re, z.im);
            let _ = writeln!(
                body,
                "<text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>",
                num(x),
                num(y),
                num(*size),
                escape(text)
            );
        }
    }
}

/// A circle, or a line cut to the panel frame.
fn circline_element(panel: &Panel, curve: &Circline, attrs: &str) -> Option<String> {
    if curve.is_line() {
        let (_, bx, by, c) = curve.coeffs_f64();
        let g = |p: &(f64, f64)| 2.0 * (bx * p.0 + by * p.1) + c;
        let frame = panel.frame(0.5);
        let mut pts = Vec::new();
        for i in 0..frame.len() {
            let (p, q) = (frame[i], frame[(i + 1) % frame.len()]);
            let (gp, gq) = (g(&p), g(&q));
            if (gp <= 0.0) != (gq <= 0.0) {
                let t = gp / (gp - gq);
                pts.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
            }
        }
        let [p, q] = pts.as_slice() else { return None };
        let (x1, y1) = panel.px(p.0, p.1);
        let (x2, y2) = panel.px(q.0, q.1);
        Some(format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"{attrs}/>",
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        ))
    } else {
        let c = curve.center()?.to_float();
        let (cx, cy) = panel.px(c.re, c.im);
        let r = curve.radius_sq()?.to_f64()?.max(0.0).sqrt() * panel.scale();
        Some(format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"{attrs}/>",
            num(cx),
            num(cy),
            num(r)
        ))
    }
}
