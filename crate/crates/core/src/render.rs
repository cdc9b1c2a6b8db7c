//! Deterministic SVG figures for attainment surfaces and hypervolume traces.
//!
//! # Coordinate mapping
//!
//! The plot area is the rectangle `[left, left + plot_width] × [top, top + plot_height]`
//! inside the `width × height` viewport, with margins from [`Margins`]. A data
//! value `v` on an axis with bounds `[lo, hi]` maps to
//!
//! ```text
//! t(v)  = log10(v) on log axes, v otherwise
//! px(v) = left + (t(v) − t(lo)) / (t(hi) − t(lo)) · plot_width          (x axis)
//! py(v) = top + plot_height − (t(v) − t(lo)) / (t(hi) − t(lo)) · plot_height   (y axis)
//! ```
//!
//! and the result is clamped to the plot area, so ±∞ sentinels land on the
//! frame. Unset bounds default to the finite data extent padded by 5% of
//! its span (in `t` space) on each side.
//!
//! Every drawn element carries a `class` attribute (`surface`, `band`,
//! `center`, `hv-line`, `hv-band`, `legend-entry`) so output can be inspected
//! structurally. Coordinates are written with the shortest round-trip float
//! representation; identical inputs produce identical bytes.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::attainment::SurfaceStack;
use crate::error::{Error, Result};
use crate::hypervolume::HvTraceSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LineStyle {
    #[default]
    Solid,
    Dashed,
    Dotted,
}

impl LineStyle {
    fn dasharray(self) -> Option<&'static str> {
        match self {
            LineStyle::Solid => None,
            LineStyle::Dashed => Some("6,4"),
            LineStyle::Dotted => Some("1.5,3"),
        }
    }
}

impl std::str::FromStr for LineStyle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "solid" | "-" => Ok(LineStyle::Solid),
            "dashed" | "--" => Ok(LineStyle::Dashed),
            "dotted" | ":" => Ok(LineStyle::Dotted),
            other => Err(Error::validation(format!("unknown line style '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Marker {
    #[default]
    None,
    Circle,
    Square,
}

impl std::str::FromStr for Marker {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" | "" => Ok(Marker::None),
            "circle" | "o" => Ok(Marker::Circle),
            "square" | "s" => Ok(Marker::Square),
            other => Err(Error::validation(format!("unknown marker '{other}'"))),
        }
    }
}

/// Appearance of one plotted series. Color and label are mandatory.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesStyle {
    pub color: String,
    pub label: String,
    pub line_style: LineStyle,
    pub marker: Marker,
}

impl SeriesStyle {
    pub fn new(color: impl Into<String>, label: impl Into<String>) -> Self {
        SeriesStyle {
            color: color.into(),
            label: label.into(),
            line_style: LineStyle::default(),
            marker: Marker::default(),
        }
    }

    pub fn line_style(mut self, style: LineStyle) -> Self {
        self.line_style = style;
        self
    }

    pub fn marker(mut self, marker: Marker) -> Self {
        self.marker = marker;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct AxisSpec {
    pub min: Option<f64>,
    pub max: Option<f64>,
    pub log: bool,
    pub label: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Margins {
    pub left: f64,
    pub right: f64,
    pub top: f64,
    pub bottom: f64,
}

impl Default for Margins {
    fn default() -> Self {
        Margins {
            left: 70.0,
            right: 20.0,
            top: 40.0,
            bottom: 50.0,
        }
    }
}

/// Declarative description of a figure.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    pub series: Vec<SeriesStyle>,
    pub x: AxisSpec,
    pub y: AxisSpec,
    pub title: Option<String>,
    pub width: u32,
    pub height: u32,
    pub margins: Margins,
}

impl PlotSpec {
    pub fn new(series: Vec<SeriesStyle>) -> Self {
        PlotSpec {
            series,
            x: AxisSpec::default(),
            y: AxisSpec::default(),
            title: None,
            width: 640,
            height: 480,
            margins: Margins::default(),
        }
    }

    /// One series per `(color, label)` pair; fails when the counts differ.
    pub fn from_colors_labels<C: AsRef<str>, L: AsRef<str>>(
        colors: &[C],
        labels: &[L],
    ) -> Result<Self> {
        if colors.len() != labels.len() {
            return Err(Error::validation(format!(
                "got {} colors but {} labels",
                colors.len(),
                labels.len()
            )));
        }
        Ok(PlotSpec::new(
            colors
                .iter()
                .zip(labels)
                .map(|(c, l)| SeriesStyle::new(c.as_ref(), l.as_ref()))
                .collect(),
        ))
    }

    pub fn title(mut self, title: impl Into<String>) -> Self {
        self.title = Some(title.into());
        self
    }

    pub fn size(mut self, width: u32, height: u32) -> Self {
        self.width = width;
        self.height = height;
        self
    }

    pub fn x_axis(mut self, axis: AxisSpec) -> Self {
        self.x = axis;
        self
    }

    pub fn y_axis(mut self, axis: AxisSpec) -> Self {
        self.y = axis;
        self
    }

    fn plot_box(&self) -> Result<PlotBox> {
        let m = self.margins;
        let (w, h) = (f64::from(self.width), f64::from(self.height));
        let b = PlotBox {
            left: m.left,
            top: m.top,
            right: w - m.right,
            bottom: h - m.bottom,
        };
        if b.right <= b.left || b.bottom <= b.top {
            return Err(Error::validation(format!(
                "figure size {}x{} leaves no room for the plot area",
                self.width, self.height
            )));
        }
        Ok(b)
    }

    fn check_series(&self, expected: usize, what: &str) -> Result<()> {
        if self.series.len() != expected {
            return Err(Error::validation(format!(
                "{what} needs {expected} color/label pairs, got {}",
                self.series.len()
            )));
        }
        for (i, s) in self.series.iter().enumerate() {
            if s.color.trim().is_empty() || s.label.trim().is_empty() {
                return Err(Error::validation(format!(
                    "series {i} needs a non-empty color and label"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
struct PlotBox {
    left: f64,
    top: f64,
    right: f64,
    bottom: f64,
}

/// Affine (or log-then-affine) map from one data axis to pixels, clamped to
/// the plot area.
#[derive(Debug, Clone, Copy)]
pub struct AxisMap {
    lo: f64,
    hi: f64,
    log: bool,
    px_lo: f64,
    px_hi: f64,
}

impl AxisMap {
    fn space(&self, v: f64) -> f64 {
        if self.log {
            v.log10()
        } else {
            v
        }
    }

    /// Pixel coordinate of a data value, clamped to the plot area.
    pub fn map(&self, v: f64) -> f64 {
        let t = (self.space(v) - self.lo) / (self.hi - self.lo);
        let px = self.px_lo + t * (self.px_hi - self.px_lo);
        let (a, b) = if self.px_lo < self.px_hi {
            (self.px_lo, self.px_hi)
        } else {
            (self.px_hi, self.px_lo)
        };
        if px.is_nan() {
            // only reachable for log(0) style inputs, which validation rejects
            return a;
        }
        px.clamp(a, b)
    }

    /// Data value at a pixel coordinate (no clamping).
    pub fn unmap(&self, px: f64) -> f64 {
        let t = (px - self.px_lo) / (self.px_hi - self.px_lo);
        let s = self.lo + t * (self.hi - self.lo);
        if self.log {
            10f64.powf(s)
        } else {
            s
        }
    }

    /// Axis bounds in data units.
    pub fn bounds(&self) -> (f64, f64) {
        if self.log {
            (10f64.powf(self.lo), 10f64.powf(self.hi))
        } else {
            (self.lo, self.hi)
        }
    }

    pub fn is_log(&self) -> bool {
        self.log
    }
}

/// Resolved mapping of a figure: what [`plot_layout`] computes for a spec and
/// a set of data values. Useful for recovering data coordinates from output.
#[derive(Debug, Clone, Copy)]
pub struct Layout {
    pub x: AxisMap,
    pub y: AxisMap,
}

fn resolve_axis(
    axis: &AxisSpec,
    values: impl Iterator<Item = f64>,
    px_lo: f64,
    px_hi: f64,
    name: &str,
) -> Result<AxisMap> {
    let space = |v: f64| if axis.log { v.log10() } else { v };
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in values.filter(|v| v.is_finite()) {
        if axis.log && v <= 0.0 {
            return Err(Error::validation(format!(
                "{name} axis is logarithmic but the data contains the nonpositive value {v}"
            )));
        }
        lo = lo.min(space(v));
        hi = hi.max(space(v));
    }
    if lo > hi {
        lo = 0.0;
        hi = 1.0;
    }
    let pad = 0.05 * (hi - lo);
    let (mut lo, mut hi) = if pad > 0.0 {
        (lo - pad, hi + pad)
    } else {
        (lo - 0.5, hi + 0.5)
    };
    for (bound, slot) in [(axis.min, &mut lo), (axis.max, &mut hi)] {
        if let Some(b) = bound {
            if !b.is_finite() || (axis.log && b <= 0.0) {
                return Err(Error::validation(format!(
                    "{name} axis bound {b} is not usable{}",
                    if axis.log { " on a log axis" } else { "" }
                )));
            }
            *slot = space(b);
        }
    }
    if lo >= hi {
        return Err(Error::validation(format!(
            "{name} axis bounds are empty: lower bound must be below upper bound"
        )));
    }
    Ok(AxisMap {
        lo,
        hi,
        log: axis.log,
        px_lo,
        px_hi,
    })
}

/// Resolves axis bounds for the given data points.
pub fn plot_layout(spec: &PlotSpec, points: &[[f64; 2]]) -> Result<Layout> {
    let b = spec.plot_box()?;
    Ok(Layout {
        x: resolve_axis(&spec.x, points.iter().map(|p| p[0]), b.left, b.right, "x")?,
        y: resolve_axis(&spec.y, points.iter().map(|p| p[1]), b.bottom, b.top, "y")?,
    })
}

fn num(v: f64) -> String {
    // -0 would make otherwise identical figures differ
    if v == 0.0 {
        "0".to_string()
    } else {
        format!("{v}")
    }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

type Polyline = Vec<[f64; 2]>;

/// Data-space vertices of the horizontal-then-vertical staircase through `points`.
pub fn step_vertices(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut out = Vec::with_capacity(points.len() * 2);
    for (i, p) in points.iter().enumerate() {
        if i > 0 {
            out.push([p[0], points[i - 1][1]]);
        }
        out.push(*p);
    }
    out
}

fn to_pixels(layout: &Layout, vertices: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut out: Vec<[f64; 2]> = Vec::with_capacity(vertices.len());
    for v in vertices {
        let p = [layout.x.map(v[0]), layout.y.map(v[1])];
        if out.last() != Some(&p) {
            out.push(p);
        }
    }
    out
}

fn path_data(pixels: &[[f64; 2]], close: bool) -> String {
    let mut d = String::new();
    for (i, p) in pixels.iter().enumerate() {
        if i > 0 {
            d.push(' ');
        }
        let _ = write!(
            d,
            "{} {} {}",
            if i == 0 { "M" } else { "L" },
            num(p[0]),
            num(p[1])
        );
    }
    if close {
        d.push_str(" Z");
    }
    d
}

fn stroke_attrs(style: &SeriesStyle) -> String {
    let mut s = format!(
        r#"fill="none" stroke="{}" stroke-width="1.5""#,
        escape(&style.color)
    );
    if let Some(dash) = style.line_style.dasharray() {
        let _ = write!(s, r#" stroke-dasharray="{dash}""#);
    }
    s
}

struct Canvas {
    spec: PlotSpec,
    layout: Layout,
    body: String,
    legend: Vec<(SeriesStyle, bool)>,
}

impl Canvas {
    fn new(spec: &PlotSpec, layout: Layout) -> Self {
        Canvas {
            spec: spec.clone(),
            layout,
            body: String::new(),
            legend: Vec::new(),
        }
    }

    fn line(&mut self, class: &str, vertices: &[[f64; 2]], style: &SeriesStyle) {
        let pixels = to_pixels(&self.layout, vertices);
        let _ = writeln!(
            self.body,
            r#"<path class="{class}" d="{}" {}/>"#,
            path_data(&pixels, false),
            stroke_attrs(style)
        );
    }

    fn fill(&mut self, class: &str, vertices: &[[f64; 2]], style: &SeriesStyle) {
        let pixels = to_pixels(&self.layout, vertices);
        let _ = writeln!(
            self.body,
            r#"<path class="{class}" d="{}" fill="{}" fill-opacity="0.25" stroke="none"/>"#,
            path_data(&pixels, true),
            escape(&style.color)
        );
    }

    fn markers(&mut self, points: &[[f64; 2]], style: &SeriesStyle) {
        if style.marker == Marker::None {
            return;
        }
        let (xl, xh) = self.layout.x.bounds();
        let (yl, yh) = self.layout.y.bounds();
        let mut seen: Vec<[f64; 2]> = Vec::new();
        for p in points {
            let inside = p[0].is_finite()
                && p[1].is_finite()
                && (xl..=xh).contains(&p[0])
                && (yl..=yh).contains(&p[1]);
            if !inside || seen.contains(p) {
                continue;
            }
            seen.push(*p);
            let (cx, cy) = (self.layout.x.map(p[0]), self.layout.y.map(p[1]));
            let color = escape(&style.color);
            match style.marker {
                Marker::Circle => {
                    let _ = writeln!(
                        self.body,
                        r#"<circle class="marker" cx="{}" cy="{}" r="3" fill="{color}"/>"#,
                        num(cx),
                        num(cy)
                    );
                }
                Marker::Square => {
                    let _ = writeln!(
                        self.body,
                        r#"<rect class="marker" x="{}" y="{}" width="6" height="6" fill="{color}"/>"#,
                        num(cx - 3.0),
                        num(cy - 3.0)
                    );
                }
                Marker::None => {}
            }
        }
    }

    fn finish(self) -> String {
        let spec = &self.spec;
        let b = spec.plot_box().expect("validated before drawing");
        let (w, h) = (spec.width, spec.height);
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
        );
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
        );
        let _ = writeln!(
            out,
            r#"<rect class="background" x="0" y="0" width="{w}" height="{h}" fill="white"/>"#
        );
        out.push_str(&axes_markup(&self.layout, spec, b));
        let _ = writeln!(out, r#"<g class="data">"#);
        out.push_str(&self.body);
        let _ = writeln!(out, "</g>");
        out.push_str(&legend_markup(&self.legend, b));
        let _ = writeln!(out, "</svg>");
        out
    }
}

/// Tick positions in axis space (log10 on log axes).
fn ticks(map: &AxisMap) -> Vec<f64> {
    let (lo, hi) = (map.lo, map.hi);
    if map.log && hi - lo >= 1.0 {
        let step = ((hi - lo) / 6.0).ceil().max(1.0);
        let first = (lo / step).ceil() as i64;
        let last = (hi / step).floor() as i64;
        return (first..=last).map(|k| k as f64 * step).collect();
    }
    let raw = (hi - lo) / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .into_iter()
        .map(|f| f * mag)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * mag);
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last).map(|k| k as f64 * step).collect()
}

fn tick_label(map: &AxisMap, t: f64, ticks: &[f64]) -> String {
    if map.log && map.hi - map.lo >= 1.0 {
        return format!("1e{}", t.round() as i64);
    }
    let step = if ticks.len() > 1 {
        (ticks[1] - ticks[0]).abs()
    } else {
        (map.hi - map.lo).abs()
    };
    let decimals = (-step.log10().floor()).max(0.0) as usize;
    let v = if map.log { 10f64.powf(t) } else { t };
    let decimals = if map.log { decimals + 2 } else { decimals };
    let s = format!("{v:.decimals$}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        "0".to_string()
    } else {
        s
    }
}

fn axes_markup(layout: &Layout, spec: &PlotSpec, b: PlotBox) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<g class="axes" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(
        out,
        r#"<rect class="frame" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        num(b.left),
        num(b.top),
        num(b.right - b.left),
        num(b.bottom - b.top)
    );
    let xt = ticks(&layout.x);
    for &t in &xt {
        let px = layout.x.px_lo
            + (t - layout.x.lo) / (layout.x.hi - layout.x.lo) * (layout.x.px_hi - layout.x.px_lo);
        let _ = writeln!(
            out,
            r#"<line class="tick" x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="black"/><text x="{0}" y="{3}" text-anchor="middle">{4}</text>"#,
            num(px),
            num(b.bottom),
            num(b.bottom + 5.0),
            num(b.bottom + 18.0),
            tick_label(&layout.x, t, &xt)
        );
    }
    let yt = ticks(&layout.y);
    for &t in &yt {
        let py = layout.y.px_lo
            + (t - layout.y.lo) / (layout.y.hi - layout.y.lo) * (layout.y.px_hi - layout.y.px_lo);
        let _ = writeln!(
            out,
            r#"<line class="tick" x1="{0}" y1="{2}" x2="{1}" y2="{2}" stroke="black"/><text x="{3}" y="{4}" text-anchor="end">{5}</text>"#,
            num(b.left - 5.0),
            num(b.left),
            num(py),
            num(b.left - 8.0),
            num(py + 4.0),
            tick_label(&layout.y, t, &yt)
        );
    }
    let cx = (b.left + b.right) / 2.0;
    if let Some(label) = &spec.x.label {
        let _ = writeln!(
            out,
            r#"<text class="x-label" x="{}" y="{}" text-anchor="middle">{}</text>"#,
            num(cx),
            num(b.bottom + 38.0),
            escape(label)
        );
    }
    if let Some(label) = &spec.y.label {
        let (x, y) = (16.0, (b.top + b.bottom) / 2.0);
        let _ = writeln!(
            out,
            r#"<text class="y-label" x="{0}" y="{1}" text-anchor="middle" transform="rotate(-90 {0} {1})">{2}</text>"#,
            num(x),
            num(y),
            escape(label)
        );
    }
    if let Some(title) = &spec.title {
        let _ = writeln!(
            out,
            r#"<text class="title" x="{}" y="{}" text-anchor="middle" font-size="14">{}</text>"#,
            num(cx),
            num(b.top - 14.0),
            escape(title)
        );
    }
    let _ = writeln!(out, "</g>");
    out
}

fn legend_markup(entries: &[(SeriesStyle, bool)], b: PlotBox) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<g class="legend" font-family="sans-serif" font-size="11">"#
    );
    for (i, (style, band)) in entries.iter().enumerate() {
        let y = b.top + 14.0 + 16.0 * i as f64;
        let x0 = b.right - 150.0;
        let _ = write!(out, r#"<g class="legend-entry">"#);
        if *band {
            let _ = write!(
                out,
                r#"<rect x="{}" y="{}" width="24" height="10" fill="{}" fill-opacity="0.25"/>"#,
                num(x0),
                num(y - 5.0),
                escape(&style.color)
            );
        }
        let _ = write!(
            out,
            r#"<line x1="{}" y1="{2}" x2="{}" y2="{2}" {3}/><text x="{4}" y="{5}">{6}</text>"#,
            num(x0),
            num(x0 + 24.0),
            num(y),
            stroke_attrs(style),
            num(x0 + 30.0),
            num(y + 4.0),
            escape(&style.label)
        );
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, "</g>");
    out
}

fn with_stack_logs(spec: &PlotSpec, stacks: &[&SurfaceStack]) -> PlotSpec {
    let mut spec = spec.clone();
    for s in stacks {
        spec.x.log |= s.transform().is_log(0);
        spec.y.log |= s.transform().is_log(1);
    }
    spec
}

fn surface_points<'a>(stacks: impl Iterator<Item = &'a SurfaceStack>) -> Vec<[f64; 2]> {
    stacks
        .flat_map(|s| s.surfaces().iter().flatten().copied())
        .collect()
}

/// One step line per surface, one legend entry per series.
pub fn render_multiple_surfaces(stack: &SurfaceStack, spec: &PlotSpec) -> Result<String> {
    spec.check_series(stack.len(), "a plot of multiple surfaces")?;
    let spec = with_stack_logs(spec, &[stack]);
    let layout = plot_layout(&spec, &surface_points(std::iter::once(stack)))?;
    let mut canvas = Canvas::new(&spec, layout);
    for (surf, style) in stack.surfaces().iter().zip(&spec.series) {
        canvas.line("surface", &step_vertices(surf), style);
        canvas.markers(surf, style);
        canvas.legend.push((style.clone(), false));
    }
    Ok(canvas.finish())
}

/// Band between the first and third surface of each stack with the second
/// drawn as the center line. Each stack must hold exactly three surfaces.
pub fn render_multiple_surfaces_with_band(
    stacks: &[SurfaceStack],
    spec: &PlotSpec,
) -> Result<String> {
    if stacks.is_empty() {
        return Err(Error::validation("at least one surface stack is required"));
    }
    for (i, s) in stacks.iter().enumerate() {
        if s.len() != 3 {
            return Err(Error::validation(format!(
                "band plots need exactly 3 surfaces (lower, center, upper); stack {i} has {}",
                s.len()
            )));
        }
    }
    spec.check_series(stacks.len(), "a band plot")?;
    let refs: Vec<&SurfaceStack> = stacks.iter().collect();
    let spec = with_stack_logs(spec, &refs);
    let layout = plot_layout(&spec, &surface_points(stacks.iter()))?;
    let mut canvas = Canvas::new(&spec, layout);
    for (stack, style) in stacks.iter().zip(&spec.series) {
        let mut outline = step_vertices(stack.surface(2));
        outline.extend(step_vertices(stack.surface(0)).into_iter().rev());
        canvas.fill("band", &outline, style);
        canvas.line("center", &step_vertices(stack.surface(1)), style);
        canvas.markers(stack.surface(1), style);
        canvas.legend.push((style.clone(), true));
    }
    Ok(canvas.finish())
}

pub fn render_surface_with_band(stack: &SurfaceStack, spec: &PlotSpec) -> Result<String> {
    render_multiple_surfaces_with_band(std::slice::from_ref(stack), spec)
}

/// Hypervolume center line and `center ± band_halfwidth` band per trace set,
/// against evaluation index `1..=N`.
pub fn render_hv_with_band(traces: &[HvTraceSet], spec: &PlotSpec) -> Result<String> {
    let n = traces
        .first()
        .map(HvTraceSet::n_evals)
        .ok_or_else(|| Error::validation("at least one trace set is required"))?;
    if let Some((i, t)) = traces.iter().enumerate().find(|(_, t)| t.n_evals() != n) {
        return Err(Error::validation(format!(
            "trace set {i} has {} evaluations, trace set 0 has {n}",
            t.n_evals()
        )));
    }
    spec.check_series(traces.len(), "a hypervolume plot")?;

    // (upper, lower) band boundaries per trace set
    let bands: Vec<(Polyline, Polyline)> = traces
        .iter()
        .map(|t| {
            let xs = (1..=n).map(|i| i as f64);
            let upper = xs
                .clone()
                .zip(t.center().iter().zip(t.band_halfwidth()))
                .map(|(x, (c, h))| [x, c + h])
                .collect();
            let lower = xs
                .zip(t.center().iter().zip(t.band_halfwidth()))
                .map(|(x, (c, h))| [x, c - h])
                .collect();
            (upper, lower)
        })
        .collect();
    let extent: Vec<[f64; 2]> = bands
        .iter()
        .flat_map(|(u, l)| u.iter().chain(l).copied())
        .collect();
    let layout = plot_layout(spec, &extent)?;
    let mut canvas = Canvas::new(spec, layout);
    for ((t, style), (upper, lower)) in traces.iter().zip(&spec.series).zip(bands) {
        let mut outline = upper;
        outline.extend(lower.into_iter().rev());
        canvas.fill("hv-band", &outline, style);
        let line: Vec<[f64; 2]> = t
            .center()
            .iter()
            .enumerate()
            .map(|(i, &c)| [(i + 1) as f64, c])
            .collect();
        canvas.line("hv-line", &line, style);
        canvas.markers(&line, style);
        canvas.legend.push((style.clone(), true));
    }
    Ok(canvas.finish())
}

fn write_svg(path: &Path, svg: &str) -> Result<()> {
    fs::write(path, svg).map_err(|e| Error::io(path, e))
}

pub fn plot_multiple_surfaces(stack: &SurfaceStack, spec: &PlotSpec, path: &Path) -> Result<()> {
    write_svg(path, &render_multiple_surfaces(stack, spec)?)
}

pub fn plot_surface_with_band(stack: &SurfaceStack, spec: &PlotSpec, path: &Path) -> Result<()> {
    write_svg(path, &render_surface_with_band(stack, spec)?)
}

pub fn plot_multiple_surfaces_with_band(
    stacks: &[SurfaceStack],
    spec: &PlotSpec,
    path: &Path,
) -> Result<()> {
    write_svg(path, &render_multiple_surfaces_with_band(stacks, spec)?)
}

pub fn plot_hv_with_band(traces: &[HvTraceSet], spec: &PlotSpec, path: &Path) -> Result<()> {
    write_svg(path, &render_hv_with_band(traces, spec)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::attainment::{empirical_attainment_surfaces, LevelSpec, TransformSpec};
    use crate::hypervolume::BandKind;
    use crate::tensor::RunTensor;

    fn stack(levels: Vec<usize>) -> SurfaceStack {
        let costs = RunTensor::from_pairs(&[
            vec![[1.0, 3.0], [3.0, 1.0]],
            vec![[2.0, 2.0], [2.5, 1.5]],
            vec![[0.5, 4.0], [4.0, 0.5]],
        ])
        .unwrap();
        empirical_attainment_surfaces(
            &costs,
            &LevelSpec::new(levels).unwrap(),
            &TransformSpec::identity(),
        )
        .unwrap()
    }

    #[test]
    fn step_vertices_go_horizontal_then_vertical() {
        assert_eq!(
            step_vertices(&[[1.0, 3.0], [2.0, 2.0]]),
            vec![[1.0, 3.0], [2.0, 3.0], [2.0, 2.0]]
        );
    }

    #[test]
    fn color_label_count_mismatch() {
        let spec = PlotSpec::from_colors_labels(&["red", "blue"], &["a", "b"]).unwrap();
        let err = render_multiple_surfaces(&stack(vec![1, 2, 3]), &spec).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
        assert!(PlotSpec::from_colors_labels(&["red"], &["a", "b"]).is_err());
    }

    #[test]
    fn band_needs_three_surfaces() {
        let spec = PlotSpec::from_colors_labels(&["red"], &["a"]).unwrap();
        let err = render_surface_with_band(&stack(vec![1, 2]), &spec).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    #[test]
    fn labels_are_escaped() {
        let spec = PlotSpec::from_colors_labels(&["red"], &["a<b & \"c\""]).unwrap();
        let svg = render_multiple_surfaces(&stack(vec![2]), &spec).unwrap();
        assert!(svg.contains("a&lt;b &amp; &quot;c&quot;"));
    }

    #[test]
    fn mismatched_trace_lengths() {
        let a = HvTraceSet::from_traces(vec![vec![1.0, 2.0]], BandKind::StandardError).unwrap();
        let b = HvTraceSet::from_traces(vec![vec![1.0]], BandKind::StandardError).unwrap();
        let spec = PlotSpec::from_colors_labels(&["red", "blue"], &["a", "b"]).unwrap();
        assert!(matches!(
            render_hv_with_band(&[a, b], &spec),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn log_axis_rejects_nonpositive_bounds() {
        let mut spec = PlotSpec::from_colors_labels(&["red"], &["a"]).unwrap();
        spec.x.log = true;
        spec.x.min = Some(0.0);
        assert!(render_multiple_surfaces(&stack(vec![1]), &spec).is_err());
    }

    #[test]
    fn axis_map_round_trip() {
        let spec = PlotSpec::new(vec![]);
        let layout = plot_layout(&spec, &[[0.0, 10.0], [4.0, 20.0]]).unwrap();
        for v in [0.0, 1.5, 4.0] {
            assert!((layout.x.unmap(layout.x.map(v)) - v).abs() < 1e-12);
        }
        assert_eq!(layout.y.map(f64::INFINITY), 40.0);
        assert_eq!(layout.x.map(f64::INFINITY), 620.0);
    }

    #[test]
    fn tick_labels_are_plain() {
        let spec = PlotSpec::new(vec![]);
        let layout = plot_layout(&spec, &[[0.0, 0.0], [10.0, 1.0]]).unwrap();
        let xt = ticks(&layout.x);
        assert!(xt.contains(&0.0) && xt.contains(&10.0));
        assert_eq!(tick_label(&layout.x, 10.0, &xt), "10");
    }
}
