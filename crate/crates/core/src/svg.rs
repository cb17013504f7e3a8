//! Minimal SVG emitter for curve figures.
//!
//! Every polyline becomes one `<path>` element. The union bounding box is
//! mapped into an 800×800 viewport (with a margin) preserving aspect ratio,
//! y pointing up. Coordinates are printed with a fixed number of decimals so
//! output is byte-for-byte reproducible.

use std::fmt::Write as _;

use crate::geometry::{PlanarPoint, Polyline};

pub const VIEWPORT: f64 = 800.0;
const MARGIN: f64 = 20.0;

#[derive(Clone, Debug, PartialEq)]
pub struct StrokeStyle {
    pub color: String,
    pub width: f64,
    pub dashed: bool,
}

impl StrokeStyle {
    pub fn solid(color: &str, width: f64) -> Self {
        StrokeStyle {
            color: color.to_owned(),
            width,
            dashed: false,
        }
    }

    pub fn dashed(color: &str, width: f64) -> Self {
        StrokeStyle {
            color: color.to_owned(),
            width,
            dashed: true,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SvgFigure {
    layers: Vec<(Polyline, StrokeStyle, Option<String>)>,
}

impl SvgFigure {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a polyline; `label` ends up in the path's `id`.
    pub fn push(&mut self, poly: Polyline, style: StrokeStyle, label: Option<&str>) {
        self.layers.push((poly, style, label.map(str::to_owned)));
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    fn transform(&self) -> impl Fn(PlanarPoint) -> (f64, f64) {
        let mut lo = PlanarPoint::new(f64::INFINITY, f64::INFINITY);
        let mut hi = PlanarPoint::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for (poly, _, _) in &self.layers {
            if let Some((a, b)) = poly.bounds() {
                lo = PlanarPoint::new(lo.x.min(a.x), lo.y.min(a.y));
                hi = PlanarPoint::new(hi.x.max(b.x), hi.y.max(b.y));
            }
        }
        if !lo.is_finite() || !hi.is_finite() {
            lo = PlanarPoint::new(-1.0, -1.0);
            hi = PlanarPoint::new(1.0, 1.0);
        }
        let extent = (hi.x - lo.x).max(hi.y - lo.y).max(f64::MIN_POSITIVE);
        let scale = (VIEWPORT - 2.0 * MARGIN) / extent;
        let cx = 0.5 * (lo.x + hi.x);
        let cy = 0.5 * (lo.y + hi.y);
        move |p: PlanarPoint| {
            (
                0.5 * VIEWPORT + (p.x - cx) * scale,
                0.5 * VIEWPORT - (p.y - cy) * scale,
            )
        }
    }

    pub fn render(&self) -> String {
        let map = self.transform();
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{v}" height="{v}" viewBox="0 0 {v} {v}">"#,
            v = VIEWPORT
        );
        let _ = writeln!(
            out,
            r#"<rect x="0" y="0" width="{v}" height="{v}" fill="white"/>"#,
            v = VIEWPORT
        );
        for (i, (poly, style, label)) in self.layers.iter().enumerate() {
            let mut d = String::new();
            for (k, p) in poly.points().iter().enumerate() {
                let (x, y) = map(*p);
                let cmd = if k == 0 { 'M' } else { 'L' };
                let _ = write!(d, "{cmd}{} {} ", fmt_coord(x), fmt_coord(y));
            }
            if poly.is_closed() {
                d.push('Z');
            }
            let id = label.clone().unwrap_or_else(|| format!("curve{i}"));
            let dash = if style.dashed {
                r#" stroke-dasharray="8 6""#
            } else {
                ""
            };
            let _ = writeln!(
                out,
                r#"<path id="{id}" d="{}" fill="none" stroke="{}" stroke-width="{}"{dash}/>"#,
                d.trim_end(),
                style.color,
                style.width
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

fn fmt_coord(v: f64) -> String {
    let s = format!("{v:.3}");
    // avoid "-0.000"
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        "0.000".to_owned()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_path_per_layer_and_deterministic() {
        let square = Polyline::closed(vec![
            PlanarPoint::new(0.0, 0.0),
            PlanarPoint::new(1.0, 0.0),
            PlanarPoint::new(1.0, 1.0),
            PlanarPoint::new(0.0, 1.0),
        ]);
        let mut fig = SvgFigure::new();
        fig.push(
            square.clone(),
            StrokeStyle::solid("black", 2.0),
            Some("oval"),
        );
        fig.push(square, StrokeStyle::dashed("red", 1.0), None);
        let a = fig.render();
        assert_eq!(a, fig.render());
        assert_eq!(a.matches("<path").count(), 2);
        assert!(a.contains("stroke-dasharray"));
        // unit square fills the viewport minus margins, y flipped
        assert!(a.contains("M20.000 780.000 L780.000 780.000"));
    }

    #[test]
    fn negative_zero_is_normalised() {
        assert_eq!(fmt_coord(-0.0001), "0.000");
        assert_eq!(fmt_coord(-1.5), "-1.500");
    }
}
