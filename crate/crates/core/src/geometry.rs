//! Point samples of ovals and the numeric oracles (polyline length, shoelace
//! area, periodic quadrature) that the closed forms are checked against.

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::par::Execution;
use crate::support_fourier::FourierSupport;

/// Sample count used for rendering.
pub const RENDER_SAMPLES: usize = 4096;
/// Sample count used by the polyline/quadrature oracles.
pub const ORACLE_SAMPLES: usize = 100_000;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PlanarPoint {
    pub x: f64,
    pub y: f64,
}

impl PlanarPoint {
    pub const fn new(x: f64, y: f64) -> Self {
        PlanarPoint { x, y }
    }

    pub fn distance(self, other: PlanarPoint) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    /// z-component of the cross product of the position vectors.
    pub fn cross(self, other: PlanarPoint) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for PlanarPoint {
    type Output = PlanarPoint;
    fn add(self, rhs: PlanarPoint) -> PlanarPoint {
        PlanarPoint::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for PlanarPoint {
    type Output = PlanarPoint;
    fn sub(self, rhs: PlanarPoint) -> PlanarPoint {
        PlanarPoint::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for PlanarPoint {
    type Output = PlanarPoint;
    fn mul(self, s: f64) -> PlanarPoint {
        PlanarPoint::new(self.x * s, self.y * s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Polyline {
    points: Vec<PlanarPoint>,
    closed: bool,
}

impl Polyline {
    /// A closed polyline; the segment from the last point back to the first
    /// is implied.
    pub fn closed(points: Vec<PlanarPoint>) -> Self {
        assert!(points.len() >= 3, "closed polyline needs at least 3 points");
        Polyline {
            points,
            closed: true,
        }
    }

    pub fn open(points: Vec<PlanarPoint>) -> Self {
        Polyline {
            points,
            closed: false,
        }
    }

    pub fn points(&self) -> &[PlanarPoint] {
        &self.points
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    fn segments(&self) -> impl Iterator<Item = (PlanarPoint, PlanarPoint)> + '_ {
        let wrap = self
            .closed
            .then(|| (self.points[self.points.len() - 1], self.points[0]));
        self.points.windows(2).map(|w| (w[0], w[1])).chain(wrap)
    }

    /// Total Euclidean length, including the closing segment.
    pub fn length(&self) -> f64 {
        self.segments().map(|(a, b)| a.distance(b)).sum()
    }

    /// Axis-aligned bounding box `(min, max)`, `None` when empty.
    pub fn bounds(&self) -> Option<(PlanarPoint, PlanarPoint)> {
        let first = *self.points.first()?;
        Some(self.points.iter().fold((first, first), |(lo, hi), p| {
            (
                PlanarPoint::new(lo.x.min(p.x), lo.y.min(p.y)),
                PlanarPoint::new(hi.x.max(p.x), hi.y.max(p.y)),
            )
        }))
    }
}

/// Point of the oval with outward normal angle `theta`:
/// `(p cos θ − p' sin θ, p sin θ + p' cos θ)`.
pub fn curve_point(support: &FourierSupport, theta: f64) -> PlanarPoint {
    let [p, dp, _] = support.poly().eval_with_derivatives(theta);
    let (s, c) = theta.sin_cos();
    PlanarPoint::new(p * c - dp * s, p * s + dp * c)
}

/// Unit tangent of the oval at normal angle `theta`.
pub fn tangent_direction(theta: f64) -> PlanarPoint {
    let (s, c) = theta.sin_cos();
    PlanarPoint::new(-s, c)
}

/// Closed polyline through `f(θ_k)`, `θ_k = start + span·k/count`.
pub fn sample_closed<F>(count: usize, start: f64, span: f64, exec: Execution, f: F) -> Polyline
where
    F: Fn(f64) -> PlanarPoint + Sync + Send,
{
    let step = span / count as f64;
    Polyline::closed(exec.map(count, |k| f(start + step * k as f64)))
}

pub fn sample_curve(support: &FourierSupport, count: usize) -> Polyline {
    sample_curve_with(support, count, Execution::default())
}

pub fn sample_curve_with(support: &FourierSupport, count: usize, exec: Execution) -> Polyline {
    assert!(count >= 3, "need at least 3 samples");
    sample_closed(count, 0.0, TAU, exec, |t| curve_point(support, t))
}

/// Shoelace area `½ Σ (x_k y_{k+1} − x_{k+1} y_k)`; positive when
/// counter-clockwise. Self-intersecting curves get their oriented area.
pub fn polyline_signed_area(poly: &Polyline) -> Result<f64> {
    if !poly.is_closed() {
        return Err(Error::OpenPolyline);
    }
    Ok(0.5 * poly.segments().map(|(a, b)| a.cross(b)).sum::<f64>())
}

/// Composite Simpson rule for `∫₀^{2π} f dθ` of a 2π-periodic `f`.
pub fn integrate_periodic<F: Fn(f64) -> f64>(f: F, count: usize) -> f64 {
    simpson_periodic(f, count)
}

/// Composite Simpson on `count` (even, ≥ 8) panels.
pub fn simpson_periodic<F: Fn(f64) -> f64>(f: F, count: usize) -> f64 {
    assert!(
        count >= 8 && count.is_multiple_of(2),
        "Simpson needs an even count >= 8"
    );
    let h = TAU / count as f64;
    // periodic: f(2π) = f(0), so the endpoint weights merge into one weight of 2
    let sum: f64 = (0..count)
        .map(|k| {
            let w = if k % 2 == 0 { 2.0 } else { 4.0 };
            w * f(h * k as f64)
        })
        .sum();
    sum * h / 3.0
}

/// Uniform trapezoid rule, exact for trigonometric polynomials of degree
/// below `count`.
pub fn trapezoid_periodic<F: Fn(f64) -> f64>(f: F, count: usize) -> f64 {
    assert!(count >= 1);
    let h = TAU / count as f64;
    h * (0..count).map(|k| f(h * k as f64)).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::support_fourier::Harmonic;
    use std::f64::consts::PI;

    fn m3() -> FourierSupport {
        FourierSupport::new(11.0, [Harmonic::new(3, 1.0, 0.0)]).unwrap()
    }

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1.0)
    }

    #[test]
    fn circle_points() {
        let c = FourierSupport::circle(2.0).unwrap();
        for k in 0..12 {
            let t = 0.5 * k as f64;
            let p = curve_point(&c, t);
            assert!((p.x - 2.0 * t.cos()).abs() < 1e-15);
            assert!((p.y - 2.0 * t.sin()).abs() < 1e-15);
        }
        assert_eq!(curve_point(&m3(), 0.0), PlanarPoint::new(12.0, 0.0));
    }

    #[test]
    fn tangent_matches_finite_difference() {
        let s = FourierSupport::new(
            10.0,
            [
                Harmonic::new(2, 2.0, 0.0),
                Harmonic::new(3, 0.0, -1.0 / 3.0),
            ],
        )
        .unwrap();
        let h = 1e-6;
        for k in 0..40 {
            let t = 0.157 * k as f64;
            let d = (curve_point(&s, t + h) - curve_point(&s, t)) * (1.0 / h);
            let dir = tangent_direction(t);
            // parallel and same orientation (ρ > 0)
            assert!(d.cross(dir).abs() < 1e-4 * d.distance(PlanarPoint::default()));
            assert!(d.x * dir.x + d.y * dir.y > 0.0);
        }
    }

    #[test]
    fn square_from_unit_circle() {
        let poly = sample_curve(&FourierSupport::circle(1.0).unwrap(), 4);
        let expected = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
        for (p, (x, y)) in poly.points().iter().zip(expected) {
            assert!((p.x - x).abs() < 1e-15 && (p.y - y).abs() < 1e-15);
        }
        assert!((polyline_signed_area(&poly).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn unit_square_orientation() {
        let ccw = vec![
            PlanarPoint::new(0.0, 0.0),
            PlanarPoint::new(1.0, 0.0),
            PlanarPoint::new(1.0, 1.0),
            PlanarPoint::new(0.0, 1.0),
        ];
        let mut cw = ccw.clone();
        cw.reverse();
        assert_eq!(
            polyline_signed_area(&Polyline::closed(ccw.clone())).unwrap(),
            1.0
        );
        assert_eq!(polyline_signed_area(&Polyline::closed(cw)).unwrap(), -1.0);
        assert_eq!(
            polyline_signed_area(&Polyline::open(ccw)),
            Err(Error::OpenPolyline)
        );
    }

    #[test]
    fn constant_width_example_length_and_area() {
        let poly = sample_curve(&m3(), 10_000);
        assert!(close(poly.length(), 22.0 * PI, 1e-6));
        assert!(close(
            polyline_signed_area(&poly).unwrap(),
            117.0 * PI,
            1e-6
        ));
    }

    #[test]
    fn centrally_symmetric_area() {
        let s = FourierSupport::new(5.0, [Harmonic::new(2, 1.0, 0.0)]).unwrap();
        let area = polyline_signed_area(&sample_curve(&s, 10_000)).unwrap();
        assert!(close(area, 23.5 * PI, 1e-6));
    }

    #[test]
    fn quadrature_examples() {
        assert!((integrate_periodic(|t| t.sin().powi(2), 64) - PI).abs() < 1e-12);
        let s = m3();
        let blaschke = integrate_periodic(
            |t| {
                let [p, dp, _] = s.poly().eval_with_derivatives(t);
                p * p - dp * dp
            },
            256,
        );
        assert!(close(blaschke, 234.0 * PI, 1e-9));
        let k = FourierSupport::new(
            10.0,
            [
                Harmonic::new(2, 2.0, 0.0),
                Harmonic::new(3, 0.0, -1.0 / 3.0),
                Harmonic::new(4, -0.25, 0.0),
            ],
        )
        .unwrap();
        assert!((integrate_periodic(|t| k.value(t), 64) - 20.0 * PI).abs() < 1e-9);
    }

    #[test]
    fn trapezoid_is_spectrally_exact() {
        // degree 6 integrand needs count >= 14
        let f = |t: f64| (3.0 * t).cos().powi(2) + 0.5 * (6.0 * t).sin() + 2.0;
        let exact = PI + 4.0 * PI;
        assert!((trapezoid_periodic(f, 14) - exact).abs() < 1e-12 * exact);
    }

    #[test]
    fn sequential_and_parallel_samples_identical() {
        let s = m3();
        let a = sample_curve_with(&s, 5000, Execution::Sequential);
        let b = sample_curve_with(&s, 5000, Execution::Parallel);
        assert_eq!(a, b);
    }
}
