//! Minkowski support functions stored as truncated Fourier series.
//!
//! An oval is described by its support function
//! `p(θ) = a0 + Σ (a_n cos nθ + b_n sin nθ)`, where `θ` is the angle of the
//! outward normal. Everything else in the crate (points, lengths, areas,
//! equidistants, stability measures) is derived from these coefficients.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::Execution;

/// Smallest grid used to certify convexity, independent of the degree.
pub const MIN_CONVEXITY_GRID: usize = 1024;
/// Grid points per period of the highest harmonic when certifying convexity.
pub const CONVEXITY_POINTS_PER_HARMONIC: usize = 32;
/// Scan density used by the sup-norm searches.
pub const SUP_SCAN_POINTS: usize = 8192;

/// Reduce an angle to `[0, 2π)`.
pub fn canonical_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// One Fourier mode `a cos nθ + b sin nθ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Harmonic {
    pub n: u32,
    pub a: f64,
    pub b: f64,
}

impl Harmonic {
    pub fn new(n: u32, a: f64, b: f64) -> Self {
        Harmonic { n, a, b }
    }

    /// `√(a² + b²)`, the amplitude of the mode.
    pub fn amplitude(&self) -> f64 {
        self.a.hypot(self.b)
    }

    /// `a² + b²`.
    pub fn energy(&self) -> f64 {
        self.a * self.a + self.b * self.b
    }

    pub fn is_even(&self) -> bool {
        self.n.is_multiple_of(2)
    }
}

/// A real trigonometric polynomial `c0 + Σ (a_n cos nθ + b_n sin nθ)`.
///
/// Terms are kept sorted by `n` with distinct indices `n ≥ 1`. Unlike
/// [`FourierSupport`] there is no sign or convexity requirement, so this type
/// also carries differences of support functions, radii of curvature and the
/// cusp condition of an equidistant.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TrigPoly {
    constant: f64,
    terms: Vec<Harmonic>,
}

impl TrigPoly {
    /// Builds a polynomial, summing terms that share an index. Terms with
    /// `n = 0` are folded into the constant (their `b` is ignored).
    pub fn new(constant: f64, terms: impl IntoIterator<Item = Harmonic>) -> Self {
        let mut poly = TrigPoly {
            constant,
            terms: Vec::new(),
        };
        for h in terms {
            poly.add_term(h);
        }
        poly
    }

    pub fn constant_only(constant: f64) -> Self {
        TrigPoly {
            constant,
            terms: Vec::new(),
        }
    }

    fn add_term(&mut self, h: Harmonic) {
        if h.n == 0 {
            self.constant += h.a;
            return;
        }
        match self.terms.binary_search_by_key(&h.n, |t| t.n) {
            Ok(i) => {
                self.terms[i].a += h.a;
                self.terms[i].b += h.b;
            }
            Err(i) => self.terms.insert(i, h),
        }
    }

    pub fn constant(&self) -> f64 {
        self.constant
    }

    pub fn terms(&self) -> &[Harmonic] {
        &self.terms
    }

    /// Coefficients `(a_n, b_n)` of harmonic `n`, zero when absent.
    pub fn coefficient(&self, n: u32) -> (f64, f64) {
        if n == 0 {
            return (self.constant, 0.0);
        }
        match self.terms.binary_search_by_key(&n, |t| t.n) {
            Ok(i) => (self.terms[i].a, self.terms[i].b),
            Err(_) => (0.0, 0.0),
        }
    }

    /// Highest harmonic index carrying a nonzero coefficient, 0 for a constant.
    pub fn degree(&self) -> u32 {
        self.terms
            .iter()
            .rev()
            .find(|h| h.a != 0.0 || h.b != 0.0)
            .map_or(0, |h| h.n)
    }

    pub fn value(&self, theta: f64) -> f64 {
        let t = canonical_angle(theta);
        let mut v = self.constant;
        for h in &self.terms {
            let (s, c) = (f64::from(h.n) * t).sin_cos();
            v += h.a * c + h.b * s;
        }
        v
    }

    /// Value, first and second derivative at `theta`, differentiated term by term.
    pub fn eval_with_derivatives(&self, theta: f64) -> [f64; 3] {
        let t = canonical_angle(theta);
        let (mut v, mut d1, mut d2) = (self.constant, 0.0, 0.0);
        for h in &self.terms {
            let n = f64::from(h.n);
            let (s, c) = (n * t).sin_cos();
            let mode = h.a * c + h.b * s;
            v += mode;
            d1 += n * (h.b * c - h.a * s);
            d2 -= n * n * mode;
        }
        [v, d1, d2]
    }

    /// The polynomial `θ ↦ f(θ + π)`: harmonic `n` picks up a factor `(−1)ⁿ`.
    pub fn half_turn(&self) -> TrigPoly {
        self.map_terms(|h| if h.is_even() { 1.0 } else { -1.0 })
    }

    /// `f + f''`. For a support function this is the radius of curvature.
    pub fn radius_of_curvature(&self) -> TrigPoly {
        self.map_terms(|h| 1.0 - f64::from(h.n) * f64::from(h.n))
    }

    /// Only the odd harmonics, no constant.
    pub fn odd_harmonics(&self) -> TrigPoly {
        self.filter_terms(|h| !h.is_even(), 0.0)
    }

    /// Only the even harmonics `n ≥ 2`, no constant.
    pub fn even_harmonics(&self) -> TrigPoly {
        self.filter_terms(Harmonic::is_even, 0.0)
    }

    pub fn scaled(&self, s: f64) -> TrigPoly {
        TrigPoly {
            constant: self.constant * s,
            terms: self
                .terms
                .iter()
                .map(|h| Harmonic::new(h.n, h.a * s, h.b * s))
                .collect(),
        }
    }

    /// `α·self + β·other`.
    pub fn combine(&self, alpha: f64, other: &TrigPoly, beta: f64) -> TrigPoly {
        let mut out = self.scaled(alpha);
        out.constant += beta * other.constant;
        for h in &other.terms {
            out.add_term(Harmonic::new(h.n, beta * h.a, beta * h.b));
        }
        out
    }

    pub fn sub(&self, other: &TrigPoly) -> TrigPoly {
        self.combine(1.0, other, -1.0)
    }

    /// `max |a_n|, |b_n|` over all harmonics and the constant.
    pub fn max_coefficient(&self) -> f64 {
        self.terms
            .iter()
            .map(|h| h.a.abs().max(h.b.abs()))
            .fold(self.constant.abs(), f64::max)
    }

    /// `∫₀^{2π} f² dθ` by Parseval.
    pub fn l2_norm_squared(&self) -> f64 {
        let modes: f64 = self.terms.iter().map(Harmonic::energy).sum();
        TAU * self.constant * self.constant + std::f64::consts::PI * modes
    }

    /// Global maximum of `|f|` over the circle.
    pub fn max_abs(&self) -> Extremum {
        self.max_abs_with(Execution::default())
    }

    pub fn max_abs_with(&self, exec: Execution) -> Extremum {
        if self.terms.is_empty() {
            return Extremum {
                theta: 0.0,
                value: self.constant.abs(),
            };
        }
        let grid = scan_grid(self.degree(), SUP_SCAN_POINTS, 64);
        let values = self
            .grid_values(grid, exec)
            .into_iter()
            .map(f64::abs)
            .collect();
        refine_scan(|t| self.value(t).abs(), values)
    }

    /// Global minimum of `f` over the circle, scanning `grid` points.
    pub fn min_value(&self, grid: usize) -> Extremum {
        let values = self
            .grid_values(grid, Execution::default())
            .into_iter()
            .map(|v| -v)
            .collect();
        let m = refine_scan(|t| -self.value(t), values);
        Extremum {
            theta: m.theta,
            value: -m.value,
        }
    }

    /// Values at `2πi/grid`, `i < grid`. Harmonics come from powers of
    /// `e^{iθ}`, so each point costs one `sin_cos`; the rounding error grows
    /// like `degree·ε`, which is fine for locating extrema.
    pub(crate) fn grid_values(&self, grid: usize, exec: Execution) -> Vec<f64> {
        let step = TAU / grid as f64;
        exec.map(grid, |i| {
            let (s1, c1) = (i as f64 * step).sin_cos();
            let (mut s, mut c) = (0.0, 1.0);
            let mut n = 0;
            let mut v = self.constant;
            for h in &self.terms {
                while n < h.n {
                    (s, c) = (s * c1 + c * s1, c * c1 - s * s1);
                    n += 1;
                }
                v += h.a * c + h.b * s;
            }
            v
        })
    }

    fn map_terms(&self, factor: impl Fn(&Harmonic) -> f64) -> TrigPoly {
        TrigPoly {
            constant: self.constant,
            terms: self
                .terms
                .iter()
                .map(|h| {
                    let f = factor(h);
                    Harmonic::new(h.n, h.a * f, h.b * f)
                })
                .collect(),
        }
    }

    fn filter_terms(&self, keep: impl Fn(&Harmonic) -> bool, constant: f64) -> TrigPoly {
        TrigPoly {
            constant,
            terms: self.terms.iter().copied().filter(|h| keep(h)).collect(),
        }
    }
}

/// Location and value of an extremum on the circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Extremum {
    pub theta: f64,
    pub value: f64,
}

/// Grid size for a scan: at least `floor`, at least `per_harmonic` points per
/// period of the highest harmonic.
pub(crate) fn scan_grid(degree: u32, floor: usize, per_harmonic: usize) -> usize {
    floor.max(per_harmonic * degree as usize)
}

/// Golden-section refinement around the three best of `values`, which sample
/// `f` on a uniform grid over `[0, 2π)`.
fn refine_scan<F: Fn(f64) -> f64>(f: F, values: Vec<f64>) -> Extremum {
    let grid = values.len();
    assert!(grid >= 3, "scan grid needs at least 3 points");
    let step = TAU / grid as f64;

    let mut best: [Option<usize>; 3] = [None; 3];
    for (i, &v) in values.iter().enumerate() {
        for slot in 0..3 {
            if best[slot].is_none_or(|j| v > values[j]) {
                best[slot..].rotate_right(1);
                best[slot] = Some(i);
                break;
            }
        }
    }

    let mut result = Extremum {
        theta: 0.0,
        value: f64::NEG_INFINITY,
    };
    for i in best.into_iter().flatten() {
        let centre = i as f64 * step;
        let refined = golden_section_max(&f, centre - step, centre + step);
        for candidate in [
            Extremum {
                theta: centre,
                value: f(centre),
            },
            refined,
        ] {
            if candidate.value > result.value {
                result = candidate;
            }
        }
    }
    result.theta = canonical_angle(result.theta);
    result
}

fn golden_section_max<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64) -> Extremum {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if hi - lo <= 1e-13 {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 >= f2 {
        Extremum {
            theta: x1,
            value: f1,
        }
    } else {
        Extremum {
            theta: x2,
            value: f2,
        }
    }
}

/// Curve-spec ingestion format: `{"a0": .., "terms": [{"n": .., "a": .., "b": ..}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub a0: f64,
    #[serde(default)]
    pub terms: Vec<Harmonic>,
}

/// Support function of a certified oval.
///
/// Construction checks `a0 > 0`, distinct indices `n ≥ 1`, finiteness, and
/// that the radius of curvature `p + p''` is positive on a dense grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CurveSpec", into = "CurveSpec")]
pub struct FourierSupport {
    poly: TrigPoly,
}

impl FourierSupport {
    pub fn new(a0: f64, terms: impl IntoIterator<Item = Harmonic>) -> Result<Self> {
        let terms: Vec<Harmonic> = terms.into_iter().collect();
        if !a0.is_finite() || terms.iter().any(|h| !h.a.is_finite() || !h.b.is_finite()) {
            return Err(Error::NonFinite);
        }
        if a0 <= 0.0 {
            return Err(Error::NonPositiveMean { a0 });
        }
        let mut seen = std::collections::BTreeSet::new();
        for h in &terms {
            if h.n == 0 {
                return Err(Error::InvalidHarmonic { n: 0 });
            }
            if !seen.insert(h.n) {
                return Err(Error::DuplicateHarmonic { n: h.n });
            }
        }
        let poly = TrigPoly::new(a0, terms);
        validate_convexity(&poly, default_convexity_grid(poly.degree()))?;
        Ok(FourierSupport { poly })
    }

    /// The circle of radius `r` centred at the origin.
    pub fn circle(r: f64) -> Result<Self> {
        Self::new(r, [])
    }

    /// Wraps a polynomial already known to describe an oval.
    pub(crate) fn from_poly_unchecked(poly: TrigPoly) -> Self {
        FourierSupport { poly }
    }

    pub fn a0(&self) -> f64 {
        self.poly.constant()
    }

    pub fn terms(&self) -> &[Harmonic] {
        self.poly.terms()
    }

    pub fn poly(&self) -> &TrigPoly {
        &self.poly
    }

    pub fn max_harmonic(&self) -> u32 {
        self.poly.degree()
    }

    pub fn value(&self, theta: f64) -> f64 {
        self.poly.value(theta)
    }

    /// `ρ = p + p''` as a trigonometric polynomial.
    pub fn radius_of_curvature(&self) -> TrigPoly {
        self.poly.radius_of_curvature()
    }

    /// Support function multiplied by `s > 0` (the oval scaled about the origin).
    pub fn scaled(&self, s: f64) -> Result<Self> {
        let p = self.poly.scaled(s);
        Self::new(p.constant(), p.terms().iter().copied())
    }

    pub fn to_spec(&self) -> CurveSpec {
        CurveSpec {
            a0: self.a0(),
            terms: self.terms().to_vec(),
        }
    }
}

impl TryFrom<CurveSpec> for FourierSupport {
    type Error = Error;

    fn try_from(spec: CurveSpec) -> Result<Self> {
        FourierSupport::new(spec.a0, spec.terms)
    }
}

impl From<FourierSupport> for CurveSpec {
    fn from(s: FourierSupport) -> Self {
        s.to_spec()
    }
}

/// Point of the oval in polar tangential coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarTangentialSample {
    pub theta: f64,
    pub p: f64,
    pub dp: f64,
    pub ddp: f64,
    /// Radius of curvature `p + p''`; curvature is `1/rho`.
    pub rho: f64,
}

pub fn evaluate(support: &FourierSupport, theta: f64) -> PolarTangentialSample {
    let theta = canonical_angle(theta);
    let [p, dp, ddp] = support.poly.eval_with_derivatives(theta);
    PolarTangentialSample {
        theta,
        p,
        dp,
        ddp,
        rho: p + ddp,
    }
}

/// Distance between the two tangent lines with normals `θ` and `θ + π`.
///
/// Evaluated as `2a0 + 2·(even part)(θ)` so that odd harmonics cancel exactly.
pub fn width(support: &FourierSupport, theta: f64) -> f64 {
    let even = support.poly.even_harmonics();
    2.0 * support.a0() + 2.0 * even.value(theta)
}

/// Default convexity grid for a polynomial of the given degree.
pub fn default_convexity_grid(degree: u32) -> usize {
    scan_grid(degree, MIN_CONVEXITY_GRID, CONVEXITY_POINTS_PER_HARMONIC)
}

/// Smallest radius of curvature found by the convexity scan.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvexityCertificate {
    pub min_rho: f64,
    pub theta: f64,
}

/// Checks `p + p'' > 0` on a uniform grid of `grid_size` points with
/// golden-section refinement around the lowest grid values.
pub fn validate_convexity(support: &TrigPoly, grid_size: usize) -> Result<ConvexityCertificate> {
    let required = CONVEXITY_POINTS_PER_HARMONIC * support.degree() as usize;
    if grid_size < required.max(3) {
        return Err(Error::GridTooCoarse {
            grid_size,
            required: required.max(3),
        });
    }
    let rho = support.radius_of_curvature();
    let min = rho.min_value(grid_size);
    if min.value <= 0.0 {
        return Err(Error::NonConvexCurve {
            theta: min.theta,
            rho: min.value,
        });
    }
    if min.value < 1e-9 * support.constant() {
        log::warn!(
            "near-singular oval: radius of curvature {:e} at theta = {}",
            min.value,
            min.theta
        );
    }
    Ok(ConvexityCertificate {
        min_rho: min.value,
        theta: min.theta,
    })
}
