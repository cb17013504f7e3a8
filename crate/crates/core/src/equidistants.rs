//! Affine λ-equidistants `E_λ(M) = { λa + (1−λ)b : a, b a parallel pair }`.
//!
//! With normal angle `θ` the parallel pair is `γ(θ), γ(θ+π)`, so
//! `γ_λ(θ) = λγ(θ) + (1−λ)γ(θ+π)` and `E_λ` has the (signed) support function
//! `P_λ(θ) = λp(θ) − (1−λ)p(θ+π)`. At `λ = ½` (the Wigner caustic) the
//! parameterisation over `[0, 2π]` covers the set twice; every integral
//! quantity is halved for that case here and nowhere else.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::geometry::{curve_point, sample_closed, simpson_periodic, PlanarPoint, Polyline};
use crate::par::Execution;
use crate::support_fourier::{FourierSupport, Harmonic, TrigPoly};

/// Minimum number of scan intervals for the cusp search.
pub const CUSP_SCAN_INTERVALS: usize = 4096;
/// Scan intervals per unit of harmonic degree for the cusp search.
pub const CUSP_SCAN_PER_HARMONIC: usize = 64;
/// Default Simpson panel count for equidistant lengths.
pub const LENGTH_PANELS: usize = 4096;

/// An oval together with an affine time `λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct EquidistantSupport {
    pub base: FourierSupport,
    pub lambda: f64,
}

impl EquidistantSupport {
    pub fn new(base: FourierSupport, lambda: f64) -> Self {
        assert!(lambda.is_finite(), "lambda must be finite");
        EquidistantSupport { base, lambda }
    }

    /// `λ = ½` exactly.
    pub fn is_wigner(&self) -> bool {
        self.lambda == 0.5
    }

    /// `P_λ = λp − (1−λ)p(·+π)`.
    pub fn support_poly(&self) -> TrigPoly {
        let p = self.base.poly();
        p.combine(self.lambda, &p.half_turn(), -(1.0 - self.lambda))
    }

    /// `g(θ) = P_λ + P_λ'' = λρ(θ) − (1−λ)ρ(θ+π)`; `|g|` is the speed of
    /// `γ_λ` and its zeros are the cusps.
    pub fn cusp_condition(&self) -> TrigPoly {
        self.support_poly().radius_of_curvature()
    }
}

/// `λγ(θ) + (1−λ)γ(θ+π)`.
pub fn equidistant_point(eq: &EquidistantSupport, theta: f64) -> PlanarPoint {
    let a = curve_point(&eq.base, theta);
    let b = curve_point(&eq.base, theta + PI);
    a * eq.lambda + b * (1.0 - eq.lambda)
}

/// The same point through `P_λ`: `(P cos θ − P' sin θ, P sin θ + P' cos θ)`.
pub fn equidistant_point_from_support(eq: &EquidistantSupport, theta: f64) -> PlanarPoint {
    let [p, dp, _] = eq.support_poly().eval_with_derivatives(theta);
    let (s, c) = theta.sin_cos();
    PlanarPoint::new(p * c - dp * s, p * s + dp * c)
}

/// `Ψ_M = ½∫₀^{2π} [p(θ)p(θ+π) − p'(θ)p'(θ+π)] dθ` in Fourier form:
/// `πa0² − (π/2) Σ_{n≥2} (−1)ⁿ (n²−1)(a_n² + b_n²)`.
pub fn psi_functional(support: &FourierSupport) -> f64 {
    let a0 = support.a0();
    let sum: f64 = support
        .terms()
        .iter()
        .map(|h| {
            let sign = if h.is_even() { 1.0 } else { -1.0 };
            let n = f64::from(h.n);
            sign * (n * n - 1.0) * h.energy()
        })
        .sum();
    PI * a0 * a0 - 0.5 * PI * sum
}

/// Oriented area of `E_λ(M)`: `(2λ² − 2λ + 1)A − 2λ(1−λ)Ψ`, halved at `λ = ½`.
pub fn oriented_area(eq: &EquidistantSupport) -> f64 {
    let area = crate::inequalities::area_closed_form(&eq.base);
    if eq.lambda == 0.0 || eq.lambda == 1.0 {
        return area;
    }
    if eq.is_wigner() && !has_odd_curvature_modes(&eq.base) {
        // centrally symmetric: the caustic is a single point
        return 0.0;
    }
    let l = eq.lambda;
    let psi = psi_functional(&eq.base);
    let full_turn = (2.0 * l * l - 2.0 * l + 1.0) * area - 2.0 * l * (1.0 - l) * psi;
    if eq.is_wigner() {
        0.5 * full_turn
    } else {
        full_turn
    }
}

/// Odd harmonics with `n ≥ 3` are the only ones that move the Wigner caustic
/// off a single point.
fn has_odd_curvature_modes(support: &FourierSupport) -> bool {
    support
        .terms()
        .iter()
        .any(|h| !h.is_even() && h.n >= 3 && h.energy() > 0.0)
}

/// Normal angles of the cusps of `E_λ(M)`: sign changes of
/// `λρ(θ) − (1−λ)ρ(θ+π)`, refined by bisection.
///
/// Angles lie in `[0, 2π)`, or in `[0, π)` for the Wigner caustic, whose
/// parameterisation repeats after a half turn.
pub fn cusp_parameters(eq: &EquidistantSupport) -> Result<Vec<f64>> {
    let g = eq.cusp_condition();
    let tol = 1e-12 * eq.base.a0();
    if g.max_coefficient() <= tol {
        return Err(Error::DegenerateRoot { lambda: eq.lambda });
    }
    let span = if eq.is_wigner() { PI } else { TAU };
    let intervals = CUSP_SCAN_INTERVALS.max(CUSP_SCAN_PER_HARMONIC * g.degree() as usize);
    let step = span / intervals as f64;
    let values = Execution::default().map(intervals + 1, |i| g.value(step * i as f64));

    let mut roots = Vec::new();
    for i in 0..intervals {
        let (ga, gb) = (values[i], values[i + 1]);
        let a = step * i as f64;
        if ga == 0.0 {
            roots.push(a);
        } else if gb != 0.0 && (ga < 0.0) != (gb < 0.0) {
            roots.push(bisect(|t| g.value(t), a, step * (i + 1) as f64, ga));
        }
    }
    Ok(roots)
}

/// Bisection to machine resolution on a bracket with `f(lo) = f_lo`.
fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, f_lo: f64) -> f64 {
    let lo_negative = f_lo < 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Length of `E_λ(M)`: Simpson quadrature of the speed `|λρ(θ) − (1−λ)ρ(θ+π)|`,
/// halved at `λ = ½`.
pub fn equidistant_length(eq: &EquidistantSupport, count: usize) -> f64 {
    let g = eq.cusp_condition();
    let full = simpson_periodic(|t| g.value(t).abs(), count);
    if eq.is_wigner() {
        0.5 * full
    } else {
        full
    }
}

/// Closed polyline of `γ_λ(θ_k)` over the full turn `[0, 2π)`.
pub fn sample_equidistant(eq: &EquidistantSupport, count: usize, exec: Execution) -> Polyline {
    assert!(count >= 3, "need at least 3 samples");
    sample_closed(count, 0.0, TAU, exec, |t| equidistant_point(eq, t))
}

/// Closed polyline tracing the set `E_λ(M)` once (half turn for the Wigner
/// caustic). Used for rendering.
pub fn trace_equidistant(eq: &EquidistantSupport, count: usize, exec: Execution) -> Polyline {
    assert!(count >= 3, "need at least 3 samples");
    let span = if eq.is_wigner() { PI } else { TAU };
    sample_closed(count, 0.0, span, exec, |t| equidistant_point(eq, t))
}

/// Ovals `p(θ) = cos((2n+1)θ) + (2n+1)² + 2`, of constant width whose
/// Wigner caustic has exactly `2n+1` cusps.
pub fn make_cusp_family(n: u32) -> FourierSupport {
    assert!(n >= 1, "family index starts at 1");
    let m = 2 * n + 1;
    FourierSupport::new(f64::from(m * m + 2), [Harmonic::new(m, 1.0, 0.0)])
        .expect("cusp family members are ovals")
}

/// Cusp angles predicted for [`make_cusp_family`]: `(π + 2kπ)/(4n+2)`.
pub fn cusp_family_angles(n: u32) -> Vec<f64> {
    let m = 2 * n + 1;
    (0..m)
        .map(|k| (PI + 2.0 * PI * f64::from(k)) / f64::from(2 * m))
        .collect()
}

/// Everything the crate reports about a single `E_λ(M)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EquidistantReport {
    pub lambda: f64,
    pub oriented_area: f64,
    pub length_estimate: f64,
    /// Empty when the cusp condition vanishes identically (see `degenerate`).
    pub cusp_thetas: Vec<f64>,
    pub is_wigner: bool,
    /// The cusp condition is identically zero, e.g. the Wigner caustic of a
    /// centrally symmetric oval collapses to a point.
    pub degenerate: bool,
}

impl EquidistantReport {
    pub fn compute(eq: &EquidistantSupport, length_panels: usize) -> Self {
        let (cusp_thetas, degenerate) = match cusp_parameters(eq) {
            Ok(c) => (c, false),
            Err(_) => (Vec::new(), true),
        };
        EquidistantReport {
            lambda: eq.lambda,
            oriented_area: oriented_area(eq),
            length_estimate: equidistant_length(eq, length_panels),
            cusp_thetas,
            is_wigner: eq.is_wigner(),
            degenerate,
        }
    }
}
