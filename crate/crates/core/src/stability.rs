//! Stability of the improved isoperimetric inequality.
//!
//! The deficit `Φ(K) = L² − 4πA − 8π|Ã_{E_½}|` vanishes exactly on curves of
//! constant width. The nearest such curve used here is the Wigner-caustic-type
//! curve `W_K`, whose support function keeps `a0` and the odd harmonics of
//! `p_K`. Two deviation measures are compared against `Φ`:
//! `Φ ≥ 4π² d∞²(K, W_K)` and `Φ ≥ 6π d₂²(K, W_K)`.

use std::f64::consts::PI;

use crate::inequalities::{CurveMetrics, CONSTANT_WIDTH_TOL, EPS_REL};
use crate::par::Execution;
use crate::support_fourier::{Extremum, FourierSupport, Harmonic, TrigPoly};

/// Support function `L/(2π) + (p(θ) − p(θ+π))/2`: the even harmonics of `p`
/// removed, `a0` and the odd harmonics kept.
pub fn wigner_type_curve(support: &FourierSupport) -> FourierSupport {
    let poly = support.poly();
    let w = TrigPoly::new(support.a0(), poly.odd_harmonics().terms().iter().copied());
    let w = FourierSupport::from_poly_unchecked(w);
    debug_assert!(
        crate::support_fourier::validate_convexity(
            w.poly(),
            crate::support_fourier::default_convexity_grid(w.max_harmonic())
        )
        .is_ok(),
        "odd part of an oval must be an oval"
    );
    w
}

/// Hausdorff distance `max_θ |p_a(θ) − p_b(θ)|`.
pub fn d_infinity(a: &FourierSupport, b: &FourierSupport) -> f64 {
    a.poly().sub(b.poly()).max_abs().value
}

/// `L²` distance `(∫₀^{2π} |p_a − p_b|² dθ)^{1/2}`, by Parseval.
pub fn d_two(a: &FourierSupport, b: &FourierSupport) -> f64 {
    a.poly().sub(b.poly()).l2_norm_squared().sqrt()
}

/// `Φ = 2π² Σ_{n even ≥ 2} (n²−1)(a_n² + b_n²)`.
pub fn phi(support: &FourierSupport) -> f64 {
    let sum: f64 = support
        .terms()
        .iter()
        .filter(|h| h.is_even())
        .map(|h| {
            let n = f64::from(h.n);
            (n * n - 1.0) * h.energy()
        })
        .sum();
    2.0 * PI * PI * sum
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EqualityClass {
    /// No even harmonics: both stability bounds are attained (as `0 = 0`).
    ConstantWidth,
    /// The only even harmonic is `n = 2`: the `L²` bound is attained.
    L2EqualityFamily,
    Strict,
}

impl EqualityClass {
    pub fn as_str(self) -> &'static str {
        match self {
            EqualityClass::ConstantWidth => "constant_width",
            EqualityClass::L2EqualityFamily => "l2_equality_family",
            EqualityClass::Strict => "strict",
        }
    }
}

/// Classifies by the pattern of even harmonics above `1e-12·a0`.
pub fn equality_class(support: &FourierSupport) -> EqualityClass {
    let tol = CONSTANT_WIDTH_TOL * support.a0();
    let mut present = support
        .terms()
        .iter()
        .filter(|h| h.is_even() && h.amplitude() > tol)
        .map(|h| h.n);
    match (present.next(), present.next()) {
        (None, _) => EqualityClass::ConstantWidth,
        (Some(2), None) => EqualityClass::L2EqualityFamily,
        _ => EqualityClass::Strict,
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StabilityReport {
    pub phi: f64,
    pub d_inf: f64,
    pub d_2: f64,
    /// `Φ − 4π² d∞²`
    pub margin_max: f64,
    /// `Φ − 6π d₂²`
    pub margin_l2: f64,
    pub equality_class: EqualityClass,
}

impl StabilityReport {
    /// Both margins non-negative up to `1e-9·L²`.
    pub fn holds(&self, length: f64) -> bool {
        let eps = EPS_REL * length * length;
        self.margin_max >= -eps && self.margin_l2 >= -eps
    }
}

pub fn stability_check(support: &FourierSupport) -> StabilityReport {
    let w = wigner_type_curve(support);
    let phi = phi(support);
    let d_inf = d_infinity(support, &w);
    let d_2 = d_two(support, &w);
    StabilityReport {
        phi,
        d_inf,
        d_2,
        margin_max: phi - 4.0 * PI * PI * d_inf * d_inf,
        margin_l2: phi - 6.0 * PI * d_2 * d_2,
        equality_class: equality_class(support),
    }
}

/// `Φ` from the metric route, `L² − 4πA − 8π|Ã_{E_½}|`.
pub fn phi_from_metrics(metrics: &CurveMetrics) -> f64 {
    metrics.improved_deficit
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OddPartBound {
    /// `max_θ |Σ_{k odd} (c_k cos kθ + d_k sin kθ)|`
    pub max_odd: f64,
    /// `max_θ |Σ_k (c_k cos kθ + d_k sin kθ)|`
    pub max_full: f64,
}

impl OddPartBound {
    pub fn holds(&self) -> bool {
        self.max_odd <= self.max_full + 1e-10 * self.max_full.max(1.0)
    }
}

/// Sup norm of the odd part of a trigonometric sum against the sup norm of
/// the whole sum; the former never exceeds the latter.
pub fn odd_part_max_bound(coefficients: &[Harmonic]) -> OddPartBound {
    odd_part_max_bound_with(coefficients, Execution::default())
}

pub fn odd_part_max_bound_with(coefficients: &[Harmonic], exec: Execution) -> OddPartBound {
    let full = TrigPoly::new(0.0, coefficients.iter().copied());
    let odd = full.odd_harmonics();
    let max = |p: &TrigPoly| -> Extremum { p.max_abs_with(exec) };
    let bound = OddPartBound {
        max_odd: max(&odd).value,
        max_full: max(&full).value,
    };
    debug_assert!(bound.holds(), "odd part exceeds full sum: {bound:?}");
    bound
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equidistants::{make_cusp_family, oriented_area, EquidistantSupport};
    use crate::geometry::integrate_periodic;
    use crate::inequalities::{area_closed_form, is_constant_width, length_closed_form};

    fn stability_example() -> FourierSupport {
        FourierSupport::new(
            10.0,
            [
                Harmonic::new(2, 2.0, 0.0),
                Harmonic::new(3, 0.0, -1.0 / 3.0),
                Harmonic::new(4, -0.25, 0.0),
            ],
        )
        .unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn wigner_type_curve_examples() {
        let w = wigner_type_curve(&stability_example());
        assert_eq!(w.a0(), 10.0);
        assert_eq!(w.terms(), &[Harmonic::new(3, 0.0, -1.0 / 3.0)]);
        let m3 = make_cusp_family(1);
        assert_eq!(wigner_type_curve(&m3), m3);
        let sym = FourierSupport::new(5.0, [Harmonic::new(2, 1.0, 0.0)]).unwrap();
        let w = wigner_type_curve(&sym);
        assert_eq!(w, FourierSupport::circle(5.0).unwrap());
        assert!(area_closed_form(&w) >= area_closed_form(&sym));
        assert!(rel(area_closed_form(&w), 25.0 * PI) < 1e-15);
    }

    #[test]
    fn wigner_type_curve_properties() {
        let k = stability_example();
        let w = wigner_type_curve(&k);
        assert!(is_constant_width(&w, CONSTANT_WIDTH_TOL));
        assert_eq!(length_closed_form(&w), length_closed_form(&k));
        let ck = oriented_area(&EquidistantSupport::new(k.clone(), 0.5));
        let cw = oriented_area(&EquidistantSupport::new(w.clone(), 0.5));
        assert!((ck - cw).abs() < 1e-12 * area_closed_form(&k));
        assert!(area_closed_form(&w) > area_closed_form(&k));
    }

    #[test]
    fn distances() {
        let k = stability_example();
        assert_eq!(d_infinity(&k, &k), 0.0);
        assert_eq!(d_two(&k, &k), 0.0);
        let w = wigner_type_curve(&k);
        assert!((d_infinity(&k, &w) - 2.25).abs() < 1e-12);
        assert!(rel(d_two(&k, &w).powi(2), 65.0 * PI / 16.0) < 1e-14);
        let c1 = FourierSupport::circle(1.0).unwrap();
        let c3 = FourierSupport::circle(3.0).unwrap();
        assert_eq!(d_infinity(&c1, &c3), 2.0);
    }

    #[test]
    fn d_two_matches_quadrature() {
        let k = stability_example();
        let w = wigner_type_curve(&k);
        let q = integrate_periodic(|t| (k.value(t) - w.value(t)).powi(2), 512);
        let p = d_two(&k, &w).powi(2);
        assert!(rel(q, p) < 1e-10);
    }

    #[test]
    fn phi_examples() {
        let k = stability_example();
        assert!(rel(phi(&k), 25.875 * PI * PI) < 1e-14);
        assert_eq!(phi(&make_cusp_family(2)), 0.0);
        let sym = FourierSupport::new(5.0, [Harmonic::new(2, 1.0, 0.0)]).unwrap();
        assert!(rel(phi(&sym), 6.0 * PI * PI) < 1e-15);
        let m = CurveMetrics::compute(&sym);
        assert!(rel(phi_from_metrics(&m), 6.0 * PI * PI) < 1e-12);
    }

    #[test]
    fn stability_check_examples() {
        let r = stability_check(&stability_example());
        assert!(rel(r.margin_max, 5.625 * PI * PI) < 1e-11);
        assert!(rel(r.margin_l2, 1.5 * PI * PI) < 1e-11);
        assert_eq!(r.equality_class, EqualityClass::Strict);

        let two = FourierSupport::new(
            20.0,
            [Harmonic::new(2, 1.5, -0.5), Harmonic::new(3, 0.2, 0.0)],
        )
        .unwrap();
        let r = stability_check(&two);
        assert_eq!(r.equality_class, EqualityClass::L2EqualityFamily);
        assert!(r.margin_l2.abs() <= 1e-12 * r.phi);
        assert!(r.margin_max > 0.0);

        let r = stability_check(&make_cusp_family(3));
        assert_eq!(r.equality_class, EqualityClass::ConstantWidth);
        assert_eq!(
            (r.phi, r.d_inf, r.d_2, r.margin_max, r.margin_l2),
            (0.0, 0.0, 0.0, 0.0, 0.0)
        );
    }

    #[test]
    fn odd_part_bound_examples() {
        let odd = [Harmonic::new(1, 0.3, 0.1), Harmonic::new(3, -0.2, 0.5)];
        let b = odd_part_max_bound(&odd);
        assert_eq!(b.max_odd, b.max_full);
        let even = [Harmonic::new(2, 0.3, 0.1), Harmonic::new(4, -0.2, 0.5)];
        let b = odd_part_max_bound(&even);
        assert_eq!(b.max_odd, 0.0);
        assert!(b.max_full > 0.0 && b.holds());
    }
}
