//! Closed-form length and area, the bounds on oriented areas of equidistants,
//! the improved isoperimetric inequality `L² ≥ 4πA + 8π|Ã_{E_½}|`, and the
//! constant-width identities (Barbier, area/caustic relation).

use std::f64::consts::PI;

use crate::equidistants::{oriented_area, psi_functional, EquidistantSupport};
use crate::error::{Error, Result};
use crate::support_fourier::FourierSupport;

/// Relative tolerance absorbing floating-point roundoff in exact identities.
pub const EPS_REL: f64 = 1e-9;
/// Default relative threshold on even harmonics for constant-width detection.
pub const CONSTANT_WIDTH_TOL: f64 = 1e-12;

/// Cauchy: `L = ∫ p dθ = 2π a0`.
pub fn length_closed_form(support: &FourierSupport) -> f64 {
    2.0 * PI * support.a0()
}

/// Blaschke in Fourier form: `A = πa0² − (π/2) Σ_{n≥2} (n²−1)(a_n² + b_n²)`.
pub fn area_closed_form(support: &FourierSupport) -> f64 {
    let a0 = support.a0();
    let sum: f64 = support
        .terms()
        .iter()
        .map(|h| {
            let n = f64::from(h.n);
            (n * n - 1.0) * h.energy()
        })
        .sum();
    PI * a0 * a0 - 0.5 * PI * sum
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveMetrics {
    pub length: f64,
    pub area: f64,
    pub psi: f64,
    /// Oriented area of the Wigner caustic.
    pub wigner_area: f64,
    /// `L² − 4πA`
    pub classic_deficit: f64,
    /// `L² − 4πA − 8π|Ã_{E_½}|`
    pub improved_deficit: f64,
}

impl CurveMetrics {
    pub fn compute(support: &FourierSupport) -> Self {
        let length = length_closed_form(support);
        let area = area_closed_form(support);
        let wigner_area = oriented_area(&EquidistantSupport::new(support.clone(), 0.5));
        let classic_deficit = length * length - 4.0 * PI * area;
        CurveMetrics {
            length,
            area,
            psi: psi_functional(support),
            wigner_area,
            classic_deficit,
            improved_deficit: classic_deficit - 8.0 * PI * wigner_area.abs(),
        }
    }

    /// `1e-9·L²`, the slack allowed on deficit comparisons.
    pub fn eps_num(&self) -> f64 {
        EPS_REL * self.length * self.length
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IsoperimetricCheck {
    pub holds: bool,
    pub margin: f64,
    pub equality: bool,
}

pub fn improved_isoperimetric_check(metrics: &CurveMetrics) -> IsoperimetricCheck {
    let eps = metrics.eps_num();
    let margin = metrics.improved_deficit;
    IsoperimetricCheck {
        holds: margin >= -eps,
        margin,
        equality: margin.abs() <= eps,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundsRegime {
    /// `λ ∈ {0, 1}`: the equidistant is the oval itself.
    Identity,
    /// `λ ∈ (0, ½) ∪ (½, 1)`
    Interior,
    /// `λ = ½`, bounds on twice the caustic area.
    Wigner,
    /// `λ ∉ [0, 1]`
    Exterior,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundsCheck {
    pub lower: f64,
    /// Oriented area, or twice the caustic area in the Wigner regime.
    pub value: f64,
    pub upper: f64,
    pub regime: BoundsRegime,
}

/// Evaluates the two-sided bound on `Ã_{E_λ(M)}` for the regime of `λ` and
/// checks it. A violation means an implementation bug.
pub fn bounds_check(support: &FourierSupport, lambda: f64) -> Result<BoundsCheck> {
    let length = length_closed_form(support);
    let area = area_closed_form(support);
    let value = oriented_area(&EquidistantSupport::new(support.clone(), lambda));

    let check = if lambda == 0.0 || lambda == 1.0 {
        BoundsCheck {
            lower: area,
            value: area,
            upper: area,
            regime: BoundsRegime::Identity,
        }
    } else if lambda == 0.5 {
        BoundsCheck {
            lower: area - length * length / (4.0 * PI),
            value: 2.0 * value,
            upper: 0.0,
            regime: BoundsRegime::Wigner,
        }
    } else {
        let affine = area - lambda * (1.0 - lambda) * length * length / PI;
        let scaled = (2.0 * lambda - 1.0).powi(2) * area;
        if (0.0..=1.0).contains(&lambda) {
            BoundsCheck {
                lower: affine,
                value,
                upper: scaled,
                regime: BoundsRegime::Interior,
            }
        } else {
            BoundsCheck {
                lower: scaled,
                value,
                upper: affine,
                regime: BoundsRegime::Exterior,
            }
        }
    };

    let scale = area.max(check.lower.abs()).max(check.upper.abs());
    let eps = EPS_REL * scale;
    if check.value < check.lower - eps || check.value > check.upper + eps {
        return Err(Error::BoundViolation {
            lambda,
            lower: check.lower,
            value: check.value,
            upper: check.upper,
        });
    }
    Ok(check)
}

/// Largest even-harmonic amplitude `√(a_n² + b_n²)`, `n ≥ 2` even.
pub fn max_even_amplitude(support: &FourierSupport) -> f64 {
    support
        .terms()
        .iter()
        .filter(|h| h.is_even())
        .map(|h| h.amplitude())
        .fold(0.0, f64::max)
}

/// Constant width iff every even harmonic vanishes (up to `tol·a0`).
pub fn is_constant_width(support: &FourierSupport, tol: f64) -> bool {
    max_even_amplitude(support) <= tol * support.a0()
}

fn require_constant_width(support: &FourierSupport) -> Result<()> {
    if is_constant_width(support, CONSTANT_WIDTH_TOL) {
        Ok(())
    } else {
        Err(Error::NotConstantWidth {
            max_even: max_even_amplitude(support),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BarbierCheck {
    pub width: f64,
    pub length: f64,
    /// `|L − πw|`
    pub residual: f64,
}

/// Barbier: a curve of constant width `w` has length `πw`.
pub fn barbier_check(support: &FourierSupport) -> Result<BarbierCheck> {
    require_constant_width(support)?;
    let width = 2.0 * support.a0();
    let length = length_closed_form(support);
    Ok(BarbierCheck {
        width,
        length,
        residual: (length - PI * width).abs(),
    })
}

/// `|A − (πw²/4 − 2|Ã_{E_½}|)|` for a curve of constant width.
pub fn constant_width_area_identity(support: &FourierSupport) -> Result<f64> {
    require_constant_width(support)?;
    let w = 2.0 * support.a0();
    let area = area_closed_form(support);
    let caustic = oriented_area(&EquidistantSupport::new(support.clone(), 0.5));
    Ok((area - (PI * w * w / 4.0 - 2.0 * caustic.abs())).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equidistants::make_cusp_family;
    use crate::geometry::{polyline_signed_area, sample_curve};
    use crate::support_fourier::Harmonic;

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
    fn closed_forms() {
        let m3 = make_cusp_family(1);
        assert!(rel(length_closed_form(&m3), 22.0 * PI) < 1e-15);
        assert!(rel(area_closed_form(&m3), 117.0 * PI) < 1e-15);
        let k = stability_example();
        assert!(rel(length_closed_form(&k), 20.0 * PI) < 1e-15);
        assert!(rel(area_closed_form(&k), 26809.0 * PI / 288.0) < 1e-14);
        let c = FourierSupport::circle(1.5).unwrap();
        assert_eq!(length_closed_form(&c), 3.0 * PI);
        assert_eq!(area_closed_form(&c), 2.25 * PI);
    }

    #[test]
    fn first_harmonic_is_a_translation() {
        let k = stability_example();
        let mut terms = k.terms().to_vec();
        terms.push(Harmonic::new(1, 0.7, -1.3));
        let moved = FourierSupport::new(k.a0(), terms).unwrap();
        assert_eq!(CurveMetrics::compute(&moved), CurveMetrics::compute(&k));
    }

    #[test]
    fn improved_inequality_examples() {
        let m = CurveMetrics::compute(&make_cusp_family(1));
        let chk = improved_isoperimetric_check(&m);
        assert!(chk.holds && chk.equality);
        assert!(rel(m.length * m.length, 484.0 * PI * PI) < 1e-14);
        assert!(rel(4.0 * PI * m.area, 468.0 * PI * PI) < 1e-14);
        assert!(rel(8.0 * PI * m.wigner_area.abs(), 16.0 * PI * PI) < 1e-12);

        let circle = CurveMetrics::compute(&FourierSupport::circle(1.0).unwrap());
        let chk = improved_isoperimetric_check(&circle);
        assert!(chk.equality && circle.wigner_area == 0.0);

        let k = CurveMetrics::compute(&stability_example());
        let chk = improved_isoperimetric_check(&k);
        assert!(chk.holds && !chk.equality);
        assert!(rel(chk.margin, 25.875 * PI * PI) < 1e-12);
    }

    #[test]
    fn bounds_examples() {
        let m3 = make_cusp_family(1);
        for lambda in [0.1, 0.3, 0.7] {
            let b = bounds_check(&m3, lambda).unwrap();
            assert_eq!(b.regime, BoundsRegime::Interior);
            assert!((b.value - b.lower).abs() < 1e-9 * b.lower.abs());
        }
        let b = bounds_check(&m3, 0.5).unwrap();
        assert_eq!(b.regime, BoundsRegime::Wigner);
        assert!((b.value + 4.0 * PI).abs() < 1e-12);
        assert!((b.lower + 4.0 * PI).abs() < 1e-12);

        let sym = FourierSupport::new(5.0, [Harmonic::new(2, 1.0, 0.0)]).unwrap();
        let b = bounds_check(&sym, 0.3).unwrap();
        let a = area_closed_form(&sym);
        assert!((b.value - 0.16 * a).abs() < 1e-12 * a);
        assert!((b.upper - b.value).abs() < 1e-12 * a);

        let b = bounds_check(&stability_example(), 1.5).unwrap();
        assert_eq!(b.regime, BoundsRegime::Exterior);
        let b = bounds_check(&stability_example(), 1.0).unwrap();
        assert_eq!(b.regime, BoundsRegime::Identity);
        assert_eq!((b.lower, b.value, b.upper), (b.value, b.value, b.value));
    }

    #[test]
    fn constant_width_detection() {
        assert!(is_constant_width(&make_cusp_family(1), CONSTANT_WIDTH_TOL));
        let sym = FourierSupport::new(5.0, [Harmonic::new(2, 1.0, 0.0)]).unwrap();
        assert!(!is_constant_width(&sym, CONSTANT_WIDTH_TOL));
        for n in 1..=8 {
            assert!(is_constant_width(&make_cusp_family(n), CONSTANT_WIDTH_TOL));
        }
    }

    #[test]
    fn barbier_examples() {
        let b = barbier_check(&make_cusp_family(1)).unwrap();
        assert_eq!((b.width, b.residual), (22.0, 0.0));
        let b = barbier_check(&make_cusp_family(3)).unwrap();
        assert_eq!(b.width, 102.0);
        assert!(rel(b.length, 102.0 * PI) < 1e-15);
        let b = barbier_check(&FourierSupport::circle(2.0).unwrap()).unwrap();
        assert_eq!((b.width, b.length), (4.0, 4.0 * PI));
        assert!(matches!(
            barbier_check(&stability_example()),
            Err(Error::NotConstantWidth { .. })
        ));
    }

    #[test]
    fn area_identity_examples() {
        assert!(constant_width_area_identity(&make_cusp_family(1)).unwrap() < 1e-12);
        assert_eq!(
            constant_width_area_identity(&FourierSupport::circle(3.0).unwrap()).unwrap(),
            0.0
        );
        let m5 = make_cusp_family(2);
        assert!(rel(area_closed_form(&m5), 717.0 * PI) < 1e-15);
        let caustic = oriented_area(&EquidistantSupport::new(m5.clone(), 0.5));
        assert!(rel(caustic, -6.0 * PI) < 1e-12);
        assert!(constant_width_area_identity(&m5).unwrap() <= 1e-9);
        let shoelace = polyline_signed_area(&sample_curve(&m5, 100_000)).unwrap();
        assert!(rel(shoelace, 717.0 * PI) < 1e-8);
    }
}
