//! Planar ovals described by Minkowski support functions.
//!
//! An oval is stored as a truncated Fourier series of its support function
//! ([`FourierSupport`]). From those coefficients the crate computes
//!
//! - points, length and enclosed area of the oval ([`geometry`], [`inequalities`]),
//! - affine λ-equidistants and the Wigner caustic: oriented areas, lengths,
//!   cusps ([`equidistants`]),
//! - the improved isoperimetric inequality `L² ≥ 4πA + 8π|Ã_{E_½}|` and the
//!   bounds on equidistant areas ([`inequalities`]),
//! - stability of that inequality against the Hausdorff and `L²` distances to
//!   the associated constant-width curve ([`stability`]).
//!
//! Closed forms are paired with independent numeric oracles (shoelace areas,
//! polyline lengths, quadrature) in [`geometry`].
//!
//! ```
//! use ovalkit::{equidistants, inequalities, FourierSupport, Harmonic};
//! use std::f64::consts::PI;
//!
//! // p(θ) = cos 3θ + 11, a curve of constant width 22
//! let m = FourierSupport::new(11.0, [Harmonic::new(3, 1.0, 0.0)]).unwrap();
//! let metrics = inequalities::CurveMetrics::compute(&m);
//! assert!((metrics.area - 117.0 * PI).abs() < 1e-12);
//! assert!((metrics.wigner_area + 2.0 * PI).abs() < 1e-12);
//! assert!(inequalities::improved_isoperimetric_check(&metrics).equality);
//!
//! let eq = equidistants::EquidistantSupport::new(m, 0.5);
//! assert_eq!(equidistants::cusp_parameters(&eq).unwrap().len(), 3);
//! ```
//!
//! # Features
//!
//! `parallel` (default) runs sampling, scans, sweeps and random ensembles on
//! rayon. Without it everything runs sequentially with identical results.

pub mod ensemble;
pub mod equidistants;
pub mod error;
pub mod geometry;
pub mod inequalities;
pub mod par;
pub mod stability;
pub mod support_fourier;
pub mod svg;
pub mod sweep;

pub use error::{Error, Result};
pub use geometry::{PlanarPoint, Polyline};
pub use par::Execution;
pub use support_fourier::{CurveSpec, FourierSupport, Harmonic, PolarTangentialSample, TrigPoly};
