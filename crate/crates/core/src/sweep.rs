//! λ-sweeps over the equidistant family of one oval.

use crate::equidistants::{cusp_parameters, equidistant_length, EquidistantSupport};
use crate::error::{Error, Result};
use crate::inequalities::{bounds_check, BoundsRegime};
use crate::par::Execution;
use crate::support_fourier::FourierSupport;

/// One row of a sweep. All columns refer to the set `E_λ(M)` itself, so in the
/// Wigner row both the area and its bounds are the halved values.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub lambda: f64,
    pub oriented_area: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    /// `None` when the cusp condition vanishes identically.
    pub cusp_count: Option<usize>,
    pub length_estimate: f64,
}

/// `steps` equally spaced values from `lo` to `hi` inclusive. Values within
/// `1e-12` of `½` are snapped to `½` so the Wigner row is recognised.
pub fn lambda_grid(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>> {
    if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
        return Err(Error::InvalidRange(format!("need lo < hi, got {lo}:{hi}")));
    }
    if steps < 2 {
        return Err(Error::InvalidRange(format!(
            "need at least 2 steps, got {steps}"
        )));
    }
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| {
            let t = i as f64 / last;
            let l = lo + (hi - lo) * t;
            if (l - 0.5).abs() <= 1e-12 {
                0.5
            } else {
                l
            }
        })
        .collect())
}

pub fn sweep_row(support: &FourierSupport, lambda: f64, length_panels: usize) -> Result<SweepRow> {
    let bounds = bounds_check(support, lambda)?;
    let eq = EquidistantSupport::new(support.clone(), lambda);
    let half = if bounds.regime == BoundsRegime::Wigner {
        0.5
    } else {
        1.0
    };
    let cusp_count = match cusp_parameters(&eq) {
        Ok(c) => Some(c.len()),
        Err(Error::DegenerateRoot { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(SweepRow {
        lambda,
        oriented_area: half * bounds.value,
        lower_bound: half * bounds.lower,
        upper_bound: half * bounds.upper,
        cusp_count,
        length_estimate: equidistant_length(&eq, length_panels),
    })
}

/// Rows in the order of `lambdas`; the first bound violation aborts the sweep.
pub fn sweep(
    support: &FourierSupport,
    lambdas: &[f64],
    length_panels: usize,
    exec: Execution,
) -> Result<Vec<SweepRow>> {
    exec.map_coarse(lambdas.len(), |i| {
        sweep_row(support, lambdas[i], length_panels)
    })
    .into_iter()
    .collect()
}
