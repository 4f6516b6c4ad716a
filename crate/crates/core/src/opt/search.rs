use super::{Method, OptResult};
use crate::analytic::ser_series_at;
use crate::analytic::{f_partials, DEFAULT_SERIES_TERMS};
use crate::error::{Error, Result};
use crate::model::{Allocation, SystemConfig, RATIO_MAX, RATIO_MIN};

/// Bracket width used when a caller has no particular accuracy in mind.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// Which ratio a one-dimensional search moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective1d {
    /// Relay position `ρ_D`, power split held fixed.
    Location,
    /// Power split `ρ_λ`, relay position held fixed.
    Power,
}

impl Objective1d {
    fn allocation(self, free: f64, fixed: f64) -> Result<Allocation> {
        match self {
            Objective1d::Location => Allocation::new(fixed, free),
            Objective1d::Power => Allocation::new(free, fixed),
        }
    }
}

/// Golden-section search of the series SER over the free ratio in
/// `[RATIO_MIN, RATIO_MAX]` until the bracket is no wider than `tol`.
pub fn minimize_1d(
    objective: Objective1d,
    cfg: &SystemConfig,
    fixed_ratio: f64,
    tol: f64,
) -> Result<OptResult> {
    if !(1e-10..=1e-2).contains(&tol) {
        return Err(Error::Domain {
            function: "minimize_1d",
            arg: tol,
            reason: "tolerance must lie in [1e-10, 1e-2]",
        });
    }
    if !(fixed_ratio > 0.0 && fixed_ratio < 1.0) {
        return Err(Error::Domain {
            function: "minimize_1d",
            arg: fixed_ratio,
            reason: "fixed ratio must lie in (0, 1)",
        });
    }
    let eval = |x: f64| -> Result<f64> {
        let ser = ser_series_at(
            cfg,
            &objective.allocation(x, fixed_ratio)?,
            DEFAULT_SERIES_TERMS,
        )?;
        if ser.is_finite() {
            Ok(ser)
        } else {
            Err(Error::NonFiniteObjective { at: x })
        }
    };

    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (RATIO_MIN, RATIO_MAX);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = eval(c)?;
    let mut fd = eval(d)?;
    let mut iterations = 0;
    while b - a > tol {
        iterations += 1;
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = eval(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = eval(d)?;
        }
    }
    let x = 0.5 * (a + b);
    let allocation = objective.allocation(x, fixed_ratio)?;
    let (gl, gd) = f_partials(&allocation, cfg);
    let foc_residual = match objective {
        Objective1d::Location => gd.abs(),
        Objective1d::Power => gl.abs(),
    };
    Ok(OptResult {
        allocation,
        ser: eval(x)?,
        method: Method::GoldenSection,
        foc_residual,
        iterations,
    })
}
