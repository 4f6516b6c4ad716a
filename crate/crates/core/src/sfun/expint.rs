use super::EULER_GAMMA;
use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

const MAX_ITER: usize = 10_000;
const TINY: f64 = 1e-300;

fn check_domain(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            function: "exp_integral_e1",
            arg: x,
            reason: "requires 0 < x < inf",
        })
    }
}

fn e1_series(x: f64) -> f64 {
    // E1(x) = -γ - ln x - Σ_{k>=1} (-x)^k / (k k!)
    let mut acc = NeumaierSum::new();
    acc.add(-EULER_GAMMA);
    acc.add(-x.ln());
    let mut power = 1.0;
    for k in 1..MAX_ITER {
        let kf = k as f64;
        power *= -x / kf;
        let term = power / kf;
        acc.add(-term);
        if term.abs() < 1e-18 * acc.value().abs() {
            break;
        }
    }
    acc.value()
}

/// `e^x E1(x)` by the modified Lentz continued fraction, for x > 1.
fn e1_scaled_cf(x: f64) -> f64 {
    let mut b = x + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h
}

/// Exponential integral `E1(x) = ∫_x^∞ e^{-t}/t dt` for `x > 0`.
pub fn exp_integral_e1(x: f64) -> Result<f64> {
    check_domain(x)?;
    if x <= 1.0 {
        Ok(e1_series(x))
    } else {
        Ok(e1_scaled_cf(x) * (-x).exp())
    }
}

/// `e^x E1(x)`; stays finite where `E1` itself underflows.
pub fn exp_integral_e1_scaled(x: f64) -> Result<f64> {
    check_domain(x)?;
    if x <= 1.0 {
        Ok(e1_series(x) * x.exp())
    } else {
        Ok(e1_scaled_cf(x))
    }
}
