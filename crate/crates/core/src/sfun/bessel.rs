//! Modified Bessel function of the second kind, order one.
//!
//! Below `SERIES_LIMIT` the ascending series is used. Above it, Steed's
//! continued fraction (Temme's CF2) gives `e^x K1(x)` directly, which keeps
//! the result finite all the way out to the underflow edge near x = 700.

use super::EULER_GAMMA;
use crate::error::{Error, Result};
use crate::sum::NeumaierSum;
use std::f64::consts::PI;

const SERIES_LIMIT: f64 = 2.0;
const MAX_ITER: usize = 10_000;

fn check_domain(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            function: "bessel_k1",
            arg: x,
            reason: "requires 0 < x < inf",
        })
    }
}

/// Pieces of the ascending series at small x:
/// returns `(I1(x), S)` with `S = Σ [ψ(k+1)+ψ(k+2)] (x²/4)^k / (k!(k+1)!)`.
fn ascending_parts(x: f64) -> (f64, f64) {
    let q = 0.25 * x * x;
    let mut term = 1.0; // (x²/4)^k / (k!(k+1)!)
    let mut psi_k1 = -EULER_GAMMA; // ψ(k+1)
    let mut psi_k2 = 1.0 - EULER_GAMMA; // ψ(k+2)
    let mut i1 = NeumaierSum::new();
    let mut s = NeumaierSum::new();
    for k in 0..MAX_ITER {
        i1.add(term);
        s.add((psi_k1 + psi_k2) * term);
        let kf = k as f64;
        term *= q / ((kf + 1.0) * (kf + 2.0));
        psi_k1 += 1.0 / (kf + 1.0);
        psi_k2 += 1.0 / (kf + 2.0);
        if term < 1e-18 * i1.value() {
            break;
        }
    }
    (0.5 * x * i1.value(), s.value())
}

/// `e^x K1(x)` from Steed's continued fraction, valid for x >= 2.
fn k1_scaled_cf(x: f64) -> f64 {
    let a1 = 0.25;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    let h = a1 * h;
    let k0_scaled = (PI / (2.0 * x)).sqrt() / s;
    k0_scaled * (x + 0.5 - h) / x
}

/// `K1(x)` for `x > 0`.
pub fn bessel_k1(x: f64) -> Result<f64> {
    check_domain(x)?;
    if x < SERIES_LIMIT {
        let (i1, s) = ascending_parts(x);
        Ok(1.0 / x + (0.5 * x).ln() * i1 - 0.25 * x * s)
    } else {
        Ok(k1_scaled_cf(x) * (-x).exp())
    }
}

/// `e^x K1(x)` for `x > 0`.
pub fn bessel_k1_scaled(x: f64) -> Result<f64> {
    check_domain(x)?;
    if x < SERIES_LIMIT {
        Ok(bessel_k1(x)? * x.exp())
    } else {
        Ok(k1_scaled_cf(x))
    }
}

/// `1 - x K1(x)` without cancellation at small x, where `x K1(x) -> 1`.
/// Defined as 0 at `x = 0`.
pub fn one_minus_x_k1(x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    check_domain(x)?;
    if x < SERIES_LIMIT {
        let (i1, s) = ascending_parts(x);
        Ok(-x * (0.5 * x).ln() * i1 + 0.25 * x * x * s)
    } else {
        Ok(1.0 - x * bessel_k1(x)?)
    }
}
