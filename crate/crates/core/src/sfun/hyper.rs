//! Gauss hypergeometric function `2F1(a, b; c; z)` on `0 <= z < 1`.
//!
//! For `z <= 1/2` the power series is summed directly. Above that the
//! argument is mapped to `w = 1 - z` with the linear transformation formulas.
//! When `c - a - b` is an integer (the SER series always has `c - a - b = -2`)
//! the two-series form is singular and the logarithmic formulas are used
//! instead. Callers that already hold `1 - z` to full precision should use
//! [`hyp2f1_complement`], since forming `1 - z` from a `z` close to 1 throws
//! away most of the significant digits.

use super::{digamma, gamma_fn, is_nonpositive_integer, recip_gamma};
use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

const MAX_TERMS: usize = 200_000;
const INTEGER_TOL: f64 = 1e-12;
/// Within this distance of an integer `c - a - b` the two-series transform
/// loses too much to cancellation; the direct series is used instead.
const NEAR_INTEGER_TOL: f64 = 1e-4;

fn check_params(a: f64, b: f64, c: f64) -> Result<()> {
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::Domain {
            function: "hyp2f1",
            arg: c,
            reason: "parameters must be finite",
        });
    }
    if is_nonpositive_integer(c) {
        return Err(Error::Domain {
            function: "hyp2f1",
            arg: c,
            reason: "c must not be a non-positive integer",
        });
    }
    Ok(())
}

/// Direct power series `Σ (a)_n (b)_n / ((c)_n n!) z^n`.
pub fn hyp2f1_series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    check_params(a, b, c)?;
    if z.abs() >= 1.0 {
        return Err(Error::NonConvergence {
            what: "hyp2f1 power series",
            estimate: f64::INFINITY,
        });
    }
    let mut acc = NeumaierSum::new();
    let mut term = 1.0;
    for n in 0..MAX_TERMS {
        acc.add(term);
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        if term == 0.0 {
            return Ok(acc.value());
        }
        if n > 2 && term.abs() <= 1e-17 * acc.value().abs() {
            // past the hump the terms decrease monotonically
            let ratio = ((a + nf + 1.0) * (b + nf + 1.0) / ((c + nf + 1.0) * (nf + 2.0)) * z).abs();
            if ratio < 1.0 {
                acc.add(term);
                return Ok(acc.value());
            }
        }
    }
    Err(Error::NonConvergence {
        what: "hyp2f1 power series",
        estimate: term.abs(),
    })
}

/// `2F1(a, b; c; z)` for `0 <= z < 1`.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    check_params(a, b, c)?;
    if !(0.0..1.0).contains(&z) {
        return Err(if z >= 1.0 {
            Error::NonConvergence {
                what: "hyp2f1 (z >= 1)",
                estimate: f64::INFINITY,
            }
        } else {
            Error::Domain {
                function: "hyp2f1",
                arg: z,
                reason: "requires 0 <= z < 1",
            }
        });
    }
    if z <= 0.5 {
        return hyp2f1_series(a, b, c, z);
    }
    hyp2f1_complement(a, b, c, 1.0 - z)
}

/// `2F1(a, b; c; 1 - w)` for `0 < w <= 1`, with `w` supplied directly.
pub fn hyp2f1_complement(a: f64, b: f64, c: f64, w: f64) -> Result<f64> {
    check_params(a, b, c)?;
    if !(w > 0.0 && w <= 1.0) {
        return Err(if w <= 0.0 {
            Error::NonConvergence {
                what: "hyp2f1 (z >= 1)",
                estimate: f64::INFINITY,
            }
        } else {
            Error::Domain {
                function: "hyp2f1",
                arg: 1.0 - w,
                reason: "requires 0 <= z < 1",
            }
        });
    }
    let z = 1.0 - w;
    if w >= 0.5 || is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        return hyp2f1_series(a, b, c, z);
    }
    let s = c - a - b;
    let m = s.round();
    if (s - m).abs() < INTEGER_TOL {
        if m >= 0.0 {
            log_case_nonnegative(a, b, m as usize, w)
        } else {
            log_case_negative(a, b, (-m) as usize, w)
        }
    } else if (s - m).abs() < NEAR_INTEGER_TOL {
        hyp2f1_series(a, b, c, z)
    } else {
        two_series(a, b, c, w)
    }
}

/// Non-integer `c - a - b`: two gamma-weighted series in `w`.
fn two_series(a: f64, b: f64, c: f64, w: f64) -> Result<f64> {
    let s = c - a - b;
    let gc = gamma_fn(c)?;
    let first = gc * gamma_fn(s)? * recip_gamma(c - a) * recip_gamma(c - b);
    let second = gc * gamma_fn(-s)? * recip_gamma(a) * recip_gamma(b);
    let mut total = 0.0;
    if first != 0.0 {
        total += first * hyp2f1_series(a, b, 1.0 - s, w)?;
    }
    if second != 0.0 {
        total += second * w.powf(s) * hyp2f1_series(c - a, c - b, s + 1.0, w)?;
    }
    Ok(total)
}

/// `c = a + b + m`, `m >= 0` integer.
fn log_case_nonnegative(a: f64, b: f64, m: usize, w: f64) -> Result<f64> {
    let mf = m as f64;
    let gabm = gamma_fn(a + b + mf)?;
    let mut finite = NeumaierSum::new();
    if m > 0 {
        let lead = gamma_fn(mf)? * gabm * recip_gamma(a + mf) * recip_gamma(b + mf);
        let mut term = 1.0;
        for n in 0..m {
            finite.add(lead * term);
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((nf + 1.0) * (1.0 - mf + nf)) * w;
        }
    }
    let weight = gabm * recip_gamma(a) * recip_gamma(b) * (-w).powi(m as i32);
    if weight == 0.0 {
        return Ok(finite.value());
    }
    let log_sum = log_series(a + mf, b + mf, m, w)?;
    Ok(finite.value() - weight * log_sum)
}

/// `c = a + b - m`, `m >= 1` integer.
fn log_case_negative(a: f64, b: f64, m: usize, w: f64) -> Result<f64> {
    let mf = m as f64;
    let gabm = gamma_fn(a + b - mf)?;
    let lead = gamma_fn(mf)? * gabm * recip_gamma(a) * recip_gamma(b) * w.powi(-(m as i32));
    let mut finite = NeumaierSum::new();
    let mut term = 1.0;
    for n in 0..m {
        finite.add(lead * term);
        let nf = n as f64;
        term *= (a - mf + nf) * (b - mf + nf) / ((nf + 1.0) * (1.0 - mf + nf)) * w;
    }
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let weight = sign * gabm * recip_gamma(a - mf) * recip_gamma(b - mf);
    if weight == 0.0 {
        return Ok(finite.value());
    }
    let log_sum = log_series(a, b, m, w)?;
    Ok(finite.value() - weight * log_sum)
}

/// `Σ_n (p)_n (q)_n / (n! (n+m)!) w^n [ln w - ψ(n+1) - ψ(n+m+1) + ψ(p+n) + ψ(q+n)]`
fn log_series(p: f64, q: f64, m: usize, w: f64) -> Result<f64> {
    let ln_w = w.ln();
    let mut psi_n1 = digamma(1.0)?;
    let mut psi_nm1 = digamma(m as f64 + 1.0)?;
    let mut psi_p = digamma(p)?;
    let mut psi_q = digamma(q)?;
    // (p)_0 (q)_0 / (0! m!)
    let mut coef = recip_gamma(m as f64 + 1.0);
    let mut acc = NeumaierSum::new();
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let term = coef * (ln_w - psi_n1 - psi_nm1 + psi_p + psi_q);
        acc.add(term);
        if n > 2 && term.abs() <= 1e-18 * acc.value().abs() {
            return Ok(acc.value());
        }
        coef *= (p + nf) * (q + nf) / ((nf + 1.0) * (nf + 1.0 + m as f64)) * w;
        psi_n1 += 1.0 / (nf + 1.0);
        psi_nm1 += 1.0 / (nf + 1.0 + m as f64);
        psi_p += 1.0 / (p + nf);
        psi_q += 1.0 / (q + nf);
        if coef == 0.0 {
            return Ok(acc.value());
        }
    }
    Err(Error::NonConvergence {
        what: "hyp2f1 logarithmic series",
        estimate: coef.abs(),
    })
}
