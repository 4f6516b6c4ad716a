//! Special functions needed by the closed-form link expressions.
//!
//! Everything here is a pure function of its arguments and works in double
//! precision. Series loops use compensated summation.

mod bessel;
mod expint;
mod gamma;
mod hyper;
mod normal;

pub use bessel::{bessel_k1, bessel_k1_scaled, one_minus_x_k1};
pub use expint::{exp_integral_e1, exp_integral_e1_scaled};
pub use gamma::{digamma, gamma_fn, recip_gamma};
pub use hyper::{hyp2f1, hyp2f1_complement, hyp2f1_series};
pub use normal::gauss_q;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}
