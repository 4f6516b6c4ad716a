use super::is_nonpositive_integer;
use crate::error::{Error, Result};
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Lanczos approximation for `x >= 0.5`.
fn gamma_lanczos(x: f64) -> f64 {
    let x = x - 1.0;
    let mut a = LANCZOS[0];
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        a += p / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    // split the power so t^(x+1/2) does not overflow before e^-t pulls it back
    let half = t.powf(0.5 * (x + 0.5));
    (2.0 * PI).sqrt() * half * (-t).exp() * half * a
}

/// Gamma function. Errors at the poles `0, -1, -2, ...`.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain {
            function: "gamma",
            arg: x,
            reason: "NaN",
        });
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole {
            function: "gamma",
            arg: x,
        });
    }
    if x < 0.5 {
        Ok(PI / ((PI * x).sin() * gamma_lanczos(1.0 - x)))
    } else {
        Ok(gamma_lanczos(x))
    }
}

/// `1/Γ(x)`, which is entire: zero at the poles of Γ.
pub fn recip_gamma(x: f64) -> f64 {
    match gamma_fn(x) {
        Ok(g) => 1.0 / g,
        Err(_) => 0.0,
    }
}

/// Digamma `ψ(x) = Γ'(x)/Γ(x)`.
pub fn digamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) || x.is_nan() {
        return Err(Error::Pole {
            function: "digamma",
            arg: x,
        });
    }
    if x < 0.0 {
        // reflection
        return Ok(digamma(1.0 - x)? - PI / (PI * x).tan());
    }
    let mut x = x;
    let mut shift = 0.0;
    while x < 10.0 {
        shift -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    // Bernoulli tail: B2k / (2k x^2k)
    let tail = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2
                        * (1.0 / 252.0
                            - inv2
                                * (1.0 / 240.0
                                    - inv2
                                        * (1.0 / 132.0
                                            - inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
    Ok(shift + x.ln() - 0.5 / x - tail)
}
