use libm::erfc;
use std::f64::consts::SQRT_2;

/// Gaussian tail probability `Q(x) = P(N(0,1) > x)`.
///
/// Saturates to exactly 0 or 1 at the infinities.
pub fn gauss_q(x: f64) -> f64 {
    if x == f64::INFINITY {
        return 0.0;
    }
    if x == f64::NEG_INFINITY {
        return 1.0;
    }
    0.5 * erfc(x / SQRT_2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate, Domain, Tolerance};

    #[test]
    fn symmetric_point_and_limits() {
        assert_eq!(gauss_q(0.0), 0.5);
        assert_eq!(gauss_q(f64::INFINITY), 0.0);
        assert_eq!(gauss_q(f64::NEG_INFINITY), 1.0);
        assert!((gauss_q(-1.3) + gauss_q(1.3) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn matches_quadrature_of_the_normal_density() {
        let density = |t: f64| (-0.5 * t * t).exp() / (2.0 * std::f64::consts::PI).sqrt();
        for &x in &[1.644_853_6, 0.3, 2.5, 5.0] {
            let q = integrate(density, Domain::UpperTail(x), Tolerance::new(1e-15, 1e-13))
                .unwrap()
                .value;
            assert!(
                (gauss_q(x) - q).abs() <= 1e-13 * q.max(1e-300),
                "x={x} q={q} got={}",
                gauss_q(x)
            );
        }
        assert!((gauss_q(1.644_853_6) - 0.05).abs() < 1e-8);
    }
}
