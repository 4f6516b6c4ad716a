use crate::error::Result;
use crate::model::LinkStats;
use crate::quad::{integrate, Domain, Tolerance};
use crate::sfun::{exp_integral_e1_scaled, one_minus_x_k1};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CdfMode {
    Asymptotic,
    Exact,
}

/// Closed-form asymptotic CDF of the end-to-end SINR:
///
/// `F(x) = 1 - e^{-(1/λ_SR + 1/λ_RD)x} / (1 + ηx) · z K1(z)`, `z = 2x/√(λ_SR λ_RD)`.
///
/// Evaluated as `[ηx - expm1(-cx) + e^{-cx}(1 - zK1(z))] / (1 + ηx)` so that
/// small outage probabilities keep their relative precision.
pub fn sinr_cdf_asymptotic(x: f64, stats: &LinkStats) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x.is_infinite() {
        return 1.0;
    }
    let c = 1.0 / stats.lambda_sr + 1.0 / stats.lambda_rd;
    let z = 2.0 * x / (stats.lambda_sr * stats.lambda_rd).sqrt();
    let deficit = one_minus_x_k1(z).expect("z is positive and finite");
    let decay = (-c * x).exp();
    let ex = stats.eta * x;
    let f = (ex - (-c * x).exp_m1() + decay * deficit) / (1.0 + ex);
    f.clamp(0.0, 1.0)
}

/// CDF of `XY/(X+Y)` with `X = γ_SR/(γ_LI+1)` and `Y = γ_RD`, by quadrature of
///
/// `F(x) = P(Y <= x) + ∫_0^∞ f_Y(x+t) F_X(x + x²/t) dt`,
/// `F_X(w) = 1 - e^{-w/λ_SR}/(1+ηw)`.
///
/// This is the un-closed integral behind the asymptotic form and serves as its oracle.
pub fn sinr_cdf_exact_numeric(x: f64, stats: &LinkStats) -> Result<f64> {
    if x <= 0.0 {
        return Ok(0.0);
    }
    if x.is_infinite() {
        return Ok(1.0);
    }
    let (lsr, lrd, eta) = (stats.lambda_sr, stats.lambda_rd, stats.eta);
    let cdf_x = |w: f64| {
        if w.is_infinite() {
            return 1.0;
        }
        let ew = eta * w;
        (ew - (-w / lsr).exp_m1()) / (1.0 + ew)
    };
    // t = λ_RD u, so the exponential weight becomes e^{-u}
    let integrand = |u: f64| (-u).exp() * cdf_x(x + x * x / (lrd * u));
    let body = integrate(
        integrand,
        Domain::UpperTail(0.0),
        Tolerance::new(1e-13, 1e-12),
    )?;
    let head = -(-x / lrd).exp_m1();
    Ok((head + (-x / lrd).exp() * body.value).clamp(0.0, 1.0))
}

/// Upper bound on the gap between the exact and asymptotic survivor functions:
/// `C η x² / (λ_RD (1+ηx)) · e^q E1(q)` with `q = η x² / (λ_RD (1+ηx))`.
pub fn i2_upper_bound(x: f64, stats: &LinkStats) -> f64 {
    if x <= 0.0 || stats.eta == 0.0 {
        return 0.0;
    }
    let c = (-(1.0 / stats.lambda_sr + 1.0 / stats.lambda_rd) * x).exp();
    let q = stats.eta * x * x / (stats.lambda_rd * (1.0 + stats.eta * x));
    c * q * exp_integral_e1_scaled(q).expect("q is positive")
}

/// Outage probability at an SNR threshold.
pub fn outage(threshold: f64, stats: &LinkStats, mode: CdfMode) -> Result<f64> {
    match mode {
        CdfMode::Asymptotic => Ok(sinr_cdf_asymptotic(threshold, stats)),
        CdfMode::Exact => sinr_cdf_exact_numeric(threshold, stats),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{link_stats, Allocation, SystemConfig};
    use crate::sfun::bessel_k1;
    use proptest::prelude::*;

    fn stats(p: f64, eps: f64) -> LinkStats {
        link_stats(
            &SystemConfig::bpsk(p, eps).unwrap(),
            &Allocation::symmetric(),
        )
    }

    #[test]
    fn endpoints() {
        let s = stats(100.0, 0.1);
        assert_eq!(sinr_cdf_asymptotic(0.0, &s), 0.0);
        assert_eq!(sinr_cdf_exact_numeric(0.0, &s).unwrap(), 0.0);
        assert_eq!(outage(0.0, &s, CdfMode::Asymptotic).unwrap(), 0.0);
        assert!(sinr_cdf_asymptotic(1e5, &s) > 1.0 - 1e-12);
        assert!(sinr_cdf_exact_numeric(1e5, &s).unwrap() > 1.0 - 1e-9);
        assert_eq!(sinr_cdf_asymptotic(f64::INFINITY, &s), 1.0);
    }

    #[test]
    fn matches_textbook_form() {
        let s = stats(100.0, 0.1);
        for &x in &[0.3, 1.0, 7.0, 300.0] {
            let z = 2.0 * x / (s.lambda_sr * s.lambda_rd).sqrt();
            let direct = 1.0
                - (-(1.0 / s.lambda_sr + 1.0 / s.lambda_rd) * x).exp() / (1.0 + s.eta * x)
                    * z
                    * bessel_k1(z).unwrap();
            assert!((sinr_cdf_asymptotic(x, &s) - direct).abs() < 1e-14);
        }
    }

    #[test]
    fn interference_free_case_is_exact() {
        // with η = 0 the dropped term vanishes and both routes coincide
        let s = stats(100.0, 0.0);
        for &x in &[0.5, 1.0, 4.0, 50.0] {
            let a = sinr_cdf_asymptotic(x, &s);
            let e = sinr_cdf_exact_numeric(x, &s).unwrap();
            assert!((a - e).abs() < 1e-11, "x={x} a={a} e={e}");
        }
    }

    #[test]
    fn gap_lies_within_the_i2_bound() {
        for &(p, eps) in &[(100.0, 0.1), (1000.0, 0.01), (40.0, 0.3), (10.0, 0.5)] {
            let s = stats(p, eps);
            for &x in &[0.2, 1.0, 3.0, 10.0] {
                let a = sinr_cdf_asymptotic(x, &s);
                let e = sinr_cdf_exact_numeric(x, &s).unwrap();
                let bound = i2_upper_bound(x, &s);
                assert!(a <= e + 1e-12, "asymptotic above exact at p={p} x={x}");
                assert!(e - a <= bound + 1e-12, "gap {} > bound {bound}", e - a);
            }
        }
    }

    #[test]
    fn high_power_relative_gap_small() {
        let s = stats(1000.0, 0.1);
        for &x in &[0.5, 1.0, 2.0] {
            let a = outage(x, &s, CdfMode::Asymptotic).unwrap();
            let e = outage(x, &s, CdfMode::Exact).unwrap();
            assert!((a - e).abs() / e < 0.05);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn cdfs_nondecreasing(p in 5.0f64..5000.0, eps in 0.0f64..0.5, x in 0.01f64..20.0, dx in 0.01f64..5.0) {
            let s = stats(p, eps);
            prop_assert!(sinr_cdf_asymptotic(x + dx, &s) >= sinr_cdf_asymptotic(x, &s));
            let e1 = sinr_cdf_exact_numeric(x, &s).unwrap();
            let e2 = sinr_cdf_exact_numeric(x + dx, &s).unwrap();
            prop_assert!(e2 >= e1 - 1e-12);
        }
    }
}
