use super::cdf::sinr_cdf_asymptotic;
use super::coeffs::approx_coeffs;
use crate::error::Result;
use crate::model::{link_stats, Allocation, LinkStats, Modulation, SystemConfig};
use crate::quad::{integrate, Domain, Tolerance};
use crate::sfun::{gamma_fn, hyp2f1, hyp2f1_complement};
use std::f64::consts::PI;

/// Number of `(A_i, B_i)` pairs used unless a caller asks otherwise.
pub const DEFAULT_SERIES_TERMS: usize = 3;

/// First coefficient of the exponential approximation; fixed at one.
const B0: f64 = 1.0;

/// `κ = α√β / (2√(2π)) · Γ(1/2)`
pub fn kappa(modulation: &Modulation) -> f64 {
    modulation.alpha * modulation.beta.sqrt() / (2.0 * (2.0 * PI).sqrt()) * PI.sqrt()
}

fn clamp_ser(raw: f64, what: &str) -> f64 {
    let clamped = raw.clamp(0.0, 0.5);
    if clamped != raw {
        log::debug!("{what}: raw SER {raw:e} clamped to {clamped:e}");
    }
    clamped
}

/// The individual series terms `I_0, ..., I_{n-1}`.
pub fn ser_series_terms(stats: &LinkStats, cfg: &SystemConfig, n_terms: usize) -> Result<Vec<f64>> {
    let coeffs = approx_coeffs(n_terms)?;
    let Modulation { alpha, beta } = cfg.modulation;
    let (lsr, lrd, eta) = (stats.lambda_sr, stats.lambda_rd, stats.eta);
    let (rs, rd) = (lsr.sqrt(), lrd.sqrt());
    let sum_sq = (1.0 / rs + 1.0 / rd).powi(2);
    let diff_sq = (1.0 / rs - 1.0 / rd).powi(2);
    let prefactor = 2.0 * alpha * (2.0 * beta).sqrt() / (lsr * lrd);

    let mut terms = Vec::with_capacity(n_terms);
    for (i, &(a_i, b_i)) in coeffs.pairs().iter().enumerate() {
        let weight = a_i * eta.powi(2 * i as i32);
        if weight == 0.0 {
            terms.push(0.0);
            continue;
        }
        let order = 2.0 * i as f64;
        let c_i = gamma_fn(order + 2.5)? * gamma_fn(order + 0.5)? / gamma_fn(order + 2.0)?;
        let base = 0.5 * beta + eta * b_i;
        let x_i = base + sum_sq;
        let y_i = base + diff_sq;
        let z = y_i / x_i;
        let f = if z <= 0.5 {
            hyp2f1(order + 2.5, 1.5, order + 2.0, z)?
        } else {
            // X - Y = 4/√(λ_SR λ_RD); form 1 - z from it rather than from z
            let w = 4.0 / (rs * rd * x_i);
            hyp2f1_complement(order + 2.5, 1.5, order + 2.0, w)?
        };
        terms.push(c_i * prefactor * weight / x_i.powf(order + 2.5) * f);
    }
    Ok(terms)
}

/// Series approximation `SER ≈ 1/2 - Σ I_i`, clamped to `[0, 1/2]`.
pub fn ser_series(stats: &LinkStats, cfg: &SystemConfig, n_terms: usize) -> Result<f64> {
    let terms = ser_series_terms(stats, cfg, n_terms)?;
    let total: f64 = crate::sum::compensated_sum(&terms);
    Ok(clamp_ser(0.5 - total, "ser_series"))
}

/// `α√β/(2√(2π)) ∫_0^∞ t^{-1/2} F(t) e^{-βt/2} dt` for an arbitrary CDF `F`,
/// integrated in `u = √t` so the endpoint singularity disappears.
pub fn ser_from_cdf<F: Fn(f64) -> f64>(cdf: F, modulation: &Modulation) -> Result<f64> {
    let Modulation { alpha, beta } = *modulation;
    let scale = (2.0 / beta).sqrt();
    let r = integrate(
        |u| {
            let w = (-0.5 * beta * u * u).exp();
            if w == 0.0 {
                0.0
            } else {
                cdf(u * u) * w
            }
        },
        Domain::ScaledTail { start: 0.0, scale },
        Tolerance::new(1e-14, 1e-11),
    )?;
    Ok(alpha * beta.sqrt() / (2.0 * (2.0 * PI).sqrt()) * 2.0 * r.value)
}

/// Numerical SER from the asymptotic CDF; the oracle for [`ser_series`].
pub fn ser_quadrature(stats: &LinkStats, cfg: &SystemConfig) -> Result<f64> {
    ser_from_cdf(|t| sinr_cdf_asymptotic(t, stats), &cfg.modulation)
}

/// Single-term high-power form `1/2 - κ (β/2 + 1/λ_SR + 1/λ_RD + B_0 η)^{-1/2}`.
pub fn ser_high_power(stats: &LinkStats, cfg: &SystemConfig) -> f64 {
    let m = &cfg.modulation;
    let f = 0.5 * m.beta + 1.0 / stats.lambda_sr + 1.0 / stats.lambda_rd + B0 * stats.eta;
    0.5 - kappa(m) / f.sqrt()
}

/// Optimization objective
/// `f(ρ_λ, ρ_D) = β/2 + (1 + ε P_R)/P_S · D_SR^v + D_RD^v / P_R`.
pub fn f_objective(alloc: &Allocation, cfg: &SystemConfig) -> f64 {
    let v = cfg.pathloss_exp;
    let ps = alloc.source_power(cfg);
    let pr = alloc.relay_power(cfg);
    let dsr = alloc.source_relay_distance(cfg).powf(v);
    let drd = alloc.relay_destination_distance(cfg).powf(v);
    0.5 * cfg.modulation.beta + (1.0 + cfg.rsi_level * pr) / ps * dsr + drd / pr
}

/// `(∂f/∂ρ_λ, ∂f/∂ρ_D)` in closed form.
pub fn f_partials(alloc: &Allocation, cfg: &SystemConfig) -> (f64, f64) {
    let (p, eps, v, d) = (
        cfg.total_power,
        cfg.rsi_level,
        cfg.pathloss_exp,
        cfg.sum_distance,
    );
    let (rl, rd) = (alloc.rho_lambda(), alloc.rho_d());
    let dsr = rd * d;
    let drd = (1.0 - rd) * d;
    // (1 + ε(1-ρ_λ)P)/(ρ_λ P) = (1 + εP)/(ρ_λ P) - ε
    let d_rho_lambda =
        -(1.0 + eps * p) * dsr.powf(v) / (rl * rl * p) + drd.powf(v) / ((1.0 - rl).powi(2) * p);
    let ps = rl * p;
    let pr = (1.0 - rl) * p;
    let d_rho_d = v * d * ((1.0 + eps * pr) / ps * dsr.powf(v - 1.0) - drd.powf(v - 1.0) / pr);
    (d_rho_lambda, d_rho_d)
}

/// Floor approached as `P → ∞` with the allocation held fixed:
/// `1/2 - κ (β/2 + ε (P_R/P_S) D_SR^v)^{-1/2}`.
pub fn ser_floor(alloc: &Allocation, cfg: &SystemConfig) -> f64 {
    let m = &cfg.modulation;
    let ratio = (1.0 - alloc.rho_lambda()) / alloc.rho_lambda();
    let f = 0.5 * m.beta
        + cfg.rsi_level * ratio * alloc.source_relay_distance(cfg).powf(cfg.pathloss_exp);
    0.5 - kappa(m) / f.sqrt()
}

/// High-power SER with the relay at its closed-form optimal position for a
/// fixed power split `ρ_λL`.
pub fn ser_location_optimized(cfg: &SystemConfig, rho_lambda_l: f64) -> f64 {
    let m = &cfg.modulation;
    let (p, eps, v) = (cfg.total_power, cfg.rsi_level, cfg.pathloss_exp);
    let rl = rho_lambda_l;
    let rbar = 1.0 - rl;
    let numer = (1.0 / (rl * p) + rbar / rl * eps) * cfg.sum_distance.powf(v);
    let inner = (rbar / rl + eps * rbar * rbar / rl * p).powf(1.0 / (v - 1.0));
    let denom = (1.0 + inner).powf(v - 1.0);
    0.5 - kappa(m) / (0.5 * m.beta + numer / denom).sqrt()
}

/// High-power SER with the closed-form optimal power split for a fixed relay
/// position `ρ_DP`.
pub fn ser_power_optimized(cfg: &SystemConfig, rho_dp: f64) -> f64 {
    let m = &cfg.modulation;
    let (p, eps, v) = (cfg.total_power, cfg.rsi_level, cfg.pathloss_exp);
    let near = rho_dp.powf(v);
    let far = (1.0 - rho_dp).powf(v);
    let cross = 2.0 * rho_dp.powf(0.5 * v) * (1.0 - rho_dp).powf(0.5 * v) * (p * eps + 1.0).sqrt();
    let f = 0.5 * m.beta + cfg.sum_distance.powf(v) / p * (near + far + cross);
    0.5 - kappa(m) / f.sqrt()
}

/// Convenience: series SER straight from a scenario and allocation.
pub(crate) fn ser_series_at(cfg: &SystemConfig, alloc: &Allocation, n_terms: usize) -> Result<f64> {
    ser_series(&link_stats(cfg, alloc), cfg, n_terms)
}
