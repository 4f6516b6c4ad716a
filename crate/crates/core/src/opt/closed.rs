use crate::error::{Error, Result};
use crate::model::{Allocation, SystemConfig};

/// High-power optimal relay position for a fixed power split:
/// `ρ_D* = 1 / (1 + ((1 + ε P_R) P_R / P_S)^{1/(v-1)})`.
pub fn optimal_location_closed(cfg: &SystemConfig, rho_lambda: f64) -> f64 {
    let p = cfg.total_power;
    let ps = rho_lambda * p;
    let pr = (1.0 - rho_lambda) * p;
    let ratio = (1.0 + cfg.rsi_level * pr) * pr / ps;
    1.0 / (1.0 + ratio.powf(1.0 / (cfg.pathloss_exp - 1.0)))
}

/// High-power optimal power split for a fixed relay position:
/// `ρ_λ* = 1 / (1 + (D_RD^v / (D_SR^v (1 + B_0 ε P)))^{1/2})`.
pub fn optimal_power_closed(cfg: &SystemConfig, rho_d: f64) -> f64 {
    let v = cfg.pathloss_exp;
    let dsr = (rho_d * cfg.sum_distance).powf(v);
    let drd = ((1.0 - rho_d) * cfg.sum_distance).powf(v);
    1.0 / (1.0 + (drd / (dsr * (1.0 + cfg.rsi_level * cfg.total_power))).sqrt())
}

/// Stationary point that exists for every `(ε, P, v)`:
/// `ρ_λ = √(1+εP) / (√(1+εP) + 1)`, `ρ_D = 1/2`.
pub fn particular_solution(cfg: &SystemConfig) -> Allocation {
    let s = (1.0 + cfg.rsi_level * cfg.total_power).sqrt();
    // ratios built from finite positive inputs, so construction cannot fail
    Allocation::new(s / (s + 1.0), 0.5).expect("finite ratios")
}

/// Power split first, then location, for `v = 2`; coincides with the joint optimum.
pub fn sequential_v2(cfg: &SystemConfig) -> Result<Allocation> {
    if (cfg.pathloss_exp - 2.0).abs() > 1e-12 {
        return Err(Error::Domain {
            function: "sequential_v2",
            arg: cfg.pathloss_exp,
            reason: "path-loss exponent must be 2",
        });
    }
    Ok(particular_solution(cfg))
}
