use super::closed::particular_solution;
use super::{foc_residual, Method, OptResult};
use crate::analytic::{ser_series_at, DEFAULT_SERIES_TERMS};
use crate::error::{Error, Result};
use crate::model::{Allocation, SystemConfig};

const SCAN_POINTS: usize = 10_000;
const SCAN_HALF_WIDTH: f64 = 40.0;
const BISECTION_TOL: f64 = 1e-12;
/// Roots closer than this in logit space are treated as one.
const DEDUP_TOL: f64 = 1e-4;

/// Logarithm of the stationarity condition, with `ρ̄ = 1 - ρ_λ = 1/(1 + e^{-t})`:
/// `v ln(1 + εP ρ̄) - (v - 2) t - (v - 1) ln(1 + εP)`.
fn log_condition(t: f64, k: f64, v: f64) -> f64 {
    let rbar = 1.0 / (1.0 + (-t).exp());
    v * (k * rbar).ln_1p() - (v - 2.0) * t - (v - 1.0) * k.ln_1p()
}

fn allocation_from_logit(t: f64, k: f64, v: f64) -> Result<Allocation> {
    let rbar = 1.0 / (1.0 + (-t).exp());
    let rho_lambda = 1.0 / (1.0 + t.exp());
    // ((1 + εP ρ̄) ρ̄ / (1 - ρ̄))^{1/(v-1)} with ρ̄/(1-ρ̄) = e^t
    let ratio = ((1.0 + k * rbar).ln() + t) / (v - 1.0);
    Allocation::new(rho_lambda, 1.0 / (1.0 + ratio.exp()))
}

fn bisect(mut lo: f64, mut hi: f64, k: f64, v: f64) -> f64 {
    let mut f_lo = log_condition(lo, k, v);
    while hi - lo > BISECTION_TOL {
        let mid = 0.5 * (lo + hi);
        let f_mid = log_condition(mid, k, v);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Every stationary point of the high-power objective, found by a sign scan
/// of the reduced one-variable condition followed by bisection. The
/// particular solution is always included.
pub fn joint_foc_roots(cfg: &SystemConfig) -> Vec<Allocation> {
    let k = cfg.rsi_level * cfg.total_power;
    let v = cfg.pathloss_exp;
    let particular = particular_solution(cfg);
    if k == 0.0 && (v - 2.0).abs() < 1e-12 {
        // the condition vanishes identically; every split with ρ_D = 1/2 is stationary
        return vec![particular];
    }

    let t_particular = -(1.0 + k).sqrt().ln();
    let mut logits = vec![t_particular];
    let step = 2.0 * SCAN_HALF_WIDTH / SCAN_POINTS as f64;
    let mut t_prev = -SCAN_HALF_WIDTH;
    let mut h_prev = log_condition(t_prev, k, v);
    for i in 1..=SCAN_POINTS {
        let t = -SCAN_HALF_WIDTH + i as f64 * step;
        let h = log_condition(t, k, v);
        let root = if h == 0.0 {
            Some(t)
        } else if h_prev != 0.0 && (h < 0.0) != (h_prev < 0.0) {
            Some(bisect(t_prev, t, k, v))
        } else {
            None
        };
        if let Some(r) = root {
            if logits.iter().all(|&x| (x - r).abs() > DEDUP_TOL) {
                logits.push(r);
            }
        }
        t_prev = t;
        h_prev = h;
    }

    let mut roots = vec![particular];
    for &t in &logits[1..] {
        match allocation_from_logit(t, k, v) {
            Ok(a) => roots.push(a),
            Err(e) => log::debug!("dropping root at logit {t}: {e}"),
        }
    }
    roots.sort_by(|a, b| a.rho_lambda().total_cmp(&b.rho_lambda()));
    roots
}

/// Closed-form candidate power splits for `v = 3`:
/// `√(1+εP)/(√(1+εP)+1)` and, when `εP ≥ 3`, `(1 + εP ± √((εP-3)(εP+1))) / (2εP)`.
pub fn joint_v3_closed(cfg: &SystemConfig) -> Result<Vec<f64>> {
    if (cfg.pathloss_exp - 3.0).abs() > 1e-12 {
        return Err(Error::Domain {
            function: "joint_v3_closed",
            arg: cfg.pathloss_exp,
            reason: "path-loss exponent must be 3",
        });
    }
    let k = cfg.rsi_level * cfg.total_power;
    let s = (1.0 + k).sqrt();
    let mut out = vec![s / (s + 1.0)];
    if k >= 3.0 {
        let disc = ((k - 3.0) * (k + 1.0)).sqrt();
        for r in [(1.0 + k + disc) / (2.0 * k), (1.0 + k - disc) / (2.0 * k)] {
            if r > 0.0 && r < 1.0 && out.iter().all(|&x| (x - r).abs() > 1e-12) {
                out.push(r);
            }
        }
    }
    Ok(out)
}

/// Minimum-SER allocation among all stationary points, scored with the
/// series SER. Ties go to the particular solution.
pub fn select_joint_optimum(cfg: &SystemConfig) -> Result<OptResult> {
    let particular = particular_solution(cfg);
    let candidates = joint_foc_roots(cfg);
    let mut best = particular;
    let mut best_ser = ser_series_at(cfg, &particular, DEFAULT_SERIES_TERMS)?;
    for cand in &candidates {
        if *cand == particular {
            continue;
        }
        let ser = ser_series_at(cfg, cand, DEFAULT_SERIES_TERMS)?;
        if ser < best_ser * (1.0 - 1e-12) {
            best = *cand;
            best_ser = ser;
        }
    }
    let method = if best == particular {
        Method::JointParticular
    } else {
        Method::JointRoots
    };
    Ok(OptResult {
        allocation: best,
        ser: best_ser,
        method,
        foc_residual: foc_residual(&best, cfg),
        iterations: candidates.len(),
    })
}
