//! Analytic-versus-oracle suites on one scenario.

use crate::commands::SEARCH_TOLERANCE;
use crate::error::CliResult;
use crate::scenario::Scenario;
use crate::table::{num, opt_num, Table};
use fdrelay::analytic::{
    i2_upper_bound, ser_floor, ser_quadrature, ser_series, sinr_cdf_asymptotic,
    sinr_cdf_exact_numeric, DEFAULT_SERIES_TERMS,
};
use fdrelay::db_to_linear;
use fdrelay::mc::{Sampler, MIN_SYMBOLS};
use fdrelay::model::link_stats;
use fdrelay::opt::{
    foc_residual, minimize_1d, optimal_location_closed, optimal_power_closed, particular_solution,
    Objective1d,
};
use fdrelay::Allocation;

const THRESHOLDS: [f64; 4] = [0.5, 1.0, 2.0, 4.0];
const FLOOR_POWER_DB: f64 = 60.0;

struct Case {
    suite: &'static str,
    case: String,
    analytic: f64,
    oracle: f64,
    oracle_stderr: Option<f64>,
    tolerance: f64,
    pass: bool,
}

impl Case {
    /// Passes when `|analytic - oracle| <= tolerance`.
    fn within(
        suite: &'static str,
        case: String,
        analytic: f64,
        oracle: f64,
        se: Option<f64>,
        tolerance: f64,
    ) -> Self {
        Case {
            suite,
            case,
            analytic,
            oracle,
            oracle_stderr: se,
            tolerance,
            pass: (analytic - oracle).abs() <= tolerance,
        }
    }
}

/// Runs every suite; returns the CSV table and the number of failed cases.
pub fn validate(s: &Scenario) -> CliResult<(Table, usize)> {
    let cfg = s.system()?;
    let alloc = s.allocation()?;
    let stats = link_stats(&cfg, &alloc);
    let n = s.mc_samples;
    let mut cases = Vec::new();

    for &x in &THRESHOLDS {
        let asym = sinr_cdf_asymptotic(x, &stats);
        let exact = sinr_cdf_exact_numeric(x, &stats)?;
        let bound = i2_upper_bound(x, &stats);
        cases.push(Case {
            suite: "cdf_asymptotic_vs_exact",
            case: format!("x={x}"),
            analytic: asym,
            oracle: exact,
            oracle_stderr: None,
            tolerance: bound,
            pass: asym <= exact + 1e-15 && exact - asym <= bound,
        });
    }

    let curve = Sampler::new(n, s.seed).outage_curve(&stats, &THRESHOLDS)?;
    for (&x, est) in THRESHOLDS.iter().zip(&curve) {
        let exact = sinr_cdf_exact_numeric(x, &stats)?;
        cases.push(Case::within(
            "outage_exact_vs_mc",
            format!("x={x}"),
            exact,
            est.value,
            Some(est.std_error),
            3.0 * est.std_error + 0.05 * exact,
        ));
    }

    let series = ser_series(&stats, &cfg, DEFAULT_SERIES_TERMS)?;
    let quad = ser_quadrature(&stats, &cfg)?;
    cases.push(Case::within(
        "ser_series_vs_quadrature",
        format!("terms={DEFAULT_SERIES_TERMS}"),
        series,
        quad,
        None,
        0.01 * quad,
    ));

    let semi = Sampler::new(n, s.seed.wrapping_add(1)).ser_semianalytic(&stats, &cfg)?;
    cases.push(Case::within(
        "ser_quadrature_vs_mc",
        "semianalytic".into(),
        quad,
        semi.value,
        Some(semi.std_error),
        3.0 * semi.std_error + 0.05 * quad,
    ));

    if cfg.modulation.is_bpsk() {
        let sym = Sampler::new(n.max(MIN_SYMBOLS), s.seed.wrapping_add(2))
            .ser_symbol_level(&stats, &cfg)?;
        let combined = (sym.std_error.powi(2) + semi.std_error.powi(2)).sqrt();
        cases.push(Case::within(
            "ser_semianalytic_vs_symbol_level",
            "bpsk".into(),
            semi.value,
            sym.value,
            Some(combined),
            3.0 * combined,
        ));
    }

    let high = cfg.with_total_power(db_to_linear(FLOOR_POWER_DB))?;
    let floor = ser_floor(&alloc, &high);
    let at_floor = Sampler::new(n, s.seed.wrapping_add(3))
        .ser_semianalytic(&link_stats(&high, &alloc), &high)?;
    let floor_tol = if floor > 0.0 { 0.1 * floor } else { 1e-5 };
    cases.push(Case::within(
        "ser_floor_vs_mc",
        format!("p_db={FLOOR_POWER_DB}"),
        floor,
        at_floor.value,
        Some(at_floor.std_error),
        floor_tol,
    ));

    let rl = alloc.rho_lambda();
    let rd = alloc.rho_d();
    let series_at = |a: &Allocation| ser_series(&link_stats(&cfg, a), &cfg, DEFAULT_SERIES_TERMS);
    let loc = minimize_1d(Objective1d::Location, &cfg, rl, SEARCH_TOLERANCE)?;
    let closed_loc = series_at(&Allocation::new(rl, optimal_location_closed(&cfg, rl))?)?;
    cases.push(Case {
        suite: "optimizer",
        case: "location_search_not_worse_than_closed_form".into(),
        analytic: closed_loc,
        oracle: loc.ser,
        oracle_stderr: None,
        tolerance: 0.0,
        pass: loc.ser <= closed_loc * (1.0 + 1e-12),
    });
    let pow = minimize_1d(Objective1d::Power, &cfg, rd, SEARCH_TOLERANCE)?;
    let closed_pow = series_at(&Allocation::new(optimal_power_closed(&cfg, rd), rd)?)?;
    cases.push(Case {
        suite: "optimizer",
        case: "power_search_not_worse_than_closed_form".into(),
        analytic: closed_pow,
        oracle: pow.ser,
        oracle_stderr: None,
        tolerance: 0.0,
        pass: pow.ser <= closed_pow * (1.0 + 1e-12),
    });
    let residual = foc_residual(&particular_solution(&cfg), &cfg);
    cases.push(Case::within(
        "optimizer",
        "particular_solution_stationary".into(),
        residual,
        0.0,
        None,
        1e-9,
    ));

    let mut table = Table::new(&[
        "suite",
        "case",
        "analytic",
        "oracle",
        "oracle_stderr",
        "tolerance",
        "pass",
    ]);
    let mut failed = 0;
    for c in &cases {
        if !c.pass {
            failed += 1;
            log::warn!(
                "{} / {} failed: analytic {} oracle {}",
                c.suite,
                c.case,
                c.analytic,
                c.oracle
            );
        }
        table.push(vec![
            c.suite.to_string(),
            c.case.clone(),
            num(c.analytic),
            num(c.oracle),
            opt_num(c.oracle_stderr),
            num(c.tolerance),
            c.pass.to_string(),
        ]);
    }
    Ok((table, failed))
}
