//! Data behind the full-duplex curves of each figure. Defaults follow the
//! captions (`v = 3`, BPSK, `D = 1`, equal split or midpoint relay) and the
//! RSI grid below wherever a caption only says "different RSI levels".

use crate::commands::{row_seed, Mode, SEARCH_TOLERANCE};
use crate::error::{CliError, CliResult};
use crate::scenario::{grid, Scenario};
use crate::table::{num, opt_num, Table};
use fdrelay::analytic::{
    outage, ser_floor, ser_location_optimized, ser_power_optimized, ser_series, CdfMode,
    DEFAULT_SERIES_TERMS,
};
use fdrelay::exec::Schedule;
use fdrelay::mc::Sampler;
use fdrelay::model::{link_stats, Allocation, SystemConfig};
use fdrelay::opt::{
    minimize_1d, optimal_location_closed, optimal_power_closed, select_joint_optimum, Objective1d,
};
use fdrelay::Result as CoreResult;

pub const RSI_GRID: [f64; 4] = [0.0, 0.01, 0.1, 0.3];

fn config(base: &Scenario, p_db: f64, eps: f64) -> CoreResult<SystemConfig> {
    let mut s = *base;
    s.p_db = p_db;
    s.rsi_level = eps;
    s.system()
}

fn series(cfg: &SystemConfig, rl: f64, rd: f64) -> CoreResult<f64> {
    ser_series(
        &link_stats(cfg, &Allocation::new(rl, rd)?),
        cfg,
        DEFAULT_SERIES_TERMS,
    )
}

fn best_location(cfg: &SystemConfig, rl: f64) -> CoreResult<(f64, f64)> {
    let r = minimize_1d(Objective1d::Location, cfg, rl, SEARCH_TOLERANCE)?;
    Ok((r.allocation.rho_d(), r.ser))
}

fn best_power(cfg: &SystemConfig, rd: f64) -> CoreResult<(f64, f64)> {
    let r = minimize_1d(Objective1d::Power, cfg, rd, SEARCH_TOLERANCE)?;
    Ok((r.allocation.rho_lambda(), r.ser))
}

/// Builds a table by evaluating `row` over `points` in parallel, keeping order.
fn tabulate<P, F>(header: &[&str], points: &[P], row: F) -> CliResult<Table>
where
    P: Sync,
    F: Fn(usize, &P) -> CoreResult<Vec<String>> + Sync + Send,
{
    let mut t = Table::new(header);
    let rows = Schedule::Parallel.map_indexed(points.len(), |i| row(i, &points[i]));
    for r in rows {
        t.push(r?);
    }
    Ok(t)
}

fn product<A: Copy, B: Copy>(a: &[A], b: &[B]) -> Vec<(A, B)> {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .collect()
}

pub fn figure(n: u8, base: &Scenario, mode: Mode) -> CliResult<Table> {
    match n {
        2 => fig2(base, mode),
        3 => fig3(base),
        4 => fig4(base),
        5 => fig5(base),
        6 => fig6(base),
        7 => fig7(base),
        8 => fig8(base),
        9 => fig9(base),
        _ => Err(CliError::Usage(format!(
            "no figure {n}; choose one of 2..=9"
        ))),
    }
}

/// Outage and SER against total power, midpoint relay, equal split.
fn fig2(base: &Scenario, mode: Mode) -> CliResult<Table> {
    let header = [
        "rsi_level",
        "p_db",
        "outage_asymptotic",
        "outage_exact",
        "outage_mc",
        "outage_mc_stderr",
        "ser_series",
        "ser_floor",
        "ser_mc",
        "ser_mc_stderr",
    ];
    let points = product(&RSI_GRID, &grid(0.0, 40.0, 2.0));
    let alloc = Allocation::symmetric();
    let x = base.threshold();
    tabulate(&header, &points, |i, &(eps, p_db)| {
        let cfg = config(base, p_db, eps)?;
        let stats = link_stats(&cfg, &alloc);
        let mut analytic = [None; 4];
        if mode.analytic() {
            analytic = [
                Some(outage(x, &stats, CdfMode::Asymptotic)?),
                Some(outage(x, &stats, CdfMode::Exact)?),
                Some(ser_series(&stats, &cfg, DEFAULT_SERIES_TERMS)?),
                Some(ser_floor(&alloc, &cfg)),
            ];
        }
        let (mut out_mc, mut ser_mc) = (None, None);
        if mode.mc() {
            let sampler = Sampler::new(base.mc_samples, row_seed(base.seed, i));
            out_mc = Some(sampler.outage(&stats, x)?);
            ser_mc = Some(sampler.ser_semianalytic(&stats, &cfg)?);
        }
        Ok(vec![
            num(eps),
            num(p_db),
            opt_num(analytic[0]),
            opt_num(analytic[1]),
            opt_num(out_mc.map(|m| m.value)),
            opt_num(out_mc.map(|m| m.std_error)),
            opt_num(analytic[2]),
            opt_num(analytic[3]),
            opt_num(ser_mc.map(|m| m.value)),
            opt_num(ser_mc.map(|m| m.std_error)),
        ])
    })
}

/// Optimal split for a given position and optimal position for a given split at 10 dB.
fn fig3(base: &Scenario) -> CliResult<Table> {
    let header = [
        "rsi_level",
        "ratio",
        "rho_lambda_closed",
        "rho_lambda_search",
        "rho_d_closed",
        "rho_d_search",
    ];
    let points = product(&RSI_GRID, &grid(0.05, 0.95, 0.05));
    tabulate(&header, &points, |_, &(eps, ratio)| {
        let cfg = config(base, 10.0, eps)?;
        Ok(vec![
            num(eps),
            num(ratio),
            num(optimal_power_closed(&cfg, ratio)),
            num(best_power(&cfg, ratio)?.0),
            num(optimal_location_closed(&cfg, ratio)),
            num(best_location(&cfg, ratio)?.0),
        ])
    })
}

/// SER against relay position with an equal power split.
fn fig4(base: &Scenario) -> CliResult<Table> {
    let header = [
        "rsi_level",
        "p_db",
        "rho_d",
        "ser_series",
        "rho_d_closed",
        "rho_d_search",
    ];
    let points: Vec<(f64, f64, f64)> = product(
        &product(&RSI_GRID, &[10.0, 20.0, 30.0]),
        &grid(0.02, 0.98, 0.02),
    )
    .into_iter()
    .map(|((e, p), r)| (e, p, r))
    .collect();
    tabulate(&header, &points, |_, &(eps, p_db, rd)| {
        let cfg = config(base, p_db, eps)?;
        Ok(vec![
            num(eps),
            num(p_db),
            num(rd),
            num(series(&cfg, 0.5, rd)?),
            num(optimal_location_closed(&cfg, 0.5)),
            num(best_location(&cfg, 0.5)?.0),
        ])
    })
}

/// SER against power split with the relay at the midpoint.
fn fig5(base: &Scenario) -> CliResult<Table> {
    let header = [
        "rsi_level",
        "p_db",
        "rho_lambda",
        "ser_series",
        "rho_lambda_closed",
        "rho_lambda_search",
    ];
    let points: Vec<(f64, f64, f64)> = product(
        &product(&RSI_GRID, &[10.0, 20.0, 30.0]),
        &grid(0.02, 0.98, 0.02),
    )
    .into_iter()
    .map(|((e, p), r)| (e, p, r))
    .collect();
    tabulate(&header, &points, |_, &(eps, p_db, rl)| {
        let cfg = config(base, p_db, eps)?;
        Ok(vec![
            num(eps),
            num(p_db),
            num(rl),
            num(series(&cfg, rl, 0.5)?),
            num(optimal_power_closed(&cfg, 0.5)),
            num(best_power(&cfg, 0.5)?.0),
        ])
    })
}

/// SER against power with and without location optimization, equal split.
fn fig6(base: &Scenario) -> CliResult<Table> {
    let header = [
        "rsi_level",
        "p_db",
        "ser_midpoint",
        "ser_closed_location",
        "ser_searched_location",
        "ser_location_optimized",
        "ser_floor_midpoint",
    ];
    let points = product(&RSI_GRID, &grid(0.0, 40.0, 2.0));
    tabulate(&header, &points, |_, &(eps, p_db)| {
        let cfg = config(base, p_db, eps)?;
        let rd = optimal_location_closed(&cfg, 0.5);
        Ok(vec![
            num(eps),
            num(p_db),
            num(series(&cfg, 0.5, 0.5)?),
            num(series(&cfg, 0.5, rd)?),
            num(best_location(&cfg, 0.5)?.1),
            num(ser_location_optimized(&cfg, 0.5)),
            num(ser_floor(&Allocation::symmetric(), &cfg)),
        ])
    })
}

/// SER against power with and without power allocation, midpoint relay.
fn fig7(base: &Scenario) -> CliResult<Table> {
    let header = [
        "rsi_level",
        "p_db",
        "ser_equal_split",
        "ser_closed_split",
        "ser_searched_split",
        "ser_power_optimized",
        "ser_floor_equal_split",
    ];
    let points = product(&RSI_GRID, &grid(0.0, 40.0, 2.0));
    tabulate(&header, &points, |_, &(eps, p_db)| {
        let cfg = config(base, p_db, eps)?;
        let rl = optimal_power_closed(&cfg, 0.5);
        Ok(vec![
            num(eps),
            num(p_db),
            num(series(&cfg, 0.5, 0.5)?),
            num(series(&cfg, rl, 0.5)?),
            num(best_power(&cfg, 0.5)?.1),
            num(ser_power_optimized(&cfg, 0.5)),
            num(ser_floor(&Allocation::symmetric(), &cfg)),
        ])
    })
}

/// Joint, power-only, location-only and no optimization at `ε = 0.2`.
fn fig8(base: &Scenario) -> CliResult<Table> {
    let header = [
        "p_db",
        "ser_none",
        "ser_location_only",
        "ser_power_only",
        "ser_joint",
        "rho_lambda_joint",
        "rho_d_joint",
        "method",
    ];
    let points = grid(0.0, 60.0, 2.0);
    tabulate(&header, &points, |_, &p_db| {
        let cfg = config(base, p_db, 0.2)?;
        let joint = select_joint_optimum(&cfg)?;
        Ok(vec![
            num(p_db),
            num(series(&cfg, 0.5, 0.5)?),
            num(best_location(&cfg, 0.5)?.1),
            num(best_power(&cfg, 0.5)?.1),
            num(joint.ser),
            num(joint.allocation.rho_lambda()),
            num(joint.allocation.rho_d()),
            joint.method.to_string(),
        ])
    })
}

/// At 20 dB: SER against one ratio with the other fixed or optimized.
fn fig9(base: &Scenario) -> CliResult<Table> {
    let header = [
        "rsi_level",
        "ratio",
        "ser_vs_rho_lambda_midpoint",
        "ser_vs_rho_lambda_optimized_location",
        "ser_vs_rho_d_equal_split",
        "ser_vs_rho_d_optimized_split",
    ];
    let points = product(&RSI_GRID, &grid(0.02, 0.98, 0.02));
    tabulate(&header, &points, |_, &(eps, ratio)| {
        let cfg = config(base, 20.0, eps)?;
        Ok(vec![
            num(eps),
            num(ratio),
            num(series(&cfg, ratio, 0.5)?),
            num(best_location(&cfg, ratio)?.1),
            num(series(&cfg, 0.5, ratio)?),
            num(best_power(&cfg, ratio)?.1),
        ])
    })
}
