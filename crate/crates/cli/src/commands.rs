use crate::error::CliResult;
use crate::scenario::{Scenario, Sweep, SweepVar};
use crate::table::{num, opt_num, Table};
use fdrelay::analytic::{
    outage, ser_floor, ser_location_optimized, ser_power_optimized, ser_quadrature, ser_series,
    CdfMode, DEFAULT_SERIES_TERMS,
};
use fdrelay::exec::Schedule;
use fdrelay::mc::{estimate_outage, estimate_ser_semianalytic};
use fdrelay::model::{link_stats, Allocation};
use fdrelay::opt::{
    minimize_1d, optimal_location_closed, optimal_power_closed, select_joint_optimum, Objective1d,
};
use fdrelay::Result as CoreResult;

pub use fdrelay::opt::DEFAULT_TOLERANCE as SEARCH_TOLERANCE;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Analytic,
    Mc,
    Both,
}

impl Mode {
    pub fn analytic(self) -> bool {
        self != Mode::Mc
    }

    pub fn mc(self) -> bool {
        self != Mode::Analytic
    }
}

/// Seed for sweep point `index`, so every row draws from its own streams.
pub fn row_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_add(index as u64)
}

/// Evaluates `row` at every sweep point (or once at `base`) in parallel and
/// assembles the rows in sweep order. A swept variable other than the power
/// gets its own leading column.
pub fn sweep_table<F>(
    base: &Scenario,
    sweep: Option<&Sweep>,
    header: &[&str],
    row: F,
) -> CliResult<Table>
where
    F: Fn(&Scenario, usize) -> CoreResult<Vec<String>> + Sync + Send,
{
    let points: Vec<Scenario> = match sweep {
        Some(sw) => sw
            .values()
            .into_iter()
            .map(|v| {
                let mut s = *base;
                s.set(sw.var, v);
                s
            })
            .collect(),
        None => vec![*base],
    };
    let extra = sweep
        .map(|s| s.var)
        .filter(|&v| v != SweepVar::TotalPowerDb);
    let mut cols: Vec<&str> = Vec::new();
    if let Some(v) = extra {
        cols.push(v.column());
    }
    cols.extend_from_slice(header);
    let mut table = Table::new(&cols);
    let rows = Schedule::Parallel.map_indexed(points.len(), |i| row(&points[i], i));
    for (i, r) in rows.into_iter().enumerate() {
        let mut cells = Vec::with_capacity(cols.len());
        if let Some(v) = extra {
            cells.push(num(sweep_value(&points[i], v)));
        }
        cells.extend(r?);
        table.push(cells);
    }
    Ok(table)
}

fn sweep_value(s: &Scenario, var: SweepVar) -> f64 {
    match var {
        SweepVar::TotalPowerDb => s.p_db,
        SweepVar::RsiLevel => s.rsi_level,
        SweepVar::PathlossExp => s.pathloss_exp,
        SweepVar::SumDistance => s.sum_distance,
        SweepVar::RhoLambda => s.rho_lambda,
        SweepVar::RhoD => s.rho_d,
        SweepVar::ThresholdDb => s.threshold_db,
    }
}

pub fn outage_cmd(base: &Scenario, sweep: Option<&Sweep>, mode: Mode) -> CliResult<Table> {
    let header = [
        "p_db",
        "threshold_db",
        "outage_asymptotic",
        "outage_exact",
        "outage_mc",
        "outage_mc_stderr",
    ];
    sweep_table(base, sweep, &header, |s, i| {
        let cfg = s.system()?;
        let stats = link_stats(&cfg, &s.allocation()?);
        let x = s.threshold();
        let (asym, exact) = if mode.analytic() {
            (
                Some(outage(x, &stats, CdfMode::Asymptotic)?),
                Some(outage(x, &stats, CdfMode::Exact)?),
            )
        } else {
            (None, None)
        };
        let mc = if mode.mc() {
            Some(estimate_outage(
                &stats,
                x,
                s.mc_samples,
                row_seed(s.seed, i),
            )?)
        } else {
            None
        };
        Ok(vec![
            num(s.p_db),
            num(s.threshold_db),
            opt_num(asym),
            opt_num(exact),
            opt_num(mc.map(|m| m.value)),
            opt_num(mc.map(|m| m.std_error)),
        ])
    })
}

pub fn ser_cmd(base: &Scenario, sweep: Option<&Sweep>, mode: Mode) -> CliResult<Table> {
    let header = [
        "p_db",
        "ser_series",
        "ser_quadrature",
        "ser_mc",
        "ser_mc_stderr",
        "ser_floor",
    ];
    sweep_table(base, sweep, &header, |s, i| {
        let cfg = s.system()?;
        let alloc = s.allocation()?;
        let stats = link_stats(&cfg, &alloc);
        let (series, quad, floor) = if mode.analytic() {
            (
                Some(ser_series(&stats, &cfg, DEFAULT_SERIES_TERMS)?),
                Some(ser_quadrature(&stats, &cfg)?),
                Some(ser_floor(&alloc, &cfg)),
            )
        } else {
            (None, None, None)
        };
        let mc = if mode.mc() {
            Some(estimate_ser_semianalytic(
                &stats,
                &cfg,
                s.mc_samples,
                row_seed(s.seed, i),
            )?)
        } else {
            None
        };
        Ok(vec![
            num(s.p_db),
            opt_num(series),
            opt_num(quad),
            opt_num(mc.map(|m| m.value)),
            opt_num(mc.map(|m| m.std_error)),
            opt_num(floor),
        ])
    })
}

fn series_at(s: &Scenario, alloc: &Allocation) -> CoreResult<f64> {
    let cfg = s.system()?;
    ser_series(&link_stats(&cfg, alloc), &cfg, DEFAULT_SERIES_TERMS)
}

pub fn optimize_location_cmd(base: &Scenario, sweep: Option<&Sweep>) -> CliResult<Table> {
    let header = [
        "p_db",
        "rho_lambda",
        "rho_d_closed",
        "rho_d_search",
        "ser_closed",
        "ser_search",
        "ser_location_optimized",
        "foc_residual",
    ];
    sweep_table(base, sweep, &header, |s, _| {
        let cfg = s.system()?;
        let rl = s.allocation()?.rho_lambda();
        let closed = optimal_location_closed(&cfg, rl);
        let search = minimize_1d(Objective1d::Location, &cfg, rl, SEARCH_TOLERANCE)?;
        Ok(vec![
            num(s.p_db),
            num(rl),
            num(closed),
            num(search.allocation.rho_d()),
            num(series_at(s, &Allocation::new(rl, closed)?)?),
            num(search.ser),
            num(ser_location_optimized(&cfg, rl)),
            num(search.foc_residual),
        ])
    })
}

pub fn optimize_power_cmd(base: &Scenario, sweep: Option<&Sweep>) -> CliResult<Table> {
    let header = [
        "p_db",
        "rho_d",
        "rho_lambda_closed",
        "rho_lambda_search",
        "ser_closed",
        "ser_search",
        "ser_power_optimized",
        "foc_residual",
    ];
    sweep_table(base, sweep, &header, |s, _| {
        let cfg = s.system()?;
        let rd = s.allocation()?.rho_d();
        let closed = optimal_power_closed(&cfg, rd);
        let search = minimize_1d(Objective1d::Power, &cfg, rd, SEARCH_TOLERANCE)?;
        Ok(vec![
            num(s.p_db),
            num(rd),
            num(closed),
            num(search.allocation.rho_lambda()),
            num(series_at(s, &Allocation::new(closed, rd)?)?),
            num(search.ser),
            num(ser_power_optimized(&cfg, rd)),
            num(search.foc_residual),
        ])
    })
}

pub fn optimize_joint_cmd(base: &Scenario, sweep: Option<&Sweep>) -> CliResult<Table> {
    let header = [
        "p_db",
        "rho_lambda",
        "rho_d",
        "ser",
        "foc_residual",
        "method",
    ];
    sweep_table(base, sweep, &header, |s, _| {
        let r = select_joint_optimum(&s.system()?)?;
        Ok(vec![
            num(s.p_db),
            num(r.allocation.rho_lambda()),
            num(r.allocation.rho_d()),
            num(r.ser),
            num(r.foc_residual),
            r.method.to_string(),
        ])
    })
}
