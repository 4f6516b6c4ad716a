mod commands;
mod error;
mod figures;
mod scenario;
mod table;
mod validate;

use clap::{Args, Parser, Subcommand};
use commands::Mode;
use error::{CliError, CliResult};
use scenario::{ConfigFile, ModulationName, Scenario, Sweep};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use table::Table;

/// Outage, SER and relay optimization for a full-duplex amplify-and-forward link.
#[derive(Debug, Parser)]
#[command(name = "fdrelay", version, allow_negative_numbers = true)]
struct Cli {
    /// TOML scenario file; flags override its keys
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Write CSV here instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[arg(long, value_enum, global = true, default_value_t = Mode::Analytic)]
    mode: Mode,

    /// Worker threads for sweeps and Monte Carlo (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Sweep one scenario variable, e.g. `total_power_db:0:40:5`
    #[arg(long, global = true)]
    sweep: Option<Sweep>,

    #[command(flatten)]
    keys: KeyFlags,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct KeyFlags {
    #[arg(long, global = true)]
    total_power_db: Option<f64>,
    #[arg(long, global = true)]
    rsi_level: Option<f64>,
    #[arg(long, global = true)]
    pathloss_exp: Option<f64>,
    #[arg(long, global = true)]
    sum_distance: Option<f64>,
    #[arg(long, global = true)]
    direct_distance: Option<f64>,
    #[arg(long, global = true)]
    rho_lambda: Option<f64>,
    #[arg(long, global = true)]
    rho_d: Option<f64>,
    #[arg(long, global = true, value_enum)]
    modulation: Option<ModulationName>,
    #[arg(long, global = true)]
    mc_samples: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Outage threshold in dB
    #[arg(long, global = true)]
    threshold_db: Option<f64>,
}

impl KeyFlags {
    fn as_config(&self) -> ConfigFile {
        ConfigFile {
            total_power_db: self.total_power_db,
            rsi_level: self.rsi_level,
            pathloss_exp: self.pathloss_exp,
            sum_distance: self.sum_distance,
            direct_distance: self.direct_distance,
            rho_lambda: self.rho_lambda,
            rho_d: self.rho_d,
            modulation: self.modulation,
            mc_samples: self.mc_samples,
            seed: self.seed,
            threshold_db: self.threshold_db,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Outage probability (asymptotic, exact integral, Monte Carlo)
    Outage,
    /// Average SER (series, quadrature, Monte Carlo, floor)
    Ser,
    /// Relay position for the configured power split
    OptimizeLocation,
    /// Power split for the configured relay position
    OptimizePower,
    /// Joint power split and relay position
    OptimizeJoint,
    /// Data for one of the figures 2 to 9
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(2..=9))]
        number: u8,
    },
    /// Analytic results against their oracles; exits with status 2 on any failure
    Validate,
}

fn scenario(cli: &Cli) -> CliResult<Scenario> {
    let file = match &cli.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let s = Scenario::from_config(&file.overlay(&cli.keys.as_config()));
    // surface invalid values before any work starts, as usage errors
    s.system()
        .and_then(|_| s.allocation())
        .map_err(|e| CliError::Usage(e.to_string()))?;
    if s.mc_samples < fdrelay::mc::MIN_SAMPLES {
        return Err(CliError::Usage(format!(
            "mc_samples must be at least {}, got {}",
            fdrelay::mc::MIN_SAMPLES,
            s.mc_samples
        )));
    }
    Ok(s)
}

fn emit(table: &Table, output: Option<&PathBuf>) -> CliResult<()> {
    match output {
        Some(path) => table.write_to(std::fs::File::create(path)?),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            table.write_to(&mut lock)?;
            lock.flush()?;
            Ok(())
        }
    }
}

fn execute(cli: &Cli) -> CliResult<()> {
    let s = scenario(cli)?;
    let sweep = cli.sweep.as_ref();
    let table = match &cli.command {
        Command::Outage => commands::outage_cmd(&s, sweep, cli.mode)?,
        Command::Ser => commands::ser_cmd(&s, sweep, cli.mode)?,
        Command::OptimizeLocation => commands::optimize_location_cmd(&s, sweep)?,
        Command::OptimizePower => commands::optimize_power_cmd(&s, sweep)?,
        Command::OptimizeJoint => commands::optimize_joint_cmd(&s, sweep)?,
        Command::Figure { number } => {
            if sweep.is_some() {
                log::warn!("--sweep is ignored by figure commands");
            }
            figures::figure(*number, &s, cli.mode)?
        }
        Command::Validate => {
            let (table, failed) = validate::validate(&s)?;
            emit(&table, cli.output.as_ref())?;
            let total = table.rows().len();
            eprintln!("validate: {} of {total} cases passed", total - failed);
            if failed > 0 {
                return Err(CliError::Validation { failed, total });
            }
            return Ok(());
        }
    };
    emit(&table, cli.output.as_ref())
}

#[cfg(feature = "parallel")]
fn run(cli: &Cli) -> CliResult<()> {
    match cli.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot start {n} worker threads: {e}")))?;
            pool.install(|| execute(cli))
        }
        None => execute(cli),
    }
}

#[cfg(not(feature = "parallel"))]
fn run(cli: &Cli) -> CliResult<()> {
    if cli.threads.is_some() {
        log::warn!("built without the `parallel` feature; --threads has no effect");
    }
    execute(cli)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
