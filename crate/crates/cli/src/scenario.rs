//! Scenario settings: built-in defaults, then the config file, then flags.

use crate::error::{CliError, CliResult};
use fdrelay::model::{Allocation, Modulation, SystemConfig};
use fdrelay::{db_to_linear, Result as CoreResult};
use serde::Deserialize;
use std::path::Path;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ModulationName {
    Bpsk,
    Qpsk,
}

impl ModulationName {
    pub fn constants(self) -> Modulation {
        match self {
            ModulationName::Bpsk => Modulation::BPSK,
            ModulationName::Qpsk => Modulation::QPSK,
        }
    }
}

/// Keys accepted in the config file; every one is optional.
#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub total_power_db: Option<f64>,
    pub rsi_level: Option<f64>,
    pub pathloss_exp: Option<f64>,
    pub sum_distance: Option<f64>,
    pub direct_distance: Option<f64>,
    pub rho_lambda: Option<f64>,
    pub rho_d: Option<f64>,
    pub modulation: Option<ModulationName>,
    pub mc_samples: Option<usize>,
    pub seed: Option<u64>,
    pub threshold_db: Option<f64>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text).map_err(|message| CliError::Config {
            path: path.display().to_string(),
            message,
        })
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.to_string().trim_end().to_string())
    }

    /// Fields set in `other` win.
    pub fn overlay(self, other: &ConfigFile) -> Self {
        ConfigFile {
            total_power_db: other.total_power_db.or(self.total_power_db),
            rsi_level: other.rsi_level.or(self.rsi_level),
            pathloss_exp: other.pathloss_exp.or(self.pathloss_exp),
            sum_distance: other.sum_distance.or(self.sum_distance),
            direct_distance: other.direct_distance.or(self.direct_distance),
            rho_lambda: other.rho_lambda.or(self.rho_lambda),
            rho_d: other.rho_d.or(self.rho_d),
            modulation: other.modulation.or(self.modulation),
            mc_samples: other.mc_samples.or(self.mc_samples),
            seed: other.seed.or(self.seed),
            threshold_db: other.threshold_db.or(self.threshold_db),
        }
    }
}

/// Fully resolved scenario; powers and thresholds still in dB.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub p_db: f64,
    pub rsi_level: f64,
    pub pathloss_exp: f64,
    pub sum_distance: f64,
    pub direct_distance: Option<f64>,
    pub rho_lambda: f64,
    pub rho_d: f64,
    pub modulation: ModulationName,
    pub mc_samples: usize,
    pub seed: u64,
    pub threshold_db: f64,
}

impl Default for Scenario {
    fn default() -> Self {
        Self {
            p_db: 20.0,
            rsi_level: 0.1,
            pathloss_exp: 3.0,
            sum_distance: 1.0,
            direct_distance: None,
            rho_lambda: 0.5,
            rho_d: 0.5,
            modulation: ModulationName::Bpsk,
            mc_samples: 1_000_000,
            seed: 1,
            threshold_db: 0.0,
        }
    }
}

impl Scenario {
    pub fn from_config(c: &ConfigFile) -> Self {
        let d = Scenario::default();
        Scenario {
            p_db: c.total_power_db.unwrap_or(d.p_db),
            rsi_level: c.rsi_level.unwrap_or(d.rsi_level),
            pathloss_exp: c.pathloss_exp.unwrap_or(d.pathloss_exp),
            sum_distance: c.sum_distance.unwrap_or(d.sum_distance),
            direct_distance: c.direct_distance.or(d.direct_distance),
            rho_lambda: c.rho_lambda.unwrap_or(d.rho_lambda),
            rho_d: c.rho_d.unwrap_or(d.rho_d),
            modulation: c.modulation.unwrap_or(d.modulation),
            mc_samples: c.mc_samples.unwrap_or(d.mc_samples),
            seed: c.seed.unwrap_or(d.seed),
            threshold_db: c.threshold_db.unwrap_or(d.threshold_db),
        }
    }

    pub fn system(&self) -> CoreResult<SystemConfig> {
        let mut cfg = SystemConfig::new(
            db_to_linear(self.p_db),
            self.rsi_level,
            self.pathloss_exp,
            self.sum_distance,
        )?
        .with_modulation(self.modulation.constants());
        cfg.direct_distance = self.direct_distance;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn allocation(&self) -> CoreResult<Allocation> {
        for (name, v) in [("rho_lambda", self.rho_lambda), ("rho_d", self.rho_d)] {
            if !(v > 0.0 && v < 1.0) {
                return Err(fdrelay::Error::InvalidConfig(format!(
                    "{name} must lie in (0, 1), got {v}"
                )));
            }
        }
        Allocation::new(self.rho_lambda, self.rho_d)
    }

    pub fn threshold(&self) -> f64 {
        db_to_linear(self.threshold_db)
    }

    pub fn set(&mut self, var: SweepVar, value: f64) {
        match var {
            SweepVar::TotalPowerDb => self.p_db = value,
            SweepVar::RsiLevel => self.rsi_level = value,
            SweepVar::PathlossExp => self.pathloss_exp = value,
            SweepVar::SumDistance => self.sum_distance = value,
            SweepVar::RhoLambda => self.rho_lambda = value,
            SweepVar::RhoD => self.rho_d = value,
            SweepVar::ThresholdDb => self.threshold_db = value,
        }
    }
}

/// `start, start + step, ...` up to `stop` inclusive, rounded to 12 decimals
/// so accumulated steps print cleanly.
pub fn grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let n = ((stop - start) / step + 1e-9).floor() as usize + 1;
    (0..n)
        .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVar {
    TotalPowerDb,
    RsiLevel,
    PathlossExp,
    SumDistance,
    RhoLambda,
    RhoD,
    ThresholdDb,
}

impl SweepVar {
    pub fn column(self) -> &'static str {
        match self {
            SweepVar::TotalPowerDb => "p_db",
            SweepVar::RsiLevel => "rsi_level",
            SweepVar::PathlossExp => "pathloss_exp",
            SweepVar::SumDistance => "sum_distance",
            SweepVar::RhoLambda => "rho_lambda",
            SweepVar::RhoD => "rho_d",
            SweepVar::ThresholdDb => "threshold_db",
        }
    }
}

impl FromStr for SweepVar {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "total_power_db" | "p_db" => SweepVar::TotalPowerDb,
            "rsi_level" => SweepVar::RsiLevel,
            "pathloss_exp" => SweepVar::PathlossExp,
            "sum_distance" => SweepVar::SumDistance,
            "rho_lambda" => SweepVar::RhoLambda,
            "rho_d" => SweepVar::RhoD,
            "threshold_db" => SweepVar::ThresholdDb,
            other => return Err(format!("unknown sweep variable `{other}`")),
        })
    }
}

/// `var:start:stop:step`, stop inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sweep {
    pub var: SweepVar,
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Sweep {
    pub fn values(&self) -> Vec<f64> {
        grid(self.start, self.stop, self.step)
    }
}

impl FromStr for Sweep {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(format!("expected var:start:stop:step, got `{s}`"));
        }
        let var: SweepVar = parts[0].parse()?;
        let num = |i: usize, name: &str| -> Result<f64, String> {
            parts[i]
                .trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("sweep {name} `{}` is not a number", parts[i]))
        };
        let (start, stop, step) = (num(1, "start")?, num(2, "stop")?, num(3, "step")?);
        if step <= 0.0 {
            return Err(format!("sweep step must be positive, got {step}"));
        }
        if stop < start {
            return Err(format!("sweep range is empty ({start} > {stop})"));
        }
        Ok(Sweep {
            var,
            start,
            stop,
            step,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let c = ConfigFile::parse(
            r#"
            total_power_db = 30.0
            rsi_level = 0.2
            pathloss_exp = 2.5
            sum_distance = 2.0
            rho_lambda = 0.4
            rho_d = 0.6
            modulation = "qpsk"
            mc_samples = 20000
            seed = 9
            "#,
        )
        .unwrap();
        let s = Scenario::from_config(&c);
        assert_eq!(s.p_db, 30.0);
        assert_eq!(s.modulation, ModulationName::Qpsk);
        assert_eq!(s.mc_samples, 20_000);
        let cfg = s.system().unwrap();
        assert!((cfg.total_power - 1000.0).abs() < 1e-9);
        assert_eq!(cfg.modulation, Modulation::QPSK);
    }

    #[test]
    fn unknown_key_reports_location() {
        let err = ConfigFile::parse("rsi_level = 0.1\nnoise = 3\n").unwrap_err();
        assert!(err.contains("line 2"), "{err}");
        assert!(err.contains("noise"), "{err}");
    }

    #[test]
    fn wrong_type_reports_field() {
        let err = ConfigFile::parse("seed = \"abc\"\n").unwrap_err();
        assert!(err.contains("seed") || err.contains("line 1"), "{err}");
    }

    #[test]
    fn overlay_prefers_later_values() {
        let base = ConfigFile::parse("rsi_level = 0.1\nseed = 4\n").unwrap();
        let flags = ConfigFile {
            rsi_level: Some(0.3),
            ..Default::default()
        };
        let merged = base.overlay(&flags);
        assert_eq!(merged.rsi_level, Some(0.3));
        assert_eq!(merged.seed, Some(4));
    }

    #[test]
    fn sweep_parsing() {
        let s: Sweep = "p_db:0:40:10".parse().unwrap();
        assert_eq!(s.values(), vec![0.0, 10.0, 20.0, 30.0, 40.0]);
        let s: Sweep = "rsi_level:0:0.3:0.1".parse().unwrap();
        assert_eq!(s.values(), vec![0.0, 0.1, 0.2, 0.3]);
        assert!("p_db:0:40".parse::<Sweep>().is_err());
        assert!("p_db:10:0:1".parse::<Sweep>().is_err());
        assert!("p_db:0:10:0".parse::<Sweep>().is_err());
        assert!("voltage:0:1:1".parse::<Sweep>().is_err());
    }
}
