//! Scenario, decision variables and the mapping to mean link SNRs.
//!
//! All powers are normalised to the noise power, which is fixed at one.
//! Decibel conversions happen at the command-line boundary only.

use crate::error::{Error, Result};

/// Noise power at relay and destination. Every power in the crate is relative to it.
pub const NOISE_POWER: f64 = 1.0;

/// Bounds used when constructing an [`Allocation`].
pub const RATIO_MIN: f64 = 1e-6;
pub const RATIO_MAX: f64 = 1.0 - 1e-6;

/// Modulation constants in `SER ≈ α E[Q(√(β γ))]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulation {
    pub alpha: f64,
    pub beta: f64,
}

impl Modulation {
    pub const BPSK: Modulation = Modulation {
        alpha: 1.0,
        beta: 2.0,
    };
    /// Nearest-neighbour approximation `2Q(√γ)`.
    pub const QPSK: Modulation = Modulation {
        alpha: 2.0,
        beta: 1.0,
    };

    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite() && beta > 0.0 && beta.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "modulation constants must be positive (alpha = {alpha}, beta = {beta})"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn is_bpsk(&self) -> bool {
        *self == Self::BPSK
    }
}

/// Physical scenario shared by every evaluation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemConfig {
    /// `P`, total transmit power split between source and relay.
    pub total_power: f64,
    /// `ε`, scales relay transmit power into residual self-interference.
    pub rsi_level: f64,
    /// `v`
    pub pathloss_exp: f64,
    /// `D = D_SR + D_RD`
    pub sum_distance: f64,
    /// Source–destination distance. Recorded only; the direct link is treated as blocked.
    pub direct_distance: Option<f64>,
    pub modulation: Modulation,
}

impl SystemConfig {
    pub fn new(
        total_power: f64,
        rsi_level: f64,
        pathloss_exp: f64,
        sum_distance: f64,
    ) -> Result<Self> {
        let cfg = Self {
            total_power,
            rsi_level,
            pathloss_exp,
            sum_distance,
            direct_distance: None,
            modulation: Modulation::BPSK,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// BPSK, `D = 1`, `v = 3`.
    pub fn bpsk(total_power: f64, rsi_level: f64) -> Result<Self> {
        Self::new(total_power, rsi_level, 3.0, 1.0)
    }

    pub fn with_modulation(mut self, modulation: Modulation) -> Self {
        self.modulation = modulation;
        self
    }

    pub fn with_pathloss_exp(mut self, v: f64) -> Result<Self> {
        self.pathloss_exp = v;
        self.validate()?;
        Ok(self)
    }

    pub fn with_total_power(mut self, p: f64) -> Result<Self> {
        self.total_power = p;
        self.validate()?;
        Ok(self)
    }

    pub fn with_rsi_level(mut self, eps: f64) -> Result<Self> {
        self.rsi_level = eps;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if !(self.total_power > 0.0 && self.total_power.is_finite()) {
            return bad(format!(
                "total power must be positive, got {}",
                self.total_power
            ));
        }
        if !(self.rsi_level >= 0.0 && self.rsi_level.is_finite()) {
            return bad(format!(
                "RSI level must be non-negative, got {}",
                self.rsi_level
            ));
        }
        if !(self.pathloss_exp > 1.0 && self.pathloss_exp.is_finite()) {
            return bad(format!(
                "path-loss exponent must exceed 1, got {}",
                self.pathloss_exp
            ));
        }
        if !(self.sum_distance > 0.0 && self.sum_distance.is_finite()) {
            return bad(format!(
                "sum distance must be positive, got {}",
                self.sum_distance
            ));
        }
        if let Some(d) = self.direct_distance {
            if !(d > 0.0 && d.is_finite()) {
                return bad(format!("direct distance must be positive, got {d}"));
            }
        }
        Modulation::new(self.modulation.alpha, self.modulation.beta)?;
        Ok(())
    }
}

/// Power split `ρ_λ = P_S/P` and relay position `ρ_D = D_SR/D`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Allocation {
    rho_lambda: f64,
    rho_d: f64,
    clamped: bool,
}

impl Allocation {
    /// Clamps both ratios into `[RATIO_MIN, RATIO_MAX]`; [`Allocation::was_clamped`]
    /// reports whether that changed anything. Non-finite input is an error.
    pub fn new(rho_lambda: f64, rho_d: f64) -> Result<Self> {
        if !rho_lambda.is_finite() || !rho_d.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "allocation ratios must be finite (rho_lambda = {rho_lambda}, rho_d = {rho_d})"
            )));
        }
        let rl = rho_lambda.clamp(RATIO_MIN, RATIO_MAX);
        let rd = rho_d.clamp(RATIO_MIN, RATIO_MAX);
        Ok(Self {
            rho_lambda: rl,
            rho_d: rd,
            clamped: rl != rho_lambda || rd != rho_d,
        })
    }

    pub fn symmetric() -> Self {
        Self {
            rho_lambda: 0.5,
            rho_d: 0.5,
            clamped: false,
        }
    }

    pub fn rho_lambda(&self) -> f64 {
        self.rho_lambda
    }

    pub fn rho_d(&self) -> f64 {
        self.rho_d
    }

    pub fn was_clamped(&self) -> bool {
        self.clamped
    }

    pub fn source_power(&self, cfg: &SystemConfig) -> f64 {
        self.rho_lambda * cfg.total_power
    }

    pub fn relay_power(&self, cfg: &SystemConfig) -> f64 {
        cfg.total_power - self.source_power(cfg)
    }

    pub fn source_relay_distance(&self, cfg: &SystemConfig) -> f64 {
        self.rho_d * cfg.sum_distance
    }

    pub fn relay_destination_distance(&self, cfg: &SystemConfig) -> f64 {
        cfg.sum_distance - self.source_relay_distance(cfg)
    }
}

/// Mean SNRs of the two hops and of the loop-interference channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkStats {
    pub lambda_sr: f64,
    pub lambda_rd: f64,
    pub lambda_li: f64,
    /// `λ_LI / λ_SR`
    pub eta: f64,
}

impl LinkStats {
    pub fn new(lambda_sr: f64, lambda_rd: f64, lambda_li: f64) -> Result<Self> {
        if !(lambda_sr > 0.0 && lambda_rd > 0.0 && lambda_li >= 0.0)
            || !(lambda_sr.is_finite() && lambda_rd.is_finite() && lambda_li.is_finite())
        {
            return Err(Error::InvalidConfig(format!(
                "link SNRs must be positive and finite (λ_SR = {lambda_sr}, λ_RD = {lambda_rd}, λ_LI = {lambda_li})"
            )));
        }
        Ok(Self {
            lambda_sr,
            lambda_rd,
            lambda_li,
            eta: lambda_li / lambda_sr,
        })
    }
}

/// `λ_SR = P_S D_SR^{-v}`, `λ_RD = P_R D_RD^{-v}`, `λ_LI = ε P_R`.
pub fn link_stats(cfg: &SystemConfig, alloc: &Allocation) -> LinkStats {
    let v = cfg.pathloss_exp;
    let ps = alloc.source_power(cfg);
    let pr = alloc.relay_power(cfg);
    let lambda_sr = ps * alloc.source_relay_distance(cfg).powf(-v) / NOISE_POWER;
    let lambda_rd = pr * alloc.relay_destination_distance(cfg).powf(-v) / NOISE_POWER;
    let lambda_li = cfg.rsi_level * pr / NOISE_POWER;
    LinkStats {
        lambda_sr,
        lambda_rd,
        lambda_li,
        eta: lambda_li / lambda_sr,
    }
}
