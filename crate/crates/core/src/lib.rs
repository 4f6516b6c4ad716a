//! Link-level analysis of a full-duplex amplify-and-forward relay with
//! residual self-interference (RSI).
//!
//! The crate is organised bottom-up:
//!
//! - [`sfun`]: special functions (Q, K1, E1, Γ, ψ, 2F1).
//! - [`model`]: scenario and allocation types, mean link SNRs.
//! - [`analytic`]: SINR CDF, outage, SER series and its high-power forms.
//! - [`mc`]: counter-seeded Monte Carlo oracle for all of the above.
//! - [`opt`]: relay location, power split and joint optimizers.
//!
//! With the default `parallel` feature the Monte Carlo estimators run on
//! rayon; without it they fall back to a sequential loop over the same
//! fixed sample blocks, so results are bit-identical either way.

pub mod analytic;
pub mod error;
pub mod exec;
pub mod mc;
pub mod model;
pub mod opt;
pub mod quad;
pub mod sfun;
pub mod sum;

pub use error::{Error, Result};
pub use model::{Allocation, LinkStats, Modulation, SystemConfig};

/// Linear power ratio from decibels.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}
