//! Monte Carlo oracle: Rayleigh-faded hops with residual self-interference.
//!
//! Samples are grouped into fixed blocks of [`BLOCK_SIZE`]. Block `b` draws
//! from a ChaCha8 stream selected by `(seed, b)`, block partial sums are
//! collected in block order and combined with compensated summation, so an
//! estimate depends only on `(seed, n)` and never on the worker count.

mod sinr;

pub use sinr::{sinr_approx, sinr_exact};

use crate::error::{Error, Result};
use crate::exec::Schedule;
use crate::model::{LinkStats, Modulation, SystemConfig};
use crate::sfun::gauss_q;
use crate::sum::NeumaierSum;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub const BLOCK_SIZE: usize = 1 << 16;
pub const MIN_SAMPLES: usize = 10_000;
pub const MIN_SYMBOLS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub n_samples: usize,
    pub seed: u64,
}

/// Uniform on `(0, 1]` from the top 53 bits, so `ln` never sees zero.
#[inline]
fn open_unit(rng: &mut impl RngCore) -> f64 {
    ((rng.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
}

#[inline]
fn exponential(mean: f64, rng: &mut impl RngCore) -> f64 {
    if mean == 0.0 {
        0.0
    } else {
        -mean * open_unit(rng).ln()
    }
}

/// One draw of `(γ_SR, γ_RD, γ_LI)`, independent exponentials with the link means.
pub fn draw_gammas(stats: &LinkStats, rng: &mut impl RngCore) -> (f64, f64, f64) {
    let sr = exponential(stats.lambda_sr, rng);
    let rd = exponential(stats.lambda_rd, rng);
    let li = exponential(stats.lambda_li, rng);
    (sr, rd, li)
}

/// The generator for block `block` of a run seeded with `seed`.
pub fn block_rng(seed: u64, block: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    rng
}

/// Sample budget, seed and schedule shared by the estimators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampler {
    pub n_samples: usize,
    pub seed: u64,
    pub schedule: Schedule,
}

impl Sampler {
    pub fn new(n_samples: usize, seed: u64) -> Self {
        Self {
            n_samples,
            seed,
            schedule: Schedule::default(),
        }
    }

    pub fn with_schedule(mut self, schedule: Schedule) -> Self {
        self.schedule = schedule;
        self
    }

    fn require(&self, min: usize) -> Result<()> {
        if self.n_samples < min {
            return Err(Error::InvalidConfig(format!(
                "Monte Carlo needs at least {min} samples, got {}",
                self.n_samples
            )));
        }
        Ok(())
    }

    /// Runs `body(rng, count)` once per block and returns the per-block
    /// outputs in block order.
    fn blocks<T, F>(&self, body: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&mut ChaCha8Rng, usize) -> T + Sync + Send,
    {
        let n = self.n_samples;
        let n_blocks = n.div_ceil(BLOCK_SIZE);
        let seed = self.seed;
        self.schedule.map_indexed(n_blocks, |b| {
            let count = BLOCK_SIZE.min(n - b * BLOCK_SIZE);
            body(&mut block_rng(seed, b as u64), count)
        })
    }

    fn mean_estimate(&self, body: impl Fn(&mut ChaCha8Rng) -> f64 + Sync + Send) -> McEstimate {
        let parts = self.blocks(|rng, count| {
            let mut s = NeumaierSum::new();
            let mut s2 = NeumaierSum::new();
            for _ in 0..count {
                let x = body(rng);
                s.add(x);
                s2.add(x * x);
            }
            (s.value(), s2.value())
        });
        let n = self.n_samples as f64;
        let sum: NeumaierSum = parts.iter().map(|p| p.0).collect();
        let sum_sq: NeumaierSum = parts.iter().map(|p| p.1).collect();
        let mean = sum.value() / n;
        let var = ((sum_sq.value() - n * mean * mean) / (n - 1.0)).max(0.0);
        McEstimate {
            value: mean,
            std_error: (var / n).sqrt(),
            n_samples: self.n_samples,
            seed: self.seed,
        }
    }

    fn proportion(&self, hits: u64) -> McEstimate {
        let n = self.n_samples as f64;
        let p = hits as f64 / n;
        McEstimate {
            value: p,
            std_error: (p * (1.0 - p) / n).sqrt(),
            n_samples: self.n_samples,
            seed: self.seed,
        }
    }

    /// Fraction of draws with end-to-end SINR strictly below `threshold`.
    pub fn outage(&self, stats: &LinkStats, threshold: f64) -> Result<McEstimate> {
        Ok(self.outage_curve(stats, &[threshold])?.remove(0))
    }

    /// Outage at several thresholds from one shared set of draws.
    pub fn outage_curve(&self, stats: &LinkStats, thresholds: &[f64]) -> Result<Vec<McEstimate>> {
        self.require(MIN_SAMPLES)?;
        let parts = self.blocks(|rng, count| {
            let mut hits = vec![0u64; thresholds.len()];
            for _ in 0..count {
                let (sr, rd, li) = draw_gammas(stats, rng);
                let g = sinr_exact(sr, rd, li);
                for (h, &t) in hits.iter_mut().zip(thresholds) {
                    *h += (g < t) as u64;
                }
            }
            hits
        });
        Ok((0..thresholds.len())
            .map(|j| self.proportion(parts.iter().map(|h| h[j]).sum()))
            .collect())
    }

    /// Sample mean of `α Q(√(β γ))` over channel draws.
    pub fn ser_semianalytic(&self, stats: &LinkStats, cfg: &SystemConfig) -> Result<McEstimate> {
        self.require(MIN_SAMPLES)?;
        let Modulation { alpha, beta } = cfg.modulation;
        Ok(self.mean_estimate(|rng| {
            let (sr, rd, li) = draw_gammas(stats, rng);
            alpha * gauss_q((beta * sinr_exact(sr, rd, li)).sqrt())
        }))
    }

    /// Bit error rate of BPSK sent through the amplify-and-forward chain,
    /// one channel realization per symbol.
    pub fn ser_symbol_level(&self, stats: &LinkStats, cfg: &SystemConfig) -> Result<McEstimate> {
        if !cfg.modulation.is_bpsk() {
            return Err(Error::UnsupportedModulation {
                alpha: cfg.modulation.alpha,
                beta: cfg.modulation.beta,
            });
        }
        self.require(MIN_SYMBOLS)?;
        let parts = self.blocks(|rng, count| {
            let mut errors = 0u64;
            for _ in 0..count {
                errors += transmit_bpsk_symbol(stats, rng) as u64;
            }
            errors
        });
        Ok(self.proportion(parts.iter().sum()))
    }
}

#[derive(Clone, Copy)]
struct Complex {
    re: f64,
    im: f64,
}

impl Complex {
    fn mul(self, o: Complex) -> Complex {
        Complex {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }

    fn add(self, o: Complex) -> Complex {
        Complex {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }

    fn scale(self, s: f64) -> Complex {
        Complex {
            re: self.re * s,
            im: self.im * s,
        }
    }

    fn conj(self) -> Complex {
        Complex {
            re: self.re,
            im: -self.im,
        }
    }

    fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }
}

/// Circularly-symmetric complex Gaussian with `E|z|² = power`.
fn cn(power: f64, rng: &mut impl Rng) -> Complex {
    let s = (0.5 * power).sqrt();
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex {
        re: re * s,
        im: im * s,
    }
}

/// Sends one random ±1 symbol; returns whether the sign decision was wrong.
fn transmit_bpsk_symbol(stats: &LinkStats, rng: &mut impl Rng) -> bool {
    // channel gains scaled so |h|² is the instantaneous SNR of each link
    let h_sr = cn(stats.lambda_sr, rng);
    let h_rd = cn(stats.lambda_rd, rng);
    let h_li = cn(stats.lambda_li, rng);
    let bit = rng.random::<bool>();
    let x = if bit { 1.0 } else { -1.0 };
    // residual self-interference carries an unrelated unit-power stream
    let x_li = cn(1.0, rng);
    let n_r = cn(1.0, rng);
    let n_d = cn(1.0, rng);

    let y_r = h_sr.scale(x).add(h_li.mul(x_li)).add(n_r);
    let gain = 1.0 / (h_sr.norm_sqr() + h_li.norm_sqr() + 1.0).sqrt();
    let y_d = h_rd.mul(y_r.scale(gain)).add(n_d);
    let matched = h_rd.mul(h_sr).conj().mul(y_d).re;
    (matched >= 0.0) != bit
}

/// [`Sampler::outage`] on the default schedule.
pub fn estimate_outage(
    stats: &LinkStats,
    threshold: f64,
    n: usize,
    seed: u64,
) -> Result<McEstimate> {
    Sampler::new(n, seed).outage(stats, threshold)
}

/// [`Sampler::outage_curve`] on the default schedule.
pub fn estimate_outage_curve(
    stats: &LinkStats,
    thresholds: &[f64],
    n: usize,
    seed: u64,
) -> Result<Vec<McEstimate>> {
    Sampler::new(n, seed).outage_curve(stats, thresholds)
}

/// [`Sampler::ser_semianalytic`] on the default schedule.
pub fn estimate_ser_semianalytic(
    stats: &LinkStats,
    cfg: &SystemConfig,
    n: usize,
    seed: u64,
) -> Result<McEstimate> {
    Sampler::new(n, seed).ser_semianalytic(stats, cfg)
}

/// [`Sampler::ser_symbol_level`] on the default schedule.
pub fn estimate_ser_symbol_level(
    stats: &LinkStats,
    cfg: &SystemConfig,
    n_symbols: usize,
    seed: u64,
) -> Result<McEstimate> {
    Sampler::new(n_symbols, seed).ser_symbol_level(stats, cfg)
}
