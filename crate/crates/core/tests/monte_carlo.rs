use fdrelay::analytic::{ser_quadrature, sinr_cdf_exact_numeric};
use fdrelay::exec::Schedule;
use fdrelay::mc::{
    block_rng, draw_gammas, estimate_outage, estimate_ser_semianalytic, estimate_ser_symbol_level,
    Sampler,
};
use fdrelay::model::{link_stats, Allocation, LinkStats, Modulation, SystemConfig};
use fdrelay::{db_to_linear, Error};

fn canonical(p_db: f64, eps: f64) -> (SystemConfig, LinkStats) {
    let cfg = SystemConfig::bpsk(db_to_linear(p_db), eps).unwrap();
    let stats = link_stats(&cfg, &Allocation::symmetric());
    (cfg, stats)
}

#[test]
fn no_interference_draws_are_zero() {
    let s = LinkStats::new(10.0, 20.0, 0.0).unwrap();
    let mut rng = block_rng(3, 0);
    for _ in 0..10_000 {
        assert_eq!(draw_gammas(&s, &mut rng).2, 0.0);
    }
}

#[test]
fn sample_means_match_link_means() {
    let s = LinkStats::new(400.0, 40.0, 5.0).unwrap();
    let n = 1_000_000;
    let mut rng = block_rng(11, 0);
    let mut sums = [0.0; 3];
    for _ in 0..n {
        let (a, b, c) = draw_gammas(&s, &mut rng);
        sums[0] += a;
        sums[1] += b;
        sums[2] += c;
    }
    for (sum, mean) in sums.iter().zip([s.lambda_sr, s.lambda_rd, s.lambda_li]) {
        assert!((sum / n as f64 - mean).abs() <= 4.0 * mean / (n as f64).sqrt());
    }
}

#[test]
fn interference_limited_hop_has_closed_form_law() {
    // X = γ_SR/(γ_LI + 1) has F_X(x) = 1 - e^{-x/λ_SR}/(1 + ηx)
    let s = LinkStats::new(40.0, 40.0, 5.0).unwrap();
    let n = 200_000;
    let mut rng = block_rng(5, 0);
    let mut xs: Vec<f64> = (0..n)
        .map(|_| {
            let (a, _, c) = draw_gammas(&s, &mut rng);
            a / (c + 1.0)
        })
        .collect();
    xs.sort_by(f64::total_cmp);
    let cdf = |x: f64| 1.0 - (-x / s.lambda_sr).exp() / (1.0 + s.eta * x);
    let ks = xs
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            (f - i as f64 / n as f64)
                .abs()
                .max(((i + 1) as f64 / n as f64 - f).abs())
        })
        .fold(0.0, f64::max);
    assert!(ks < 2.0 / (n as f64).sqrt(), "KS distance {ks}");
}

#[test]
fn outage_limits() {
    let (_, s) = canonical(20.0, 0.1);
    assert_eq!(estimate_outage(&s, 0.0, 10_000, 1).unwrap().value, 0.0);
    assert_eq!(
        estimate_outage(&s, f64::INFINITY, 10_000, 1).unwrap().value,
        1.0
    );
}

#[test]
fn outage_matches_exact_integral_at_canonical_point() {
    let (_, s) = canonical(20.0, 0.1);
    let mc = estimate_outage(&s, 1.0, 10_000_000, 2024).unwrap();
    let exact = sinr_cdf_exact_numeric(1.0, &s).unwrap();
    assert!(
        (mc.value - exact).abs() <= 3.0 * mc.std_error + 0.05 * exact,
        "{mc:?} vs {exact}"
    );
}

#[test]
fn exact_integral_matches_event_frequency() {
    // 1 - F(x) is the probability of (X - x)(γ_RD - x) > x² with both factors positive
    let s = LinkStats::new(40.0, 40.0, 5.0).unwrap();
    let x = 1.0;
    let n = 10_000_000usize;
    let hits: u64 = Schedule::default()
        .map_indexed(n.div_ceil(1 << 16), |b| {
            let mut rng = block_rng(99, b as u64);
            let count = (1usize << 16).min(n - b * (1 << 16));
            (0..count)
                .filter(|_| {
                    let (sr, rd, li) = draw_gammas(&s, &mut rng);
                    let a = sr / (li + 1.0);
                    !(a > x && rd > x && (a - x) * (rd - x) > x * x)
                })
                .count() as u64
        })
        .iter()
        .sum();
    let p = hits as f64 / n as f64;
    let se = (p * (1.0 - p) / n as f64).sqrt();
    let exact = sinr_cdf_exact_numeric(x, &s).unwrap();
    assert!((p - exact).abs() <= 3.0 * se, "{p} ± {se} vs {exact}");
}

#[test]
fn empirical_cdf_matches_exact_at_five_thresholds() {
    let (_, s) = canonical(40.0, 0.1);
    let thresholds = [10.0, 100.0, 300.0, 1000.0, 3000.0];
    let mc = Sampler::new(1_000_000, 8)
        .outage_curve(&s, &thresholds)
        .unwrap();
    for (&x, est) in thresholds.iter().zip(&mc) {
        let exact = sinr_cdf_exact_numeric(x, &s).unwrap();
        assert!(
            (est.value - exact).abs() <= 3.0 * est.std_error,
            "x={x}: {est:?} vs {exact}"
        );
    }
}

#[test]
fn std_error_shrinks_as_inverse_root_n() {
    let (_, s) = canonical(20.0, 0.1);
    let ns = [10_000usize, 100_000, 1_000_000];
    let errs: Vec<f64> = ns
        .iter()
        .map(|&n| estimate_outage(&s, 1.0, n, 17).unwrap().std_error)
        .collect();
    let slope = (errs[2].ln() - errs[0].ln()) / ((ns[2] as f64).ln() - (ns[0] as f64).ln());
    assert!((slope + 0.5).abs() <= 0.05, "slope {slope}");
    for (&n, &e) in ns.iter().zip(&errs) {
        assert!(e <= 0.5 / (n as f64).sqrt());
    }
}

#[test]
fn semianalytic_ser_all_outage_limit() {
    let cfg = SystemConfig::bpsk(1.0, 0.0).unwrap();
    let s = LinkStats::new(1e-300, 1e-300, 0.0).unwrap();
    let est = estimate_ser_semianalytic(&s, &cfg, 10_000, 0).unwrap();
    assert!((est.value - 0.5).abs() < 1e-12);
    let qpsk = cfg.with_modulation(Modulation::QPSK);
    let est = estimate_ser_semianalytic(&s, &qpsk, 10_000, 0).unwrap();
    assert!((est.value - 1.0).abs() < 1e-12);
}

#[test]
fn semianalytic_ser_matches_quadrature() {
    let (cfg, s) = canonical(20.0, 0.1);
    let mc = estimate_ser_semianalytic(&s, &cfg, 10_000_000, 7).unwrap();
    let q = ser_quadrature(&s, &cfg).unwrap();
    assert!(
        (mc.value - q).abs() <= 3.0 * mc.std_error + 0.05 * q,
        "{mc:?} vs {q}"
    );
}

#[test]
fn more_interference_more_errors_at_60_db() {
    let (cfg_lo, s_lo) = canonical(60.0, 0.01);
    let (cfg_hi, s_hi) = canonical(60.0, 0.1);
    let lo = estimate_ser_semianalytic(&s_lo, &cfg_lo, 1_000_000, 3).unwrap();
    let hi = estimate_ser_semianalytic(&s_hi, &cfg_hi, 1_000_000, 3).unwrap();
    assert!(hi.value > lo.value + 3.0 * (hi.std_error + lo.std_error));
}

#[test]
fn symbol_level_error_free_on_strong_links() {
    let cfg = SystemConfig::bpsk(1.0, 0.0).unwrap();
    let s = LinkStats::new(1e14, 1e14, 0.0).unwrap();
    let est = estimate_ser_symbol_level(&s, &cfg, 100_000, 1).unwrap();
    assert_eq!(est.value, 0.0);
}

#[test]
fn symbol_level_agrees_with_semianalytic() {
    let (cfg, s) = canonical(20.0, 0.1);
    let sym = estimate_ser_symbol_level(&s, &cfg, 2_000_000, 21).unwrap();
    let semi = estimate_ser_semianalytic(&s, &cfg, 2_000_000, 22).unwrap();
    let combined = (sym.std_error.powi(2) + semi.std_error.powi(2)).sqrt();
    assert!(
        (sym.value - semi.value).abs() <= 3.0 * combined,
        "{sym:?} vs {semi:?}"
    );
}

#[test]
fn symbol_level_rises_with_interference() {
    let mut prev = 0.0;
    for &eps in &[0.0, 0.1, 1.0, 10.0] {
        let (cfg, s) = canonical(30.0, eps);
        let est = estimate_ser_symbol_level(&s, &cfg, 200_000, 4).unwrap();
        assert!(est.value > prev);
        prev = est.value;
    }
    assert!(prev < 0.5);
}

#[test]
fn symbol_level_rejects_other_modulations() {
    let (cfg, s) = canonical(20.0, 0.1);
    let qpsk = cfg.with_modulation(Modulation::QPSK);
    assert!(matches!(
        estimate_ser_symbol_level(&s, &qpsk, 100_000, 0),
        Err(Error::UnsupportedModulation { .. })
    ));
    assert!(estimate_ser_symbol_level(&s, &cfg, 99_999, 0).is_err());
}

#[test]
fn estimates_independent_of_schedule_and_thread_count() {
    let (cfg, s) = canonical(20.0, 0.1);
    let n = 300_001;
    let seq = Sampler::new(n, 77).with_schedule(Schedule::Sequential);
    let par = Sampler::new(n, 77).with_schedule(Schedule::Parallel);
    let a = seq.ser_semianalytic(&s, &cfg).unwrap();
    let b = par.ser_semianalytic(&s, &cfg).unwrap();
    assert_eq!(a.value.to_bits(), b.value.to_bits());
    assert_eq!(a.std_error.to_bits(), b.std_error.to_bits());
    for threads in [1, 3, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        let c = pool.install(|| par.ser_semianalytic(&s, &cfg).unwrap());
        assert_eq!(a, c);
        let o1 = pool.install(|| par.outage_curve(&s, &[0.5, 2.0]).unwrap());
        assert_eq!(o1, seq.outage_curve(&s, &[0.5, 2.0]).unwrap());
    }
}
