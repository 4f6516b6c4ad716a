use fdrelay::analytic::{
    i2_upper_bound, outage, ser_floor, ser_high_power, ser_quadrature, ser_series,
    ser_series_terms, sinr_cdf_asymptotic, sinr_cdf_exact_numeric, CdfMode,
};
use fdrelay::db_to_linear;
use fdrelay::model::{link_stats, Allocation, LinkStats, SystemConfig};

fn canonical(p_db: f64, eps: f64) -> (SystemConfig, LinkStats) {
    let cfg = SystemConfig::bpsk(db_to_linear(p_db), eps).unwrap();
    let stats = link_stats(&cfg, &Allocation::symmetric());
    (cfg, stats)
}

/// Least-squares slope of `ln y` against `ln x`.
fn loglog_slope(x: &[f64], y: &[f64]) -> f64 {
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    sxy / sxx
}

#[test]
fn canonical_link_stats() {
    let (_, s) = canonical(20.0, 0.1);
    assert!((s.lambda_sr - 400.0).abs() < 1e-9);
    assert!((s.lambda_rd - 400.0).abs() < 1e-9);
    assert!((s.lambda_li - 5.0).abs() < 1e-12);
    assert!((s.eta - 0.0125).abs() < 1e-15);
}

#[test]
fn asymptotic_cdf_within_i2_of_exact_at_high_power() {
    let s = LinkStats::new(400.0, 400.0, 5.0).unwrap();
    let asym = sinr_cdf_asymptotic(1.0, &s);
    let exact = sinr_cdf_exact_numeric(1.0, &s).unwrap();
    // frozen: mpmath quadrature of the exact survivor integral at 40 digits
    assert!((exact - 0.017_627_698_544_659_635).abs() < 1e-12);
    assert!(asym <= exact + 1e-15);
    assert!(exact - asym <= i2_upper_bound(1.0, &s));
    assert!((exact - asym) / exact < 0.05);
}

#[test]
fn outage_modes_and_monotonicity() {
    let (_, s) = canonical(30.0, 0.1);
    assert_eq!(outage(0.0, &s, CdfMode::Asymptotic).unwrap(), 0.0);
    assert_eq!(outage(0.0, &s, CdfMode::Exact).unwrap(), 0.0);
    let mut prev = 0.0;
    for k in 1..40 {
        let x = 0.25 * k as f64;
        let f = outage(x, &s, CdfMode::Exact).unwrap();
        assert!(f >= prev);
        prev = f;
    }
}

#[test]
fn cdf_gap_bands() {
    for &(p_db, band) in &[(20.0, 0.12), (30.0, 0.05)] {
        for &eps in &[0.01, 0.1] {
            let (_, s) = canonical(p_db, eps);
            for &x in &[0.5, 1.0, 2.0, 4.0] {
                let a = sinr_cdf_asymptotic(x, &s);
                let e = sinr_cdf_exact_numeric(x, &s).unwrap();
                assert!(
                    ((a - e) / e).abs() <= band,
                    "P={p_db} ε={eps} x={x}: {a} vs {e}"
                );
            }
        }
    }
}

#[test]
fn series_tracks_quadrature_from_10_to_30_db() {
    for &eps in &[0.0, 0.01, 0.05, 0.1] {
        for &p_db in &[10.0, 15.0, 20.0, 25.0, 30.0] {
            let (cfg, s) = canonical(p_db, eps);
            let series = ser_series(&s, &cfg, 3).unwrap();
            let quad = ser_quadrature(&s, &cfg).unwrap();
            assert!(
                ((series - quad) / quad).abs() <= 0.01,
                "P={p_db} ε={eps}: {series} vs {quad}"
            );
        }
    }
}

#[test]
fn higher_terms_scale_with_even_powers_of_eta() {
    let eps_grid = [0.01, 0.02, 0.04, 0.08];
    let mut etas = Vec::new();
    let mut r1 = Vec::new();
    let mut r2 = Vec::new();
    for &eps in &eps_grid {
        let (cfg, s) = canonical(40.0, eps);
        let t = ser_series_terms(&s, &cfg, 3).unwrap();
        etas.push(s.eta);
        r1.push(t[1] / t[0]);
        r2.push(t[2] / t[0]);
    }
    let s1 = loglog_slope(&etas, &r1);
    let s2 = loglog_slope(&etas, &r2);
    assert!((s1 - 2.0).abs() <= 0.2, "slope {s1}");
    assert!((s2 - 4.0).abs() <= 0.2, "slope {s2}");
}

#[test]
fn series_approaches_floor_with_power() {
    let alloc = Allocation::symmetric();
    let mut hp_gaps = Vec::new();
    let mut series = Vec::new();
    let mut floor = 0.0;
    for &p_db in &[40.0, 60.0, 80.0] {
        let cfg = SystemConfig::bpsk(db_to_linear(p_db), 0.1).unwrap();
        let s = link_stats(&cfg, &alloc);
        floor = ser_floor(&alloc, &cfg);
        hp_gaps.push(ser_high_power(&s, &cfg) - floor);
        series.push(ser_series(&s, &cfg, 3).unwrap());
    }
    // the single-term form tends to the floor from above
    assert!(
        hp_gaps[0] > hp_gaps[1] && hp_gaps[1] > hp_gaps[2] && hp_gaps[2] > 0.0,
        "{hp_gaps:?}"
    );
    assert!(hp_gaps[2] / floor < 1e-4);
    // the full series settles too, onto a limit that keeps the η² terms the floor omits
    assert!((series[1] - series[0]).abs() > (series[2] - series[1]).abs());
    assert!(((series[2] - floor) / floor).abs() < 0.01);
}

#[test]
fn high_power_form_within_two_percent_at_40_db() {
    let (cfg, s) = canonical(40.0, 0.1);
    let hp = ser_high_power(&s, &cfg);
    let series = ser_series(&s, &cfg, 3).unwrap();
    let quad = ser_quadrature(&s, &cfg).unwrap();
    assert!(((hp - quad) / quad).abs() <= 0.02);
    assert!(((hp - series) / series).abs() <= 0.02);
}
