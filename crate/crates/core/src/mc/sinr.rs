/// End-to-end SINR `ab/(a + b + 1)` with `a = γ_SR/(γ_LI + 1)`, `b = γ_RD`.
pub fn sinr_exact(gamma_sr: f64, gamma_rd: f64, gamma_li: f64) -> f64 {
    let a = gamma_sr / (gamma_li + 1.0);
    let b = gamma_rd;
    if a == 0.0 || b == 0.0 {
        return 0.0;
    }
    a * b / (a + b + 1.0)
}

/// `γ_SR γ_RD / (γ_SR + (γ_RD + 1)(γ_LI + 1))`
pub fn sinr_approx(gamma_sr: f64, gamma_rd: f64, gamma_li: f64) -> f64 {
    if gamma_sr == 0.0 || gamma_rd == 0.0 {
        return 0.0;
    }
    gamma_sr * gamma_rd / (gamma_sr + (gamma_rd + 1.0) * (gamma_li + 1.0))
}
