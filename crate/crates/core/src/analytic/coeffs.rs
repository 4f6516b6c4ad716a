use crate::error::{Error, Result};

/// Pairs `(A_i, B_i)` such that `1/(1+x) ≈ Σ A_i x^{2i} e^{-B_i x}`, with the
/// `x^{2i}` and `x^{2i+1}` Taylor coefficients matched term by term.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxCoeffs {
    pairs: Vec<(f64, f64)>,
}

impl ApproxCoeffs {
    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `Σ A_i x^{2i} e^{-B_i x}`
    pub fn evaluate(&self, x: f64) -> f64 {
        self.pairs
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| a * x.powi(2 * i as i32) * (-b * x).exp())
            .sum()
    }
}

/// Runs the sequential recurrence for the first `n_terms` pairs.
pub fn approx_coeffs(n_terms: usize) -> Result<ApproxCoeffs> {
    if n_terms == 0 {
        return Err(Error::InvalidConfig(
            "approx_coeffs needs at least one term".into(),
        ));
    }
    let factorial = |k: usize| (1..=k).fold(1.0, |acc, j| acc * j as f64);
    let mut pairs: Vec<(f64, f64)> = Vec::with_capacity(n_terms);
    for i in 0..n_terms {
        let mut a = 1.0;
        let mut b_num = 1.0;
        for (j, &(aj, bj)) in pairs.iter().enumerate() {
            let even = 2 * (i - j);
            a -= aj * bj.powi(even as i32) / factorial(even);
            b_num -= aj * bj.powi(even as i32 + 1) / factorial(even + 1);
        }
        if a == 0.0 {
            return Err(Error::DegenerateCoefficient { index: i });
        }
        pairs.push((a, b_num / a));
    }
    Ok(ApproxCoeffs { pairs })
}
