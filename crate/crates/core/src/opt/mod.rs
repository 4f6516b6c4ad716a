//! Relay location, power split and joint optimizers.
//!
//! The closed forms minimize the high-power objective
//! [`f_objective`](crate::analytic::f_objective) exactly; the golden-section
//! search minimizes the full SER series and is what they are checked against.

mod closed;
mod joint;
mod search;

pub use closed::{
    optimal_location_closed, optimal_power_closed, particular_solution, sequential_v2,
};
pub use joint::{joint_foc_roots, joint_v3_closed, select_joint_optimum};
pub use search::{minimize_1d, Objective1d, DEFAULT_TOLERANCE};

use crate::analytic::f_partials;
use crate::model::{Allocation, SystemConfig};
use std::fmt;

/// Which solver produced an [`OptResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    GoldenSection,
    JointRoots,
    JointParticular,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::GoldenSection => "golden_section",
            Method::JointRoots => "joint_roots",
            Method::JointParticular => "joint_particular",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptResult {
    pub allocation: Allocation,
    pub ser: f64,
    pub method: Method,
    /// Largest `|∂f/∂ρ|` over the ratios the solver was free to move.
    pub foc_residual: f64,
    pub iterations: usize,
}

/// `max(|∂f/∂ρ_λ|, |∂f/∂ρ_D|)`
pub fn foc_residual(alloc: &Allocation, cfg: &SystemConfig) -> f64 {
    let (a, b) = f_partials(alloc, cfg);
    a.abs().max(b.abs())
}
