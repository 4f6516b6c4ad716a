//! Closed-form performance expressions for the full-duplex AF link.
//!
//! Outage comes from the asymptotic end-to-end SINR CDF (with a numerical
//! evaluation of the exact two-variable integral kept alongside as its
//! oracle). The SER is a short series built on a sum-of-exponentials
//! approximation of `1/(1+x)`; its single-term high-power form drives the
//! optimizers in [`crate::opt`].

mod cdf;
mod coeffs;
mod ser;

pub use cdf::{i2_upper_bound, outage, sinr_cdf_asymptotic, sinr_cdf_exact_numeric, CdfMode};
pub use coeffs::{approx_coeffs, ApproxCoeffs};
pub(crate) use ser::ser_series_at;
pub use ser::{
    f_objective, f_partials, kappa, ser_floor, ser_from_cdf, ser_high_power,
    ser_location_optimized, ser_power_optimized, ser_quadrature, ser_series, ser_series_terms,
    DEFAULT_SERIES_TERMS,
};
