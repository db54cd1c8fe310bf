//! Polynomials in `q` over `Z[ξ_m]`, polynomials and truncated series in `t`
//! over those, sparse trivariate integer polynomials, and the q-gadgets.

mod qpoly;
mod qseries;
mod series;
mod tpoly;
mod tripoly;

use serde::{Deserialize, Serialize};

pub use qpoly::QPoly;
pub use qseries::{
    inv_pochhammer_trunc, pochhammer_t, pochhammer_t_series, q_binomial, q_binomial_int,
    q_factorial, q_int, q_int_int, q_multinomial, q_multinomial_int, q_pochhammer,
    q_pochhammer_int,
};
pub use series::TruncSeries;
pub use tpoly::TPoly;
pub use tripoly::{Exponents, TriPoly};

/// Location and values of the first differing coefficient between two sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffMismatch {
    pub t_degree: usize,
    pub q_degree: usize,
    pub lhs_coeff: String,
    pub rhs_coeff: String,
}
