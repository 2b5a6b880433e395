//! Polynomials in `q` (and `t`) with big-integer coefficients, and the bump
//! generating functions built from them.

mod bump;
mod sparse;

pub use bump::{
    asymptotic_mean_bump, bn_321_by_enumeration, bn_321_closed_form, bn_bivariate, bn_by_enumeration, bn_by_shapes,
    bn_diagonal_via_hooks, hook_sum_identity_check, is_log_concave, mean_bump_exact, tn_direct, tn_head_series,
    tn_via_product, weakbump_polynomial, MeanBump, Method, PolynomialReport,
};
pub use sparse::{BivariatePolynomial, PowerSeriesTruncated, SparsePolynomial};
