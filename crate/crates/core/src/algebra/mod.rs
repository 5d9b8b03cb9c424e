//! Exact numeric carriers: rationals, polynomials in Q, truncated series.

pub mod linalg;
pub mod qpoly;
pub mod scalar;
pub mod series;

pub use qpoly::QPoly;
pub use scalar::Scalar;
pub use series::{exp_generating, series_product, TruncatedSeries};
