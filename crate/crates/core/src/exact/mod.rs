//! Exact integer arithmetic, integer linear algebra and polynomial types.

pub mod grid;
pub mod int;
pub mod laurent;
pub mod matrix;
pub mod poly;

pub use laurent::{Axis, LaurentBivariate};
pub use matrix::{hnf, kernel_basis, IntMatrix};
pub use poly::UnivariatePoly;
