//! Exact linear algebra: dense matrices, Kronecker products, polynomials,
//! truncated power series, sparse formal sums and spans.

mod formal;
mod matrix;
mod poly;
mod series;
mod span;

pub use formal::FormalSum;
pub use matrix::{flip_matrix, kron, Matrix};
pub use poly::Polynomial;
pub use series::{series_compose, TruncatedSeries};
pub use span::Span;
