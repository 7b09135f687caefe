//! Extended associative semigroups (EAS), linear EAS, and the parametrized
//! associative operads `As_Φ` and `As²_Ω` they generate.
//!
//! The numeric core is generic over [`scalar::Scalar`]; the aliases below fix
//! the scalar to exact rationals (or integers for dimension polynomials),
//! which is what every equality check in the crate assumes.

pub mod catalog;
pub mod eas;
pub mod error;
pub mod exactlin;
pub mod freealg;
pub mod leas;
pub mod morphisms;
pub mod operad;
pub mod scalar;
pub mod series;

pub use eas::{check_eas, classify, FiniteEas, Table};
pub use error::{Error, Result};
pub use leas::{check_leas, dualize, invert_leas, linearize};
pub use morphisms::Side;
pub use scalar::{rat, Rational};
pub use series::IntPolynomial;

pub type Matrix = exactlin::Matrix<Rational>;
pub type Polynomial = exactlin::Polynomial<Rational>;
pub type Series = exactlin::TruncatedSeries<Rational>;
pub type LinearEas = leas::LinearEas<Rational>;
pub type FreeAlgebra = freealg::FreeAlgebra<Rational>;
pub type FreeElement = freealg::FreeElement<Rational>;
pub type OperadElement = operad::OperadElement<Rational>;
pub type AsPhi = operad::AsPhi<Rational>;
pub type ProductCandidate = morphisms::ProductCandidate<Rational>;
