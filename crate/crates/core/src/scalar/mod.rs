//! Exact scalars: integer polynomials in `q, t` and the field `Q(q, t)`.

mod gcd;
mod poly;
mod ratqt;
pub(crate) mod upoly;

pub use gcd::gcd;
pub use num_rational::BigRational as Rational;
pub use poly::PolyQT;
pub use ratqt::{one_minus_monomial, sign, RatQT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q=0")]
    PoleAtQ0,
}
