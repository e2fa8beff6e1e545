//! Exact scalar arithmetic in ℚ(q).
//!
//! [`QNumPoly`] is a dense polynomial in the indeterminate q with rational
//! coefficients; [`QRat`] is a reduced quotient of two of them with a monic
//! denominator, so structural equality is field equality.

pub(crate) mod poly;
mod rat;

pub use poly::QNumPoly;
pub use rat::QRat;

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type BigRat = num_rational::BigRational;

/// Parse `"p/q"` or `"p"` into a [`BigRat`].
pub fn parse_bigrat(text: &str) -> Option<BigRat> {
    let text = text.trim();
    let value: BigRat = text.parse().ok()?;
    Some(value)
}

/// Format a [`BigRat`] as `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_bigrat(value: &BigRat) -> String {
    value.to_string()
}
