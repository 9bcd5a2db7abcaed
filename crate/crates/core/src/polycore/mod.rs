//! Exact Laurent-polynomial and factored-fraction arithmetic in `q, a, t`.

mod exponent;
pub mod format;
mod frac;
mod poly;
mod series;
mod subst;

pub use exponent::{Exponent, UNITS};
pub use format::{parse, serialize, serialize_frac, Format};
pub use frac::{BinomialFactor, FracPoly};
pub use poly::Polynomial;
pub use series::series_expand;
pub use subst::{substitute, SubstRule, Var};

/// `p * q`.
pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p * q
}

/// Exact quotient, or [`crate::Error::NonExactDivision`].
pub fn poly_exact_div(p: &Polynomial, d: &Polynomial) -> crate::Result<Polynomial> {
    p.exact_div(d)
}

pub fn frac_add(x: &FracPoly, y: &FracPoly) -> FracPoly {
    x.add(y)
}

pub fn frac_to_poly(f: &FracPoly) -> crate::Result<Polynomial> {
    f.to_polynomial()
}

pub fn coeff_of_a(p: &Polynomial, k: i32) -> Polynomial {
    p.coeff_of_a(k)
}
