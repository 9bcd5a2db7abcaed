//! Link-invariant layer: reduced superpolynomials of torus knots, the
//! normalisation `P_L = T^{-e} Q^n α^{e-n} P_β` rewritten in `q, a, t`
//! (`Q = q^{1/2}`, `T = (tq)^{1/2}`, `α = a^{1/2}(tq)^{1/4}`), the unknot,
//! HOMFLY and `sl_N` specialisations, and the q,t-Catalan comparison.

mod catalan;
mod dataset;

pub use catalan::{area, bounce, dyck_paths, qt_catalan, DyckPath};
pub use dataset::{dataset_get, dataset_list, torus2_family, SuperPolyEntry, DATASET_KEYS};

use crate::error::{Error, Result};
use crate::polycore::{series_expand, substitute, Exponent, FracPoly, Polynomial, SubstRule};

/// Braid exponent `e` (signed crossing count) and strand count `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalizationContext {
    pub e: i32,
    pub n: u32,
}

impl NormalizationContext {
    /// `(tq)^{-e/2} q^{n/2} (a^{1/2} (tq)^{1/4})^{e-n}`.
    pub fn prefactor(&self) -> Exponent {
        let (e, n) = (self.e, self.n as i32);
        Exponent::units(n - e, 2 * (e - n), -e - n)
    }
}

pub fn normalize_superpoly(p: &Polynomial, ctx: NormalizationContext) -> Polynomial {
    p.shift(ctx.prefactor())
}

/// Multiplies a series by a caller-supplied monomial shift.
pub fn apply_shift(f: &FracPoly, shift: Exponent) -> FracPoly {
    f.mul_poly(&Polynomial::from(shift))
}

/// `t^{1/2} ↦ -q^{-1/2}`.
pub fn decategorify(p: &Polynomial) -> Result<Polynomial> {
    substitute(p, &[SubstRule::decategorify()])
}

/// `a ↦ -q^N`, for a polynomial that is already decategorified.
pub fn sl_n(p: &Polynomial, n: u32) -> Result<Polynomial> {
    substitute(p, &[SubstRule::sl_n(n)])
}

/// `P_U = a^{-1/2} q^{1/4} t^{-1/4} (1 + a) / (1 - q)`.
pub fn unknot_frac() -> FracPoly {
    let num = (&Polynomial::one() + &Polynomial::a()).shift(unknot_monomial());
    FracPoly::over_one_minus_q(num, 1)
}

fn unknot_monomial() -> Exponent {
    Exponent::units(1, -2, -1)
}

/// `P_U` expanded to `q`-degree at most `qmax`.
pub fn unknot_series(qmax: u32) -> Polynomial {
    series_expand(&unknot_frac(), qmax).expect("unknot denominator is 1 - q")
}

/// `p / P_U`, which must be a Laurent polynomial.
pub fn reduce_by_unknot(p: &FracPoly) -> Result<Polynomial> {
    let one_minus_q = &Polynomial::one() - &Polynomial::q();
    let scaled = p.mul_poly(&one_minus_q.shift(-unknot_monomial()));
    let num = scaled
        .to_polynomial()
        .map_err(|_| Error::NonExactDivision(format!("{p} is not a multiple of the unknot")))?;
    num.exact_div(&(&Polynomial::one() + &Polynomial::a()))
}

/// The part of `p` of minimal `a`-degree: its coefficient (a polynomial in
/// `q, t`) and the stripped power of `a`.
pub fn lowest_a_part(p: &Polynomial) -> (Polynomial, Exponent) {
    let (amin, _) = p.span(|e| e.a).expect("p is nonzero");
    let part = p
        .filter(|e| e.a == amin)
        .shift(Exponent::units(0, -amin, 0));
    (part, Exponent::units(0, amin, 0))
}

/// The monomial `m` with `x = m · y`, if there is one.
pub fn matches_up_to_monomial(x: &Polynomial, y: &Polynomial) -> Option<Exponent> {
    let (ex, cx) = x.lead()?;
    let (ey, cy) = y.lead()?;
    if cx != cy {
        return None;
    }
    let m = ex - ey;
    (y.shift(m) == *x).then_some(m)
}
