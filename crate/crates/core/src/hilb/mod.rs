//! Young diagrams, standard tableaux and the tableau sum
//!
//! ```text
//! Σ_T z_{Sh(T)}^r g_{Sh(T)} f_T
//! ```
//!
//! with `z_c = t^i q^j` for the box in column `i`, row `j` (both from zero),
//! `g_λ = ∏_{c ∈ λ} (1 + a z_c^{-1})` and `f_T` the product of the corner
//! functions `f_{λ_i, c_i}` along the growth chain of `T`.

mod partition;
mod tableau;

use std::collections::BTreeMap;

use rayon::prelude::*;

pub use partition::{Cell, Partition};
pub use tableau::{hook_length_count, standard_tableaux, StandardTableau};

use crate::error::{Error, Result};
use crate::polycore::{Exponent, FracPoly, Polynomial};

/// `(In(λ), Out(λ))`.
pub fn corners(lambda: &Partition) -> (Vec<Cell>, Vec<Cell>) {
    (lambda.inner_corners(), lambda.outer_corners())
}

pub fn z_box(c: Cell) -> Exponent {
    c.z()
}

pub fn z_partition(lambda: &Partition) -> Exponent {
    lambda.z()
}

/// `f_{λ,c} = ∏_{d ∈ Out(λ)} (z_c - z_d) / ∏_{e ∈ In(λ), e ≠ c} (z_c - z_e)`.
pub fn f_corner(lambda: &Partition, c: Cell) -> Result<FracPoly> {
    let (inner, outer) = corners(lambda);
    if !inner.contains(&c) {
        return Err(Error::NotInnerCorner {
            col: c.col,
            row: c.row,
        });
    }
    let zc = Polynomial::from(c.z());
    let num: Polynomial = outer
        .iter()
        .map(|d| &zc - &Polynomial::from(d.z()))
        .product();
    let den: Vec<(Exponent, Exponent)> = inner
        .iter()
        .filter(|&&e| e != c)
        .map(|e| (c.z(), e.z()))
        .collect();
    Ok(FracPoly::new(num, &den))
}

/// `Σ_{c ∈ In(λ)} f_{λ,c} = 1`.
pub fn corner_sum_check(lambda: &Partition) -> bool {
    let sum: FracPoly = lambda
        .inner_corners()
        .into_iter()
        .map(|c| f_corner(lambda, c).expect("inner corner"))
        .sum();
    sum == FracPoly::one()
}

/// `f_T = ∏_{i=1}^{n-1} f_{λ_i, c_{i+1}}`.
pub fn f_tableau(t: &StandardTableau) -> FracPoly {
    let chain = t.chain();
    let mut out = FracPoly::one();
    for (lambda, &c) in chain.iter().zip(&t.growth()[1..]) {
        out = out.mul(&f_corner(lambda, c).expect("growth step is an inner corner"));
    }
    out
}

/// `g_λ = ∏_{c ∈ λ} (1 + a z_c^{-1})`.
pub fn g_partition(lambda: &Partition) -> Polynomial {
    lambda
        .cells()
        .map(|c| &Polynomial::one() + &Polynomial::monomial(1, Exponent::whole(0, 1, 0) - c.z()))
        .product()
}

/// `Σ_{T} f_T` grouped by shape, for all tableaux of size `n`.
fn f_sums_by_shape(n: usize) -> Vec<(Partition, FracPoly)> {
    let mut by_shape: BTreeMap<Partition, Vec<StandardTableau>> = BTreeMap::new();
    for t in standard_tableaux(n) {
        by_shape.entry(t.shape()).or_default().push(t);
    }
    by_shape
        .into_par_iter()
        .map(|(shape, ts)| {
            let fs: Vec<FracPoly> = ts.iter().map(f_tableau).collect();
            let sum = FracPoly::linear_combination(fs.iter().map(|f| (Polynomial::one(), f)));
            (shape, sum)
        })
        .collect()
}

/// `Σ_T z_{Sh(T)}^r g_{Sh(T)} f_T` over all standard tableaux with `n` boxes.
pub fn magic_rhs(n: usize, r: u32) -> FracPoly {
    assert!(n >= 1, "n must be positive");
    let sums = f_sums_by_shape(n);
    let weights: Vec<Polynomial> = sums
        .iter()
        .map(|(shape, _)| g_partition(shape).shift(shape.z() * r as i32))
        .collect();
    FracPoly::linear_combination(weights.into_iter().zip(sums.iter().map(|(_, f)| f)))
}

/// `Σ_T f_T = 1` over tableaux of size `n`, the top `a`-degree part of the
/// `r = 0` tableau sum.
pub fn top_a_identity(n: usize) -> bool {
    let sums = f_sums_by_shape(n);
    FracPoly::linear_combination(sums.iter().map(|(_, f)| (Polynomial::one(), f)))
        == FracPoly::one()
}
