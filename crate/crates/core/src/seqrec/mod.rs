//! Binary-sequence recursions for `f_v` and `f̃_v = (1-q)^{#zeroes(v)} f_v`.
//!
//! [`SeqEngine`] evaluates the normalised recursion on polynomials:
//!
//! ```text
//! f̃_∅     = 1
//! f̃_{v·1} = (t^{|v|} + a) f̃_v
//! f̃_{v·0} = q f̃_{0·v} + (1 - q) f̃_{1·v}      (v·0 not all zeroes)
//! f̃_{0^n} = f̃_{1·0^{n-1}}
//! ```
//!
//! [`AltEngine`] evaluates the insertion-weight recursion with rational
//! functions; the two agree on every sequence.

mod alt;
mod engine;
mod insertion;
mod seq;

pub use alt::AltEngine;
pub use engine::{MemoTable, SeqEngine};
pub use insertion::{crossings, insert, p_weight, InsertionPair};
pub use seq::{ShuffleSeq, MAX_LEN};

use crate::polycore::{series_expand, FracPoly, Polynomial};
use crate::Result;

/// Checks the identity obtained by expanding `f_{0^n}` with the insertion
/// recursion verbatim (all weights are 1 for the zero sequence):
///
/// `(1 - q^n) f_{0^n} = Σ_{w ≠ 0^n} q^{n-|w|} f_w = (1 + q + … + q^{n-1}) f_{1·0^{n-1}}`.
pub fn rule1_redundancy_check(engine: &SeqEngine, n: usize) -> bool {
    assert!(n >= 1, "n must be positive");
    let zero = ShuffleSeq::zeros(n);
    let one_minus_qn = &Polynomial::one() - &Polynomial::qat(n as i32, 0, 0);
    let lhs = engine.f(zero).mul_poly(&one_minus_qn);

    let fs: Vec<(Polynomial, FracPoly)> = ShuffleSeq::all_of_length(n)
        .filter(|w| !w.is_all_zeros())
        .map(|w| (Polynomial::qat(w.count_zeros() as i32, 0, 0), engine.f(w)))
        .collect();
    let verbatim = FracPoly::linear_combination(fs.iter().map(|(m, x)| (m.clone(), x)));

    let geometric: Polynomial = (0..n as i32).map(|i| Polynomial::qat(i, 0, 0)).sum();
    let rhs = engine
        .f(ShuffleSeq::zeros(n - 1).push_front(true))
        .mul_poly(&geometric);

    lhs == verbatim && verbatim == rhs
}

/// Truncated power series of `f_{0^n}`, the Poincaré series of the full twist
/// on `n` strands (up to an overall shift).
pub fn full_twist_series(engine: &SeqEngine, n: usize, qmax: u32) -> Result<Polynomial> {
    series_expand(&engine.f(ShuffleSeq::zeros(n)), qmax)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &str) -> Polynomial {
        x.parse().unwrap()
    }

    #[test]
    fn full_twist_examples() {
        let e = SeqEngine::new();
        assert_eq!(
            full_twist_series(&e, 1, 3).unwrap(),
            &p("1 + a") * &p("1 + q + q^2 + q^3")
        );
        let two = full_twist_series(&e, 2, 1).unwrap();
        assert_eq!(two.filter(|x| x.q == 0), &p("t + a") * &p("1 + a"));
        for n in 1..5 {
            let at0 = full_twist_series(&e, n, 0).unwrap();
            let num = e.tilde_f(ShuffleSeq::zeros(n)).filter(|x| x.q == 0);
            assert_eq!(at0, num);
        }
    }

    #[test]
    fn rule1_small() {
        let e = SeqEngine::new();
        for n in 1..=4 {
            assert!(rule1_redundancy_check(&e, n), "n = {n}");
        }
    }
}
