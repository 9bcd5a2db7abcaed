use std::collections::HashMap;

use parking_lot::RwLock;

use super::insertion::InsertionPair;
use super::seq::ShuffleSeq;
use crate::polycore::{FracPoly, Polynomial};

/// Evaluator of `f_v` by the insertion-weight recursion
///
/// ```text
/// f_v     = Σ_{w ∈ {0,1}^k} P_{v,w} q^{k-|w|} f_w     (v not all zeroes)
/// f_{0^n} = f_{1·0^{n-1}} / (1 - q)
/// ```
///
/// computed with rational-function arithmetic throughout, independently of
/// [`super::SeqEngine`].
#[derive(Default)]
pub struct AltEngine {
    memo: RwLock<HashMap<ShuffleSeq, FracPoly>>,
}

impl AltEngine {
    pub fn new() -> Self {
        AltEngine::default()
    }

    pub fn f_alt(&self, v: ShuffleSeq) -> FracPoly {
        if let Some(x) = self.memo.read().get(&v) {
            return x.clone();
        }
        let value = if v.is_empty() {
            FracPoly::one()
        } else if v.is_all_zeros() {
            let head = ShuffleSeq::zeros(v.len() - 1).push_front(true);
            self.f_alt(head)
                .mul(&FracPoly::over_one_minus_q(Polynomial::one(), 1))
        } else {
            // every w is shorter than v, so this recursion is well founded
            let k = v.count_zeros();
            let terms: Vec<(Polynomial, FracPoly)> = ShuffleSeq::all_of_length(k)
                .map(|w| {
                    let pair = InsertionPair::new(v, w).expect("w has length #zeroes(v)");
                    let qpow = Polynomial::qat(w.count_zeros() as i32, 0, 0);
                    (&pair.p_weight() * &qpow, self.f_alt(w))
                })
                .collect();
            FracPoly::linear_combination(terms.iter().map(|(m, x)| (m.clone(), x)))
        };
        self.memo.write().entry(v).or_insert(value).clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> ShuffleSeq {
        x.parse().unwrap()
    }

    fn p(x: &str) -> Polynomial {
        x.parse().unwrap()
    }

    #[test]
    fn hand_evaluated_values() {
        let e = AltEngine::new();
        // (1+a) q (1+a)/(1-q) + (t+a)(1+a)
        let first = FracPoly::over_one_minus_q(&p("q") * &p("1 + 2 a + a^2"), 1);
        let second = FracPoly::from(&p("t + a") * &p("1 + a"));
        assert_eq!(e.f_alt(s("10")), first.add(&second));
        assert_eq!(e.f_alt(s("11")), FracPoly::from(&p("1 + a") * &p("t + a")));
        assert_eq!(e.f_alt(s("")), FracPoly::one());
    }
}
