use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::exponent::{Exponent, UNITS};
use super::frac::FracPoly;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Expands a rational function whose denominator factors are all `q^j - 1`
/// as a power series in `q`, keeping terms of `q`-degree at most `qmax`.
///
/// Exact in `a` and `t`.
pub fn series_expand(f: &FracPoly, qmax: u32) -> Result<Polynomial> {
    let max_units = qmax as i32 * UNITS;
    let mut steps = Vec::new();
    for (factor, mult) in f.denominator() {
        let j = factor
            .q_power()
            .ok_or_else(|| Error::NotASeries(factor.to_polynomial().to_string()))?;
        for _ in 0..mult {
            steps.push(j);
        }
    }
    // (q^j - 1)^-1 = -(1 - q^j)^-1
    let mut acc = f.numerator().truncate_q(max_units);
    if steps.len() % 2 == 1 {
        acc = -acc;
    }
    for j in steps {
        acc = divide_by_one_minus_q_power(&acc, j, max_units);
    }
    Ok(acc)
}

/// Multiplies a truncated series by `1/(1 - q^j)` via the recurrence
/// `c'[e] = c[e] + c'[e - j]`, applied per `(a, t)` class.
fn divide_by_one_minus_q_power(p: &Polynomial, j: i32, max_units: i32) -> Polynomial {
    let mut classes: BTreeMap<(i32, i32), BTreeMap<i32, BigInt>> = BTreeMap::new();
    for (e, c) in p.terms() {
        classes
            .entry((e.a, e.t))
            .or_default()
            .insert(e.q, c.clone());
    }
    let mut out = Polynomial::zero();
    for ((ea, et), coeffs) in classes {
        let lo = *coeffs.keys().next().expect("nonempty class");
        let mut done: BTreeMap<i32, BigInt> = BTreeMap::new();
        let mut e = lo;
        while e <= max_units {
            let mut c = coeffs.get(&e).cloned().unwrap_or_default();
            if let Some(prev) = done.get(&(e - j)) {
                c += prev;
            }
            if !c.is_zero() {
                done.insert(e, c);
            }
            e += 1;
        }
        for (eq, c) in done {
            out.add_term(Exponent::units(eq, ea, et), c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn f0_expansion() {
        let f0 = FracPoly::over_one_minus_q(p("1 + a"), 1);
        let got = series_expand(&f0, 2).unwrap();
        assert_eq!(got, &p("1 + a") * &p("1 + q + q^2"));
    }

    #[test]
    fn f2_expansion() {
        let x = FracPoly::over_one_minus_q(p("t"), 1);
        let y = FracPoly::over_one_minus_q(p("q"), 2);
        let got = series_expand(&x.add(&y), 3).unwrap();
        assert_eq!(got, p("t + t q + t q^2 + t q^3 + q + 2 q^2 + 3 q^3"));
    }

    #[test]
    fn polynomial_input_is_unchanged() {
        let x = p("1 + q^2 a - t^3");
        assert_eq!(series_expand(&FracPoly::from(x.clone()), 2).unwrap(), x);
    }

    #[test]
    fn rejects_non_q_denominators() {
        let f = FracPoly::new(
            Polynomial::one(),
            &[(Exponent::whole(0, 0, 1), Exponent::ZERO)],
        );
        assert!(matches!(series_expand(&f, 3), Err(Error::NotASeries(_))));
    }

    #[test]
    fn handles_higher_q_powers() {
        // 1/(1 - q^2) = 1 + q^2 + q^4 + ...
        let f = FracPoly::new(
            Polynomial::one(),
            &[(Exponent::ZERO, Exponent::whole(2, 0, 0))],
        );
        assert_eq!(series_expand(&f, 5).unwrap(), p("1 + q^2 + q^4"));
    }
}
