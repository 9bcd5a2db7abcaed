use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::exponent::Exponent;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// A denominator factor `m1 - m2` between two monomials.
///
/// Normalised factors always have `trail = 1` and `lead > 1` in the binomial
/// order (lex on `(t, q, a)`): any `m1 - m2` equals a signed monomial unit
/// times `x^u - 1` with `u > 0`, and the unit is absorbed into the numerator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BinomialFactor {
    pub lead: Exponent,
    pub trail: Exponent,
}

impl PartialOrd for BinomialFactor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BinomialFactor {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lead
            .binomial_cmp(&other.lead)
            .then_with(|| self.trail.binomial_cmp(&other.trail))
    }
}

impl BinomialFactor {
    /// Normalises `x^m1 - x^m2` into `sign * x^unit * (x^u - 1)`.
    ///
    /// Returns `(factor, sign, unit)`. Panics if `m1 == m2`.
    pub fn normalize(m1: Exponent, m2: Exponent) -> (BinomialFactor, i32, Exponent) {
        assert_ne!(m1, m2, "binomial factor with equal monomials is zero");
        let u = m1 - m2;
        if u.binomial_cmp(&Exponent::ZERO) == Ordering::Greater {
            (BinomialFactor::unit_form(u), 1, m2)
        } else {
            (BinomialFactor::unit_form(-u), -1, m1)
        }
    }

    fn unit_form(u: Exponent) -> BinomialFactor {
        BinomialFactor {
            lead: u,
            trail: Exponent::ZERO,
        }
    }

    pub fn to_polynomial(&self) -> Polynomial {
        &Polynomial::from(self.lead) - &Polynomial::from(self.trail)
    }

    /// If this factor is `q^j - 1`, returns `j` in quarter units.
    pub fn q_power(&self) -> Option<i32> {
        (self.trail.is_zero() && self.lead.a == 0 && self.lead.t == 0 && self.lead.q > 0)
            .then_some(self.lead.q)
    }
}

/// Rational function: a polynomial numerator over a multiset of normalised
/// binomial factors.
///
/// After every operation no denominator factor divides the numerator exactly.
/// A zero numerator has an empty denominator.
#[derive(Clone, Debug)]
pub struct FracPoly {
    num: Polynomial,
    den: BTreeMap<BinomialFactor, u32>,
}

impl FracPoly {
    pub fn zero() -> Self {
        FracPoly::from(Polynomial::zero())
    }

    pub fn one() -> Self {
        FracPoly::from(Polynomial::one())
    }

    /// `num / ∏ (m1 - m2)` over the given monomial pairs.
    pub fn new(num: Polynomial, binomials: &[(Exponent, Exponent)]) -> Self {
        let mut num = num;
        let mut den = BTreeMap::new();
        for &(m1, m2) in binomials {
            let (factor, sign, unit) = BinomialFactor::normalize(m1, m2);
            num = num.shift(-unit);
            if sign < 0 {
                num = -num;
            }
            *den.entry(factor).or_insert(0) += 1;
        }
        FracPoly::reduced(num, den)
    }

    /// `num / (1 - q)^k`.
    pub fn over_one_minus_q(num: Polynomial, k: u32) -> Self {
        let pairs = vec![(Exponent::ZERO, Exponent::whole(1, 0, 0)); k as usize];
        FracPoly::new(num, &pairs)
    }

    /// Builds from already normalised factors and reduces.
    pub fn from_parts(num: Polynomial, factors: impl IntoIterator<Item = BinomialFactor>) -> Self {
        let mut pairs = Vec::new();
        for f in factors {
            pairs.push((f.lead, f.trail));
        }
        FracPoly::new(num, &pairs)
    }

    fn reduced(num: Polynomial, mut den: BTreeMap<BinomialFactor, u32>) -> Self {
        if num.is_zero() {
            return FracPoly {
                num,
                den: BTreeMap::new(),
            };
        }
        let mut num = num;
        for (factor, mult) in den.iter_mut() {
            let fp = factor.to_polynomial();
            while *mult > 0 {
                match num.exact_div(&fp) {
                    Ok(r) => {
                        num = r;
                        *mult -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
        den.retain(|_, m| *m > 0);
        FracPoly { num, den }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    /// Denominator factors with multiplicities, in canonical order.
    pub fn denominator(&self) -> impl Iterator<Item = (&BinomialFactor, u32)> + '_ {
        self.den.iter().map(|(f, m)| (f, *m))
    }

    /// Denominator factors listed with repetition.
    pub fn denominator_factors(&self) -> Vec<BinomialFactor> {
        self.den
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(*f, *m as usize))
            .collect()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn expand_den(factors: &BTreeMap<BinomialFactor, u32>) -> Polynomial {
        factors
            .iter()
            .map(|(f, m)| f.to_polynomial().pow(*m))
            .product()
    }

    /// Least common multiple of two factor multisets.
    fn lcm(
        x: &BTreeMap<BinomialFactor, u32>,
        y: &BTreeMap<BinomialFactor, u32>,
    ) -> BTreeMap<BinomialFactor, u32> {
        let mut out = x.clone();
        for (f, m) in y {
            let e = out.entry(*f).or_insert(0);
            *e = (*e).max(*m);
        }
        out
    }

    /// Cofactor `lcm / den` expanded as a polynomial.
    fn cofactor(
        lcm: &BTreeMap<BinomialFactor, u32>,
        den: &BTreeMap<BinomialFactor, u32>,
    ) -> Polynomial {
        lcm.iter()
            .map(|(f, m)| f.to_polynomial().pow(m - den.get(f).copied().unwrap_or(0)))
            .product()
    }

    pub fn add(&self, other: &FracPoly) -> FracPoly {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let l = FracPoly::lcm(&self.den, &other.den);
        let num = &(&self.num * &FracPoly::cofactor(&l, &self.den))
            + &(&other.num * &FracPoly::cofactor(&l, &other.den));
        FracPoly::reduced(num, l)
    }

    pub fn neg(&self) -> FracPoly {
        FracPoly {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &FracPoly) -> FracPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FracPoly) -> FracPoly {
        let mut den = self.den.clone();
        for (f, m) in &other.den {
            *den.entry(*f).or_insert(0) += m;
        }
        FracPoly::reduced(&self.num * &other.num, den)
    }

    pub fn mul_poly(&self, p: &Polynomial) -> FracPoly {
        FracPoly::reduced(&self.num * p, self.den.clone())
    }

    /// `Σ m_i x_i`, summing numerators over identical denominators before any
    /// cross-denominator addition.
    pub fn linear_combination<'a>(
        items: impl IntoIterator<Item = (Polynomial, &'a FracPoly)>,
    ) -> FracPoly {
        let mut groups: BTreeMap<Vec<(BinomialFactor, u32)>, Polynomial> = BTreeMap::new();
        for (m, x) in items {
            let key: Vec<_> = x.den.iter().map(|(f, k)| (*f, *k)).collect();
            *groups.entry(key).or_default() += &(&m * &x.num);
        }
        groups
            .into_iter()
            .map(|(key, num)| FracPoly::reduced(num, key.into_iter().collect()))
            .fold(FracPoly::zero(), |acc, x| acc.add(&x))
    }

    /// Decides equality by cross-multiplication over the common denominator.
    pub fn equals(&self, other: &FracPoly) -> bool {
        let l = FracPoly::lcm(&self.den, &other.den);
        &self.num * &FracPoly::cofactor(&l, &self.den)
            == &other.num * &FracPoly::cofactor(&l, &other.den)
    }

    /// Applies a linear map of the exponent lattice to numerator and
    /// denominator, renormalising the denominator factors.
    pub fn map_exponents(&self, f: impl Fn(Exponent) -> Exponent) -> FracPoly {
        let num = self.num.map_exponents(&f);
        let pairs: Vec<_> = self
            .denominator_factors()
            .into_iter()
            .map(|b| (f(b.lead), f(b.trail)))
            .collect();
        FracPoly::new(num, &pairs)
    }

    pub fn swap_qt(&self) -> FracPoly {
        self.map_exponents(Exponent::swap_qt)
    }

    /// The polynomial value, if the reduced denominator is empty.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        if self.den.is_empty() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial(self.to_string()))
        }
    }

    /// Numerator and factors rendered with every `x^u - 1` flipped to
    /// `1 - x^u`, the sign moved to the numerator.
    pub fn display_parts(&self) -> (Polynomial, Vec<(Exponent, u32)>) {
        let flips: u32 = self.den.values().sum();
        let num = if flips % 2 == 1 {
            -&self.num
        } else {
            self.num.clone()
        };
        (num, self.den.iter().map(|(f, m)| (f.lead, *m)).collect())
    }

    /// Cross-multiplied identity used by property tests: returns
    /// `(x.num * den(y) + y.num * den(x), den(x) * den(y))` expanded.
    pub fn naive_sum_parts(x: &FracPoly, y: &FracPoly) -> (Polynomial, Polynomial) {
        let dx = FracPoly::expand_den(&x.den);
        let dy = FracPoly::expand_den(&y.den);
        (&(&x.num * &dy) + &(&y.num * &dx), &dx * &dy)
    }

    /// Expanded denominator polynomial.
    pub fn den_polynomial(&self) -> Polynomial {
        FracPoly::expand_den(&self.den)
    }

    pub fn scale(&self, k: &BigInt) -> FracPoly {
        if k.is_one() {
            return self.clone();
        }
        FracPoly::reduced(self.num.scale(k), self.den.clone())
    }
}

impl From<Polynomial> for FracPoly {
    fn from(num: Polynomial) -> Self {
        FracPoly {
            num,
            den: BTreeMap::new(),
        }
    }
}

impl PartialEq for FracPoly {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for FracPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format::frac_to_text(self))
    }
}

impl std::iter::Sum for FracPoly {
    fn sum<I: Iterator<Item = FracPoly>>(iter: I) -> FracPoly {
        iter.fold(FracPoly::zero(), |acc, x| acc.add(&x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    const Q: Exponent = Exponent::whole(1, 0, 0);
    const T: Exponent = Exponent::whole(0, 0, 1);
    const QT: Exponent = Exponent::whole(1, 0, 1);
    const ONE: Exponent = Exponent::ZERO;

    #[test]
    fn normalisation_absorbs_units_and_signs() {
        let (f, s, u) = BinomialFactor::normalize(ONE, Q);
        assert_eq!((f.lead, f.trail, s, u), (Q, ONE, -1, ONE));
        let (f, s, u) = BinomialFactor::normalize(T, Q);
        assert_eq!((f.lead, s, u), (T - Q, 1, Q));
    }

    #[test]
    fn corner_functions_sum_to_one() {
        // (t - tq)/(t - q) + (q - qt)/(q - t)
        let x = FracPoly::new(p("t - q t"), &[(T, Q)]);
        let y = FracPoly::new(p("q - q t"), &[(Q, T)]);
        let s = x.add(&y);
        assert!(s.is_polynomial());
        assert_eq!(s.to_polynomial().unwrap(), Polynomial::one());
    }

    #[test]
    fn add_zero_and_doubling() {
        let x = FracPoly::over_one_minus_q(Polynomial::one(), 1);
        assert_eq!(x.add(&FracPoly::zero()), x);
        let two = x.add(&x);
        assert_eq!(two, FracPoly::over_one_minus_q(Polynomial::constant(2), 1));
        assert_eq!(two.denominator_factors().len(), 1);
    }

    #[test]
    fn reduction_cancels_common_factor() {
        let f = FracPoly::new(&p("t - q") * &p("1 + a"), &[(T, Q)]);
        assert_eq!(f.to_polynomial().unwrap(), p("1 + a"));
        let g = FracPoly::over_one_minus_q(Polynomial::one(), 1);
        assert!(matches!(g.to_polynomial(), Err(Error::NotPolynomial(_))));
    }

    #[test]
    fn unit_content_is_unified() {
        // (qt - q) and (t - 1) differ by the unit q and reduce against each other.
        let f = FracPoly::new(p("q t - q"), &[(T, ONE)]);
        assert_eq!(f.to_polynomial().unwrap(), p("q"));
        let g = FracPoly::new(Polynomial::one(), &[(QT, Q)]);
        let h = FracPoly::new(p("q^-1"), &[(T, ONE)]);
        assert_eq!(g, h);
    }

    #[test]
    fn swap_renormalises() {
        let f = FracPoly::new(p("t - q t"), &[(T, Q)]);
        let g = FracPoly::new(p("q - q t"), &[(Q, T)]);
        assert_eq!(f.swap_qt(), g);
    }
}
