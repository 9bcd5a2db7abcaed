use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::exponent::{Exponent, UNITS};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `q, a, t` with big-integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality. Terms iterate in the canonical `(q, a, t)` lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Exponent, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::monomial(1, Exponent::ZERO)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::monomial(c, Exponent::ZERO)
    }

    pub fn monomial(c: impl Into<BigInt>, e: Exponent) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(e, c.into());
        p
    }

    pub fn q() -> Self {
        Polynomial::monomial(1, Exponent::whole(1, 0, 0))
    }

    pub fn a() -> Self {
        Polynomial::monomial(1, Exponent::whole(0, 1, 0))
    }

    pub fn t() -> Self {
        Polynomial::monomial(1, Exponent::whole(0, 0, 1))
    }

    /// `q^i a^j t^k` with whole exponents.
    pub fn qat(i: i32, j: i32, k: i32) -> Self {
        Polynomial::monomial(1, Exponent::whole(i, j, k))
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs, combining
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, Exponent)>,
        C: Into<BigInt>,
    {
        let mut p = Polynomial::zero();
        for (c, e) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Exponent::ZERO).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponent) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Returns the single term if this polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(&BigInt, Exponent)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// Largest term in the canonical order.
    pub fn lead(&self) -> Option<(Exponent, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Smallest term in the canonical order.
    pub fn trail(&self) -> Option<(Exponent, &BigInt)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, e: Exponent, c: &BigInt) {
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Multiplies by the monomial `x^e`.
    pub fn shift(&self, e: Exponent) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (*x + e, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies a group homomorphism of the exponent lattice to every term.
    /// Terms landing on the same exponent are combined.
    pub fn map_exponents(&self, f: impl Fn(Exponent) -> Exponent) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            out.add_term_ref(f(*e), c);
        }
        out
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Polynomial {
        self.map_exponents(Exponent::swap_qt)
    }

    /// Keeps only terms whose `q` exponent is at most `max_units`.
    pub fn truncate_q(&self, max_units: i32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.q <= max_units)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn filter(&self, keep: impl Fn(&Exponent) -> bool) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `a^k` (whole units) as a polynomial in `q, t`.
    pub fn coeff_of_a(&self, k: i32) -> Polynomial {
        let ea = k * UNITS;
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.a == ea)
                .map(|(e, c)| (Exponent::units(e.q, 0, e.t), c.clone()))
                .collect(),
        }
    }

    /// Sets `a = 0`. Terms with negative `a` exponent are rejected.
    pub fn at_a_zero(&self) -> Result<Polynomial> {
        if let Some((e, _)) = self.terms.iter().find(|(e, _)| e.a < 0) {
            return Err(Error::NonIntegralPower(format!(
                "cannot set a = 0 in a term with a-exponent {}/4",
                e.a
            )));
        }
        Ok(self.filter(|e| e.a == 0))
    }

    /// Minimum and maximum of a coordinate over all terms.
    pub fn span(&self, coord: impl Fn(&Exponent) -> i32) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(coord);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    pub fn total_coefficient(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient `self / d`.
    ///
    /// Runs multivariate division in the canonical (group) order. If an exact
    /// quotient `r` exists, the Newton polytope of `self` is the Minkowski sum
    /// of those of `r` and `d`, so every exponent of `r` lies in a box computed
    /// from the coordinate spans. Leaving that box proves inexactness, which
    /// guarantees termination for Laurent inputs.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Polynomial> {
        let (d_lead, d_lc) = match d.lead() {
            Some((e, c)) => (e, c.clone()),
            None => return Err(Error::NonExactDivision("division by zero".into())),
        };
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        let coords: [fn(&Exponent) -> i32; 3] = [|e| e.q, |e| e.a, |e| e.t];
        let mut bounds = [(0, 0); 3];
        for (b, coord) in bounds.iter_mut().zip(coords) {
            let (plo, phi) = self.span(coord).expect("nonzero");
            let (dlo, dhi) = d.span(coord).expect("nonzero");
            if phi - plo < dhi - dlo {
                return Err(Error::NonExactDivision(format!(
                    "divisor {d} has larger degree span than dividend"
                )));
            }
            *b = (plo - dlo, phi - dhi);
        }
        let in_box = |e: &Exponent| {
            bounds
                .iter()
                .zip(coords)
                .all(|((lo, hi), coord)| (*lo..=*hi).contains(&coord(e)))
        };

        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((r_lead, r_lc)) = rem.lead() {
            let e = r_lead - d_lead;
            if !in_box(&e) {
                return Err(Error::NonExactDivision(format!(
                    "nonzero remainder dividing by {d}"
                )));
            }
            let (c, r) = r_lc.div_rem(&d_lc);
            if !r.is_zero() {
                return Err(Error::NonExactDivision(format!(
                    "coefficient {r_lc} not divisible by {d_lc}"
                )));
            }
            for (de, dc) in &d.terms {
                rem.add_term(*de + e, -(dc * &c));
            }
            quot.add_term(e, c);
        }
        Ok(quot)
    }

    /// True if some coefficient is negative.
    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }
}

impl From<Exponent> for Polynomial {
    fn from(e: Exponent) -> Self {
        Polynomial::monomial(1, e)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, o: Polynomial) -> Polynomial {
        self += &o;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, o: &Polynomial) {
        for (e, c) in &o.terms {
            self.add_term_ref(*e, c);
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, o: &Polynomial) {
        for (e, c) in &o.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= o;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, o: Polynomial) -> Polynomial {
        self -= &o;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        let (small, large) = if self.len() <= o.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut out = Polynomial::zero();
        for (e1, c1) in &small.terms {
            for (e2, c2) in &large.terms {
                out.add_term(*e1 + *e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, o: Polynomial) -> Polynomial {
        &self * &o
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        let mut acc = Polynomial::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format::to_text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn mul_expands_binomials() {
        let lhs = &p("1 + a") * &p("t + a");
        assert_eq!(lhs, p("t + a + a t + a^2"));
    }

    #[test]
    fn mul_gives_f00_numerator() {
        let lhs = &p("1 + a") * &p("q + t - q t + a");
        let expected = p("q + t - q t + a + a q + a t - a q t + a^2");
        assert_eq!(lhs, expected);
    }

    #[test]
    fn mul_by_one_is_identity() {
        let x = p("3 q^-2 t + a^(1/2) - 7");
        assert_eq!(&x * &Polynomial::one(), x);
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p("1 - q^2").exact_div(&p("1 - q")).unwrap(), p("1 + q"));

        let s = p("q + t - q t");
        let num = &Polynomial::one() - &s.pow(3);
        let den = &p("1 - q") * &p("1 - t");
        let expected = &(&Polynomial::one() + &s) + &s.pow(2);
        assert_eq!(num.exact_div(&den).unwrap(), expected);

        assert!(matches!(
            p("1 + q").exact_div(&p("1 - q")),
            Err(Error::NonExactDivision(_))
        ));
    }

    #[test]
    fn exact_div_laurent_and_zero() {
        let d = p("q^-1 - t^(1/2)");
        let r = p("a^-3 + 5 q t^-2");
        assert_eq!((&r * &d).exact_div(&d).unwrap(), r);
        assert!(p("q").exact_div(&Polynomial::zero()).is_err());
        assert!(Polynomial::zero().exact_div(&d).unwrap().is_zero());
    }

    #[test]
    fn exact_div_rejects_non_integral_quotient() {
        assert!(p("1 + q").exact_div(&p("2")).is_err());
        assert_eq!(p("2 + 4 q").exact_div(&p("2")).unwrap(), p("1 + 2 q"));
    }

    #[test]
    fn coeff_of_a_slices() {
        let f00 = &p("1 + a") * &p("q + t - q t + a");
        assert_eq!(f00.coeff_of_a(2), Polynomial::one());
        assert_eq!(f00.coeff_of_a(0), p("q + t - q t"));
        assert!(f00.coeff_of_a(-1).is_zero());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let x = p("1 - q + t");
        assert_eq!(x.pow(3), &(&x * &x) * &x);
        assert_eq!(x.pow(0), Polynomial::one());
    }
}
