use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

/// Number of lattice units per whole exponent.
pub const UNITS: i32 = 4;

/// Exponent of a monomial `q^eq a^ea t^et`, stored in quarter units.
///
/// Field order gives the derived `Ord` the canonical lexicographic order on
/// `(q, a, t)` used for term iteration and serialization.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent {
    pub q: i32,
    pub a: i32,
    pub t: i32,
}

impl Exponent {
    pub const ZERO: Exponent = Exponent { q: 0, a: 0, t: 0 };

    /// Builds an exponent from raw quarter units.
    pub const fn units(q: i32, a: i32, t: i32) -> Self {
        Exponent { q, a, t }
    }

    /// Builds an exponent from whole powers.
    pub const fn whole(q: i32, a: i32, t: i32) -> Self {
        Exponent {
            q: q * UNITS,
            a: a * UNITS,
            t: t * UNITS,
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == Exponent::ZERO
    }

    pub fn swap_qt(self) -> Self {
        Exponent {
            q: self.t,
            a: self.a,
            t: self.q,
        }
    }

    /// Order used for binomial normalisation: lexicographic on `(t, q, a)`.
    pub fn binomial_cmp(&self, other: &Self) -> Ordering {
        (self.t, self.q, self.a).cmp(&(other.t, other.q, other.a))
    }

    pub fn as_array(&self) -> [i32; 3] {
        [self.q, self.a, self.t]
    }

    pub fn from_array(e: [i32; 3]) -> Self {
        Exponent::units(e[0], e[1], e[2])
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, o: Exponent) -> Exponent {
        Exponent::units(self.q + o.q, self.a + o.a, self.t + o.t)
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, o: Exponent) -> Exponent {
        Exponent::units(self.q - o.q, self.a - o.a, self.t - o.t)
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent::units(-self.q, -self.a, -self.t)
    }
}

impl Mul<i32> for Exponent {
    type Output = Exponent;
    fn mul(self, k: i32) -> Exponent {
        Exponent::units(self.q * k, self.a * k, self.t * k)
    }
}
