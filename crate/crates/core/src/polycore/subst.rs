use num_bigint::BigInt;

use super::exponent::{Exponent, UNITS};
use super::poly::Polynomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Q,
    A,
    T,
}

impl Var {
    fn get(self, e: &Exponent) -> i32 {
        match self {
            Var::Q => e.q,
            Var::A => e.a,
            Var::T => e.t,
        }
    }

    fn cleared(self, e: Exponent) -> Exponent {
        match self {
            Var::Q => Exponent { q: 0, ..e },
            Var::A => Exponent { a: 0, ..e },
            Var::T => Exponent { t: 0, ..e },
        }
    }
}

/// Rewrites a generator `var^(generator/4)` as `sign * x^image`.
///
/// A term `var^(γ/4)` becomes `sign^(γ/generator) x^(image γ / generator)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubstRule {
    pub var: Var,
    /// Exponent of the generator, in quarter units (must be positive).
    pub generator: i32,
    /// `1` or `-1`.
    pub sign: i32,
    pub image: Exponent,
}

impl SubstRule {
    pub fn new(var: Var, generator: i32, sign: i32, image: Exponent) -> Self {
        assert!(generator > 0, "generator exponent must be positive");
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        SubstRule {
            var,
            generator,
            sign,
            image,
        }
    }

    /// `t^(1/2) -> -q^(-1/2)`.
    pub fn decategorify() -> Self {
        SubstRule::new(Var::T, UNITS / 2, -1, Exponent::units(-UNITS / 2, 0, 0))
    }

    /// `a -> -q^n`.
    pub fn sl_n(n: u32) -> Self {
        SubstRule::new(Var::A, UNITS, -1, Exponent::whole(n as i32, 0, 0))
    }

    /// `var -> var`.
    pub fn identity(var: Var) -> Self {
        let image = match var {
            Var::Q => Exponent::whole(1, 0, 0),
            Var::A => Exponent::whole(0, 1, 0),
            Var::T => Exponent::whole(0, 0, 1),
        };
        SubstRule::new(var, UNITS, 1, image)
    }

    /// Sign flip and image exponent contributed by the `var` part of `e`.
    fn apply(&self, e: Exponent) -> Result<(bool, Exponent)> {
        let gamma = self.var.get(&e);
        let neg = if self.sign < 0 {
            if gamma % self.generator != 0 {
                return Err(Error::NonIntegralPower(format!(
                    "(-1)^({gamma}/{})",
                    self.generator
                )));
            }
            (gamma / self.generator) % 2 != 0
        } else {
            false
        };
        let scaled = self.image * gamma;
        let image = [scaled.q, scaled.a, scaled.t];
        if image.iter().any(|x| x % self.generator != 0) {
            return Err(Error::NonIntegralPower(format!(
                "image exponent {gamma}/{} leaves the quarter lattice",
                self.generator
            )));
        }
        let image = Exponent::units(
            scaled.q / self.generator,
            scaled.a / self.generator,
            scaled.t / self.generator,
        );
        Ok((neg, image))
    }
}

/// Applies monomial substitution rules (at most one per variable; a later
/// rule for the same variable replaces an earlier one) to every term.
pub fn substitute(p: &Polynomial, rules: &[SubstRule]) -> Result<Polynomial> {
    let mut by_var: Vec<SubstRule> = Vec::new();
    for r in rules {
        by_var.retain(|x| x.var != r.var);
        by_var.push(*r);
    }
    let mut out = Polynomial::zero();
    for (e, c) in p.terms() {
        let mut neg = false;
        let mut rest = *e;
        let mut images = Exponent::ZERO;
        for r in &by_var {
            let (n, image) = r.apply(*e)?;
            neg ^= n;
            rest = r.var.cleared(rest);
            images = images + image;
        }
        let coeff: BigInt = if neg { -c } else { c.clone() };
        out.add_term(rest + images, coeff);
    }
    Ok(out)
}
