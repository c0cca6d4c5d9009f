//! Exact scalars: multivariate polynomials over `Q` in named formal
//! parameters.
//!
//! The coefficient field of every algebra in this crate is the rationals,
//! optionally extended by formal parameters (`mu`, `xi`, deformation scalars
//! of a lifting, ...). A [`ParamScalar`] is a polynomial in those parameters
//! with [`BigRational`] coefficients; pure rationals are the special case
//! with an empty parameter monomial. Division is only defined by *units*,
//! i.e. nonzero rational constants — exactly what rewrite-rule orientation
//! needs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A multiplicative monomial in the formal parameters: `name -> exponent`,
/// exponents strictly positive. The empty monomial is the constant `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamMonomial(BTreeMap<String, u32>);

impl ParamMonomial {
    pub fn one() -> Self {
        ParamMonomial(BTreeMap::new())
    }

    pub fn var(name: &str) -> Self {
        let mut m = BTreeMap::new();
        m.insert(name.to_owned(), 1);
        ParamMonomial(m)
    }

    pub fn var_pow(name: &str, exp: u32) -> Self {
        let mut m = BTreeMap::new();
        if exp > 0 {
            m.insert(name.to_owned(), exp);
        }
        ParamMonomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (name, exp) in &other.0 {
            *m.entry(name.clone()).or_insert(0) += exp;
        }
        ParamMonomial(m)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(n, e)| (n.as_str(), *e))
    }
}

impl fmt::Display for ParamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, exp) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// An exact scalar: a `Q`-linear combination of [`ParamMonomial`]s.
///
/// Invariant: no zero coefficients are stored, so `ParamScalar::zero()` has
/// an empty term map and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamScalar {
    terms: BTreeMap<ParamMonomial, BigRational>,
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar::default()
    }

    pub fn one() -> Self {
        ParamScalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        ParamScalar::from_ratio(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(r: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(ParamMonomial::one(), r);
        }
        ParamScalar { terms }
    }

    /// The formal parameter `name` as a scalar.
    pub fn param(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(ParamMonomial::var(name), BigRational::one());
        ParamScalar { terms }
    }

    pub fn monomial(m: ParamMonomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ParamScalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().map(|c| c.is_one()).unwrap_or(false)
    }

    /// `Some(c)` iff the scalar is the rational constant `c` (including 0).
    pub fn constant_value(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&ParamMonomial::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Units of `Q[params]` are the nonzero rational constants.
    pub fn is_unit(&self) -> bool {
        self.constant_value().map(|c| !c.is_zero()).unwrap_or(false)
    }

    /// Multiplicative inverse, defined only for units.
    pub fn inv(&self) -> Option<Self> {
        let c = self.constant_value()?;
        if c.is_zero() {
            return None;
        }
        Some(ParamScalar::from_ratio(c.recip()))
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        ParamScalar { terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            match self.terms.get_mut(m) {
                Some(mine) => {
                    *mine += c;
                    if mine.is_zero() {
                        self.terms.remove(m);
                    }
                }
                None => {
                    self.terms.insert(m.clone(), c.clone());
                }
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<ParamMonomial, BigRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match terms.get_mut(&m) {
                    Some(acc) => {
                        *acc += c;
                        if acc.is_zero() {
                            terms.remove(&m);
                        }
                    }
                    None => {
                        terms.insert(m, c);
                    }
                }
            }
        }
        ParamScalar { terms }
    }

    pub fn mul_ratio(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return ParamScalar::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c * r))
            .collect();
        ParamScalar { terms }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = ParamScalar::one();
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// All parameter names occurring in the scalar.
    pub fn params(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for (name, _) in m.exponents() {
                out.insert(name.to_owned());
            }
        }
        out
    }

    /// Substitute rationals for (some of) the parameters; unbound parameters
    /// stay formal.
    pub fn substitute(&self, bindings: &BTreeMap<String, BigRational>) -> Self {
        let mut out = ParamScalar::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = BTreeMap::new();
            for (name, exp) in m.exponents() {
                match bindings.get(name) {
                    Some(v) => {
                        for _ in 0..exp {
                            coeff *= v;
                        }
                    }
                    None => {
                        rest.insert(name.to_owned(), exp);
                    }
                }
            }
            out.add_assign(&ParamScalar::monomial(ParamMonomial(rest), coeff));
        }
        out
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ParamMonomial, &BigRational)> {
        self.terms.iter()
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_and_units() {
        let two = ParamScalar::from_int(2);
        assert!(two.is_unit());
        assert_eq!(two.inv().unwrap().mul(&two), ParamScalar::one());
        assert!(!ParamScalar::zero().is_unit());
        assert!(!ParamScalar::param("a").is_unit());
        assert!(ParamScalar::param("a").inv().is_none());
    }

    #[test]
    fn ring_identities() {
        let a = ParamScalar::param("a");
        let b = ParamScalar::param("b");
        let lhs = a.add(&b).mul(&a.sub(&b));
        let rhs = a.mul(&a).sub(&b.mul(&b));
        assert_eq!(lhs, rhs);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn substitution() {
        // (a + 2)*b  at a = -2  vanishes; at b = 1/2 it halves.
        let s = ParamScalar::param("a")
            .add(&ParamScalar::from_int(2))
            .mul(&ParamScalar::param("b"));
        let mut bind = BTreeMap::new();
        bind.insert(
            "a".to_owned(),
            BigRational::from_integer(BigInt::from(-2)),
        );
        assert!(s.substitute(&bind).is_zero());

        let mut bind = BTreeMap::new();
        bind.insert(
            "b".to_owned(),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        );
        let t = s.substitute(&bind);
        assert_eq!(t.params().len(), 1);
        assert_eq!(format!("{t}"), "1 + 1/2*a");
    }

    #[test]
    fn display_forms() {
        let s = ParamScalar::param("mu")
            .mul(&ParamScalar::param("mu"))
            .sub(&ParamScalar::from_int(1));
        assert_eq!(format!("{s}"), "-1 + mu^2");
        assert_eq!(format!("{}", ParamScalar::zero()), "0");
    }
}
