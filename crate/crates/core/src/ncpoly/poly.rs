//! Free associative polynomials over [`ParamScalar`].

use std::collections::BTreeMap;

use super::scalar::ParamScalar;
use super::word::Word;

/// An element of the free associative algebra `k<x_0, ..., x_{n-1}>` with
/// `k = Q[params]`. Terms are kept in a map keyed by [`Word`] (deglex with
/// identity precedence), with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NCPoly {
    terms: BTreeMap<Word, ParamScalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::monomial(Word::empty(), ParamScalar::one())
    }

    pub fn gen(g: u8) -> Self {
        NCPoly::monomial(Word::gen(g), ParamScalar::one())
    }

    pub fn monomial(w: Word, c: ParamScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    /// `true` iff every word has the same length (the zero polynomial is
    /// homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(|w| w.len());
        match lens.next() {
            None => true,
            Some(l0) => lens.all(|l| l == l0),
        }
    }

    /// Leading term: the deglex-largest word and its coefficient.
    pub fn leading(&self) -> Option<(&Word, &ParamScalar)> {
        self.terms.last_key_value()
    }

    pub fn coeff(&self, w: &Word) -> ParamScalar {
        self.terms.get(w).cloned().unwrap_or_else(ParamScalar::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, ParamScalar)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, w: Word, c: &ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(acc) => {
                acc.add_assign(c);
                if acc.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &NCPoly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c);
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> NCPoly {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c.neg()))
            .collect();
        NCPoly { terms }
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &c.neg());
        }
        out
    }

    pub fn scale(&self, c: &ParamScalar) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, mine) in &self.terms {
            out.add_term(w.clone(), &mine.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), &c1.mul(c2));
            }
        }
        out
    }

    /// `self += c * left * other * right` — the workhorse of reduction.
    pub fn add_scaled_conjugate(
        &mut self,
        c: &ParamScalar,
        left: &Word,
        other: &NCPoly,
        right: &Word,
    ) {
        for (w, oc) in &other.terms {
            let word = left.concat(w).concat(right);
            self.add_term(word, &c.mul(oc));
        }
    }

    /// Substitute rationals for (some) formal parameters in every
    /// coefficient.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<String, num_rational::BigRational>,
    ) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &c.substitute(bindings));
        }
        out
    }

    /// Render with generator names, e.g. `x12 x13 - x13 x12`.
    pub fn display(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_owned();
        }
        let mut out = String::new();
        // print descending so the leading term comes first
        for (w, c) in self.terms.iter().rev() {
            let cs = format!("{c}");
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_owned()),
                None => ("+", cs),
            };
            // multi-term coefficients are parenthesised and keep their sign
            let (sign, mag) = if c.terms().count() > 1 {
                ("+", format!("({c})"))
            } else {
                (sign, mag)
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            if w.is_empty() {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    out.push_str(&mag);
                    out.push('*');
                }
                let mut first = true;
                for &g in &w.0 {
                    if !first {
                        out.push(' ');
                    }
                    first = false;
                    out.push_str(names[g as usize]);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(g: u8) -> NCPoly {
        NCPoly::gen(g)
    }

    #[test]
    fn noncommutative_product() {
        let xy = x(0).mul(&x(1));
        let yx = x(1).mul(&x(0));
        assert_ne!(xy, yx);
        assert!(xy.sub(&xy).is_zero());
        let comm = xy.sub(&yx);
        assert_eq!(comm.num_terms(), 2);
        assert_eq!(comm.leading().unwrap().0, &Word::from_slice(&[1, 0]));
    }

    #[test]
    fn display_names() {
        let p = x(0).mul(&x(1)).sub(&x(1).mul(&x(0)).scale(&ParamScalar::param("q")));
        assert_eq!(p.display(&["a", "b"]), "-q*b a + a b");
    }

    #[test]
    fn homogeneity() {
        assert!(x(0).mul(&x(1)).sub(&x(1).mul(&x(1))).is_homogeneous());
        assert!(!x(0).mul(&x(1)).sub(&x(1)).is_homogeneous());
        assert!(NCPoly::zero().is_homogeneous());
    }
}
