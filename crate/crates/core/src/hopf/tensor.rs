//! Tensor-square and tensor-cube arithmetic over a completed smash
//! algebra, and the coproduct that makes it a Hopf algebra: group-likes
//! duplicate, and each degree-one generator `a_l` maps to
//! `e_{g_l} ⊗ a_l + a_l ⊗ 1`.

use std::collections::BTreeMap;

use crate::algebra::{SmashAlgebra, SmashElement};
use crate::ncpoly::{ParamScalar, Word};
use crate::{Error, Result};

/// A basis term of a smash algebra: normal word plus group position.
pub type BasisTerm = (Word, usize);

/// An element of the tensor square, with both legs held in canonical
/// normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    pub terms: BTreeMap<(BasisTerm, BasisTerm), ParamScalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }

    /// `1 ⊗ 1` with the given identity group position.
    pub fn unit(id: usize) -> Self {
        let mut t = TensorElement::zero();
        t.add_term(
            (Word::empty(), id),
            (Word::empty(), id),
            &ParamScalar::one(),
        );
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, left: BasisTerm, right: BasisTerm, c: &ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &TensorElement) {
        for ((l, r), c) in &other.terms {
            self.add_term(l.clone(), r.clone(), c);
        }
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), &c.neg());
        }
        out
    }

    pub fn scale(&self, c: &ParamScalar) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l, r), k) in &self.terms {
            out.add_term(l.clone(), r.clone(), &k.mul(c));
        }
        out
    }

    /// Add `c · (a ⊗ b)` for two (possibly non-normal) smash elements,
    /// reducing both legs in `h`.
    pub fn add_product(
        &mut self,
        h: &SmashAlgebra,
        a: &SmashElement,
        b: &SmashElement,
        c: &ParamScalar,
    ) {
        let an = h.nf(a);
        let bn = h.nf(b);
        for (ka, ca) in &an.terms {
            for (kb, cb) in &bn.terms {
                self.add_term(ka.clone(), kb.clone(), &ca.mul(cb).mul(c));
            }
        }
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac ⊗ bd`, legs reduced in `h`.
    pub fn mul(&self, h: &SmashAlgebra, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                let (w1, f1, r1) = h.ctx.term_mul(&a.0, a.1, &c.0, c.1);
                let (w2, f2, r2) = h.ctx.term_mul(&b.0, b.1, &d.0, d.1);
                let left = h.nf(&SmashElement::word_term(w1, f1));
                let right = h.nf(&SmashElement::word_term(w2, f2));
                let coeff = c1.mul(c2).mul_ratio(&(r1 * r2));
                for (ka, ca) in &left.terms {
                    for (kb, cb) in &right.terms {
                        out.add_term(ka.clone(), kb.clone(), &ca.mul(cb).mul(&coeff));
                    }
                }
            }
        }
        out
    }

    /// Apply the counit to the left leg: `Σ c ε(a) b`.
    pub fn counit_left(&self) -> SmashElement {
        let mut out = SmashElement::zero();
        for ((a, b), c) in &self.terms {
            if a.0.is_empty() {
                out.add_term(b.0.clone(), b.1, c);
            }
        }
        out
    }

    /// Apply the counit to the right leg: `Σ c a ε(b)`.
    pub fn counit_right(&self) -> SmashElement {
        let mut out = SmashElement::zero();
        for ((a, b), c) in &self.terms {
            if b.0.is_empty() {
                out.add_term(a.0.clone(), a.1, c);
            }
        }
        out
    }
}

/// An element of the tensor cube, all legs normal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor3 {
    pub terms: BTreeMap<(BasisTerm, BasisTerm, BasisTerm), ParamScalar>,
}

impl Tensor3 {
    pub fn zero() -> Self {
        Tensor3 { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, a: BasisTerm, b: BasisTerm, c: BasisTerm, k: &ParamScalar) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry((a, b, c)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(k.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign(k);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// Group position of `e_{g_l}` for a local letter, inside the algebra's
/// acting group. Fails when the group does not contain `g_l` (a Hopf
/// coproduct needs the full group).
fn grouplike_of_letter(h: &SmashAlgebra, l: u8) -> Result<usize> {
    let g = h.ctx.real.g[h.ctx.letters[l as usize]];
    h.ctx.pos_of(g).ok_or_else(|| {
        Error::Invalid(format!(
            "group part of generator {l} lies outside the acting group"
        ))
    })
}

/// Coproduct of a basis term, computed by multiplying the generator
/// coproducts left to right and duplicating the group part.
pub fn coproduct(h: &SmashAlgebra, term: &BasisTerm) -> Result<TensorElement> {
    let id = h.ctx.identity_pos();
    let mut acc = TensorElement::unit(id);
    for &l in &term.0 .0 {
        let gl = grouplike_of_letter(h, l)?;
        let mut step = TensorElement::zero();
        step.add_term((Word::empty(), gl), (Word::gen(l), id), &ParamScalar::one());
        step.add_term((Word::gen(l), id), (Word::empty(), id), &ParamScalar::one());
        acc = acc.mul(h, &step);
    }
    let mut dup = TensorElement::zero();
    dup.add_term(
        (Word::empty(), term.1),
        (Word::empty(), term.1),
        &ParamScalar::one(),
    );
    Ok(acc.mul(h, &dup))
}

/// Linear extension of the coproduct to arbitrary elements.
pub fn coproduct_elem(h: &SmashAlgebra, e: &SmashElement) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    let reduced = h.nf(e);
    for ((w, f), c) in &reduced.terms {
        let d = coproduct(h, &(w.clone(), *f))?;
        out.add_assign(&d.scale(c));
    }
    Ok(out)
}

/// The counit: kills every word of positive degree, sends each group-like
/// to 1.
pub fn counit(e: &SmashElement) -> ParamScalar {
    let mut out = ParamScalar::zero();
    for ((w, _), c) in &e.terms {
        if w.is_empty() {
            out.add_assign(c);
        }
    }
    out
}

/// `(Δ ⊗ id)` applied to a tensor element.
pub fn delta_left(h: &SmashAlgebra, t: &TensorElement) -> Result<Tensor3> {
    let mut out = Tensor3::zero();
    for ((a, b), c) in &t.terms {
        let d = coproduct(h, a)?;
        for ((x, y), k) in &d.terms {
            out.add_term(x.clone(), y.clone(), b.clone(), &k.mul(c));
        }
    }
    Ok(out)
}

/// `(id ⊗ Δ)` applied to a tensor element.
pub fn delta_right(h: &SmashAlgebra, t: &TensorElement) -> Result<Tensor3> {
    let mut out = Tensor3::zero();
    for ((a, b), c) in &t.terms {
        let d = coproduct(h, b)?;
        for ((x, y), k) in &d.terms {
            out.add_term(a.clone(), x.clone(), y.clone(), &k.mul(c));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::datum::{lifted_algebra, ql_datum};

    fn h72() -> SmashAlgebra {
        let d = ql_datum("q3m", &[ParamScalar::zero(), ParamScalar::one()]).unwrap();
        lifted_algebra(&d, 10).unwrap()
    }

    #[test]
    fn grouplikes_duplicate_and_generators_are_skew_primitive() {
        let h = h72();
        for f in 0..h.ctx.group_order() {
            let d = coproduct(&h, &(Word::empty(), f)).unwrap();
            let mut expect = TensorElement::zero();
            expect.add_term((Word::empty(), f), (Word::empty(), f), &ParamScalar::one());
            assert_eq!(d, expect);
        }
        for l in 0..3u8 {
            let id = h.ctx.identity_pos();
            let d = coproduct(&h, &(Word::gen(l), id)).unwrap();
            assert_eq!(d.num_terms(), 2);
        }
    }

    #[test]
    fn counit_law_holds_on_every_basis_element() {
        let h = h72();
        let basis = h.basis().unwrap();
        assert_eq!(basis.len(), 72);
        for term in &basis {
            let d = coproduct(&h, term).unwrap();
            let as_elem = SmashElement::word_term(term.0.clone(), term.1);
            assert_eq!(d.counit_left(), as_elem);
            assert_eq!(d.counit_right(), as_elem);
        }
    }

    #[test]
    fn coassociativity_exhaustive_on_72_dim_algebra() {
        let h = h72();
        for term in h.basis().unwrap() {
            let d = coproduct(&h, &term).unwrap();
            let l = delta_left(&h, &d).unwrap();
            let r = delta_right(&h, &d).unwrap();
            assert_eq!(l, r, "coassociativity fails at {term:?}");
        }
    }

    #[test]
    fn coproduct_is_an_algebra_map_on_random_pairs() {
        let h = h72();
        let basis = h.basis().unwrap();
        let mut state = 0xabcdef1234567u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state as usize
        };
        for _ in 0..25 {
            let u = &basis[next() % basis.len()];
            let v = &basis[next() % basis.len()];
            let prod = h.ctx.mul(
                &SmashElement::word_term(u.0.clone(), u.1),
                &SmashElement::word_term(v.0.clone(), v.1),
            );
            let lhs = coproduct_elem(&h, &prod).unwrap();
            let rhs = coproduct(&h, u).unwrap().mul(&h, &coproduct(&h, v).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn coassociativity_sampled_on_four_point_lifting() {
        let d = ql_datum("q4m", &[ParamScalar::one(), ParamScalar::zero()]).unwrap();
        let h = lifted_algebra(&d, 14).unwrap();
        let basis = h.basis().unwrap();
        assert_eq!(basis.len(), 576 * 24);
        // sample across low and middle degrees; the cube of a degree-12
        // coproduct is too large for a smoke test
        let pool: Vec<_> = basis.iter().filter(|t| t.0.len() <= 5).cloned().collect();
        let mut state = 0x5ca1ab1eu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state as usize
        };
        for _ in 0..8 {
            let term = &pool[next() % pool.len()];
            let dd = coproduct(&h, term).unwrap();
            assert_eq!(delta_left(&h, &dd).unwrap(), delta_right(&h, &dd).unwrap());
        }
    }
}
