//! The coactions that make `A(Y, F, ψ, ξ)` a comodule algebra.
//!
//! Two coactions are verified. The left one maps into the bosonization
//! `H = B(X, q) # kG` of the full rack over the full group:
//! `λ(y_l) = x_l ⊗ 1 + g_l ⊗ y_l`, `λ(e_f) = f ⊗ e_f`. The right one,
//! available when `Y = X` and `F = G`, maps into a lifted Hopf algebra
//! `H(Q)`: `ρ(y_l) = y_l ⊗ 1 + e_{g_l} ⊗ a_l`, `ρ(e_f) = e_f ⊗ H_f`.
//! Verification is mechanical in both cases: the generator images are
//! substituted into every defining relation and the result is reduced leg
//! by leg; the coaction extends to an algebra map exactly when every
//! residue vanishes. For the right coaction the per-class identity
//! `ρ(φ_C) = ξ_C e_{g_C} ⊗ 1 + γ_C e_{g_C} ⊗ (1 - H_{g_C})` and the
//! bicomodule condition `(λ ⊗ id) ρ = (id ⊗ ρ) λ` are checked as well,
//! which pins the scalar constraints linking `ξ` to the lifting scalars.

use std::collections::BTreeMap;

use crate::algebra::{SmashAlgebra, SmashElement};
use crate::hopf::QlDatum;
use crate::ncpoly::{ParamScalar, Word};
use crate::rack::EquivClass;
use crate::{Error, Result};

use super::algebra::ComoduleAlgebra;

/// A normal-form basis term of a smash-type algebra.
pub type BasisTerm = (Word, usize);

/// An element of a tensor product of two smash-type algebras, with both
/// legs kept in normal form.
#[derive(Clone, Debug, PartialEq)]
pub struct PairTensor {
    pub terms: BTreeMap<(BasisTerm, BasisTerm), ParamScalar>,
}

impl PairTensor {
    pub fn zero() -> Self {
        PairTensor { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&mut self, l: BasisTerm, r: BasisTerm, c: &ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((l, r)) {
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

    pub fn add_assign(&mut self, other: &PairTensor) {
        for ((l, r), c) in &other.terms {
            self.add(l.clone(), r.clone(), c);
        }
    }

    pub fn sub(&self, other: &PairTensor) -> PairTensor {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add(l.clone(), r.clone(), &c.neg());
        }
        out
    }

    pub fn scale(&self, c: &ParamScalar) -> PairTensor {
        let mut out = PairTensor::zero();
        for ((l, r), v) in &self.terms {
            out.add(l.clone(), r.clone(), &v.mul(c));
        }
        out
    }

    /// The outer product of two reduced elements.
    pub fn from_elems(le: &SmashElement, re: &SmashElement) -> PairTensor {
        let mut out = PairTensor::zero();
        for (lt, lc) in &le.terms {
            for (rt, rc) in &re.terms {
                out.add(lt.clone(), rt.clone(), &lc.mul(rc));
            }
        }
        out
    }

    /// Multiply two tensors, reducing each leg in its algebra.
    pub fn mul(&self, other: &PairTensor, hl: &SmashAlgebra, hr: &SmashAlgebra) -> PairTensor {
        // accumulate raw leg products first so each distinct raw term is
        // reduced exactly once
        let mut raw: BTreeMap<(BasisTerm, BasisTerm), ParamScalar> = BTreeMap::new();
        for ((a1, a2), ca) in &self.terms {
            for ((b1, b2), cb) in &other.terms {
                let (wl, fl, rl) = hl.ctx.term_mul(&a1.0, a1.1, &b1.0, b1.1);
                let (wr, fr, rr) = hr.ctx.term_mul(&a2.0, a2.1, &b2.0, b2.1);
                let c = ca.mul(cb).mul_ratio(&(rl * rr));
                if c.is_zero() {
                    continue;
                }
                let slot = raw
                    .entry(((wl, fl), (wr, fr)))
                    .or_insert_with(ParamScalar::zero);
                slot.add_assign(&c);
            }
        }
        let mut out = PairTensor::zero();
        for ((lt, rt), c) in raw {
            if c.is_zero() {
                continue;
            }
            let le = hl.nf(&SmashElement::word_term(lt.0, lt.1));
            let re = hr.nf(&SmashElement::word_term(rt.0, rt.1));
            out.add_assign(&PairTensor::from_elems(&le, &re).scale(&c));
        }
        out
    }

    /// Render a tensor for diagnostics.
    pub fn display(&self, hl: &SmashAlgebra, hr: &SmashAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|((l, r), c)| {
                let le = SmashElement::word_term(l.0.clone(), l.1);
                let re = SmashElement::word_term(r.0.clone(), r.1);
                format!(
                    "({c}) {} (x) {}",
                    le.display(&hl.ctx),
                    re.display(&hr.ctx)
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Generator images of a coaction, one per local letter and one per group
/// position of the algebra being coacted on.
pub struct CoactionMap {
    pub y_images: Vec<PairTensor>,
    pub f_images: Vec<PairTensor>,
}

impl CoactionMap {
    /// The left coaction of the bosonization `h` on `a`:
    /// `y_l ↦ x_l ⊗ 1 + g_l ⊗ y_l`, `e_f ↦ f ⊗ e_f`.
    pub fn left_from_bosonization(h: &SmashAlgebra, a: &ComoduleAlgebra) -> Result<CoactionMap> {
        let d = &a.datum;
        let a_id = a.alg.ctx.identity_pos();
        let h_id = h.ctx.identity_pos();
        let hpos = |g: usize| -> Result<usize> {
            h.ctx.pos_of(g).ok_or_else(|| {
                Error::Invalid("the coacting algebra does not contain the full group".into())
            })
        };
        let mut y_images = Vec::with_capacity(d.y.len());
        for (l, &rl) in d.y.iter().enumerate() {
            let mut t = PairTensor::zero();
            t.add(
                (Word::gen(rl as u8), h_id),
                (Word::empty(), a_id),
                &ParamScalar::one(),
            );
            t.add(
                (Word::empty(), hpos(d.real.g[rl])?),
                (Word::gen(l as u8), a_id),
                &ParamScalar::one(),
            );
            y_images.push(t);
        }
        let mut f_images = Vec::with_capacity(a.alg.ctx.group_order());
        for fp in 0..a.alg.ctx.group_order() {
            let g = a.alg.ctx.f_elems[fp];
            let mut t = PairTensor::zero();
            t.add(
                (Word::empty(), hpos(g)?),
                (Word::empty(), fp),
                &ParamScalar::one(),
            );
            f_images.push(t);
        }
        Ok(CoactionMap { y_images, f_images })
    }

    /// The right coaction of a lifting `hq` on `a` (needs `Y = X`,
    /// `F = G`): `y_l ↦ y_l ⊗ 1 + e_{g_l} ⊗ a_l`, `e_f ↦ e_f ⊗ H_f`.
    pub fn right_from_lifting(a: &ComoduleAlgebra, hq: &SmashAlgebra) -> Result<CoactionMap> {
        let d = &a.datum;
        if d.y.len() != d.rack.size() {
            return Err(Error::Invalid(
                "the right coaction needs Y to be the whole rack".into(),
            ));
        }
        if d.f.order() != d.real.group.size() {
            return Err(Error::Invalid(
                "the right coaction needs F to be the whole group".into(),
            ));
        }
        let a_id = a.alg.ctx.identity_pos();
        let q_id = hq.ctx.identity_pos();
        let apos = |g: usize| a.alg.ctx.pos_of(g).expect("full group");
        let qpos = |g: usize| hq.ctx.pos_of(g).expect("full group");
        let mut y_images = Vec::with_capacity(d.y.len());
        for (l, &rl) in d.y.iter().enumerate() {
            let mut t = PairTensor::zero();
            t.add(
                (Word::gen(l as u8), a_id),
                (Word::empty(), q_id),
                &ParamScalar::one(),
            );
            t.add(
                (Word::empty(), apos(d.real.g[rl])),
                (Word::gen(rl as u8), q_id),
                &ParamScalar::one(),
            );
            y_images.push(t);
        }
        let mut f_images = Vec::with_capacity(a.alg.ctx.group_order());
        for fp in 0..a.alg.ctx.group_order() {
            let g = a.alg.ctx.f_elems[fp];
            let mut t = PairTensor::zero();
            t.add(
                (Word::empty(), fp),
                (Word::empty(), qpos(g)),
                &ParamScalar::one(),
            );
            f_images.push(t);
        }
        Ok(CoactionMap { y_images, f_images })
    }

    /// Image of a single smash term `y_w e_f`.
    pub fn of_term(
        &self,
        hl: &SmashAlgebra,
        hr: &SmashAlgebra,
        w: &Word,
        fp: usize,
    ) -> PairTensor {
        let mut acc = PairTensor::zero();
        acc.add(
            (Word::empty(), hl.ctx.identity_pos()),
            (Word::empty(), hr.ctx.identity_pos()),
            &ParamScalar::one(),
        );
        for &l in &w.0 {
            acc = acc.mul(&self.y_images[l as usize], hl, hr);
        }
        acc.mul(&self.f_images[fp], hl, hr)
    }

    /// Linear extension to a whole element.
    pub fn of(&self, hl: &SmashAlgebra, hr: &SmashAlgebra, e: &SmashElement) -> PairTensor {
        let mut out = PairTensor::zero();
        for ((w, fp), c) in &e.terms {
            out.add_assign(&self.of_term(hl, hr, w, *fp).scale(c));
        }
        out
    }
}

/// Outcome of verifying a coaction on every defining relation.
#[derive(Clone, Debug)]
pub struct CoactionReport {
    pub relations_checked: usize,
    /// Nonzero residues, rendered with their relation label.
    pub residues: Vec<String>,
    pub passed: bool,
}

/// Verify that the left coaction of the bosonization `h` extends to an
/// algebra map on `a`: group relations, straightening relations, and the
/// deformed class relations must all map to zero.
pub fn verify_coaction(h: &SmashAlgebra, a: &ComoduleAlgebra) -> Result<CoactionReport> {
    let map = CoactionMap::left_from_bosonization(h, a)?;
    let (checked, residues) = relation_residues(&map, h, &a.alg, a)?;
    Ok(CoactionReport {
        relations_checked: checked,
        passed: residues.is_empty(),
        residues,
    })
}

/// Substitute a coaction map into every defining relation of `a` (group
/// table, straightening, deformed classes); collect nonzero residues.
fn relation_residues(
    map: &CoactionMap,
    hl: &SmashAlgebra,
    hr: &SmashAlgebra,
    a: &ComoduleAlgebra,
) -> Result<(usize, Vec<String>)> {
    let ctx = &a.alg.ctx;
    let mut checked = 0usize;
    let mut residues = Vec::new();
    let mut push = |label: String, t: PairTensor| {
        if !t.is_zero() {
            residues.push(format!("{label} -> {}", t.display(hl, hr)));
        }
    };
    // group part: e_r e_s = psi(r, s) e_{rs}
    for r in 0..ctx.group_order() {
        for s in 0..ctx.group_order() {
            let lhs = map.f_images[r].mul(&map.f_images[s], hl, hr);
            let rhs = map.f_images[ctx.f_mul(r, s)]
                .scale(&ParamScalar::from_ratio(ctx.psi_val(r, s).clone()));
            checked += 1;
            push(format!("group pair ({r},{s})"), lhs.sub(&rhs));
        }
    }
    // straightening: e_f y_l = chi_l(f) y_{f·l} e_f
    for fp in 0..ctx.group_order() {
        for l in 0..ctx.num_letters() {
            let lhs = map.f_images[fp].mul(&map.y_images[l], hl, hr);
            let moved = ctx.act_local(fp, l as u8);
            let rhs = map.y_images[moved as usize]
                .mul(&map.f_images[fp], hl, hr)
                .scale(&ParamScalar::from_ratio(ctx.chi_at(l as u8, fp).clone()));
            checked += 1;
            push(format!("straightening (f{fp}, y{l})"), lhs.sub(&rhs));
        }
    }
    // deformed class relations
    for (label, rel) in a.defining_relations()? {
        let t = map.of(hl, hr, &rel);
        checked += 1;
        push(format!("relation {label}"), t);
    }
    Ok((checked, residues))
}

/// An element of a triple tensor product, all legs in normal form.
type TripleTerms = BTreeMap<(BasisTerm, BasisTerm, BasisTerm), ParamScalar>;

fn triple_add(t: &mut TripleTerms, key: (BasisTerm, BasisTerm, BasisTerm), c: &ParamScalar) {
    if c.is_zero() {
        return;
    }
    match t.entry(key) {
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

/// Outcome of verifying the right coaction of a lifting.
#[derive(Clone, Debug)]
pub struct BigaloisReport {
    /// Violations of the scalar constraints tying `ξ` to the lifting
    /// scalars `γ` (`ξ_C = -γ_C` when `γ_C ≠ 0`; `ξ_C = 0` when
    /// `γ_C = 0` unless `g_C = 1`).
    pub scalar_violations: Vec<String>,
    /// Classes whose scalar is unconstrained (`g_C = 1`).
    pub free_classes: Vec<String>,
    /// Nonzero residues of defining relations under `ρ`.
    pub residues: Vec<String>,
    /// Failures of the per-class identity
    /// `ρ(φ_C) = ξ_C e_{g_C} ⊗ 1 + γ_C e_{g_C} ⊗ (1 - H_{g_C})`.
    pub display_failures: Vec<String>,
    /// Failures of `(λ ⊗ id) ρ = (id ⊗ ρ) λ` on generators.
    pub bicomodule_failures: Vec<String>,
    pub relations_checked: usize,
    pub passed: bool,
}

/// Verify that `ρ` makes `a` a right comodule algebra over the lifting
/// `hq` of `ql`, and that the pair `(λ, ρ)` is a bicomodule structure
/// against the bosonization `h`.
pub fn verify_bigalois(
    h: &SmashAlgebra,
    a: &ComoduleAlgebra,
    hq: &SmashAlgebra,
    ql: &QlDatum,
) -> Result<BigaloisReport> {
    let d = &a.datum;
    if ql.rp != d.rp || ql.cp != d.cp {
        return Err(Error::Invalid(
            "the lifting and the datum use different racks".into(),
        ));
    }
    let rho = CoactionMap::right_from_lifting(a, hq)?;
    let lambda = CoactionMap::left_from_bosonization(h, a)?;

    // scalar constraints
    let mut scalar_violations = Vec::new();
    let mut free_classes = Vec::new();
    let g = &d.real.group;
    for (k, &c) in d.rprime.iter().enumerate() {
        let xi = &d.xi[k];
        let gamma = &ql.gamma[k];
        let gc = d
            .class_group_elem(c)?
            .expect("Y = X leaves no vanishing relation");
        let label = EquivClass::id(c);
        if gc == g.identity() {
            free_classes.push(label);
            continue;
        }
        if gamma.is_zero() {
            if !xi.is_zero() {
                scalar_violations.push(format!(
                    "{label}: the lifting scalar vanishes but ξ = {xi}"
                ));
            }
        } else if !xi.add(gamma).is_zero() {
            scalar_violations.push(format!(
                "{label}: ξ = {xi} but the lifting scalar requires {}",
                gamma.neg()
            ));
        }
    }

    // relation residues and the per-class display identity
    let (checked, residues) = relation_residues(&rho, &a.alg, hq, a)?;
    let mut display_failures = Vec::new();
    let a_id = a.alg.ctx.identity_pos();
    let q_id = hq.ctx.identity_pos();
    for (k, &c) in d.rprime.iter().enumerate() {
        let phi = a.localize(&d.vartheta_poly(c))?;
        let lhs = rho.of(&a.alg, hq, &a.alg.ctx.from_poly(&phi));
        let gc = d.class_group_elem(c)?.expect("Y = X");
        let a_gc = a.alg.ctx.pos_of(gc).expect("F = G");
        let q_gc = hq.ctx.pos_of(gc).expect("full group");
        let mut rhs = PairTensor::zero();
        rhs.add((Word::empty(), a_gc), (Word::empty(), q_id), &d.xi[k]);
        rhs.add((Word::empty(), a_gc), (Word::empty(), q_id), &ql.gamma[k]);
        rhs.add((Word::empty(), a_gc), (Word::empty(), q_gc), &ql.gamma[k].neg());
        let diff = lhs.sub(&rhs);
        if !diff.is_zero() {
            display_failures.push(format!(
                "class {}: residue {}",
                EquivClass::id(c),
                diff.display(&a.alg, hq)
            ));
        }
    }

    // bicomodule condition on generators
    let mut bicomodule_failures = Vec::new();
    let gens: Vec<(String, SmashElement)> = (0..a.alg.ctx.num_letters())
        .map(|l| {
            (
                a.alg.ctx.names[l].clone(),
                SmashElement::word_term(Word::gen(l as u8), a_id),
            )
        })
        .chain((0..a.alg.ctx.group_order()).map(|fp| {
            (format!("e[{fp}]"), SmashElement::group_term(fp))
        }))
        .collect();
    for (name, gen) in &gens {
        // (lambda ⊗ id) rho
        let mut side1: TripleTerms = BTreeMap::new();
        for ((at, qt), c) in &rho.of(&a.alg, hq, gen).terms {
            let lam = lambda.of_term(h, &a.alg, &at.0, at.1);
            for ((ht, at2), c2) in &lam.terms {
                triple_add(
                    &mut side1,
                    (ht.clone(), at2.clone(), qt.clone()),
                    &c.mul(c2),
                );
            }
        }
        // (id ⊗ rho) lambda
        let mut side2: TripleTerms = BTreeMap::new();
        for ((ht, at), c) in &lambda.of(h, &a.alg, gen).terms {
            let rr = rho.of_term(&a.alg, hq, &at.0, at.1);
            for ((at2, qt), c2) in &rr.terms {
                triple_add(
                    &mut side2,
                    (ht.clone(), at2.clone(), qt.clone()),
                    &c.mul(c2),
                );
            }
        }
        if side1 != side2 {
            bicomodule_failures.push(format!("generator {name}"));
        }
    }

    let passed = scalar_violations.is_empty()
        && residues.is_empty()
        && display_failures.is_empty()
        && bicomodule_failures.is_empty();
    Ok(BigaloisReport {
        scalar_violations,
        free_classes,
        residues,
        display_failures,
        bicomodule_failures,
        relations_checked: checked,
        passed,
    })
}
