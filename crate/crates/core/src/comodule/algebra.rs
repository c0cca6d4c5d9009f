//! The algebras `A(Y, F, ψ, ξ)` and their subalgebras `B(Z, F, ψ, ξ)`.
//!
//! `A(Y, F, ψ, ξ)` is presented on the smash product of the free algebra
//! on `Y` with the ψ-twisted group algebra of `F`, modulo the deformed
//! class relations `ϑ_{C,Y} = ξ_C e_{g_C}`. Completion of the rewriting
//! system decides the dimension; the associated graded algebra is the
//! quadratic cover on `Y` smashed with `k_ψ F`, so the expected dimension
//! is `dim K_Y · |F|` whenever the deformation is flat.
//!
//! `B(Z, F, ψ, ξ)` is not presented: it is the subalgebra of an ambient
//! `A(X, F, ψ, ξ)` generated by the group part together with the letters
//! of an invariant subset `Z`, computed here as an explicit spanning
//! closure inside the normal-form coordinates of the ambient algebra.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{RatSpan, SmashAlgebra, SmashContext, SmashElement};
use crate::ncpoly::{NCPoly, Word};
use crate::{Error, Result};

use super::datum::ModuleDatum;

/// A built algebra `A(Y, F, ψ, ξ)` with its completed rewriting system.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra {
    pub datum: ModuleDatum,
    pub alg: SmashAlgebra,
}

impl ComoduleAlgebra {
    /// Dimension over the base field (requires a complete system).
    pub fn dim(&self) -> Result<usize> {
        self.alg.dim()
    }

    /// Whether the algebra collapsed to zero (the unit reduces to 0).
    pub fn is_zero(&self) -> bool {
        self.alg
            .is_zero_mod(&SmashElement::group_term(self.alg.ctx.identity_pos()))
    }

    /// The local letter of a rack index, if it lies in `Y`.
    pub fn letter_of(&self, rack_idx: usize) -> Option<u8> {
        self.datum
            .y
            .iter()
            .position(|&l| l == rack_idx)
            .map(|p| p as u8)
    }

    /// Relabel a polynomial on the full rack alphabet to the local letters.
    pub fn localize(&self, p: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let mut img = Vec::with_capacity(w.len());
            for &l in &w.0 {
                img.push(self.letter_of(l as usize).ok_or_else(|| {
                    Error::Invalid(format!("letter {} is outside Y", l))
                })?);
            }
            out.add_term(Word::from_slice(&img), c);
        }
        Ok(out)
    }

    /// The defining relations `ϑ_C - ξ_C e_{g_C}` as elements of the smash
    /// context (empty for classes whose relation vanishes).
    pub fn defining_relations(&self) -> Result<Vec<(String, SmashElement)>> {
        let d = &self.datum;
        let mut rels = Vec::new();
        for (k, &c) in d.rprime.iter().enumerate() {
            let theta = d.vartheta_poly(c);
            if theta.is_zero() {
                continue;
            }
            let mut rel = self.alg.ctx.from_poly(&self.localize(&theta)?);
            let xi = &d.xi[k];
            if !xi.is_zero() {
                let gc = d
                    .class_group_elem(c)?
                    .ok_or_else(|| Error::Invalid("scalar on a vanishing relation".into()))?;
                let fp = self.alg.ctx.pos_of(gc).ok_or_else(|| {
                    Error::Invalid(format!(
                        "nonzero scalar on class {} whose element is outside F",
                        crate::rack::EquivClass::id(c)
                    ))
                })?;
                rel.add_term(Word::empty(), fp, &xi.neg());
            }
            rels.push((crate::rack::EquivClass::id(c), rel));
        }
        Ok(rels)
    }
}

/// Present and complete `A(Y, F, ψ, ξ)` for a datum.
pub fn build_a(d: &ModuleDatum, degree_cap: u32) -> Result<ComoduleAlgebra> {
    let ctx = SmashContext::new(&d.real, &d.y, &d.f, &d.psi)?;
    let shell = ComoduleAlgebra {
        datum: d.clone(),
        // placeholder completed below; build needs the relations first
        alg: SmashAlgebra::build(ctx.clone(), &[], degree_cap)?,
    };
    let rels: Vec<SmashElement> = shell
        .defining_relations()?
        .into_iter()
        .map(|(_, r)| r)
        .collect();
    let alg = SmashAlgebra::build(ctx, &rels, degree_cap)?;
    Ok(ComoduleAlgebra { datum: d.clone(), alg })
}

/// A spanning basis of a generated subalgebra, in the normal-form
/// coordinates of the ambient algebra.
#[derive(Clone, Debug)]
pub struct SubalgebraReport {
    /// Dimension of the ambient algebra.
    pub ambient_dim: usize,
    /// Dimension of the subalgebra.
    pub dim: usize,
    /// Reduced spanning vectors over the ambient basis.
    pub vectors: Vec<Vec<BigRational>>,
}

/// The subalgebra `B(Z, F, ψ, ξ)` of an ambient algebra generated by
/// `{e_f : f ∈ F}` and `{y_l : l ∈ Z}`, for an F-invariant `Z ⊆ Y`.
/// Requires every scalar of the ambient datum to be rational.
pub fn build_b(ambient: &ComoduleAlgebra, z: &[usize]) -> Result<SubalgebraReport> {
    let d = &ambient.datum;
    let mut z = z.to_vec();
    z.sort_unstable();
    z.dedup();
    for &l in &z {
        if !d.y.contains(&l) {
            return Err(Error::Invalid(format!("Z index {l} is outside Y")));
        }
    }
    for &h in &d.f.elems {
        for &l in &z {
            if !z.contains(&d.real.act(h, l)) {
                return Err(Error::Invalid(format!(
                    "F does not preserve Z: element {} moves {}",
                    d.real.group.elem(h),
                    d.rack.names[l]
                )));
            }
        }
    }
    let basis = ambient.alg.basis()?;
    let dim = basis.len();
    let index: HashMap<(Word, usize), usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let coords = |e: &SmashElement| -> Result<Vec<BigRational>> {
        let mut v = vec![BigRational::zero(); dim];
        for (t, c) in &e.terms {
            let Some(r) = c.constant_value() else {
                return Err(Error::Invalid(
                    "subalgebra closure needs rational scalars".into(),
                ));
            };
            let i = *index
                .get(t)
                .ok_or_else(|| Error::Invalid("non-normal term in reduced element".into()))?;
            v[i] = r;
        }
        Ok(v)
    };

    // generators: the group part and the letters of Z
    let ctx = &ambient.alg.ctx;
    let mut gens: Vec<SmashElement> = (0..ctx.group_order())
        .map(SmashElement::group_term)
        .collect();
    for &l in &z {
        let loc = ambient.letter_of(l).expect("Z inside Y");
        gens.push(SmashElement::word_term(Word::gen(loc), ctx.identity_pos()));
    }
    // right-multiplication of each ambient basis term by each generator
    let mut gen_rows: Vec<Vec<Vec<BigRational>>> = Vec::with_capacity(gens.len());
    for g in &gens {
        let mut rows = Vec::with_capacity(dim);
        for t in &basis {
            let prod = ctx.mul(
                &SmashElement::word_term(t.0.clone(), t.1),
                g,
            );
            rows.push(coords(&ambient.alg.nf(&prod))?);
        }
        gen_rows.push(rows);
    }

    let mut span = RatSpan::new(dim);
    let mut queue: Vec<Vec<BigRational>> = Vec::new();
    let mut unit = vec![BigRational::zero(); dim];
    unit[*index
        .get(&(Word::empty(), ctx.identity_pos()))
        .expect("unit is normal")] = BigRational::from_integer(1.into());
    if span.insert(unit.clone()) {
        queue.push(unit);
    }
    while let Some(v) = queue.pop() {
        for rows in &gen_rows {
            let mut w = vec![BigRational::zero(); dim];
            for (i, vi) in v.iter().enumerate() {
                if vi.is_zero() {
                    continue;
                }
                for (j, rj) in rows[i].iter().enumerate() {
                    if !rj.is_zero() {
                        w[j] += vi * rj;
                    }
                }
            }
            if span.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    Ok(SubalgebraReport {
        ambient_dim: dim,
        dim: span.rank(),
        vectors: span.rows().to_vec(),
    })
}
