//! Galois property of the left coaction and the induced filtration.
//!
//! The canonical map `can : A ⊗ A → H ⊗ A`, `u ⊗ v ↦ λ(u) · (1 ⊗ v)`,
//! is bijective exactly when the coaction is Galois; this is checked by
//! computing the rank of the full matrix of `can` modulo a prime. When
//! `F` is a proper subgroup the map cannot be surjective — the group-likes
//! outside `F` are never reached — and the report lists the missed ones.
//! Two families of preimage identities are verified symbolically:
//! `can(e_f ⊗ e_{f⁻¹}) = ψ(f, f⁻¹) f ⊗ 1` and
//! `can(y_l ⊗ 1 - ψ(g_l, g_l⁻¹)⁻¹ e_{g_l} ⊗ e_{g_l⁻¹} y_l) = x_l ⊗ 1`.
//!
//! The filtration `A_n = λ⁻¹(H_n ⊗ A)` induced by the coradical grading
//! of `H` (word degree) is computed from the exact coordinates of `λ` on
//! the basis: `dim A_n = dim A - rank(Π_{>n} ∘ λ)`.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{rank_mod_p, ratio_mod_p, RatSpan, SmashAlgebra, SmashElement};
use crate::ncpoly::{ParamScalar, Word};
use crate::{Error, Result};

use super::algebra::ComoduleAlgebra;
use super::coaction::{BasisTerm, CoactionMap, PairTensor};

/// Outcome of the canonical-map computation.
#[derive(Clone, Debug)]
pub struct GaloisReport {
    pub dim_a: usize,
    pub dim_h: usize,
    pub prime: u32,
    /// Rank of `can` as a matrix `A ⊗ A → H ⊗ A` modulo `prime`.
    pub rank: usize,
    /// Whether the rank certifies bijectivity (`rank = (dim A)²` and
    /// `dim H = dim A`).
    pub bijective: bool,
    /// Group-likes of `H` whose column block is identically zero.
    pub missing_grouplikes: Vec<String>,
    pub preimage_checks: usize,
    pub preimage_failures: Vec<String>,
}

/// The canonical map applied to a single pair of elements.
fn can_pair(
    map: &CoactionMap,
    h: &SmashAlgebra,
    a: &ComoduleAlgebra,
    u: &SmashElement,
    v: &SmashElement,
) -> PairTensor {
    let mut right = PairTensor::zero();
    for ((w, fp), c) in &v.terms {
        right.add((Word::empty(), h.ctx.identity_pos()), (w.clone(), *fp), c);
    }
    map.of(h, &a.alg, u).mul(&right, h, &a.alg)
}

/// Compute the rank of the canonical map modulo `p` and verify the
/// preimage identities. Requires every scalar of the datum to be
/// rational so the matrix reduces modulo `p`.
pub fn canonical_map_rank(
    h: &SmashAlgebra,
    a: &ComoduleAlgebra,
    p: u32,
) -> Result<GaloisReport> {
    let map = CoactionMap::left_from_bosonization(h, a)?;
    let basis_a = a.alg.basis()?;
    let basis_h = h.basis()?;
    let dim_a = basis_a.len();
    let dim_h = basis_h.len();
    let col_h: HashMap<BasisTerm, usize> = basis_h
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let col_a: HashMap<BasisTerm, usize> = basis_a
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();

    // images of the basis under lambda, computed once
    let lambdas: Vec<PairTensor> = basis_a
        .iter()
        .map(|(w, fp)| map.of_term(h, &a.alg, w, *fp))
        .collect();

    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(dim_a * dim_a);
    let mut touched_h: Vec<bool> = vec![false; dim_h];
    for lam in &lambdas {
        for (vw, vf) in &basis_a {
            // multiply the A-leg by the basis element v and reduce
            let mut row = vec![0u32; dim_h * dim_a];
            for ((ht, at), c) in &lam.terms {
                let prod = a.alg.ctx.mul(
                    &SmashElement::word_term(at.0.clone(), at.1),
                    &SmashElement::word_term(vw.clone(), *vf),
                );
                let red = a.alg.nf(&prod);
                let hcol = col_h[ht];
                for (at2, c2) in &red.terms {
                    let r = c.mul(c2).constant_value().ok_or_else(|| {
                        Error::Invalid(
                            "canonical-map rank needs rational scalars".into(),
                        )
                    })?;
                    if r.is_zero() {
                        continue;
                    }
                    touched_h[hcol] = true;
                    let col = hcol * dim_a + col_a[at2];
                    row[col] = (row[col] + ratio_mod_p(&r, p)) % p;
                }
            }
            rows.push(row);
        }
    }
    let rank = rank_mod_p(rows, p);

    let mut missing_grouplikes = Vec::new();
    for (i, t) in basis_h.iter().enumerate() {
        if t.0.is_empty() && !touched_h[i] {
            let g = h.ctx.f_elems[t.1];
            missing_grouplikes.push(h.ctx.real.group.elem(g).to_string());
        }
    }

    // preimage identities, exact
    let mut preimage_checks = 0usize;
    let mut preimage_failures = Vec::new();
    let a_id = a.alg.ctx.identity_pos();
    let h_id = h.ctx.identity_pos();
    for fp in 0..a.alg.ctx.group_order() {
        let fi = a.alg.ctx.f_inv(fp);
        let got = can_pair(
            &map,
            h,
            a,
            &SmashElement::group_term(fp),
            &SmashElement::group_term(fi),
        );
        let g = a.alg.ctx.f_elems[fp];
        let hpos = h.ctx.pos_of(g).expect("bosonization over the full group");
        let mut want = PairTensor::zero();
        want.add(
            (Word::empty(), hpos),
            (Word::empty(), a_id),
            &ParamScalar::from_ratio(a.alg.ctx.psi_val(fp, fi).clone()),
        );
        preimage_checks += 1;
        if got != want {
            preimage_failures.push(format!(
                "can(e[{fp}] (x) e[{fi}]) = {}",
                got.display(h, &a.alg)
            ));
        }
    }
    for l in 0..a.alg.ctx.num_letters() {
        let rl = a.alg.ctx.letters[l];
        let gl = a.datum.real.g[rl];
        let fp = a
            .alg
            .ctx
            .pos_of(gl)
            .ok_or_else(|| Error::Invalid("g_l outside F: no preimage identity".into()))?;
        let fi = a.alg.ctx.f_inv(fp);
        let y = SmashElement::word_term(Word::gen(l as u8), a_id);
        let unit = SmashElement::group_term(a_id);
        let term1 = can_pair(&map, h, a, &y, &unit);
        let egy = a.alg.ctx.mul(
            &SmashElement::group_term(fi),
            &SmashElement::word_term(Word::gen(l as u8), a_id),
        );
        let scale = ParamScalar::from_ratio(
            a.alg.ctx.psi_val(fp, fi).clone(),
        )
        .inv()
        .expect("cocycle values are units");
        let term2 = can_pair(&map, h, a, &SmashElement::group_term(fp), &egy);
        let got = term1.sub(&term2.scale(&scale));
        let mut want = PairTensor::zero();
        want.add(
            (Word::gen(rl as u8), h_id),
            (Word::empty(), a_id),
            &ParamScalar::one(),
        );
        preimage_checks += 1;
        if got != want {
            preimage_failures.push(format!(
                "can(y{l} (x) 1 - psi e[g] (x) e[g^-1] y{l}) = {}",
                got.display(h, &a.alg)
            ));
        }
    }

    Ok(GaloisReport {
        dim_a,
        dim_h,
        prime: p,
        rank,
        bijective: dim_h == dim_a && rank == dim_a * dim_a,
        missing_grouplikes,
        preimage_checks,
        preimage_failures,
    })
}

/// Dimensions of the filtration layers `A_0, A_1/A_0, A_2/A_1, ...` where
/// `A_n` is the preimage of `H_n ⊗ A` under the left coaction and `H_n`
/// is spanned by the basis terms of word degree at most `n`.
pub fn loewy_dims(h: &SmashAlgebra, a: &ComoduleAlgebra) -> Result<Vec<usize>> {
    let map = CoactionMap::left_from_bosonization(h, a)?;
    let basis_a = a.alg.basis()?;
    let dim_a = basis_a.len();
    // exact coordinates of lambda, sparse over (h-term, a-term) columns
    let mut col_index: BTreeMap<(BasisTerm, BasisTerm), usize> = BTreeMap::new();
    let mut coords: Vec<Vec<(usize, BigRational)>> = Vec::with_capacity(dim_a);
    let mut col_degree: Vec<usize> = Vec::new();
    for (w, fp) in &basis_a {
        let lam = map.of_term(h, &a.alg, w, *fp);
        let mut row = Vec::new();
        for ((ht, at), c) in &lam.terms {
            let deg = ht.0.len();
            let next = col_index.len();
            let idx = *col_index.entry((ht.clone(), at.clone())).or_insert(next);
            if idx == col_degree.len() {
                col_degree.push(deg);
            }
            let r = c
                .constant_value()
                .ok_or_else(|| Error::Invalid("coaction coordinates must be rational".into()))?;
            row.push((idx, r));
        }
        coords.push(row);
    }
    let ncols = col_index.len();
    let top = col_degree.iter().copied().max().unwrap_or(0);
    let mut filtration = Vec::new();
    for n in 0..=top {
        let mut span = RatSpan::new(ncols);
        for row in &coords {
            let mut v = vec![BigRational::zero(); ncols];
            for (idx, r) in row {
                if col_degree[*idx] > n {
                    v[*idx] = r.clone();
                }
            }
            span.insert(v);
        }
        filtration.push(dim_a - span.rank());
        if *filtration.last().unwrap() == dim_a {
            break;
        }
    }
    if *filtration.last().unwrap_or(&0) != dim_a {
        return Err(Error::Axiom(
            "filtration does not exhaust the algebra".into(),
        ));
    }
    let mut layers = Vec::with_capacity(filtration.len());
    let mut prev = 0usize;
    for d in filtration {
        layers.push(d - prev);
        prev = d;
    }
    Ok(layers)
}
