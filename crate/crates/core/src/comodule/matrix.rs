//! Explicit matrix representations and non-nullity certificates.
//!
//! A datum's algebra is certified nonzero by exhibiting a nonzero
//! module. For the transposition rack on three letters the generators
//! act on a 12-dimensional space by matrices shipped as a versioned data
//! file (entries in `{0, ±1, ±μ, ξ}`): the file stores the matrix of one
//! letter and of two group generators, the rest are derived from the
//! straightening relations, and every defining relation is then verified
//! symbolically over `ℚ[ξ, μ]`. For the four-letter racks the algebra is
//! mapped onto a three-letter one along the projection `S₄ → S₃` given
//! by the action on the three pair-partitions of `{1,2,3,4}` (kernel the
//! Klein four-group); every relation is checked to map to zero, so a
//! nonzero quotient certifies a nonzero source.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;
use serde_json::Value;

use crate::algebra::quotient_map_check;
use crate::grp::{GroupCocycle2, Perm, Subgroup, SymGroup};
use crate::ncpoly::ParamScalar;
use crate::rack::{CocyclePreset, EquivClass, RackPreset};
use crate::{Error, Result};

use super::algebra::build_a;
use super::datum::{parse_scalar, ModuleDatum};

pub type Mat = Vec<Vec<ParamScalar>>;

/// Generator matrices for a datum: one per rack letter of `Y` (keyed by
/// element name) and one per group generator (keyed by cycle string).
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub n: usize,
    pub y: BTreeMap<String, Mat>,
    pub e: BTreeMap<String, Mat>,
}

fn parse_mat(v: &Value, n: usize) -> Result<Mat> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
    if rows.len() != n {
        return Err(Error::Parse(format!("expected {n} rows, got {}", rows.len())));
    }
    rows.iter()
        .map(|row| {
            let entries = row
                .as_array()
                .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?;
            if entries.len() != n {
                return Err(Error::Parse(format!(
                    "expected {n} columns, got {}",
                    entries.len()
                )));
            }
            entries
                .iter()
                .map(|e| match e {
                    Value::String(s) => parse_scalar(s),
                    Value::Number(x) => parse_scalar(&x.to_string()),
                    _ => Err(Error::Parse("matrix entries must be strings".into())),
                })
                .collect()
        })
        .collect()
}

/// Parse a matrix-representation data file.
pub fn rep_from_json(v: &Value) -> Result<MatrixRep> {
    let version = v.get("version").and_then(|x| x.as_u64()).unwrap_or(0);
    if version != 1 {
        return Err(Error::Parse(format!(
            "unsupported matrix data version {version}"
        )));
    }
    let n = v
        .get("size")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::Parse("matrix data needs `size`".into()))? as usize;
    let mut out = MatrixRep { n, y: BTreeMap::new(), e: BTreeMap::new() };
    for (field, store) in [("y", true), ("e", false)] {
        let obj = v
            .get(field)
            .and_then(|x| x.as_object())
            .ok_or_else(|| Error::Parse(format!("matrix data needs `{field}`")))?;
        for (key, mv) in obj {
            let m = parse_mat(mv, n)?;
            if store {
                out.y.insert(key.clone(), m);
            } else {
                out.e.insert(key.clone(), m);
            }
        }
    }
    Ok(out)
}

/// The representation of the three-letter algebra shipped with the
/// library: a single letter matrix and two group generators on a
/// 12-dimensional space over `ℚ[ξ, μ]`.
pub fn appendix_rep() -> Result<MatrixRep> {
    let raw: Value = serde_json::from_str(include_str!("../../data/appendix_matrices.json"))
        .map_err(|e| Error::Parse(format!("bundled matrix data is invalid: {e}")))?;
    rep_from_json(&raw)
}

fn mat_zero(n: usize) -> Mat {
    vec![vec![ParamScalar::zero(); n]; n]
}

fn mat_id(n: usize) -> Mat {
    let mut m = mat_zero(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = ParamScalar::one();
    }
    m
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = mat_zero(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                let t = a[i][k].mul(&b[k][j]);
                out[i][j].add_assign(&t);
            }
        }
    }
    out
}

fn mat_scale(a: &Mat, c: &ParamScalar) -> Mat {
    a.iter()
        .map(|row| row.iter().map(|x| x.mul(c)).collect())
        .collect()
}

fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.add(y)).collect())
        .collect()
}

fn mat_sub(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.sub(y)).collect())
        .collect()
}

fn first_nonzero(a: &Mat) -> Option<(usize, usize, ParamScalar)> {
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() {
                return Some((i, j, x.clone()));
            }
        }
    }
    None
}

/// Substitute parameter bindings into every entry.
pub fn mat_substitute(a: &Mat, bindings: &BTreeMap<String, BigRational>) -> Mat {
    a.iter()
        .map(|row| row.iter().map(|x| x.substitute(bindings)).collect())
        .collect()
}

/// Outcome of verifying a matrix representation against a datum.
#[derive(Clone, Debug)]
pub struct MatrixReport {
    pub rep_dim: usize,
    pub checks: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Verify that the matrices define a module over `A(Y, F, ψ, ξ)`:
/// derive `E_h` for every `h ∈ F` and `Y_l` for every `l ∈ Y` from the
/// supplied generators via the group law and the straightening
/// relations, then check the group table, all straightening relations,
/// and every deformed class relation, symbolically. `bindings`
/// specializes the matrix parameters to the datum's scalars.
pub fn verify_matrix_rep(
    rep: &MatrixRep,
    d: &ModuleDatum,
    bindings: &BTreeMap<String, BigRational>,
) -> Result<MatrixReport> {
    let n = rep.n;
    let g = &d.real.group;
    // only trivial psi: the derivations below fold cocycle values into
    // the group law, and the shipped data targets untwisted data
    for &a in &d.f.elems {
        for &b in &d.f.elems {
            if !d.psi_at(a, b)?.is_one() {
                return Err(Error::Invalid(
                    "matrix verification supports trivial cocycles only".into(),
                ));
            }
        }
    }
    let subst = |m: &Mat| mat_substitute(m, bindings);

    // E_h for every group element reachable from the supplied generators
    let mut e_mats: BTreeMap<usize, Mat> = BTreeMap::new();
    e_mats.insert(g.identity(), mat_id(n));
    let gens: Vec<(usize, Mat)> = rep
        .e
        .iter()
        .map(|(key, m)| {
            let p = Perm::parse(key, g.degree())?;
            Ok((g.idx(&p), subst(m)))
        })
        .collect::<Result<Vec<_>>>()?;
    loop {
        let mut grew = false;
        let known: Vec<(usize, Mat)> = e_mats.iter().map(|(k, v)| (*k, v.clone())).collect();
        for (t, et) in &gens {
            for (h, eh) in &known {
                let th = g.mul(*t, *h);
                if !e_mats.contains_key(&th) {
                    e_mats.insert(th, mat_mul(et, eh));
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    for &h in &d.f.elems {
        if !e_mats.contains_key(&h) {
            return Err(Error::Invalid(format!(
                "group element {} is not reachable from the supplied matrices",
                g.elem(h)
            )));
        }
    }

    // Y_l for every letter of Y via straightening from the supplied ones
    let mut y_mats: BTreeMap<usize, Mat> = BTreeMap::new();
    for (key, m) in &rep.y {
        let idx = d
            .rack
            .rank(key)
            .ok_or_else(|| Error::Parse(format!("unknown rack element `{key}`")))?;
        if !d.y.contains(&idx) {
            return Err(Error::Invalid(format!("letter `{key}` is outside Y")));
        }
        y_mats.insert(idx, subst(m));
    }
    loop {
        let mut grew = false;
        let known: Vec<(usize, Mat)> = y_mats.iter().map(|(k, v)| (*k, v.clone())).collect();
        for (l, yl) in &known {
            for (&h, eh) in &e_mats {
                let moved = d.real.act(h, *l);
                if !d.y.contains(&moved) || y_mats.contains_key(&moved) {
                    continue;
                }
                // e_h y_l e_h^{-1} = chi_l(h) y_{h·l}
                let ehinv = e_mats
                    .get(&g.inv(h))
                    .expect("inverses reachable with the element");
                let chi_inv = BigRational::one() / d.real.chi_val(*l, h);
                let m = mat_scale(&mat_mul(&mat_mul(eh, yl), ehinv), &ParamScalar::from_ratio(chi_inv));
                y_mats.insert(moved, m);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    for &l in &d.y {
        if !y_mats.contains_key(&l) {
            return Err(Error::Invalid(format!(
                "letter {} is not reachable from the supplied matrices",
                d.rack.names[l]
            )));
        }
    }

    let mut checks = 0usize;
    let mut failures = Vec::new();
    let mut push = |label: String, residual: Mat| {
        if let Some((i, j, v)) = first_nonzero(&residual) {
            failures.push(format!("{label}: entry ({i},{j}) = {v}"));
        }
    };

    // group law
    for &a in &d.f.elems {
        for &b in &d.f.elems {
            let lhs = mat_mul(&e_mats[&a], &e_mats[&b]);
            checks += 1;
            push(
                format!("group pair ({}, {})", g.elem(a), g.elem(b)),
                mat_sub(&lhs, &e_mats[&g.mul(a, b)]),
            );
        }
    }
    // straightening
    for &h in &d.f.elems {
        for &l in &d.y {
            let lhs = mat_mul(&e_mats[&h], &y_mats[&l]);
            let rhs = mat_scale(
                &mat_mul(&y_mats[&d.real.act(h, l)], &e_mats[&h]),
                &ParamScalar::from_ratio(d.real.chi_val(l, h).clone()),
            );
            checks += 1;
            push(
                format!("straightening ({}, {})", g.elem(h), d.rack.names[l]),
                mat_sub(&lhs, &rhs),
            );
        }
    }
    // deformed class relations
    for (k, &c) in d.rprime.iter().enumerate() {
        let theta = d.vartheta_poly(c);
        if theta.is_zero() {
            continue;
        }
        let mut acc = mat_zero(n);
        for (w, coeff) in theta.terms() {
            let mut m = mat_id(n);
            for &l in &w.0 {
                m = mat_mul(&m, &y_mats[&(l as usize)]);
            }
            acc = mat_add(&acc, &mat_scale(&m, &coeff.substitute(bindings)));
        }
        let xi = d.xi[k].substitute(bindings);
        if !xi.is_zero() {
            let gc = d.class_group_elem(c)?.expect("nonvanishing relation");
            acc = mat_sub(&acc, &mat_scale(&e_mats[&gc], &xi));
        }
        checks += 1;
        push(format!("relation {}", EquivClass::id(c)), acc);
    }

    Ok(MatrixReport {
        rep_dim: n,
        checks,
        passed: failures.is_empty(),
        failures,
    })
}

/// The projection `S₄ → S₃` by the action on the three pair-partitions
/// of `{1, 2, 3, 4}` (partition `k` pairs `1` with `k+1`); returned as
/// the image index for every element of `S₄`. The kernel is the Klein
/// four-group of double transpositions.
pub fn partition_projection(g4: &SymGroup, g3: &SymGroup) -> Result<Vec<usize>> {
    if g4.degree() != 4 || g3.degree() != 3 {
        return Err(Error::Invalid("projection needs S4 and S3".into()));
    }
    // partition k (k = 0, 1, 2) pairs point 0 with point k+1
    let partner = |p: &Perm, k: usize| -> usize {
        let a = p.apply(0);
        let b = p.apply(k + 1);
        // the image partition pairs a with b; its index is partner-of-0
        if a == 0 {
            b - 1
        } else if b == 0 {
            a - 1
        } else {
            // 0 is paired with the remaining point
            (1..4).find(|&x| x != a && x != b).expect("two points taken") - 1
        }
    };
    let mut pi = Vec::with_capacity(g4.size());
    for idx in 0..g4.size() {
        let p = g4.elem(idx);
        let mut images = [0usize; 3];
        for (k, img) in images.iter_mut().enumerate() {
            *img = partner(p, k);
        }
        let q = Perm::from_images(images.iter().map(|&x| x as u8).collect())?;
        pi.push(g3.idx(&q));
    }
    // homomorphism property, exhaustively
    for a in 0..g4.size() {
        for b in 0..g4.size() {
            if pi[g4.mul(a, b)] != g3.mul(pi[a], pi[b]) {
                return Err(Error::Axiom("partition action is not a homomorphism".into()));
            }
        }
    }
    Ok(pi)
}

/// A non-nullity certificate for a datum's algebra.
#[derive(Clone, Debug)]
pub struct NonnullReport {
    pub steps: Vec<String>,
    pub certified: bool,
}

fn rational_or_sampled_dim(d: &ModuleDatum, degree_cap: u32, steps: &mut Vec<String>) -> Result<bool> {
    // completion certificate: dimension of the completed algebra, at the
    // given scalars if rational, else at sampled parameter values
    let params: std::collections::BTreeSet<String> =
        d.xi.iter().flat_map(|s| s.params()).collect();
    if params.is_empty() {
        let a = build_a(d, degree_cap)?;
        let dim = a.dim()?;
        if a.is_zero() || dim == 0 {
            steps.push("completion collapsed to the zero algebra".into());
            return Ok(false);
        }
        steps.push(format!("completion has dimension {dim} > 0"));
        return Ok(true);
    }
    let mut ok = true;
    for sample in [1i64, -1, 2] {
        let bindings: BTreeMap<String, BigRational> = params
            .iter()
            .map(|p| (p.clone(), BigRational::from_integer(sample.into())))
            .collect();
        let mut ds = d.clone();
        for s in &mut ds.xi {
            *s = s.substitute(&bindings);
        }
        let a = build_a(&ds, degree_cap)?;
        let dim = a.dim()?;
        if a.is_zero() || dim == 0 {
            steps.push(format!(
                "completion collapsed at parameter value {sample}"
            ));
            ok = false;
        } else {
            steps.push(format!(
                "completion at parameter value {sample} has dimension {dim} > 0"
            ));
        }
    }
    Ok(ok)
}

/// Certify that the algebra of a datum is nonzero. Three-letter data are
/// certified directly (matrix representation when `Y` is the whole rack
/// and ψ is trivial, completion otherwise); four-letter data are mapped
/// onto a three-letter quotient along the partition projection first.
pub fn nonnull_certificates(d: &ModuleDatum, degree_cap: u32) -> Result<NonnullReport> {
    let mut steps = Vec::new();
    let certified = match d.rp.group_degree() {
        3 => nonnull_s3(d, degree_cap, &mut steps)?,
        4 => nonnull_s4(d, degree_cap, &mut steps)?,
        _ => {
            return Err(Error::Invalid(
                "non-nullity certificates cover the preset racks only".into(),
            ))
        }
    };
    Ok(NonnullReport { steps, certified })
}

fn nonnull_s3(d: &ModuleDatum, degree_cap: u32, steps: &mut Vec<String>) -> Result<bool> {
    let trivial_psi = d
        .f
        .elems
        .iter()
        .all(|&a| d.f.elems.iter().all(|&b| d.psi_at(a, b).map(|r| r.is_one()).unwrap_or(false)));
    if d.y.len() == d.rack.size() && trivial_psi {
        // the shipped 12-dimensional representation, specialized to the
        // datum's scalars: the square scalar must be shared by the
        // diagonal classes and the cyclic scalar by the others
        let mut square: Option<ParamScalar> = None;
        let mut cyclic: Option<ParamScalar> = None;
        let mut uniform = true;
        for (k, &c) in d.rprime.iter().enumerate() {
            let slot = if d.classes[c].is_diagonal() { &mut square } else { &mut cyclic };
            match slot {
                None => *slot = Some(d.xi[k].clone()),
                Some(v) if *v == d.xi[k] => {}
                Some(_) => uniform = false,
            }
        }
        let (Some(square), Some(cyclic)) = (square, cyclic) else {
            return Err(Error::Invalid("three-letter rack without both class kinds".into()));
        };
        let (Some(sq), Some(cy)) = (square.constant_value(), cyclic.constant_value()) else {
            steps.push("scalars are symbolic; falling back to completion".into());
            return rational_or_sampled_dim(d, degree_cap, steps);
        };
        if !uniform {
            steps.push("scalars differ within a kind; falling back to completion".into());
            return rational_or_sampled_dim(d, degree_cap, steps);
        }
        let rep = appendix_rep()?;
        let bindings: BTreeMap<String, BigRational> =
            [("xi".to_string(), sq), ("mu".to_string(), cy)].into();
        let report = verify_matrix_rep(&rep, d, &bindings)?;
        if report.passed {
            steps.push(format!(
                "matrix representation of dimension {} satisfies all {} relations; \
                 the identity acts nontrivially",
                report.rep_dim, report.checks
            ));
            return Ok(true);
        }
        steps.push(format!(
            "matrix representation failed: {}",
            report.failures.join("; ")
        ));
        return Ok(false);
    }
    rational_or_sampled_dim(d, degree_cap, steps)
}

fn nonnull_s4(d: &ModuleDatum, degree_cap: u32, steps: &mut Vec<String>) -> Result<bool> {
    for &a in &d.f.elems {
        for &b in &d.f.elems {
            if !d.psi_at(a, b)?.is_one() {
                return Err(Error::Invalid(
                    "the quotient certificate needs a trivial cocycle".into(),
                ));
            }
        }
    }
    let g4 = &d.real.group;
    let target_rp = RackPreset::O2_3;
    let target_cp = CocyclePreset::Minus;
    let treal = crate::grp::YDRealization::standard(target_rp, target_cp)?;
    let g3 = &treal.group;
    let pi = partition_projection(g4, g3)?;

    // letters: the image of g_l under pi determines the target letter
    let mut letter_map = Vec::with_capacity(d.rack.size());
    for l in 0..d.rack.size() {
        let img = pi[d.real.g[l]];
        let tl = treal
            .g
            .iter()
            .position(|&tg| tg == img)
            .ok_or_else(|| Error::Axiom("letter does not map to a target letter".into()))?;
        letter_map.push(tl);
    }
    let ty: Vec<usize> = {
        let mut v: Vec<usize> = d.y.iter().map(|&l| letter_map[l]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let tf_elems: Vec<usize> = d.f.elems.iter().map(|&h| pi[h]).collect();
    let tf = Subgroup::generated_by(g3, &tf_elems);
    let tpsi = GroupCocycle2::on_subgroup(g3, &tf, false)?;

    // derive the target scalars: substitute the letter map into each
    // source relation and match it against the target relation
    let track = target_rp.rack();
    let tclasses = crate::rack::enumerate_classes(&track);
    let tq = crate::rack::RackCocycle::preset(target_rp, target_cp)?;
    let trprime = crate::rack::classes_prime(&track, &tq, &tclasses);
    let t_tags = crate::rack::y_partition(&tclasses, &ty);
    let mut txi: BTreeMap<usize, ParamScalar> = BTreeMap::new();
    for (k, &c) in d.rprime.iter().enumerate() {
        let theta = d.vartheta_poly(c);
        if theta.is_zero() {
            continue;
        }
        // push the polynomial through the letter map
        let mut image = crate::ncpoly::NCPoly::zero();
        for (w, coeff) in theta.terms() {
            let img: Vec<u8> = w.0.iter().map(|&l| letter_map[l as usize] as u8).collect();
            image.add_term(crate::ncpoly::Word::from_slice(&img), coeff);
        }
        // locate the target class via the image of the representing pair
        let (i, j) = d.class_pair(c)?;
        let tpair = (letter_map[i], letter_map[j]);
        let tc = crate::rack::class_of(&tclasses, tpair);
        let t_theta = crate::rack::vartheta(&track, &tq, &tclasses[tc], &ty);
        let (lw, lc) = t_theta
            .leading()
            .ok_or_else(|| Error::Axiom("source relation maps onto a vanishing one".into()))?;
        let r = image.coeff(lw).constant_value().and_then(|n| {
            lc.constant_value().map(|dd| n / dd)
        });
        let Some(r) = r else {
            return Err(Error::Axiom("relation image is not rational".into()));
        };
        if image != t_theta.scale(&ParamScalar::from_ratio(r.clone())) {
            return Err(Error::Axiom(format!(
                "image of relation {} is not proportional to the target relation",
                EquivClass::id(c)
            )));
        }
        // theta_C -> r · theta_tc forces xi_tc = xi_C / r
        let want = d.xi[k].mul_ratio(&(BigRational::one() / r));
        match txi.get(&tc) {
            None => {
                txi.insert(tc, want);
            }
            Some(prev) if *prev == want => {}
            Some(prev) => {
                steps.push(format!(
                    "inconsistent projected scalars for target class {}: {} vs {}",
                    EquivClass::id(tc),
                    prev,
                    want
                ));
                return Ok(false);
            }
        }
    }
    let _ = (&trprime, &t_tags);
    let target = ModuleDatum::new(
        &format!("pi({})", d.name),
        target_rp,
        target_cp,
        &ty,
        tf,
        tpsi,
        &txi,
    )?;

    // well-defined surjection: every source relation maps to zero
    let src = build_a(d, degree_cap)?;
    let tgt = build_a(&target, degree_cap)?;
    let images: Vec<crate::algebra::SmashElement> = (0..src.alg.ctx.num_letters())
        .map(|l| {
            let rl = src.alg.ctx.letters[l];
            let tl = tgt
                .letter_of(letter_map[rl])
                .expect("target letters cover the image");
            crate::algebra::SmashElement::word_term(
                crate::ncpoly::Word::gen(tl),
                tgt.alg.ctx.identity_pos(),
            )
        })
        .collect();
    let group_images: Vec<usize> = (0..src.alg.ctx.group_order())
        .map(|fp| {
            let h = src.alg.ctx.f_elems[fp];
            tgt.alg
                .ctx
                .pos_of(pi[h])
                .expect("target group covers the image")
        })
        .collect();
    let qrep = quotient_map_check(&src.alg, &tgt.alg, &images, &group_images, &[], degree_cap)?;
    if !qrep.passed {
        steps.push(format!(
            "projection is not well defined: {}",
            qrep.violations.join("; ")
        ));
        return Ok(false);
    }
    steps.push(format!(
        "all relations map to zero along the partition projection onto A({}, F of order {})",
        target_rp.name(),
        target.f.order()
    ));
    let sub = nonnull_s3(&target, degree_cap, steps)?;
    if sub {
        steps.push("target algebra is nonzero, so the source is nonzero".into());
    }
    Ok(sub)
}
