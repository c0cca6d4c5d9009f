//! Module-category data `(Y, F, ψ, ξ)` over a realized rack.
//!
//! A datum consists of an invariant subrack `Y`, a subgroup `F` of the
//! realizing group that maps `Y` into itself, a 2-cocycle `ψ` on `F`, and
//! a scalar `ξ_C` for every quadratic class `C` with nonvanishing class
//! polynomial. The compatibility conditions checked here are exactly the
//! ones under which the quotient `A(Y, F, ψ, ξ)` of the smash product
//! `T(V_Y) # k_ψ F` by the deformed relations `ϑ_C = ξ_C e_{g_C}` carries
//! a comodule-algebra structure: the scalars must vanish on classes whose
//! group element leaves `F`, they must vanish on the diagonal classes of
//! a cubic class, and conjugation by every `e_f` must carry each deformed
//! relation into a scalar multiple of another one with matching scalars.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use crate::grp::{GroupCocycle2, Perm, Subgroup, YDRealization};
use crate::ncpoly::{NCPoly, ParamScalar, Word};
use crate::rack::{
    class_of, classes_prime, enumerate_classes, parse_ratio, r2_distinguished_pair, ratio_str,
    vartheta, y_partition, CocyclePreset, EquivClass, Rack, RackPreset, YPartitionTag,
};
use crate::{Error, Result};

/// A validated module-category datum `(Y, F, ψ, ξ)`.
#[derive(Clone, Debug)]
pub struct ModuleDatum {
    pub name: String,
    pub rp: RackPreset,
    pub cp: CocyclePreset,
    pub rack: Rack,
    pub q: crate::rack::RackCocycle,
    pub real: YDRealization,
    /// All quadratic classes of the rack.
    pub classes: Vec<EquivClass>,
    /// Indices (into `classes`) of the classes with nonzero polynomial.
    pub rprime: Vec<usize>,
    /// The subrack, as sorted rack indices.
    pub y: Vec<usize>,
    /// The subgroup, as group indices.
    pub f: Subgroup,
    /// 2-cocycle on the elements of `f`.
    pub psi: GroupCocycle2,
    /// Scalars, parallel to `rprime`.
    pub xi: Vec<ParamScalar>,
    /// Position of each class relative to `Y`, parallel to `classes`.
    pub tags: Vec<YPartitionTag>,
}

impl ModuleDatum {
    /// Assemble and validate a datum. `xi` maps global class indices to
    /// scalars; classes not mentioned get `ξ = 0`.
    pub fn new(
        name: &str,
        rp: RackPreset,
        cp: CocyclePreset,
        y: &[usize],
        f: Subgroup,
        psi: GroupCocycle2,
        xi: &BTreeMap<usize, ParamScalar>,
    ) -> Result<ModuleDatum> {
        let real = YDRealization::standard(rp, cp)?;
        let rack = rp.rack();
        let q = crate::rack::RackCocycle::preset(rp, cp)?;
        let classes = enumerate_classes(&rack);
        let rprime = classes_prime(&rack, &q, &classes);

        let mut y = y.to_vec();
        y.sort_unstable();
        y.dedup();
        for &l in &y {
            if l >= rack.size() {
                return Err(Error::Invalid(format!("subrack index {l} out of range")));
            }
        }
        for &a in &y {
            for &b in &y {
                if !y.contains(&rack.tri(a, b)) {
                    return Err(Error::Invalid(format!(
                        "Y is not a subrack: {} |> {} leaves it",
                        rack.names[a], rack.names[b]
                    )));
                }
            }
        }
        f.check(&real.group)?;
        for &h in &f.elems {
            for &l in &y {
                if !y.contains(&real.act(h, l)) {
                    return Err(Error::Invalid(format!(
                        "F does not preserve Y: element {} moves {} outside",
                        real.group.elem(h),
                        rack.names[l]
                    )));
                }
            }
        }
        psi.check_group_cocycle()?;
        if psi.order() != f.order() {
            return Err(Error::Invalid(format!(
                "cocycle is defined on {} elements but F has {}",
                psi.order(),
                f.order()
            )));
        }
        for &h in &f.elems {
            if psi.position(real.group.elem(h)).is_none() {
                return Err(Error::Invalid(format!(
                    "cocycle is not defined on {}",
                    real.group.elem(h)
                )));
            }
        }
        let mut xi_vec = vec![ParamScalar::zero(); rprime.len()];
        for (&c, s) in xi {
            match rprime.iter().position(|&r| r == c) {
                Some(k) => xi_vec[k] = s.clone(),
                None => {
                    return Err(Error::Invalid(format!(
                        "class {} has no relation to deform",
                        EquivClass::id(c)
                    )))
                }
            }
        }
        let tags = y_partition(&classes, &y);
        Ok(ModuleDatum {
            name: name.into(),
            rp,
            cp,
            rack,
            q,
            real,
            classes,
            rprime,
            y,
            f,
            psi,
            xi: xi_vec,
            tags,
        })
    }

    /// The scalar attached to a global class index (zero when the class
    /// carries no relation).
    pub fn xi_of(&self, c_global: usize) -> ParamScalar {
        match self.rprime.iter().position(|&r| r == c_global) {
            Some(k) => self.xi[k].clone(),
            None => ParamScalar::zero(),
        }
    }

    /// The pair `(i, j)` whose relation represents the class: the first
    /// pair for a fully contained class, the unique pair inside `Y x Y`
    /// for a cubic one.
    pub fn class_pair(&self, c_global: usize) -> Result<(usize, usize)> {
        match self.tags[c_global] {
            YPartitionTag::R1 => Ok(self.classes[c_global].pairs[0]),
            YPartitionTag::R2 => r2_distinguished_pair(&self.classes[c_global], &self.y)
                .ok_or_else(|| Error::Invalid("cubic class without distinguished pair".into())),
            YPartitionTag::R3 => Err(Error::Invalid(
                "class misses Y x Y: no representing pair".into(),
            )),
        }
    }

    /// The group element `g_C` targeted by the deformed relation: `g_i g_j`
    /// for a fully contained class (checked to be constant over its pairs),
    /// `g_i g_j g_i` for a cubic class; `None` when the relation vanishes.
    pub fn class_group_elem(&self, c_global: usize) -> Result<Option<usize>> {
        match self.tags[c_global] {
            YPartitionTag::R3 => Ok(None),
            YPartitionTag::R1 => Ok(Some(self.real.class_element(&self.classes[c_global])?)),
            YPartitionTag::R2 => {
                let (i, j) = self.class_pair(c_global)?;
                let (gi, gj) = (self.real.g[i], self.real.g[j]);
                let g = &self.real.group;
                Ok(Some(g.mul(g.mul(gi, gj), gi)))
            }
        }
    }

    /// The relation polynomial `ϑ_{C,Y}` of a class, on the full alphabet.
    pub fn vartheta_poly(&self, c_global: usize) -> NCPoly {
        vartheta(&self.rack, &self.q, &self.classes[c_global], &self.y)
    }

    /// ψ as a function of two group indices (both must lie in `F`).
    pub fn psi_at(&self, a: usize, b: usize) -> Result<BigRational> {
        let pa = self.real.group.elem(a);
        let pb = self.real.group.elem(b);
        Ok(self.psi.value(pa, pb)?.clone())
    }

    /// Serialize to the interchange JSON form.
    pub fn to_json(&self) -> Value {
        let mut xi = serde_json::Map::new();
        for (k, &c) in self.rprime.iter().enumerate() {
            if !self.xi[k].is_zero() {
                xi.insert(EquivClass::id(c), Value::String(format!("{}", self.xi[k])));
            }
        }
        json!({
            "name": self.name,
            "rack": self.rp.name(),
            "cocycle": self.cp.name(),
            "Y": self.y.iter().map(|&l| self.rack.names[l].clone()).collect::<Vec<_>>(),
            "F": self.f.elems.iter().map(|&h| self.real.group.elem(h).to_string()).collect::<Vec<_>>(),
            "psi": self.psi.to_json(),
            "xi": Value::Object(xi),
        })
    }

    /// Parse the interchange JSON form produced by [`to_json`]; `Y` also
    /// accepts rack indices, `psi` accepts `"trivial"` / `"clifford"`.
    pub fn from_json(v: &Value) -> Result<ModuleDatum> {
        let name = v.get("name").and_then(|s| s.as_str()).unwrap_or("datum");
        let rp = RackPreset::parse(
            v.get("rack")
                .and_then(|s| s.as_str())
                .ok_or_else(|| Error::Parse("datum JSON needs `rack`".into()))?,
        )?;
        let cp = CocyclePreset::parse(
            v.get("cocycle")
                .and_then(|s| s.as_str())
                .ok_or_else(|| Error::Parse("datum JSON needs `cocycle`".into()))?,
        )?;
        let rack = rp.rack();
        let real = YDRealization::standard(rp, cp)?;
        let y: Vec<usize> = v
            .get("Y")
            .and_then(|a| a.as_array())
            .ok_or_else(|| Error::Parse("datum JSON needs `Y`".into()))?
            .iter()
            .map(|e| match e {
                Value::Number(n) => n
                    .as_u64()
                    .map(|u| u as usize)
                    .ok_or_else(|| Error::Parse("bad rack index".into())),
                Value::String(s) => rack
                    .rank(s)
                    .ok_or_else(|| Error::Parse(format!("unknown rack element `{s}`"))),
                _ => Err(Error::Parse("Y entries must be names or indices".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        let f_elems: Vec<usize> = v
            .get("F")
            .and_then(|a| a.as_array())
            .ok_or_else(|| Error::Parse("datum JSON needs `F`".into()))?
            .iter()
            .map(|e| {
                let s = e
                    .as_str()
                    .ok_or_else(|| Error::Parse("F entries must be permutation strings".into()))?;
                let p = Perm::parse(s, real.group.degree())?;
                Ok(real.group.idx(&p))
            })
            .collect::<Result<Vec<_>>>()?;
        let f = Subgroup::generated_by(&real.group, &f_elems);
        let psi = match v.get("psi") {
            None => GroupCocycle2::on_subgroup(&real.group, &f, false)?,
            Some(Value::String(s)) if s == "trivial" => {
                GroupCocycle2::on_subgroup(&real.group, &f, false)?
            }
            Some(Value::String(s)) if s == "clifford" => {
                GroupCocycle2::on_subgroup(&real.group, &f, true)?
            }
            Some(other) => GroupCocycle2::from_json(other, real.group.degree())?,
        };
        let mut xi = BTreeMap::new();
        if let Some(obj) = v.get("xi").and_then(|x| x.as_object()) {
            for (key, val) in obj {
                let c = key
                    .strip_prefix('c')
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad class id `{key}`")))?;
                let s = match val {
                    Value::String(s) => parse_scalar(s)?,
                    Value::Number(n) => ParamScalar::from_ratio(parse_ratio(&n.to_string())?),
                    _ => return Err(Error::Parse("xi values must be strings or numbers".into())),
                };
                xi.insert(c, s);
            }
        }
        ModuleDatum::new(name, rp, cp, &y, f, psi, &xi)
    }
}

/// Parse a scalar: a rational (`-1/2`), a parameter name (`alpha`), or a
/// rational multiple of one (`2*alpha`, `-alpha`).
pub fn parse_scalar(s: &str) -> Result<ParamScalar> {
    let s = s.trim();
    if let Ok(r) = parse_ratio(s) {
        return Ok(ParamScalar::from_ratio(r));
    }
    let (coeff, name) = match s.split_once('*') {
        Some((c, n)) => (parse_ratio(c.trim())?, n.trim()),
        None => match s.strip_prefix('-') {
            Some(n) => (-BigRational::one(), n.trim()),
            None => (BigRational::one(), s),
        },
    };
    if name.is_empty() || !name.chars().all(|ch| ch.is_ascii_alphanumeric() || ch == '_') {
        return Err(Error::Parse(format!("cannot parse scalar `{s}`")));
    }
    Ok(ParamScalar::param(name).mul_ratio(&coeff))
}

/// Conjugating every monomial of `ϑ_C` by a group element `h` (sending
/// `y_w` to `Π_l χ_l(h) · y_{h·w}`) yields a polynomial supported on a
/// single class `h·C` and proportional to `ϑ_{h·C}`; returns that class
/// and the proportionality scalar. Errors if proportionality fails.
pub fn transport_class(
    d: &ModuleDatum,
    c_global: usize,
    h: usize,
) -> Result<(usize, BigRational)> {
    let theta = d.vartheta_poly(c_global);
    if theta.is_zero() {
        return Err(Error::Invalid("cannot transport a vanishing relation".into()));
    }
    let mut conj = NCPoly::zero();
    for (w, coeff) in theta.terms() {
        let mut ratio = BigRational::one();
        let mut img = Vec::with_capacity(w.len());
        for &l in &w.0 {
            ratio *= d.real.chi_val(l as usize, h);
            img.push(d.real.act(h, l as usize) as u8);
        }
        conj.add_term(Word::from_slice(&img), &coeff.mul_ratio(&ratio));
    }
    let t_idx = d.real.class_action(&d.classes, h, c_global);
    let theta_t = d.vartheta_poly(t_idx);
    let (lead_w, lead_c) = theta_t
        .leading()
        .ok_or_else(|| Error::Axiom(format!(
            "class {} transports to one with vanishing relation",
            EquivClass::id(c_global)
        )))?;
    let num = conj
        .coeff(lead_w)
        .constant_value()
        .ok_or_else(|| Error::Invalid("non-rational relation coefficient".into()))?;
    let den = lead_c.constant_value().unwrap();
    let ratio = num / den;
    if conj != theta_t.scale(&ParamScalar::from_ratio(ratio.clone())) {
        return Err(Error::Axiom(format!(
            "conjugated relation of {} is not proportional to the target",
            EquivClass::id(c_global)
        )));
    }
    Ok((t_idx, ratio))
}

/// Outcome of the compatibility check, with one message per violation.
#[derive(Clone, Debug)]
pub struct CompatReport {
    pub checks: usize,
    pub violations: Vec<String>,
}

impl CompatReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check every compatibility condition on the scalars of a datum:
///
/// 1. `ξ_C = 0` whenever `g_C ∉ F` (the relation target must exist);
/// 2. for a cubic class with pair `(i, j)`, the scalars of the diagonal
///    classes of `i` and `j` vanish;
/// 3. for every `f ∈ F` and every class with a relation, conjugating the
///    deformed relation by `e_f` yields the deformed relation of `f·C`:
///    `κ · ξ_{f·C} = ξ_C · ψ(f, g_C) ψ(f g_C, f⁻¹) / ψ(f, f⁻¹)`, where
///    `κ` is the proportionality scalar of [`transport_class`].
pub fn check_compatible(d: &ModuleDatum) -> Result<CompatReport> {
    let mut checks = 0usize;
    let mut violations = Vec::new();
    let g = &d.real.group;
    for (k, &c) in d.rprime.iter().enumerate() {
        let xi_c = &d.xi[k];
        let tag = d.tags[c];
        if tag == YPartitionTag::R3 {
            checks += 1;
            if !xi_c.is_zero() {
                violations.push(format!(
                    "{}: scalar {} attached to a class whose relation vanishes",
                    EquivClass::id(c),
                    xi_c
                ));
            }
            continue;
        }
        let gc = d.class_group_elem(c)?.expect("relation class");
        if !d.f.contains(gc) {
            checks += 1;
            if !xi_c.is_zero() {
                violations.push(format!(
                    "{}: scalar {} but the class element {} is outside F",
                    EquivClass::id(c),
                    xi_c,
                    g.elem(gc)
                ));
            }
            continue;
        }
        if tag == YPartitionTag::R2 {
            let (i, j) = d.class_pair(c)?;
            for diag in [i, j] {
                let dc = class_of(&d.classes, (diag, diag));
                let xi_d = d.xi_of(dc);
                checks += 1;
                if !xi_d.is_zero() {
                    violations.push(format!(
                        "{}: cubic class forces the square scalar of {} to vanish, found {}",
                        EquivClass::id(c),
                        d.rack.names[diag],
                        xi_d
                    ));
                }
            }
        }
        for &h in &d.f.elems {
            let (t, kappa) = transport_class(d, c, h)?;
            let xi_t = d.xi_of(t);
            let hinv = g.inv(h);
            let s = d.psi_at(h, gc)? * d.psi_at(g.mul(h, gc), hinv)? / d.psi_at(h, hinv)?;
            checks += 1;
            let lhs = xi_t.mul_ratio(&kappa);
            let rhs = xi_c.mul_ratio(&s);
            if lhs != rhs {
                violations.push(format!(
                    "{}: conjugation by {} sends the relation to {} with scalar {} · ξ, \
                     but ξ transports as {} · ξ",
                    EquivClass::id(c),
                    g.elem(h),
                    EquivClass::id(t),
                    ratio_str(&kappa),
                    ratio_str(&s),
                ));
            }
        }
    }
    Ok(CompatReport { checks, violations })
}
