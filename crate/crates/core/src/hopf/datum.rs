//! Quadratic lifting data and the pointed Hopf algebras they present.
//!
//! A lifting datum attaches a scalar `γ_C` to every quadratic class `C`
//! with nonvanishing class polynomial, subject to two constraints: the
//! scalar vanishes when the class element `e_C` is the identity, and the
//! scalars are transported into each other by the rack translations, with
//! a coefficient read off from the conjugated class polynomial. The
//! associated algebra deforms each quadratic relation `φ_C = 0` of the
//! bosonization into `φ_C = γ_C (1 - e_{g_C})`.

use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{SmashAlgebra, SmashContext, SmashElement};
use crate::grp::{GroupCocycle2, Subgroup, YDRealization};
use crate::ncpoly::{NCPoly, ParamScalar, Word};
use crate::rack::{
    classes_prime, enumerate_classes, phi_c, CocyclePreset, EquivClass, Rack, RackCocycle,
    RackPreset,
};
use crate::{Error, Result};

/// A validated quadratic lifting datum.
#[derive(Clone, Debug)]
pub struct QlDatum {
    pub name: String,
    pub rp: RackPreset,
    pub cp: CocyclePreset,
    pub rack: Rack,
    pub q: RackCocycle,
    pub real: YDRealization,
    /// All quadratic classes of the rack.
    pub classes: Vec<EquivClass>,
    /// Indices (into `classes`) of the classes with nonzero polynomial.
    pub rprime: Vec<usize>,
    /// Scalars, parallel to `rprime`.
    pub gamma: Vec<ParamScalar>,
}

/// The translation of a class by a rack element `k`, together with the
/// proportionality scalar `c` such that conjugating every monomial of
/// `φ_C` (sending `x_a x_b` to `q_{ka} q_{kb} x_{k▷a} x_{k▷b}`) yields
/// `c · φ_{k▷C}`.
pub fn translate_class(
    rack: &Rack,
    q: &RackCocycle,
    classes: &[EquivClass],
    c_idx: usize,
    k: usize,
) -> Result<(usize, BigRational)> {
    let class = &classes[c_idx];
    let (a0, b0) = class.pairs[0];
    let target_pair = (rack.tri(k, a0), rack.tri(k, b0));
    let t_idx = classes
        .iter()
        .position(|cl| cl.pairs.contains(&target_pair))
        .ok_or_else(|| Error::Invalid("translated pair is in no class".into()))?;
    for &(a, b) in &class.pairs {
        if !classes[t_idx].pairs.contains(&(rack.tri(k, a), rack.tri(k, b))) {
            return Err(Error::Axiom(format!(
                "translation by {k} scatters a class across several classes"
            )));
        }
    }
    // conjugate the class polynomial monomial by monomial
    let phi = phi_c(q, class);
    let mut conj = NCPoly::zero();
    for (w, coeff) in phi.terms() {
        let (a, b) = (w.0[0] as usize, w.0[1] as usize);
        let ratio = q.val(k, a) * q.val(k, b);
        let moved = Word::from_slice(&[rack.tri(k, a) as u8, rack.tri(k, b) as u8]);
        conj.add_term(moved, &coeff.mul_ratio(&ratio));
    }
    let phi_t = phi_c(q, &classes[t_idx]);
    let (lead_w, lead_c) = phi_t
        .leading()
        .ok_or_else(|| Error::Invalid("translated class has zero polynomial".into()))?;
    let conj_c = conj.coeff(lead_w);
    let num = conj_c
        .constant_value()
        .ok_or_else(|| Error::Invalid("non-rational class polynomial".into()))?;
    let den = lead_c.constant_value().unwrap();
    let ratio = num / den;
    if conj != phi_t.scale(&ParamScalar::from_ratio(ratio.clone())) {
        return Err(Error::Axiom(format!(
            "conjugated class polynomial is not proportional to the target (class {c_idx}, k={k})"
        )));
    }
    Ok((t_idx, ratio))
}

impl QlDatum {
    /// Build a datum by assigning scalars to representative pairs and
    /// transporting them along rack translations; every class not reached
    /// from a representative keeps γ = 0. Validates all invariants.
    pub fn from_representatives(
        name: &str,
        rp: RackPreset,
        cp: CocyclePreset,
        reps: &[((usize, usize), ParamScalar)],
    ) -> Result<QlDatum> {
        let rack = rp.rack();
        let q = RackCocycle::preset(rp, cp)?;
        let real = YDRealization::standard(rp, cp)?;
        let classes = enumerate_classes(&rack);
        let rprime = classes_prime(&rack, &q, &classes);
        let pos_in_rprime = |c_idx: usize| rprime.iter().position(|&c| c == c_idx);

        let mut gamma: Vec<Option<ParamScalar>> = vec![None; rprime.len()];
        let mut queue: Vec<usize> = Vec::new();
        for (pair, value) in reps {
            let c_idx = classes
                .iter()
                .position(|cl| cl.pairs.contains(pair))
                .ok_or_else(|| Error::Invalid(format!("pair {pair:?} is in no class")))?;
            let p = pos_in_rprime(c_idx).ok_or_else(|| {
                Error::Invalid(format!("pair {pair:?} lies in a class with zero polynomial"))
            })?;
            gamma[p] = Some(value.clone());
            queue.push(p);
        }
        // transport: γ_C = c · γ_{k▷C}, so γ_{k▷C} = γ_C / c
        while let Some(p) = queue.pop() {
            let value = gamma[p].clone().unwrap();
            for k in 0..rack.size() {
                let (t_idx, c) = translate_class(&rack, &q, &classes, rprime[p], k)?;
                let Some(tp) = pos_in_rprime(t_idx) else { continue };
                let moved = value.mul_ratio(&(BigRational::one() / &c));
                match &gamma[tp] {
                    None => {
                        gamma[tp] = Some(moved);
                        queue.push(tp);
                    }
                    Some(existing) => {
                        if *existing != moved {
                            return Err(Error::Axiom(format!(
                                "inconsistent transport into class {t_idx}: {existing} vs {moved}"
                            )));
                        }
                    }
                }
            }
        }
        let gamma: Vec<ParamScalar> =
            gamma.into_iter().map(|g| g.unwrap_or_else(ParamScalar::zero)).collect();
        let datum = QlDatum {
            name: name.into(),
            rp,
            cp,
            rack,
            q,
            real,
            classes,
            rprime,
            gamma,
        };
        datum.check()?;
        Ok(datum)
    }

    /// The class containing a given ordered pair.
    pub fn class_of_pair(&self, pair: (usize, usize)) -> Option<&EquivClass> {
        self.classes.iter().find(|cl| cl.pairs.contains(&pair))
    }

    /// Scalar attached to the class with index `c_idx` in the full class
    /// list (zero for classes with vanishing polynomial).
    pub fn gamma_of_class(&self, c_idx: usize) -> ParamScalar {
        match self.rprime.iter().position(|&c| c == c_idx) {
            Some(p) => self.gamma[p].clone(),
            None => ParamScalar::zero(),
        }
    }

    /// Validate the three datum invariants exhaustively.
    pub fn check(&self) -> Result<()> {
        self.real.ql_hypothesis()?;
        for (p, &c_idx) in self.rprime.iter().enumerate() {
            let e = self.real.class_element(&self.classes[c_idx])?;
            if e == self.real.group.identity() && !self.gamma[p].is_zero() {
                return Err(Error::Axiom(format!(
                    "class {c_idx} has identity class element but nonzero scalar {}",
                    self.gamma[p]
                )));
            }
            for k in 0..self.rack.size() {
                let (t_idx, c) =
                    translate_class(&self.rack, &self.q, &self.classes, c_idx, k)?;
                let target = self.gamma_of_class(t_idx);
                if self.gamma[p] != target.mul_ratio(&c) {
                    return Err(Error::Axiom(format!(
                        "transport violated: γ(class {c_idx}) ≠ {c} · γ(class {t_idx})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Human-readable family summary: the distinct scalars by class size.
    pub fn family_by_size(&self) -> Vec<(usize, Vec<ParamScalar>)> {
        let mut sizes: Vec<usize> = self
            .rprime
            .iter()
            .map(|&c| self.classes[c].pairs.len())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        sizes.sort_unstable();
        sizes
            .into_iter()
            .map(|s| {
                let mut vals: Vec<ParamScalar> = Vec::new();
                for (p, &c) in self.rprime.iter().enumerate() {
                    if self.classes[c].pairs.len() == s && !vals.contains(&self.gamma[p]) {
                        vals.push(self.gamma[p].clone());
                    }
                }
                (s, vals)
            })
            .collect()
    }
}

/// Named preset data over the symmetric groups. `params` supplies the free
/// scalars: two for `q3m`/`q4m`/`d4` (the disjoint-pair and overlapping-pair
/// deformations), one for `q4chi`.
pub fn ql_datum(preset: &str, params: &[ParamScalar]) -> Result<QlDatum> {
    let two = |what: &str| -> Result<(ParamScalar, ParamScalar)> {
        if params.len() != 2 {
            return Err(Error::Invalid(format!(
                "preset {what} needs two parameters, got {}",
                params.len()
            )));
        }
        Ok((params[0].clone(), params[1].clone()))
    };
    match preset {
        "q3m" => {
            // no disjoint transpositions exist on three points, so the
            // first parameter never enters a relation
            let (_, beta) = two("q3m")?;
            QlDatum::from_representatives(
                "q3m",
                RackPreset::O2_3,
                CocyclePreset::Minus,
                &[((0, 0), ParamScalar::zero()), ((0, 2), beta)],
            )
        }
        "q4m" => {
            let (alpha, beta) = two("q4m")?;
            QlDatum::from_representatives(
                "q4m",
                RackPreset::O2_4,
                CocyclePreset::Minus,
                &[
                    ((0, 0), ParamScalar::zero()),
                    ((0, 5), alpha),
                    ((0, 3), beta),
                ],
            )
        }
        "q4chi" => {
            if params.len() != 1 {
                return Err(Error::Invalid(format!(
                    "preset q4chi needs one parameter, got {}",
                    params.len()
                )));
            }
            QlDatum::from_representatives(
                "q4chi",
                RackPreset::O2_4,
                CocyclePreset::Chi,
                &[
                    ((0, 0), ParamScalar::zero()),
                    ((0, 5), ParamScalar::zero()),
                    ((0, 3), params[0].clone()),
                ],
            )
        }
        "d4" => {
            let (alpha, beta) = two("d4")?;
            QlDatum::from_representatives(
                "d4",
                RackPreset::O4_4,
                CocyclePreset::Minus,
                &[
                    ((0, 0), alpha),
                    ((0, 5), ParamScalar::zero()),
                    ((0, 1), beta),
                ],
            )
        }
        other => Err(Error::Invalid(format!("unknown ql-datum preset `{other}`"))),
    }
}

/// The pointed Hopf algebra presented by a lifting datum: the smash
/// algebra over the full group with each quadratic class relation deformed
/// to `φ_C - γ_C (1 - e_{g_C})`.
pub fn lifted_algebra(datum: &QlDatum, degree_cap: u32) -> Result<SmashAlgebra> {
    let group_size = datum.real.group.size();
    let f = Subgroup { elems: (0..group_size).collect() };
    let psi = GroupCocycle2::trivial(datum.real.group.elems().to_vec());
    let letters: Vec<usize> = (0..datum.rack.size()).collect();
    let mut ctx = SmashContext::new(&datum.real, &letters, &f, &psi)?;
    ctx.names = datum.rack.names.iter().map(|n| format!("a{n}")).collect();
    let unit = SmashElement::group_term(ctx.identity_pos());
    let mut relations = Vec::new();
    for (p, &c_idx) in datum.rprime.iter().enumerate() {
        let phi = phi_c(&datum.q, &datum.classes[c_idx]);
        let e = datum.real.class_element(&datum.classes[c_idx])?;
        let e_pos = ctx.pos_of(e).expect("full group contains every class element");
        let rhs = unit.sub(&SmashElement::group_term(e_pos)).scale(&datum.gamma[p]);
        relations.push(ctx.from_poly(&phi).sub(&rhs));
    }
    SmashAlgebra::build(ctx, &relations, degree_cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(name: &str) -> ParamScalar {
        ParamScalar::param(name)
    }

    #[test]
    fn presets_validate_with_symbolic_parameters() {
        let d = ql_datum("q3m", &[sym("alpha"), sym("beta")]).unwrap();
        assert_eq!(d.rprime.len(), 5);
        let fam = d.family_by_size();
        assert_eq!(fam[0].0, 1);
        assert!(fam[0].1.iter().all(|v| v.is_zero()));
        assert_eq!(fam[1].0, 3);
        assert_eq!(fam[1].1, vec![sym("beta")]);

        let d4 = ql_datum("q4m", &[sym("alpha"), sym("beta")]).unwrap();
        assert_eq!(d4.rprime.len(), 17);
        let fam = d4.family_by_size();
        assert_eq!(fam.iter().map(|(s, _)| *s).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert!(fam[0].1.iter().all(|v| v.is_zero()));
        assert_eq!(fam[1].1, vec![sym("alpha")]);
        assert_eq!(fam[2].1, vec![sym("beta")]);

        ql_datum("q4chi", &[sym("lambda")]).unwrap();
        ql_datum("d4", &[sym("alpha"), sym("beta")]).unwrap();
    }

    #[test]
    fn diagonal_deformation_is_rejected_when_class_element_is_identity() {
        // a transposition squares to the identity, so its diagonal class
        // admits no deformation scalar
        let err = QlDatum::from_representatives(
            "bad",
            RackPreset::O2_3,
            CocyclePreset::Minus,
            &[((0, 0), ParamScalar::one()), ((0, 2), ParamScalar::zero())],
        );
        assert!(err.is_err());
    }

    #[test]
    fn transport_forces_equal_scalars_on_overlapping_classes() {
        // assigning different symbols to the two overlapping-pair classes
        // of the three-point rack contradicts the transport relation
        let err = QlDatum::from_representatives(
            "bad",
            RackPreset::O2_3,
            CocyclePreset::Minus,
            &[((0, 2), sym("a")), ((2, 0), sym("b"))],
        );
        assert!(err.is_err());
    }

    #[test]
    fn lifted_dimension_72_for_three_point_presets() {
        for t in [
            (ParamScalar::zero(), ParamScalar::zero()),
            (ParamScalar::zero(), ParamScalar::one()),
        ] {
            let d = ql_datum("q3m", &[t.0, t.1]).unwrap();
            let h = lifted_algebra(&d, 10).unwrap();
            assert!(h.complete);
            assert_eq!(h.dim().unwrap(), 72);
        }
    }

    #[test]
    fn four_cycle_lifting_presents_square_deformation_verbatim() {
        let d = ql_datum("d4", &[sym("alpha"), ParamScalar::zero()]).unwrap();
        let h = lifted_algebra(&d, 10).unwrap();
        // the rule for the square of the first four-cycle should read
        // a² -> alpha(1 - e_{(13)(24)})
        let sq = Word::from_slice(&[0, 0]);
        let rule = h.rules().iter().find(|r| r.lhs == sq).expect("square rule");
        let e = d.real.class_element(d.class_of_pair((0, 0)).unwrap()).unwrap();
        let unit = SmashElement::group_term(h.ctx.identity_pos());
        let expect = unit
            .sub(&SmashElement::group_term(h.ctx.pos_of(e).unwrap()))
            .scale(&sym("alpha"));
        assert_eq!(rule.rhs, expect);
    }
}
