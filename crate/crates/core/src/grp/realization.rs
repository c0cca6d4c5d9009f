//! Principal Yetter–Drinfeld realization of a rack-with-cocycle inside a
//! symmetric group.
//!
//! The data is a map `i -> g_i` from rack elements to group elements, an
//! action of the group on the rack indices, and a family of scalar maps
//! `chi_i: G -> k^x`, subject to
//!
//! * `g_{h . i} = h g_i h^{-1}`,
//! * `g_i . j = i |> j`,
//! * `chi_i(h t) = chi_i(t) chi_{t . i}(h)` (a 1-cocycle condition),
//! * `chi_i(g_j) = q_{j i}`.
//!
//! For the conjugacy-class racks here the standard realization takes `g_i`
//! to be the permutation labelling the rack element, the action to be
//! conjugation, and `chi` the sign character (for the constant cocycle) or
//! the inversion-counting character (for the `chi` cocycle).

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::perm::SymGroup;
use super::subgroup::Subgroup;
use crate::rack::{CocyclePreset, EquivClass, Rack, RackCocycle, RackPreset};
use crate::{Error, Result};

/// A rack-with-cocycle realized in the Yetter–Drinfeld category of a
/// symmetric group.
#[derive(Clone, Debug)]
pub struct YDRealization {
    pub group: SymGroup,
    /// `g[i]` = group index of the element `g_i` attached to rack index `i`.
    pub g: Vec<usize>,
    /// `action[h][i]` = the rack index `h . i`, for each group index `h`.
    pub action: Vec<Vec<usize>>,
    /// `chi[i][h]` = the scalar `chi_i(h)`.
    pub chi: Vec<Vec<BigRational>>,
}

impl YDRealization {
    /// The standard realization for one of the preset racks and cocycles.
    pub fn standard(rp: RackPreset, cp: CocyclePreset) -> Result<YDRealization> {
        let group = SymGroup::new(rp.group_degree());
        let perms = rp.permutations();
        let g: Vec<usize> = perms.iter().map(|p| group.idx(p)).collect();
        let mut action = vec![vec![0usize; perms.len()]; group.size()];
        for h in 0..group.size() {
            let hp = group.elem(h);
            for (i, p) in perms.iter().enumerate() {
                let moved = p.conjugated_by(hp);
                action[h][i] = perms
                    .iter()
                    .position(|x| *x == moved)
                    .ok_or_else(|| Error::Invalid("class rack not conjugation-closed".into()))?;
            }
        }
        let mut chi = vec![vec![BigRational::zero(); group.size()]; perms.len()];
        match cp {
            CocyclePreset::Minus => {
                for row in chi.iter_mut() {
                    for (h, entry) in row.iter_mut().enumerate() {
                        *entry = BigRational::from_integer(group.elem(h).sign().into());
                    }
                }
            }
            CocyclePreset::Chi => {
                for (i, row) in chi.iter_mut().enumerate() {
                    let (a, b) = perms[i].transposition_support().ok_or_else(|| {
                        Error::Invalid(
                            "the inversion-counting cocycle needs a transposition rack".into(),
                        )
                    })?;
                    for (h, entry) in row.iter_mut().enumerate() {
                        let s = group.elem(h);
                        *entry = if s.apply(a) < s.apply(b) {
                            BigRational::one()
                        } else {
                            -BigRational::one()
                        };
                    }
                }
            }
        }
        Ok(YDRealization { group, g, action, chi })
    }

    pub fn rack_size(&self) -> usize {
        self.g.len()
    }

    /// `chi_i(h)` by indices.
    pub fn chi_val(&self, i: usize, h: usize) -> &BigRational {
        &self.chi[i][h]
    }

    /// The rack index `h . i`.
    pub fn act(&self, h: usize, i: usize) -> usize {
        self.action[h][i]
    }

    /// Verify every realization axiom against a rack and cocycle.
    pub fn check_realization(&self, rack: &Rack, q: &RackCocycle) -> Result<()> {
        let n = rack.size();
        let gs = self.group.size();
        if self.g.len() != n || self.chi.len() != n || self.action.len() != gs {
            return Err(Error::Invalid("realization tables have wrong shape".into()));
        }
        // the action is a group action
        for i in 0..n {
            if self.act(self.group.identity(), i) != i {
                return Err(Error::Axiom("identity must act trivially".into()));
            }
        }
        for h in 0..gs {
            for t in 0..gs {
                let ht = self.group.mul(h, t);
                for i in 0..n {
                    if self.act(h, self.act(t, i)) != self.act(ht, i) {
                        return Err(Error::Axiom("action is not a group action".into()));
                    }
                }
            }
        }
        // g is equivariant: g_{h.i} = h g_i h^{-1}
        for h in 0..gs {
            for i in 0..n {
                let lhs = self.g[self.act(h, i)];
                let rhs = self.group.conj(self.g[i], h);
                if lhs != rhs {
                    return Err(Error::Axiom(format!(
                        "g is not conjugation-equivariant at h={}, i={}",
                        self.group.elem(h),
                        rack.names[i]
                    )));
                }
            }
        }
        // g_i acts as i |> -
        for i in 0..n {
            for j in 0..n {
                if self.act(self.g[i], j) != rack.tri(i, j) {
                    return Err(Error::Axiom(format!(
                        "g_i must act by the rack operation: fails at ({}, {})",
                        rack.names[i],
                        rack.names[j]
                    )));
                }
            }
        }
        // chi is a 1-cocycle: chi_i(h t) = chi_i(t) chi_{t.i}(h)
        for i in 0..n {
            for h in 0..gs {
                for t in 0..gs {
                    let ht = self.group.mul(h, t);
                    let lhs = &self.chi[i][ht];
                    let rhs = &self.chi[i][t] * &self.chi[self.act(t, i)][h];
                    if *lhs != rhs {
                        return Err(Error::Axiom(format!(
                            "chi fails the 1-cocycle law at i={}, h={}, t={}",
                            rack.names[i],
                            self.group.elem(h),
                            self.group.elem(t)
                        )));
                    }
                }
                if self.chi[i][h].is_zero() {
                    return Err(Error::Axiom("chi takes the value 0".into()));
                }
            }
        }
        // chi recovers the rack cocycle: chi_i(g_j) = q_{j i}
        for i in 0..n {
            for j in 0..n {
                if self.chi[i][self.g[j]] != *q.val(j, i) {
                    return Err(Error::Axiom(format!(
                        "chi_i(g_j) != q_(j,i) at i={}, j={}",
                        rack.names[i],
                        rack.names[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// The quadratic-lifting hypothesis `g_i != g_j g_k` for all `i, j, k`.
    pub fn ql_hypothesis(&self) -> Result<()> {
        for &gi in &self.g {
            for &gj in &self.g {
                for &gk in &self.g {
                    if gi == self.group.mul(gj, gk) {
                        return Err(Error::Axiom(format!(
                            "degree-one group-like {} equals a product of two others",
                            self.group.elem(gi)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Setwise stabilizer `K_Y = { h : h . Y = Y }` of a subset of rack
    /// indices.
    pub fn stabilizer(&self, y: &[usize]) -> Subgroup {
        let mut members = Vec::new();
        let inside = |i: usize| y.contains(&i);
        for h in 0..self.group.size() {
            if y.iter().all(|&i| inside(self.act(h, i))) {
                members.push(h);
            }
        }
        Subgroup { elems: members }
    }

    /// The group element `g_i g_j` attached to a class of pairs; the paper
    /// of pairs `(i, j)` along one class all give the same product, which
    /// this checks.
    pub fn class_element(&self, class: &EquivClass) -> Result<usize> {
        let (i0, j0) = class.pairs[0];
        let e = self.group.mul(self.g[i0], self.g[j0]);
        for &(i, j) in &class.pairs {
            if self.group.mul(self.g[i], self.g[j]) != e {
                return Err(Error::Axiom(format!(
                    "g_i g_j is not constant along class {}",
                    class.pairs.len()
                )));
            }
        }
        Ok(e)
    }

    /// Transport of a class along a group element: the class containing
    /// `(f . i, f . j)`.
    pub fn class_action(&self, classes: &[EquivClass], f: usize, c: usize) -> usize {
        let (i, j) = classes[c].pairs[0];
        let moved = (self.act(f, i), self.act(f, j));
        crate::rack::class_of(classes, moved)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rack::enumerate_classes;

    fn all_presets() -> Vec<(RackPreset, CocyclePreset)> {
        vec![
            (RackPreset::O2_3, CocyclePreset::Minus),
            (RackPreset::O2_3, CocyclePreset::Chi),
            (RackPreset::O2_4, CocyclePreset::Minus),
            (RackPreset::O2_4, CocyclePreset::Chi),
            (RackPreset::O4_4, CocyclePreset::Minus),
        ]
    }

    #[test]
    fn standard_realizations_satisfy_all_axioms() {
        for (rp, cp) in all_presets() {
            let rack = rp.rack();
            let q = RackCocycle::preset(rp, cp).unwrap();
            let real = YDRealization::standard(rp, cp).unwrap();
            real.check_realization(&rack, &q)
                .unwrap_or_else(|e| panic!("{rp:?}/{cp:?}: {e}"));
            real.ql_hypothesis().unwrap();
        }
    }

    /// Transport identity used by the compatibility analysis: whenever
    /// `(i |> j) |> i = j`, the cocycle value on a transported pair obeys
    /// `chi_i(f) q_(f.(i|>j), f.i) = chi_j(f) q_(i|>j, i)`.
    #[test]
    fn cocycle_transport_identity() {
        for (rp, cp) in all_presets() {
            let rack = rp.rack();
            let q = RackCocycle::preset(rp, cp).unwrap();
            let real = YDRealization::standard(rp, cp).unwrap();
            for i in 0..rack.size() {
                for j in 0..rack.size() {
                    let k = rack.tri(i, j);
                    if rack.tri(k, i) != j {
                        continue;
                    }
                    for f in 0..real.group.size() {
                        let lhs = real.chi_val(i, f) * q.val(real.act(f, k), real.act(f, i));
                        let rhs = real.chi_val(j, f) * q.val(k, i);
                        assert_eq!(lhs, rhs, "{rp:?}/{cp:?} i={i} j={j} f={f}");
                    }
                }
            }
        }
    }

    #[test]
    fn class_elements_for_three_transpositions() {
        let rp = RackPreset::O2_3;
        let rack = rp.rack();
        let real = YDRealization::standard(rp, CocyclePreset::Minus).unwrap();
        let classes = enumerate_classes(&rack);
        // nondiagonal classes: the one through ((1 2),(1 3)) maps to the
        // 3-cycle (1 3 2), the one through ((1 2),(2 3)) to (1 2 3)
        let e1 = real.class_element(&classes[1]).unwrap();
        let e2 = real.class_element(&classes[2]).unwrap();
        assert_eq!(real.group.elem(e1).to_string(), "(1 3 2)");
        assert_eq!(real.group.elem(e2).to_string(), "(1 2 3)");
        // diagonal classes give the identity (transpositions square to e)
        let e0 = real.class_element(&classes[0]).unwrap();
        assert_eq!(real.group.elem(e0).to_string(), "e");
    }

    #[test]
    fn diagonal_class_elements_for_four_cycles() {
        let rp = RackPreset::O4_4;
        let rack = rp.rack();
        let real = YDRealization::standard(rp, CocyclePreset::Minus).unwrap();
        let classes = enumerate_classes(&rack);
        // the diagonal class of a 4-cycle sits over its square, a double
        // transposition
        let diag = classes.iter().position(|c| c.is_diagonal()).unwrap();
        let e = real.class_element(&classes[diag]).unwrap();
        assert_eq!(real.group.elem(e).order(), 2);
        let _ = rack;
    }

    #[test]
    fn stabilizers_in_s3() {
        let real = YDRealization::standard(RackPreset::O2_3, CocyclePreset::Minus).unwrap();
        assert_eq!(real.stabilizer(&[0, 1, 2]).order(), 6);
        assert_eq!(real.stabilizer(&[0]).order(), 2);
        assert_eq!(real.stabilizer(&[0, 1]).order(), 2);
        assert_eq!(real.stabilizer(&[]).order(), 6);
    }

    #[test]
    fn class_action_permutes_classes() {
        let rp = RackPreset::O2_4;
        let rack = rp.rack();
        let real = YDRealization::standard(rp, CocyclePreset::Minus).unwrap();
        let classes = enumerate_classes(&rack);
        for f in 0..real.group.size() {
            let mut image: Vec<usize> = (0..classes.len())
                .map(|c| real.class_action(&classes, f, c))
                .collect();
            image.sort();
            image.dedup();
            assert_eq!(image.len(), classes.len());
        }
        // acting by g_k agrees with the rack-level transport
        for k in 0..rack.size() {
            for c in 0..classes.len() {
                assert_eq!(
                    real.class_action(&classes, real.g[k], c),
                    crate::rack::conjugate_class(&rack, &classes, k, c)
                );
            }
        }
    }
}
