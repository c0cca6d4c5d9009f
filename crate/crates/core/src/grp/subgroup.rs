//! Subgroups of a small symmetric group: enumeration, conjugacy classes,
//! and structural names.

use super::perm::SymGroup;
use crate::{Error, Result};

/// A subgroup, stored as the sorted list of element indices into its
/// ambient [`SymGroup`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    pub elems: Vec<usize>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup { elems: vec![0] }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.elems.binary_search(&idx).is_ok()
    }

    /// Closure of a set of generators.
    pub fn generated_by(group: &SymGroup, gens: &[usize]) -> Subgroup {
        let mut in_sub = vec![false; group.size()];
        in_sub[group.identity()] = true;
        let mut frontier: Vec<usize> = vec![group.identity()];
        for &g in gens {
            if !in_sub[g] {
                in_sub[g] = true;
                frontier.push(g);
            }
        }
        let mut members = frontier.clone();
        while let Some(x) = frontier.pop() {
            for &g in gens {
                for y in [group.mul(x, g), group.mul(g, x)] {
                    if !in_sub[y] {
                        in_sub[y] = true;
                        frontier.push(y);
                        members.push(y);
                    }
                }
            }
        }
        members.sort_unstable();
        Subgroup { elems: members }
    }

    /// Verify closure under product and inverse.
    pub fn check(&self, group: &SymGroup) -> Result<()> {
        if !self.contains(group.identity()) {
            return Err(Error::Axiom("subgroup misses the identity".into()));
        }
        for &a in &self.elems {
            if !self.contains(group.inv(a)) {
                return Err(Error::Axiom(format!(
                    "subgroup not closed under inverse at {}",
                    group.elem(a)
                )));
            }
            for &b in &self.elems {
                if !self.contains(group.mul(a, b)) {
                    return Err(Error::Axiom(format!(
                        "subgroup not closed under product at {} * {}",
                        group.elem(a),
                        group.elem(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `h H h^{-1}`.
    pub fn conjugate(&self, group: &SymGroup, h: usize) -> Subgroup {
        let mut elems: Vec<usize> = self.elems.iter().map(|&g| group.conj(g, h)).collect();
        elems.sort_unstable();
        Subgroup { elems }
    }

    /// A small generating set, greedily: repeatedly adjoin the element
    /// extending the generated subgroup the most.
    pub fn generators(&self, group: &SymGroup) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut current = Subgroup::trivial();
        while current != *self {
            let mut best: Option<(usize, usize)> = None; // (gain, candidate)
            for &e in &self.elems {
                if current.contains(e) {
                    continue;
                }
                let mut try_gens = gens.clone();
                try_gens.push(e);
                let grown = Subgroup::generated_by(group, &try_gens);
                let gain = grown.order();
                if best.map(|(g, _)| gain > g).unwrap_or(true) {
                    best = Some((gain, e));
                }
            }
            let (_, e) = best.expect("subgroup closure must terminate");
            gens.push(e);
            current = Subgroup::generated_by(group, &gens);
        }
        gens
    }

    /// Structural name, enough to distinguish subgroups of `S_n`, `n <= 4`:
    /// `1, Z2, Z3, Z4, Z2xZ2, S3, D4, A4, S4`.
    pub fn structure_name(&self, group: &SymGroup) -> String {
        let order = self.order();
        let max_elem_order = self
            .elems
            .iter()
            .map(|&i| group.elem(i).order())
            .max()
            .unwrap_or(1);
        match (order, max_elem_order) {
            (1, _) => "1".into(),
            (2, _) => "Z2".into(),
            (3, _) => "Z3".into(),
            (4, 4) => "Z4".into(),
            (4, 2) => "Z2xZ2".into(),
            (6, 2) | (6, 3) => "S3".into(),
            (6, 6) => "Z6".into(),
            (8, _) => "D4".into(),
            (12, _) => "A4".into(),
            (24, _) => "S4".into(),
            _ => format!("order {order}"),
        }
    }
}

/// All subgroups, by closure saturation: start from all cyclic subgroups
/// and repeatedly adjoin single elements. Result is sorted by
/// (order, element list).
pub fn subgroups(group: &SymGroup) -> Vec<Subgroup> {
    use std::collections::BTreeSet;
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    found.insert(Subgroup::trivial());
    let mut frontier: Vec<Subgroup> = vec![Subgroup::trivial()];
    while let Some(h) = frontier.pop() {
        for g in 0..group.size() {
            if h.contains(g) {
                continue;
            }
            let mut gens = h.elems.clone();
            gens.push(g);
            let bigger = Subgroup::generated_by(group, &gens);
            if found.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by_key(|s| (s.order(), s.elems.clone()));
    out
}

/// Partition `subs` into conjugacy classes; each class lists indices into
/// `subs`, the class representative being the first (least) index.
pub fn subgroup_conjugacy_classes(group: &SymGroup, subs: &[Subgroup]) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; subs.len()];
    let mut classes = Vec::new();
    for i in 0..subs.len() {
        if assigned[i] {
            continue;
        }
        let mut class = Vec::new();
        for h in 0..group.size() {
            let conj = subs[i].conjugate(group, h);
            let j = subs
                .iter()
                .position(|s| *s == conj)
                .expect("conjugate of a subgroup is a subgroup");
            if !assigned[j] {
                assigned[j] = true;
                class.push(j);
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::Perm;

    /// Subgroup census, frozen from an independent computation:
    /// S3 has 6 subgroups in 4 conjugacy classes; S4 has 30 subgroups in
    /// 11 conjugacy classes with representative orders
    /// 1,2,2,3,4,4,4,6,8,12,24.
    #[test]
    fn census() {
        let s3 = SymGroup::new(3);
        let subs3 = subgroups(&s3);
        assert_eq!(subs3.len(), 6);
        let classes3 = subgroup_conjugacy_classes(&s3, &subs3);
        assert_eq!(classes3.len(), 4);

        let s4 = SymGroup::new(4);
        let subs4 = subgroups(&s4);
        assert_eq!(subs4.len(), 30);
        for sub in &subs4 {
            sub.check(&s4).unwrap();
        }
        let classes4 = subgroup_conjugacy_classes(&s4, &subs4);
        assert_eq!(classes4.len(), 11);
        let mut rep_orders: Vec<usize> = classes4
            .iter()
            .map(|c| subs4[c[0]].order())
            .collect();
        rep_orders.sort_unstable();
        assert_eq!(rep_orders, vec![1, 2, 2, 3, 4, 4, 4, 6, 8, 12, 24]);
    }

    #[test]
    fn structure_names() {
        let s4 = SymGroup::new(4);
        let subs = subgroups(&s4);
        let mut names: Vec<String> = subs
            .iter()
            .map(|s| s.structure_name(&s4))
            .collect();
        names.sort();
        names.dedup();
        assert_eq!(
            names,
            vec!["1", "A4", "D4", "S3", "S4", "Z2", "Z2xZ2", "Z3", "Z4"]
        );
    }

    #[test]
    fn generators_generate() {
        let s4 = SymGroup::new(4);
        for sub in subgroups(&s4) {
            let gens = sub.generators(&s4);
            assert_eq!(Subgroup::generated_by(&s4, &gens), sub);
            assert!(gens.len() <= 2, "subgroups of S4 are 2-generated");
        }
    }

    #[test]
    fn klein_subgroup_is_normal() {
        let s4 = SymGroup::new(4);
        let a = s4.idx(&Perm::parse("(1 2)(3 4)", 4).unwrap());
        let b = s4.idx(&Perm::parse("(1 3)(2 4)", 4).unwrap());
        let v = Subgroup::generated_by(&s4, &[a, b]);
        assert_eq!(v.order(), 4);
        assert_eq!(v.structure_name(&s4), "Z2xZ2");
        for h in 0..24 {
            assert_eq!(v.conjugate(&s4, h), v);
        }
    }
}
