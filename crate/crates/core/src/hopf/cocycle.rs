//! Extending a group 2-cocycle to a Hopf 2-cocycle on a smash-type Hopf
//! algebra, and mechanical verification of the cocycle identity
//! `ς(x₍₁₎,y₍₁₎) ς(x₍₂₎y₍₂₎, z) = ς(y₍₁₎,z₍₁₎) ς(x, y₍₂₎z₍₂₎)`
//! over basis triples.

use std::collections::{HashMap, HashSet};

use num_rational::BigRational;
use num_traits::Zero;

use serde_json::{json, Value};

use crate::algebra::SmashAlgebra;
use crate::grp::GroupCocycle2;
use crate::hopf::tensor::{coproduct, BasisTerm, TensorElement};
use crate::ncpoly::ParamScalar;
use crate::{Error, Result};

/// A linear form on pairs of basis elements, stored sparsely by basis
/// index. The extension of a group cocycle is supported on pairs of
/// group-likes, but arbitrary entries can be set (e.g. by mutation tests).
#[derive(Clone, Debug)]
pub struct HopfCocycleTable {
    /// The ambient algebra's basis, fixing the index scheme.
    pub basis: Vec<BasisTerm>,
    index: HashMap<BasisTerm, usize>,
    /// Nonzero values keyed by basis-index pairs.
    pub entries: HashMap<(usize, usize), BigRational>,
}

impl HopfCocycleTable {
    pub fn new(basis: Vec<BasisTerm>) -> Self {
        let index = basis.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        HopfCocycleTable { basis, index, entries: HashMap::new() }
    }

    pub fn index_of(&self, t: &BasisTerm) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    /// Value on a pair of basis terms (zero when absent).
    pub fn value(&self, a: &BasisTerm, b: &BasisTerm) -> BigRational {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&i), Some(&j)) => {
                self.entries.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
            }
            _ => BigRational::zero(),
        }
    }

    /// Sparse JSON form: `{"dim": n, "entries": {"i,j": "p/q"}}`.
    pub fn to_json(&self) -> Value {
        let mut keys: Vec<&(usize, usize)> = self.entries.keys().collect();
        keys.sort();
        let mut map = serde_json::Map::new();
        for k in keys {
            map.insert(format!("{},{}", k.0, k.1), json!(self.entries[k].to_string()));
        }
        json!({ "dim": self.basis.len(), "entries": Value::Object(map) })
    }

    pub fn from_json(v: &Value, basis: Vec<BasisTerm>) -> Result<HopfCocycleTable> {
        let dim = v["dim"].as_u64().ok_or_else(|| Error::Invalid("missing dim".into()))? as usize;
        if dim != basis.len() {
            return Err(Error::Invalid(format!(
                "table dim {dim} does not match basis size {}",
                basis.len()
            )));
        }
        let mut table = HopfCocycleTable::new(basis);
        let entries = v["entries"]
            .as_object()
            .ok_or_else(|| Error::Invalid("missing entries".into()))?;
        for (key, val) in entries {
            let (i, j) = key
                .split_once(',')
                .ok_or_else(|| Error::Invalid(format!("bad entry key {key}")))?;
            let i: usize = i.parse().map_err(|_| Error::Invalid(format!("bad index {i}")))?;
            let j: usize = j.parse().map_err(|_| Error::Invalid(format!("bad index {j}")))?;
            let s = val.as_str().ok_or_else(|| Error::Invalid("entry not a string".into()))?;
            let r: BigRational =
                s.parse().map_err(|_| Error::Invalid(format!("bad rational {s}")))?;
            table.set(i, j, r);
        }
        Ok(table)
    }
}

/// Zero-extension of a group 2-cocycle: the table equals σ on pairs of
/// group-likes and vanishes on every pair involving positive degree.
pub fn extend_group_cocycle(
    sigma: &GroupCocycle2,
    h: &SmashAlgebra,
) -> Result<HopfCocycleTable> {
    sigma.check_group_cocycle()?;
    if sigma.order() != h.ctx.group_order() {
        return Err(Error::Invalid(format!(
            "cocycle on {} elements, algebra group has {}",
            sigma.order(),
            h.ctx.group_order()
        )));
    }
    let basis = h.basis()?;
    let grouplikes: Vec<(usize, &crate::grp::Perm)> = basis
        .iter()
        .enumerate()
        .filter(|(_, t)| t.0.is_empty())
        .map(|(i, t)| (i, h.ctx.real.group.elem(h.ctx.f_elems[t.1])))
        .collect();
    let mut table = HopfCocycleTable::new(basis.clone());
    for &(i, pa) in &grouplikes {
        for &(j, pb) in &grouplikes {
            table.set(i, j, sigma.value(pa, pb)?.clone());
        }
    }
    Ok(table)
}

/// How to pick the triples to verify.
#[derive(Clone, Copy, Debug)]
pub enum TripleMode {
    Exhaustive,
    Sample { count: usize, seed: u64 },
}

/// Verification report for the Hopf-cocycle identity.
#[derive(Clone, Debug)]
pub struct HopfCocycleReport {
    pub mode: String,
    pub triples_checked: usize,
    /// Rendered `(x, y, z, lhs, rhs)` for the violated triples (at most 10).
    pub violations: Vec<String>,
    pub passed: bool,
}

/// The basis terms that can appear as first (respectively second)
/// arguments of nonzero table entries; used to skip coproduct terms that
/// cannot contribute.
fn supports(table: &HopfCocycleTable) -> (HashSet<BasisTerm>, HashSet<BasisTerm>) {
    let mut rows = HashSet::new();
    let mut cols = HashSet::new();
    for &(i, j) in table.entries.keys() {
        rows.insert(table.basis[i].clone());
        cols.insert(table.basis[j].clone());
    }
    (rows, cols)
}

/// Coproduct terms bucketed by first leg, keeping only first legs inside a
/// support set; each bucket sums the second legs into one element.
type GroupedLegs = Vec<(BasisTerm, crate::algebra::SmashElement)>;

fn group_legs(filter: &HashSet<BasisTerm>, d: &TensorElement) -> GroupedLegs {
    let mut m: std::collections::BTreeMap<BasisTerm, crate::algebra::SmashElement> =
        std::collections::BTreeMap::new();
    for ((l1, l2), c) in &d.terms {
        if !filter.contains(l1) {
            continue;
        }
        m.entry(l1.clone())
            .or_insert_with(crate::algebra::SmashElement::zero)
            .add_term(l2.0.clone(), l2.1, c);
    }
    m.into_iter().collect()
}

/// Evaluate `Σ ς(a₍₁₎,b₍₁₎) a₍₂₎b₍₂₎` for two basis terms, given their
/// grouped coproducts; the result lists reduced basis terms with
/// coefficients.  All raw products are merged first and reduced once —
/// normal forms are linear, and one sweep over the combined sum is far
/// cheaper than reducing every cross term on its own.
fn pair_element(
    h: &SmashAlgebra,
    table: &HopfCocycleTable,
    ga: &GroupedLegs,
    gb: &GroupedLegs,
) -> Vec<(BasisTerm, ParamScalar)> {
    let mut raw = crate::algebra::SmashElement::zero();
    for (a1, sa) in ga {
        for (b1, sb) in gb {
            let s = table.value(a1, b1);
            if s.is_zero() {
                continue;
            }
            for ((wa, fa), ca) in &sa.terms {
                for ((wb, fb), cb) in &sb.terms {
                    let (w, f, r) = h.ctx.term_mul(wa, *fa, wb, *fb);
                    raw.add_term(w, f, &ca.mul(cb).mul_ratio(&(r * s.clone())));
                }
            }
        }
    }
    let red = h.nf(&raw);
    red.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Check the cocycle identity on basis triples of `h`.
pub fn verify_hopf_cocycle(
    h: &SmashAlgebra,
    table: &HopfCocycleTable,
    mode: TripleMode,
) -> Result<HopfCocycleReport> {
    let basis = h.basis()?;
    if basis != table.basis {
        return Err(Error::Invalid("table basis does not match the algebra".into()));
    }
    let n = basis.len();
    let (rows, cols) = supports(table);

    // one contraction of the identity at a fixed triple
    let eval = |w_xy: &[(BasisTerm, ParamScalar)],
                v_yz: &[(BasisTerm, ParamScalar)],
                x: &BasisTerm,
                z: &BasisTerm|
     -> (ParamScalar, ParamScalar) {
        let mut lhs = ParamScalar::zero();
        for (t, c) in w_xy {
            let s = table.value(t, z);
            if !s.is_zero() {
                lhs.add_assign(&c.mul_ratio(&s));
            }
        }
        let mut rhs = ParamScalar::zero();
        for (t, c) in v_yz {
            let s = table.value(x, t);
            if !s.is_zero() {
                rhs.add_assign(&c.mul_ratio(&s));
            }
        }
        (lhs, rhs)
    };

    let mut violations = Vec::new();
    let mut checked = 0usize;
    match mode {
        TripleMode::Exhaustive => {
            let deltas: Vec<TensorElement> = basis
                .iter()
                .map(|t| coproduct(h, t))
                .collect::<Result<_>>()?;
            let row_legs: Vec<GroupedLegs> =
                deltas.iter().map(|d| group_legs(&rows, d)).collect();
            let col_legs: Vec<GroupedLegs> =
                deltas.iter().map(|d| group_legs(&cols, d)).collect();
            // precompute every pair element once; reused across the third leg
            let mut pair: Vec<Vec<Vec<(BasisTerm, ParamScalar)>>> = Vec::with_capacity(n);
            for i in 0..n {
                let mut row = Vec::with_capacity(n);
                for j in 0..n {
                    row.push(pair_element(h, table, &row_legs[i], &col_legs[j]));
                }
                pair.push(row);
            }
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let (lhs, rhs) =
                            eval(&pair[x][y], &pair[y][z], &basis[x], &basis[z]);
                        checked += 1;
                        if lhs != rhs && violations.len() < 10 {
                            violations.push(format!(
                                "triple ({x},{y},{z}): {lhs} ≠ {rhs}"
                            ));
                        }
                    }
                }
            }
        }
        TripleMode::Sample { count, seed } => {
            let mut state = seed | 1;
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state as usize
            };
            let mut row_legs: HashMap<usize, GroupedLegs> = HashMap::new();
            let mut col_legs: HashMap<usize, GroupedLegs> = HashMap::new();
            let mut memo: HashMap<(usize, usize), Vec<(BasisTerm, ParamScalar)>> =
                HashMap::new();
            for _ in 0..count {
                let (x, y, z) = (next() % n, next() % n, next() % n);
                for i in [x, y, z] {
                    if !row_legs.contains_key(&i) {
                        let d = coproduct(h, &basis[i])?;
                        row_legs.insert(i, group_legs(&rows, &d));
                        col_legs.insert(i, group_legs(&cols, &d));
                    }
                }
                if !memo.contains_key(&(x, y)) {
                    let w = pair_element(h, table, &row_legs[&x], &col_legs[&y]);
                    memo.insert((x, y), w);
                }
                if !memo.contains_key(&(y, z)) {
                    let v = pair_element(h, table, &row_legs[&y], &col_legs[&z]);
                    memo.insert((y, z), v);
                }
                let (lhs, rhs) = eval(&memo[&(x, y)], &memo[&(y, z)], &basis[x], &basis[z]);
                checked += 1;
                if lhs != rhs && violations.len() < 10 {
                    violations.push(format!("triple ({x},{y},{z}): {lhs} ≠ {rhs}"));
                }
            }
        }
    }
    Ok(HopfCocycleReport {
        mode: match mode {
            TripleMode::Exhaustive => "exhaustive".into(),
            TripleMode::Sample { count, seed } => format!("sample({count}, seed {seed})"),
        },
        triples_checked: checked,
        passed: violations.is_empty(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::Perm;
    use crate::hopf::datum::{lifted_algebra, ql_datum};
    use num_traits::One;

    fn h72() -> SmashAlgebra {
        let d = ql_datum("q3m", &[ParamScalar::zero(), ParamScalar::one()]).unwrap();
        lifted_algebra(&d, 10).unwrap()
    }

    fn sign_cocycle(h: &SmashAlgebra) -> GroupCocycle2 {
        // ±1-valued cocycle pulled back from the parity quotient:
        // σ(a,b) = -1 when both entries are odd permutations
        let elems: Vec<Perm> = h
            .ctx
            .f_elems
            .iter()
            .map(|&g| h.ctx.real.group.elem(g).clone())
            .collect();
        let table: Vec<Vec<BigRational>> = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| {
                        if a.sign() < 0 && b.sign() < 0 {
                            -BigRational::one()
                        } else {
                            BigRational::one()
                        }
                    })
                    .collect()
            })
            .collect();
        GroupCocycle2 { elems, table }
    }

    #[test]
    fn trivial_extension_passes_exhaustively() {
        let h = h72();
        let sigma = GroupCocycle2::trivial(
            h.ctx.f_elems.iter().map(|&g| h.ctx.real.group.elem(g).clone()).collect(),
        );
        let table = extend_group_cocycle(&sigma, &h).unwrap();
        let rep = verify_hopf_cocycle(&h, &table, TripleMode::Exhaustive).unwrap();
        assert!(rep.passed, "{:?}", rep.violations);
        assert_eq!(rep.triples_checked, 72 * 72 * 72);
    }

    #[test]
    fn parity_pullback_extension_passes_exhaustively() {
        let h = h72();
        let sigma = sign_cocycle(&h);
        sigma.check_group_cocycle().unwrap();
        let table = extend_group_cocycle(&sigma, &h).unwrap();
        let rep = verify_hopf_cocycle(&h, &table, TripleMode::Exhaustive).unwrap();
        assert!(rep.passed, "{:?}", rep.violations);
    }

    #[test]
    fn corrupting_one_entry_is_detected() {
        let h = h72();
        let sigma = GroupCocycle2::trivial(
            h.ctx.f_elems.iter().map(|&g| h.ctx.real.group.elem(g).clone()).collect(),
        );
        let mut table = extend_group_cocycle(&sigma, &h).unwrap();
        // find two group-like basis terms away from the identity
        let gls: Vec<usize> = table
            .basis
            .iter()
            .enumerate()
            .filter(|(_, t)| t.0.is_empty() && t.1 != h.ctx.identity_pos())
            .map(|(i, _)| i)
            .collect();
        table.set(gls[0], gls[1], BigRational::from_integer(2.into()));
        let rep = verify_hopf_cocycle(&h, &table, TripleMode::Exhaustive).unwrap();
        assert!(!rep.passed);
    }

    #[test]
    fn sampled_mode_agrees_on_the_s4_algebra() {
        let d = ql_datum("q4m", &[ParamScalar::zero(), ParamScalar::one()]).unwrap();
        let h = lifted_algebra(&d, 14).unwrap();
        let sigma = GroupCocycle2::clifford(4);
        let table = extend_group_cocycle(&sigma, &h).unwrap();
        let rep = verify_hopf_cocycle(
            &h,
            &table,
            TripleMode::Sample { count: 60, seed: 7 },
        )
        .unwrap();
        assert!(rep.passed, "{:?}", rep.violations);
        assert_eq!(rep.triples_checked, 60);
    }

    #[test]
    fn table_json_round_trip() {
        let h = h72();
        let sigma = sign_cocycle(&h);
        let table = extend_group_cocycle(&sigma, &h).unwrap();
        let v = table.to_json();
        let back = HopfCocycleTable::from_json(&v, table.basis.clone()).unwrap();
        assert_eq!(back.entries, table.entries);
    }
}
