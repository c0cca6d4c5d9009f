//! Group 2-cocycles with values in `Q^x`.
//!
//! A normalized 2-cocycle on a finite group `F` is `psi: F x F -> k^x` with
//! `psi(e, x) = psi(x, e) = 1` and
//! `psi(a, b) psi(ab, c) = psi(b, c) psi(a, bc)`.
//!
//! For symmetric groups the only interesting multiplier is `+-1`-valued: the
//! nontrivial class comes from the spin double cover and is constructed here
//! through the Clifford algebra `Cl(n)`: lift each adjacent transposition
//! `s_i` to `u_i = e_i - e_{i+1}`, extend along reduced words (the braid
//! relations hold exactly, so the lift is word-independent), and read off
//! `psi(x, y)` from `T(x) T(y) = psi(x,y) 2^{(l(x)+l(y)-l(xy))/2} T(xy)`.
//!
//! Coboundary testing for `+-1`-valued cocycles is a linear solve over
//! `F_2`: `psi = d(mu)` iff `log psi(a,b) = m(a) + m(b) + m(ab)` has a
//! solution.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::perm::{Perm, SymGroup};
use super::subgroup::Subgroup;
use crate::rack::{ratio_from_json, ratio_to_json};
use crate::{Error, Result};

/// A normalized 2-cocycle on an explicit element list (a subgroup of some
/// `S_n`). Self-contained: it carries its elements, so it can be
/// transported and serialized without an ambient group object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCocycle2 {
    /// The subgroup's elements, sorted (image-vector order); `elems[0]`
    /// must be the identity.
    pub elems: Vec<Perm>,
    /// `table[i][j] = psi(elems[i], elems[j])`.
    pub table: Vec<Vec<BigRational>>,
}

impl GroupCocycle2 {
    /// The trivial cocycle on a set of elements (sorted internally).
    pub fn trivial(mut elems: Vec<Perm>) -> Self {
        elems.sort();
        let k = elems.len();
        GroupCocycle2 {
            elems,
            table: vec![vec![BigRational::one(); k]; k],
        }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn position(&self, p: &Perm) -> Option<usize> {
        self.elems.iter().position(|e| e == p)
    }

    /// `psi(x, y)`; both arguments must lie in the support subgroup.
    pub fn value(&self, x: &Perm, y: &Perm) -> Result<&BigRational> {
        let i = self
            .position(x)
            .ok_or_else(|| Error::Invalid(format!("{x} outside the cocycle's subgroup")))?;
        let j = self
            .position(y)
            .ok_or_else(|| Error::Invalid(format!("{y} outside the cocycle's subgroup")))?;
        Ok(&self.table[i][j])
    }

    /// Verify: elements form a subgroup, values are nonzero, the cocycle is
    /// normalized, and the 2-cocycle identity holds on all triples.
    pub fn check_group_cocycle(&self) -> Result<()> {
        let k = self.elems.len();
        if self.table.len() != k || self.table.iter().any(|r| r.len() != k) {
            return Err(Error::Invalid("cocycle table is not square".into()));
        }
        if k == 0 || !self.elems[0].is_identity() {
            return Err(Error::Invalid("elems[0] must be the identity".into()));
        }
        let pos: HashMap<&Perm, usize> =
            self.elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut mul = vec![vec![0usize; k]; k];
        for i in 0..k {
            for j in 0..k {
                let prod = self.elems[i].compose(&self.elems[j]);
                match pos.get(&prod) {
                    Some(&p) => mul[i][j] = p,
                    None => {
                        return Err(Error::Axiom(format!(
                            "not a subgroup: {} * {} = {} missing",
                            self.elems[i], self.elems[j], prod
                        )))
                    }
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                if self.table[i][j].is_zero() {
                    return Err(Error::Axiom("cocycle takes the value 0".into()));
                }
            }
            if self.table[0][i] != BigRational::one()
                || self.table[i][0] != BigRational::one()
            {
                return Err(Error::Axiom("cocycle is not normalized".into()));
            }
        }
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    let lhs = &self.table[a][b] * &self.table[mul[a][b]][c];
                    let rhs = &self.table[b][c] * &self.table[a][mul[b][c]];
                    if lhs != rhs {
                        return Err(Error::Axiom(format!(
                            "cocycle identity fails at ({}, {}, {})",
                            self.elems[a], self.elems[b], self.elems[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// For a `+-1`-valued cocycle: a function `mu: F -> {+-1}` with
    /// `psi(a,b) = mu(a) mu(b) / mu(ab)` if one exists (i.e. the class is
    /// trivial). Values outside `+-1` are rejected.
    pub fn coboundary_witness(&self) -> Result<Option<Vec<BigRational>>> {
        let k = self.elems.len();
        let one = BigRational::one();
        let neg = -BigRational::one();
        let mut log = vec![vec![0u8; k]; k];
        for i in 0..k {
            for j in 0..k {
                let v = &self.table[i][j];
                log[i][j] = if *v == one {
                    0
                } else if *v == neg {
                    1
                } else {
                    return Err(Error::Invalid(
                        "coboundary testing is implemented for +-1-valued cocycles".into(),
                    ));
                };
            }
        }
        let pos: HashMap<&Perm, usize> =
            self.elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        // unknowns m[0..k] over F2; equations m[a] + m[b] + m[ab] = log[a][b]
        let mut rows: Vec<(Vec<u8>, u8)> = Vec::new();
        for a in 0..k {
            for b in 0..k {
                let ab = pos[&self.elems[a].compose(&self.elems[b])];
                let mut coeffs = vec![0u8; k];
                coeffs[a] ^= 1;
                coeffs[b] ^= 1;
                coeffs[ab] ^= 1;
                rows.push((coeffs, log[a][b]));
            }
        }
        // Gaussian elimination over F2
        let mut pivots: Vec<(usize, Vec<u8>, u8)> = Vec::new(); // (col, row, rhs)
        'rows: for (mut row, mut rhs) in rows {
            for (col, prow, prhs) in &pivots {
                if row[*col] == 1 {
                    for (x, y) in row.iter_mut().zip(prow.iter()) {
                        *x ^= y;
                    }
                    rhs ^= prhs;
                }
            }
            match row.iter().position(|&x| x == 1) {
                Some(col) => pivots.push((col, row, rhs)),
                None => {
                    if rhs == 1 {
                        return Ok(None); // inconsistent: nontrivial class
                    }
                    continue 'rows;
                }
            }
        }
        // back-substitute a particular solution (free vars = 0)
        let mut m = vec![0u8; k];
        for (col, row, rhs) in pivots.iter().rev() {
            let mut v = *rhs;
            for c in col + 1..k {
                if row[c] == 1 {
                    v ^= m[c];
                }
            }
            m[*col] = v;
        }
        let mu: Vec<BigRational> = m
            .iter()
            .map(|&b| if b == 0 { one.clone() } else { neg.clone() })
            .collect();
        Ok(Some(mu))
    }

    pub fn is_trivial_class(&self) -> Result<bool> {
        Ok(self.coboundary_witness()?.is_some())
    }

    /// Transport along conjugation: the cocycle `psi^h` on `h F h^{-1}`
    /// defined by `psi^h(x, y) = psi(h^{-1} x h, h^{-1} y h)`.
    pub fn conjugate_cocycle(&self, h: &Perm) -> GroupCocycle2 {
        let hinv = h.inv();
        let mut new_elems: Vec<Perm> =
            self.elems.iter().map(|p| p.conjugated_by(h)).collect();
        new_elems.sort();
        let k = new_elems.len();
        let mut table = vec![vec![BigRational::one(); k]; k];
        for (i, x) in new_elems.iter().enumerate() {
            for (j, y) in new_elems.iter().enumerate() {
                let xi = x.conjugated_by(&hinv);
                let yj = y.conjugated_by(&hinv);
                let a = self.position(&xi).expect("conjugate stays in subgroup");
                let b = self.position(&yj).expect("conjugate stays in subgroup");
                table[i][j] = self.table[a][b].clone();
            }
        }
        GroupCocycle2 { elems: new_elems, table }
    }

    /// Restriction to a subgroup of the support.
    pub fn restrict(&self, sub: &[Perm]) -> Result<GroupCocycle2> {
        let mut elems = sub.to_vec();
        elems.sort();
        let k = elems.len();
        let mut table = vec![vec![BigRational::one(); k]; k];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                table[i][j] = self.value(x, y)?.clone();
            }
        }
        Ok(GroupCocycle2 { elems, table })
    }

    /// Multiply two cocycles on the same subgroup pointwise.
    pub fn product(&self, other: &GroupCocycle2) -> Result<GroupCocycle2> {
        if self.elems != other.elems {
            return Err(Error::Invalid("cocycles live on different subgroups".into()));
        }
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| a * b).collect())
            .collect();
        Ok(GroupCocycle2 { elems: self.elems.clone(), table })
    }

    /// The spin-cover cocycle on all of `S_n`, `+-1`-valued, nontrivial for
    /// `n >= 4`.
    pub fn clifford(n: usize) -> GroupCocycle2 {
        let group = SymGroup::new(n);
        let lifts: Vec<CliffordElt> = group
            .elems()
            .iter()
            .map(|p| CliffordElt::lift(p))
            .collect();
        let k = group.size();
        let mut table = vec![vec![BigRational::one(); k]; k];
        for i in 0..k {
            for j in 0..k {
                let prod = lifts[i].mul(&lifts[j]);
                let ij = group.mul(i, j);
                let lx = group.elem(i).length() as i64;
                let ly = group.elem(j).length() as i64;
                let lxy = group.elem(ij).length() as i64;
                debug_assert_eq!((lx + ly - lxy) % 2, 0);
                let halfdiff = (lx + ly - lxy) / 2;
                // prod = psi * 2^halfdiff * lift(xy)
                let ratio = prod.proportionality(&lifts[ij]);
                let scale = BigRational::from_integer(BigInt::from(2)).pow(halfdiff as i32);
                let psi = ratio / scale;
                assert!(
                    psi == BigRational::one() || psi == -BigRational::one(),
                    "spin lift must give +-1"
                );
                table[i][j] = psi;
            }
        }
        GroupCocycle2 {
            elems: group.elems().to_vec(),
            table,
        }
    }

    /// The trivial or Clifford cocycle restricted to a subgroup.
    pub fn on_subgroup(
        group: &SymGroup,
        sub: &Subgroup,
        nontrivial: bool,
    ) -> Result<GroupCocycle2> {
        let elems: Vec<Perm> = sub.elems.iter().map(|&i| group.elem(i).clone()).collect();
        if nontrivial {
            GroupCocycle2::clifford(group.degree()).restrict(&elems)
        } else {
            Ok(GroupCocycle2::trivial(elems))
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "elements": self.elems.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "table": self
                .table
                .iter()
                .map(|row| row.iter().map(ratio_to_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value, degree: usize) -> Result<GroupCocycle2> {
        let elems = v
            .get("elements")
            .and_then(|e| e.as_array())
            .ok_or_else(|| Error::Parse("cocycle JSON needs `elements`".into()))?
            .iter()
            .map(|e| {
                e.as_str()
                    .ok_or_else(|| Error::Parse("cocycle elements must be strings".into()))
                    .and_then(|s| Perm::parse(s, degree))
            })
            .collect::<Result<Vec<_>>>()?;
        let table = v
            .get("table")
            .and_then(|e| e.as_array())
            .ok_or_else(|| Error::Parse("cocycle JSON needs `table`".into()))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("cocycle rows must be arrays".into()))?
                    .iter()
                    .map(ratio_from_json)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let psi = GroupCocycle2 { elems, table };
        psi.check_group_cocycle()?;
        Ok(psi)
    }
}

/// An element of the Clifford algebra `Cl(n)` with orthonormal generators
/// `e_1, ..., e_n` (`e_i^2 = 1`), supported on subset-basis monomials.
struct CliffordElt {
    terms: HashMap<u16, BigRational>,
}

impl CliffordElt {
    fn one() -> Self {
        let mut terms = HashMap::new();
        terms.insert(0u16, BigRational::one());
        CliffordElt { terms }
    }

    /// `u_i = e_i - e_{i+1}` (0-based `i`).
    fn u(i: usize) -> Self {
        let mut terms = HashMap::new();
        terms.insert(1u16 << i, BigRational::one());
        terms.insert(1u16 << (i + 1), -BigRational::one());
        CliffordElt { terms }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut terms: HashMap<u16, BigRational> = HashMap::new();
        for (&ma, ca) in &self.terms {
            for (&mb, cb) in &other.terms {
                // sign: move each e_t of mb leftwards past the e_s of ma
                // with s > t; coincident generators square to +1
                let mut swaps = 0u32;
                for t in 0..16 {
                    if mb & (1 << t) != 0 {
                        swaps += (ma >> (t + 1)).count_ones();
                    }
                }
                let sign = if swaps % 2 == 0 {
                    BigRational::one()
                } else {
                    -BigRational::one()
                };
                let coeff = ca * cb * sign;
                let mask = ma ^ mb;
                let entry = terms.entry(mask).or_insert_with(BigRational::zero);
                *entry += coeff;
                if entry.is_zero() {
                    terms.remove(&mask);
                }
            }
        }
        CliffordElt { terms }
    }

    /// Lift a permutation along a reduced word: repeatedly strip the first
    /// descent. If `p = s_{i_1} ... s_{i_k}` (right-to-left composition)
    /// then the lift is `u_{i_1} ... u_{i_k}`.
    fn lift(p: &Perm) -> CliffordElt {
        let mut word = Vec::new();
        let mut cur = p.clone();
        while !cur.is_identity() {
            let n = cur.degree();
            let i = (0..n - 1)
                .find(|&i| cur.apply(i) > cur.apply(i + 1))
                .expect("non-identity permutation has a descent");
            // stripping the descent: cur <- cur * s_i, prepended factor s_i
            cur = cur.compose(&Perm::transposition(n, i, i + 1));
            word.push(i);
        }
        // p = (s_{i_k} ... s_{i_1})^{-1} reversed: p = s_{i_k} ... s_{i_1}
        let mut t = CliffordElt::one();
        for &i in word.iter().rev() {
            t = t.mul(&CliffordElt::u(i));
        }
        t
    }

    /// The scalar `c` with `self = c * other`, assuming proportionality
    /// (asserted).
    fn proportionality(&self, other: &Self) -> BigRational {
        let (&mask, coeff) = other
            .terms
            .iter()
            .next()
            .expect("lift of a permutation is nonzero");
        let mine = self
            .terms
            .get(&mask)
            .expect("proportional elements share support");
        let ratio = mine / coeff;
        for (m, c) in &other.terms {
            assert_eq!(
                self.terms.get(m).cloned().unwrap_or_else(BigRational::zero),
                c * &ratio,
                "spin lifts must be proportional"
            );
        }
        assert_eq!(self.terms.len(), other.terms.len());
        ratio
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_cocycle_checks() {
        let s3 = SymGroup::new(3);
        let psi = GroupCocycle2::trivial(s3.elems().to_vec());
        psi.check_group_cocycle().unwrap();
        assert!(psi.is_trivial_class().unwrap());
    }

    #[test]
    fn clifford_is_a_nontrivial_cocycle_on_s4() {
        let psi = GroupCocycle2::clifford(4);
        psi.check_group_cocycle().unwrap();
        // frozen witness values: psi((1 2),(3 4)) = -1, psi((3 4),(1 2)) = 1
        let t12 = Perm::parse("(1 2)", 4).unwrap();
        let t34 = Perm::parse("(3 4)", 4).unwrap();
        assert_eq!(psi.value(&t12, &t34).unwrap(), &-BigRational::one());
        assert_eq!(psi.value(&t34, &t12).unwrap(), &BigRational::one());
        assert!(!psi.is_trivial_class().unwrap());
    }

    #[test]
    fn clifford_restricts_nontrivially_to_klein() {
        let psi = GroupCocycle2::clifford(4);
        let v: Vec<Perm> = ["e", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"]
            .iter()
            .map(|s| Perm::parse(s, 4).unwrap())
            .collect();
        let res = psi.restrict(&v).unwrap();
        res.check_group_cocycle().unwrap();
        assert!(!res.is_trivial_class().unwrap());
    }

    /// S3 has no nontrivial multiplier: the Clifford cocycle restricted to
    /// any copy of S3 inside S4 must be a coboundary.
    #[test]
    fn s3_multiplier_is_trivial() {
        let psi = GroupCocycle2::clifford(4);
        let s3_copy: Vec<Perm> = ["e", "(1 2)", "(1 3)", "(2 3)", "(1 2 3)", "(1 3 2)"]
            .iter()
            .map(|s| Perm::parse(s, 4).unwrap())
            .collect();
        let res = psi.restrict(&s3_copy).unwrap();
        res.check_group_cocycle().unwrap();
        let mu = res.coboundary_witness().unwrap();
        assert!(mu.is_some());
        // verify the witness: psi(a,b) = mu(a) mu(b) / mu(ab)
        let mu = mu.unwrap();
        for (i, a) in res.elems.iter().enumerate() {
            for (j, b) in res.elems.iter().enumerate() {
                let ab = a.compose(b);
                let kk = res.position(&ab).unwrap();
                assert_eq!(res.table[i][j], &mu[i] * &mu[j] / &mu[kk]);
            }
        }
    }

    #[test]
    fn conjugation_transport() {
        let psi = GroupCocycle2::clifford(4);
        let z2: Vec<Perm> = ["e", "(1 2)"]
            .iter()
            .map(|s| Perm::parse(s, 4).unwrap())
            .collect();
        let res = psi.restrict(&z2).unwrap();
        let h = Perm::parse("(2 3)", 4).unwrap();
        let moved = res.conjugate_cocycle(&h);
        moved.check_group_cocycle().unwrap();
        assert!(moved.position(&Perm::parse("(1 3)", 4).unwrap()).is_some());
    }

    #[test]
    fn json_roundtrip() {
        let psi = GroupCocycle2::clifford(3);
        let v = psi.to_json();
        let back = GroupCocycle2::from_json(&v, 3).unwrap();
        assert_eq!(psi, back);
    }
}
