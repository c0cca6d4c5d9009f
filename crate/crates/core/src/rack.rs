//! Finite racks, rack 2-cocycles, and the quadratic data they induce.
//!
//! A rack is a set `X` with a binary operation `|>` such that every left
//! translation `i |> -` is a bijection and `i |> (j |> k) = (i |> j) |> (i |> k)`.
//! The racks used here are conjugacy classes of symmetric groups acting on
//! themselves by conjugation:
//!
//! * `O2_3` — transpositions of `S3` (3 elements),
//! * `O2_4` — transpositions of `S4` (6 elements),
//! * `O4_4` — 4-cycles of `S4` (6 elements),
//!
//! each carrying one of two 2-cocycles: the constant `-1`, or (for
//! transpositions) `chi` with `q_{ji} = chi_i(j)`, where `chi_{(a,b)}(s)` is
//! `+1` iff `s(a) < s(b)`.
//!
//! The quadratic relations of the associated Nichols algebra are indexed by
//! the equivalence classes of `X x X` under the relation generated by
//! `(i,j) ~ (i |> j, i)` (an orbit of a bijection, hence a cycle). Each
//! class `C` yields the quadratic polynomial `phi_C`; relative to a subset
//! `Y` it yields `vartheta_{C,Y}`, which is `phi_C` when `C` lives in
//! `Y x Y`, a cubic binomial when `C` meets `Y x Y` in exactly one pair,
//! and `0` otherwise.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::grp::Perm;
use crate::ncpoly::{NCPoly, ParamScalar, Word};
use crate::{Error, Result};

/// A finite rack with named elements in a fixed canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rack {
    /// Element names, canonical order (for the presets: lexicographic on
    /// the cycle string, e.g. `(1 2) < (1 3) < (2 3)`).
    pub names: Vec<String>,
    /// `op[i][j]` is the index of `i |> j`.
    pub op: Vec<Vec<usize>>,
}

impl Rack {
    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn rank(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `i |> j`.
    pub fn tri(&self, i: usize, j: usize) -> usize {
        self.op[i][j]
    }

    /// Verify the rack axioms: left translations are bijections and
    /// self-distributivity holds. Returns the first violation found.
    pub fn check_rack(&self) -> Result<()> {
        let n = self.size();
        if self.op.len() != n || self.op.iter().any(|row| row.len() != n) {
            return Err(Error::Invalid("operation table is not square".into()));
        }
        for (i, row) in self.op.iter().enumerate() {
            let mut seen = vec![false; n];
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::Invalid(format!(
                        "op[{i}][{j}] = {v} out of range"
                    )));
                }
                if seen[v] {
                    return Err(Error::Axiom(format!(
                        "left translation by {} is not injective",
                        self.names[i]
                    )));
                }
                seen[v] = true;
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.tri(i, self.tri(j, k));
                    let rhs = self.tri(self.tri(i, j), self.tri(i, k));
                    if lhs != rhs {
                        return Err(Error::Axiom(format!(
                            "self-distributivity fails at ({}, {}, {}): {} vs {}",
                            self.names[i],
                            self.names[j],
                            self.names[k],
                            self.names[lhs],
                            self.names[rhs]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether `(i |> j) |> i = j` for all pairs. Among the presets only
    /// the three-transposition rack satisfies it globally: it fails on
    /// commuting distinct pairs (disjoint transpositions) and on inverse
    /// pairs of 4-cycles. Transport identities that need it are applied
    /// per pair.
    pub fn is_crossed_involutive(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.tri(self.tri(i, j), i) == j))
    }
}

/// Build the conjugation rack on a list of permutations:
/// `p_i |> p_j = p_i p_j p_i^{-1}`. The list must be closed under
/// conjugation and duplicate-free.
pub fn conjugation_rack(perms: &[Perm]) -> Result<Rack> {
    let n = perms.len();
    for (i, p) in perms.iter().enumerate() {
        for q in perms.iter().skip(i + 1) {
            if p == q {
                return Err(Error::Invalid(format!("duplicate element {p}")));
            }
        }
    }
    let mut op = vec![vec![0usize; n]; n];
    for i in 0..n {
        let inv = perms[i].inv();
        for j in 0..n {
            let c = perms[i].compose(&perms[j]).compose(&inv);
            match perms.iter().position(|p| *p == c) {
                Some(k) => op[i][j] = k,
                None => {
                    return Err(Error::Invalid(format!(
                        "not closed under conjugation: {} |> {} = {} is missing",
                        perms[i], perms[j], c
                    )))
                }
            }
        }
    }
    let rack = Rack {
        names: perms.iter().map(|p| p.to_string()).collect(),
        op,
    };
    rack.check_rack()?;
    Ok(rack)
}

/// The three rack presets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RackPreset {
    /// Transpositions of `S3`.
    O2_3,
    /// Transpositions of `S4`.
    O2_4,
    /// 4-cycles of `S4`.
    O4_4,
}

impl RackPreset {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "o2_3" => Ok(RackPreset::O2_3),
            "o2_4" => Ok(RackPreset::O2_4),
            "o4_4" => Ok(RackPreset::O4_4),
            _ => Err(Error::Invalid(format!(
                "unknown rack preset `{s}` (expected o2_3, o2_4, o4_4)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            RackPreset::O2_3 => "o2_3",
            RackPreset::O2_4 => "o2_4",
            RackPreset::O4_4 => "o4_4",
        }
    }

    /// Degree of the ambient symmetric group.
    pub fn group_degree(&self) -> usize {
        match self {
            RackPreset::O2_3 => 3,
            _ => 4,
        }
    }

    /// The rack elements as permutations, in canonical order
    /// (lexicographic on the cycle string).
    pub fn permutations(&self) -> Vec<Perm> {
        match self {
            RackPreset::O2_3 => vec![
                Perm::transposition(3, 0, 1),
                Perm::transposition(3, 0, 2),
                Perm::transposition(3, 1, 2),
            ],
            RackPreset::O2_4 => vec![
                Perm::transposition(4, 0, 1),
                Perm::transposition(4, 0, 2),
                Perm::transposition(4, 0, 3),
                Perm::transposition(4, 1, 2),
                Perm::transposition(4, 1, 3),
                Perm::transposition(4, 2, 3),
            ],
            RackPreset::O4_4 => vec![
                Perm::from_cycle(4, &[0, 1, 2, 3]),
                Perm::from_cycle(4, &[0, 1, 3, 2]),
                Perm::from_cycle(4, &[0, 2, 1, 3]),
                Perm::from_cycle(4, &[0, 2, 3, 1]),
                Perm::from_cycle(4, &[0, 3, 1, 2]),
                Perm::from_cycle(4, &[0, 3, 2, 1]),
            ],
        }
    }

    pub fn rack(&self) -> Rack {
        conjugation_rack(&self.permutations()).expect("preset racks are valid")
    }
}

/// The two cocycle presets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocyclePreset {
    /// Constant `-1`.
    Minus,
    /// `q_{ji} = chi_i(j)` on transposition racks.
    Chi,
}

impl CocyclePreset {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "minus" => Ok(CocyclePreset::Minus),
            "chi" => Ok(CocyclePreset::Chi),
            _ => Err(Error::Invalid(format!(
                "unknown cocycle preset `{s}` (expected minus, chi)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CocyclePreset::Minus => "minus",
            CocyclePreset::Chi => "chi",
        }
    }
}

/// A rack 2-cocycle with values in `Q^x`:
/// `q_{i, j|>k} q_{j,k} = q_{i|>j, i|>k} q_{i,k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RackCocycle {
    /// `q[i][j]` is `q_{ij}`.
    pub q: Vec<Vec<BigRational>>,
}

impl RackCocycle {
    pub fn val(&self, i: usize, j: usize) -> &BigRational {
        &self.q[i][j]
    }

    /// Verify nonvanishing and the cocycle condition on `rack`.
    pub fn check_cocycle(&self, rack: &Rack) -> Result<()> {
        let n = rack.size();
        if self.q.len() != n || self.q.iter().any(|row| row.len() != n) {
            return Err(Error::Invalid("cocycle table is not square".into()));
        }
        for row in &self.q {
            for v in row {
                if v.is_zero() {
                    return Err(Error::Axiom("cocycle takes the value 0".into()));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.val(i, rack.tri(j, k)) * self.val(j, k);
                    let rhs = self.val(rack.tri(i, j), rack.tri(i, k)) * self.val(i, k);
                    if lhs != rhs {
                        return Err(Error::Axiom(format!(
                            "cocycle condition fails at ({}, {}, {})",
                            rack.names[i], rack.names[j], rack.names[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Build a preset cocycle on a preset rack.
    pub fn preset(rack_preset: RackPreset, which: CocyclePreset) -> Result<RackCocycle> {
        let perms = rack_preset.permutations();
        let n = perms.len();
        let minus_one = || -BigRational::one();
        match which {
            CocyclePreset::Minus => Ok(RackCocycle {
                q: vec![vec![minus_one(); n]; n],
            }),
            CocyclePreset::Chi => {
                if rack_preset == RackPreset::O4_4 {
                    return Err(Error::Invalid(
                        "the chi cocycle is only defined on transposition racks".into(),
                    ));
                }
                // q_{ji} = chi_i(g_j); chi_{(a,b)}(s) = +1 iff s(a) < s(b)
                let mut q = vec![vec![BigRational::one(); n]; n];
                for (j, sigma) in perms.iter().enumerate() {
                    for (i, t) in perms.iter().enumerate() {
                        let (a, b) = t.transposition_support().expect("transposition");
                        q[j][i] = if sigma.apply(a) < sigma.apply(b) {
                            BigRational::one()
                        } else {
                            minus_one()
                        };
                    }
                }
                Ok(RackCocycle { q })
            }
        }
    }

    /// `chi_i(g_j) = q_{ji}` read back out as a `+-1` integer, when it is one.
    pub fn as_sign(&self, i: usize, j: usize) -> Option<i8> {
        let v = self.val(i, j);
        if v == &BigRational::one() {
            Some(1)
        } else if v == &-BigRational::one() {
            Some(-1)
        } else {
            None
        }
    }
}

/// An equivalence class of `X x X` under `(i,j) ~ (i|>j, i)`, stored as its
/// canonical cyclic enumeration: `pairs[0]` is the lexicographically least
/// pair `(i_2, i_1)`, and `pairs[h] = (i_{h+2}, i_{h+1})` follows by
/// `(a, b) -> (a |> b, a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivClass {
    pub pairs: Vec<(usize, usize)>,
}

impl EquivClass {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Canonical identifier `cN` given the class's position in the
    /// canonical enumeration.
    pub fn id(index: usize) -> String {
        format!("c{index}")
    }

    pub fn contains(&self, pair: (usize, usize)) -> bool {
        self.pairs.contains(&pair)
    }

    /// Diagonal classes are the singletons `{(i,i)}`.
    pub fn is_diagonal(&self) -> bool {
        self.pairs.len() == 1 && self.pairs[0].0 == self.pairs[0].1
    }
}

/// All classes, in canonical order: scan pairs lexicographically, each
/// unseen pair starts a new class.
pub fn enumerate_classes(rack: &Rack) -> Vec<EquivClass> {
    let n = rack.size();
    let mut seen = vec![vec![false; n]; n];
    let mut classes = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if seen[i][j] {
                continue;
            }
            let mut pairs = Vec::new();
            let (mut a, mut b) = (i, j);
            loop {
                seen[a][b] = true;
                pairs.push((a, b));
                let next = (rack.tri(a, b), a);
                if next == (i, j) {
                    break;
                }
                let (na, nb) = next;
                (a, b) = (na, nb);
            }
            classes.push(EquivClass { pairs });
        }
    }
    classes
}

/// Indices (into `enumerate_classes`) of the classes in `R'`, i.e. those
/// with full cycle product `prod_h q_{i_{h+1}, i_h} = (-1)^{n(C)}`.
pub fn classes_prime(_rack: &Rack, q: &RackCocycle, classes: &[EquivClass]) -> Vec<usize> {
    classes
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            let mut prod = BigRational::one();
            for &(a, b) in &c.pairs {
                prod *= q.val(a, b);
            }
            let sign = if c.pairs.len() % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            prod == sign
        })
        .map(|(k, _)| k)
        .collect()
}

/// The class of a given pair, as an index into `classes`.
pub fn class_of(classes: &[EquivClass], pair: (usize, usize)) -> usize {
    classes
        .iter()
        .position(|c| c.contains(pair))
        .expect("every pair lies in a class")
}

/// The image class `k |> C` (as an index into `classes`).
pub fn conjugate_class(rack: &Rack, classes: &[EquivClass], k: usize, c: usize) -> usize {
    let (a, b) = classes[c].pairs[0];
    class_of(classes, (rack.tri(k, a), rack.tri(k, b)))
}

/// The quadratic polynomial `phi_C` in the free algebra on all of `X`:
/// `sum_h eta_h T_{i_{h+1}} T_{i_h}` over the canonical enumeration, with
/// `eta_1 = 1` and `eta_h = (-1)^{h+1} q_{i_2 i_1} ... q_{i_h i_{h-1}}`.
pub fn phi_c(q: &RackCocycle, class: &EquivClass) -> NCPoly {
    let mut poly = NCPoly::zero();
    let mut prodq = BigRational::one();
    for (h0, &(a, b)) in class.pairs.iter().enumerate() {
        let h = h0 + 1; // 1-based position
        let eta = if h == 1 {
            BigRational::one()
        } else {
            // eta_h = (-1)^{h+1} * prod of q over pairs[0..=h-2]
            let sign = if (h + 1) % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            let (pa, pb) = class.pairs[h - 2];
            prodq *= q.val(pa, pb);
            sign * prodq.clone()
        };
        let word = Word::from_slice(&[a as u8, b as u8]);
        poly.add_term(word, &ParamScalar::from_ratio(eta));
    }
    poly
}

/// Position of a class relative to a subset `Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YPartitionTag {
    /// `C` is contained in `Y x Y`.
    R1,
    /// `C` meets `Y x Y` in exactly one pair.
    R2,
    /// `C` misses `Y x Y`.
    R3,
}

/// Tag each class by its position relative to `Y` (indices into `X`).
pub fn y_partition(classes: &[EquivClass], y: &[usize]) -> Vec<YPartitionTag> {
    let in_y = |e: usize| y.contains(&e);
    classes
        .iter()
        .map(|c| {
            let hits = c
                .pairs
                .iter()
                .filter(|(a, b)| in_y(*a) && in_y(*b))
                .count();
            if hits == c.pairs.len() {
                YPartitionTag::R1
            } else if hits == 1 {
                YPartitionTag::R2
            } else if hits == 0 {
                YPartitionTag::R3
            } else {
                // cannot happen for the racks used here (see the checks in
                // the tests); treated as R1 would be wrong, so refuse loudly
                panic!("class meets Y x Y in {hits} pairs: partition undefined");
            }
        })
        .collect()
}

/// The unique pair of `C` in `Y x Y`, for an `R2` class.
pub fn r2_distinguished_pair(class: &EquivClass, y: &[usize]) -> Option<(usize, usize)> {
    let in_y = |e: usize| y.contains(&e);
    let mut hits = class.pairs.iter().filter(|(a, b)| in_y(*a) && in_y(*b));
    let first = hits.next().copied();
    if hits.next().is_some() {
        return None;
    }
    first
}

/// `vartheta_{C,Y}` in the free algebra on all of `X` (it only involves
/// letters from `Y`): `phi_C` for `R1` classes, the cubic
/// `T_i T_j T_i + q_{i|>j, i} T_j T_i T_j` for `R2` classes with
/// distinguished pair `(i,j)`, and `0` for `R3` classes.
pub fn vartheta(rack: &Rack, q: &RackCocycle, class: &EquivClass, y: &[usize]) -> NCPoly {
    let tags = y_partition(std::slice::from_ref(class), y);
    match tags[0] {
        YPartitionTag::R1 => phi_c(q, class),
        YPartitionTag::R3 => NCPoly::zero(),
        YPartitionTag::R2 => {
            let (i, j) = r2_distinguished_pair(class, y).expect("R2 class");
            let k = rack.tri(i, j);
            let coeff = ParamScalar::from_ratio(q.val(k, i).clone());
            let mut poly = NCPoly::monomial(
                Word::from_slice(&[i as u8, j as u8, i as u8]),
                ParamScalar::one(),
            );
            poly.add_term(Word::from_slice(&[j as u8, i as u8, j as u8]), &coeff);
            poly
        }
    }
}

/// Serialize a rack (+ cocycle) to the interchange JSON form
/// `{"elements": [...], "op": [[...]], "q": [[...]]}`.
pub fn rack_to_json(rack: &Rack, q: Option<&RackCocycle>) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert(
        "elements".into(),
        json!(rack.names.clone()),
    );
    obj.insert(
        "op".into(),
        json!(rack.op.clone()),
    );
    if let Some(q) = q {
        let rows: Vec<Vec<Value>> = q
            .q
            .iter()
            .map(|row| row.iter().map(ratio_to_json).collect())
            .collect();
        obj.insert("q".into(), Value::Array(rows.into_iter().map(Value::Array).collect()));
    }
    Value::Object(obj)
}

/// Parse the interchange JSON form; the cocycle is optional.
pub fn rack_from_json(v: &Value) -> Result<(Rack, Option<RackCocycle>)> {
    let elements = v
        .get("elements")
        .and_then(|e| e.as_array())
        .ok_or_else(|| Error::Parse("rack JSON needs an `elements` array".into()))?;
    let names: Vec<String> = elements
        .iter()
        .map(|e| {
            e.as_str()
                .map(str::to_owned)
                .ok_or_else(|| Error::Parse("element names must be strings".into()))
        })
        .collect::<Result<_>>()?;
    let op_raw = v
        .get("op")
        .and_then(|e| e.as_array())
        .ok_or_else(|| Error::Parse("rack JSON needs an `op` table".into()))?;
    let mut op = Vec::new();
    for row in op_raw {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse("op rows must be arrays".into()))?;
        op.push(
            row.iter()
                .map(|x| {
                    x.as_u64()
                        .map(|u| u as usize)
                        .ok_or_else(|| Error::Parse("op entries must be indices".into()))
                })
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let rack = Rack { names, op };
    rack.check_rack()?;
    let q = match v.get("q") {
        None | Some(Value::Null) => None,
        Some(Value::Array(rows)) => {
            let mut table = Vec::new();
            for row in rows {
                let row = row
                    .as_array()
                    .ok_or_else(|| Error::Parse("q rows must be arrays".into()))?;
                table.push(row.iter().map(ratio_from_json).collect::<Result<Vec<_>>>()?);
            }
            let q = RackCocycle { q: table };
            q.check_cocycle(&rack)?;
            Some(q)
        }
        _ => return Err(Error::Parse("`q` must be an array of arrays".into())),
    };
    Ok((rack, q))
}

/// Rationals in JSON: integers as numbers, non-integers as `"p/q"` strings.
pub fn ratio_to_json(r: &BigRational) -> Value {
    if r.is_integer() {
        if let Ok(i) = i64::try_from(r.to_integer()) {
            return json!(i);
        }
    }
    json!(r.to_string())
}

pub fn ratio_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigRational::from_integer(BigInt::from(i)))
            } else {
                Err(Error::Parse(format!("non-integer number {n}; use a \"p/q\" string")))
            }
        }
        Value::String(s) => parse_ratio(s),
        _ => Err(Error::Parse(format!("expected a rational, got {v}"))),
    }
}

/// Parse `"p"` or `"p/q"`.
pub fn parse_ratio(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|e| Error::Parse(format!("bad rational `{s}`: {e}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|e| Error::Parse(format!("bad rational `{s}`: {e}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("bad rational `{s}`: zero denominator")));
    }
    Ok(BigRational::new(n, d))
}

/// Format a rational compactly (`-1`, `1/2`).
pub fn ratio_str(r: &BigRational) -> String {
    r.to_string()
}

/// Sign string of a rational scalar (used in a few reports).
pub fn sign_str(r: &BigRational) -> &'static str {
    if r.is_negative() {
        "-"
    } else {
        "+"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_racks_with_valid_cocycles() {
        for preset in [RackPreset::O2_3, RackPreset::O2_4, RackPreset::O4_4] {
            let rack = preset.rack();
            rack.check_rack().unwrap();
            assert_eq!(
                rack.is_crossed_involutive(),
                preset == RackPreset::O2_3,
                "only the three-transposition rack is globally crossed-involutive"
            );
            let q = RackCocycle::preset(preset, CocyclePreset::Minus).unwrap();
            q.check_cocycle(&rack).unwrap();
            if preset != RackPreset::O4_4 {
                let chi = RackCocycle::preset(preset, CocyclePreset::Chi).unwrap();
                chi.check_cocycle(&rack).unwrap();
            }
        }
        assert!(RackCocycle::preset(RackPreset::O4_4, CocyclePreset::Chi).is_err());
    }

    #[test]
    fn canonical_element_order() {
        assert_eq!(
            RackPreset::O2_4.rack().names,
            vec!["(1 2)", "(1 3)", "(1 4)", "(2 3)", "(2 4)", "(3 4)"]
        );
        assert_eq!(
            RackPreset::O4_4.rack().names,
            vec![
                "(1 2 3 4)",
                "(1 2 4 3)",
                "(1 3 2 4)",
                "(1 3 4 2)",
                "(1 4 2 3)",
                "(1 4 3 2)"
            ]
        );
    }

    /// Class counts and size profiles, frozen from an independent
    /// computation: O2_3 -> 5 classes (3 singletons + 2 of size 3);
    /// O2_4 and O4_4 -> 17 classes each (6 singletons, 3 of size 2,
    /// 8 of size 3).
    #[test]
    fn class_census() {
        let census = |preset: RackPreset| {
            let rack = preset.rack();
            let classes = enumerate_classes(&rack);
            let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
            sizes.sort_unstable();
            (classes.len(), sizes)
        };
        assert_eq!(census(RackPreset::O2_3), (5, vec![1, 1, 1, 3, 3]));
        assert_eq!(
            census(RackPreset::O2_4),
            (17, vec![1, 1, 1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3])
        );
        assert_eq!(
            census(RackPreset::O4_4),
            (17, vec![1, 1, 1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3])
        );
    }

    /// For the presets, R = R' (every class passes the sign filter).
    #[test]
    fn all_classes_are_prime_for_presets() {
        for (preset, coc) in [
            (RackPreset::O2_3, CocyclePreset::Minus),
            (RackPreset::O2_3, CocyclePreset::Chi),
            (RackPreset::O2_4, CocyclePreset::Minus),
            (RackPreset::O2_4, CocyclePreset::Chi),
            (RackPreset::O4_4, CocyclePreset::Minus),
        ] {
            let rack = preset.rack();
            let q = RackCocycle::preset(preset, coc).unwrap();
            let classes = enumerate_classes(&rack);
            let prime = classes_prime(&rack, &q, &classes);
            assert_eq!(prime.len(), classes.len(), "{preset:?} {coc:?}");
        }
    }

    /// phi_C on O2_3 with q = -1: the size-3 class starting at
    /// ((1 2),(1 3)) is x12 x13 + x23 x12 + x13 x23 (all eta = +1).
    #[test]
    fn phi_matches_hand_computation() {
        let rack = RackPreset::O2_3.rack();
        let q = RackCocycle::preset(RackPreset::O2_3, CocyclePreset::Minus).unwrap();
        let classes = enumerate_classes(&rack);
        // canonical order: c0 = {((12),(12))}, c1 starts at ((12),(13))
        assert_eq!(classes[1].pairs, vec![(0, 1), (2, 0), (1, 2)]);
        let phi = phi_c(&q, &classes[1]);
        let names = ["x12", "x13", "x23"];
        assert_eq!(phi.display(&names), "x23 x12 + x13 x23 + x12 x13");
        // diagonal class: phi = T_i^2 (and q_{ii} = -1 keeps it in R')
        let phi0 = phi_c(&q, &classes[0]);
        assert_eq!(phi0.display(&names), "x12 x12");
    }

    #[test]
    fn vartheta_cases() {
        let rack = RackPreset::O2_4.rack();
        let q = RackCocycle::preset(RackPreset::O2_4, CocyclePreset::Minus).unwrap();
        let classes = enumerate_classes(&rack);
        let names: Vec<&str> = vec!["a", "b", "c", "d", "e", "f"]; // unused labels
        // Y = {(1 2), (1 3)}: the class through ((1 2),(1 3)) has pairs
        // ((12),(13)), ((23),(12)), ((13),(23)) — only the first in Y x Y,
        // so it is R2 with distinguished pair (0, 1) and k = 0 |> 1 = 3.
        let y = vec![0usize, 1];
        let c = class_of(&classes, (0, 1));
        let tags = y_partition(&classes, &y);
        assert_eq!(tags[c], YPartitionTag::R2);
        let th = vartheta(&rack, &q, &classes[c], &y);
        // q_{k,i} = -1: T_i T_j T_i - T_j T_i T_j
        assert_eq!(th.display(&names), "-b a b + a b a");
        // R3: class through ((1 4),(2 3)) misses Y x Y entirely
        let c3 = class_of(&classes, (2, 3));
        assert_eq!(tags[c3], YPartitionTag::R3);
        assert!(vartheta(&rack, &q, &classes[c3], &y).is_zero());
        // R1 classes reproduce phi
        let diag = class_of(&classes, (0, 0));
        assert_eq!(tags[diag], YPartitionTag::R1);
        assert_eq!(
            vartheta(&rack, &q, &classes[diag], &y),
            phi_c(&q, &classes[diag])
        );
    }

    #[test]
    fn json_roundtrip() {
        let rack = RackPreset::O2_3.rack();
        let q = RackCocycle::preset(RackPreset::O2_3, CocyclePreset::Chi).unwrap();
        let v = rack_to_json(&rack, Some(&q));
        let (rack2, q2) = rack_from_json(&v).unwrap();
        assert_eq!(rack, rack2);
        assert_eq!(Some(q), q2);
    }
}
