//! Permutations of `{1, ..., n}` and small symmetric groups with
//! precomputed multiplication.
//!
//! Composition is right-to-left throughout: `(s t)(x) = s(t(x))`. Cycle
//! notation is 1-based in all textual forms (`"(1 2)(3 4)"`, identity `"e"`),
//! while indices are 0-based in code.

use std::collections::HashMap;
use std::fmt;

use crate::{Error, Result};

/// A permutation of `{0, ..., n-1}`, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if (v as usize) >= n || seen[v as usize] {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
            seen[v as usize] = true;
        }
        Ok(Perm(images))
    }

    /// The transposition `(a b)` (0-based) in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<u8> = (0..n as u8).collect();
        v.swap(a, b);
        Perm(v)
    }

    /// The cycle `(c_0 c_1 ... c_k)` (0-based entries) in `S_n`.
    pub fn from_cycle(n: usize, cycle: &[usize]) -> Self {
        let mut v: Vec<u8> = (0..n as u8).collect();
        for w in 0..cycle.len() {
            let from = cycle[w];
            let to = cycle[(w + 1) % cycle.len()];
            v[from] = to as u8;
        }
        Perm(v)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// `(self other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inv(&self) -> Perm {
        let mut v = vec![0u8; self.0.len()];
        for (i, &img) in self.0.iter().enumerate() {
            v[img as usize] = i as u8;
        }
        Perm(v)
    }

    /// `h self h^{-1}`.
    pub fn conjugated_by(&self, h: &Perm) -> Perm {
        h.compose(self).compose(&h.inv())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = self.compose(&p);
            k += 1;
        }
        k
    }

    pub fn sign(&self) -> i8 {
        let mut inversions = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Number of inversions (= Coxeter length w.r.t. adjacent
    /// transpositions).
    pub fn length(&self) -> usize {
        let mut inversions = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        inversions
    }

    /// Cycle decomposition, each cycle led by its least element, cycles
    /// sorted by leading element; fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// For a transposition, its support `(a, b)` with `a < b` (0-based).
    pub fn transposition_support(&self) -> Option<(usize, usize)> {
        let cycles = self.cycles();
        if cycles.len() == 1 && cycles[0].len() == 2 {
            let (a, b) = (cycles[0][0], cycles[0][1]);
            Some((a.min(b), a.max(b)))
        } else {
            None
        }
    }

    /// Parse 1-based cycle notation: `"(1 2)(3 4)"`, identity `"e"` or
    /// `"()"`. Elements may also be comma-separated.
    pub fn parse(s: &str, n: usize) -> Result<Perm> {
        let s = s.trim();
        if s == "e" || s == "()" || s.is_empty() || s == "1" {
            return Ok(Perm::identity(n));
        }
        let mut perm = Perm::identity(n);
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::Parse(format!("bad cycle notation `{s}`")))?;
            let close = rest[open..]
                .find(')')
                .map(|c| open + c)
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{s}`")))?;
            let inner = &rest[open + 1..close];
            let entries: Vec<usize> = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad cycle entry `{t}`: {e}")))
                })
                .collect::<Result<_>>()?;
            if entries.iter().any(|&x| x == 0 || x > n) {
                return Err(Error::Parse(format!(
                    "cycle entry out of range 1..={n} in `{s}`"
                )));
            }
            let mut uniq = entries.clone();
            uniq.sort_unstable();
            uniq.dedup();
            if uniq.len() != entries.len() {
                return Err(Error::Parse(format!("repeated entry in cycle `{s}`")));
            }
            let cycle0: Vec<usize> = entries.iter().map(|&x| x - 1).collect();
            // cycles of a decomposition are disjoint, so composition order
            // among them does not matter
            perm = Perm::from_cycle(n, &cycle0).compose(&perm);
            rest = &rest[close + 1..];
            let trimmed = rest.trim_start();
            rest = trimmed;
        }
        Ok(perm)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (i, x) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// The full symmetric group `S_n` with elements enumerated in lexicographic
/// order of image vectors (so index 0 is the identity) and multiplication
/// and inversion precomputed.
#[derive(Clone, Debug)]
pub struct SymGroup {
    n: usize,
    elems: Vec<Perm>,
    index: HashMap<Perm, usize>,
    mul_table: Vec<Vec<u16>>,
    inv_table: Vec<u16>,
}

impl SymGroup {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1 && n <= 8, "SymGroup supports 1 <= n <= 8");
        let mut elems = Vec::new();
        let mut images: Vec<u8> = (0..n as u8).collect();
        loop {
            elems.push(Perm(images.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n - 1).rev().find(|&i| images[i] < images[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
            images.swap(i, j);
            images[i + 1..].reverse();
        }
        let index: HashMap<Perm, usize> = elems
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let size = elems.len();
        let mut mul_table = vec![vec![0u16; size]; size];
        for i in 0..size {
            for j in 0..size {
                mul_table[i][j] = index[&elems[i].compose(&elems[j])] as u16;
            }
        }
        let inv_table: Vec<u16> = elems.iter().map(|p| index[&p.inv()] as u16).collect();
        SymGroup { n, elems, index, mul_table, inv_table }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn elem(&self, i: usize) -> &Perm {
        &self.elems[i]
    }

    pub fn elems(&self) -> &[Perm] {
        &self.elems
    }

    pub fn idx(&self, p: &Perm) -> usize {
        self.index[p]
    }

    pub fn try_idx(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of the product (right-to-left composition).
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul_table[i][j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv_table[i] as usize
    }

    /// Index of `h g h^{-1}`.
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_right_to_left() {
        // (1 2) then (2 3) applied right-to-left: first (2 3), then (1 2).
        let s = Perm::transposition(3, 0, 1);
        let t = Perm::transposition(3, 1, 2);
        let st = s.compose(&t);
        // (st)(2) = s(t(2)) = s(3) = 3 (1-based: t sends 2 -> 3, s fixes 3)
        assert_eq!(st.apply(1), 2);
        // st = (1 2)(2 3) = (1 2 3) as a cycle: 1->2? no: s(t(1)) = s(1) = 2
        assert_eq!(st.to_string(), "(1 2 3)");
        let ts = t.compose(&s);
        assert_eq!(ts.to_string(), "(1 3 2)");
    }

    #[test]
    fn parse_and_display() {
        let p = Perm::parse("(1 2)(3 4)", 4).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(Perm::parse("e", 4).unwrap(), Perm::identity(4));
        assert_eq!(
            Perm::parse("(1 2 3 4)", 4).unwrap(),
            Perm::from_cycle(4, &[0, 1, 2, 3])
        );
        assert_eq!(Perm::parse("(1,3)", 3).unwrap().to_string(), "(1 3)");
        assert!(Perm::parse("(1 5)", 4).is_err());
        assert!(Perm::parse("(1 1)", 4).is_err());
    }

    #[test]
    fn group_tables() {
        let g = SymGroup::new(4);
        assert_eq!(g.size(), 24);
        assert!(g.elem(0).is_identity());
        for i in 0..g.size() {
            assert_eq!(g.mul(i, g.inv(i)), 0);
            assert_eq!(g.mul(g.inv(i), i), 0);
        }
        // associativity spot check via the table
        for i in [1, 5, 13] {
            for j in [2, 7, 23] {
                for k in [3, 11, 17] {
                    assert_eq!(g.mul(g.mul(i, j), k), g.mul(i, g.mul(j, k)));
                }
            }
        }
        // element order census for S4: 1 id, 9 of order 2, 8 of order 3,
        // 6 of order 4
        let mut orders = HashMap::new();
        for p in g.elems() {
            *orders.entry(p.order()).or_insert(0) += 1;
        }
        assert_eq!(orders[&1], 1);
        assert_eq!(orders[&2], 9);
        assert_eq!(orders[&3], 8);
        assert_eq!(orders[&4], 6);
    }

    #[test]
    fn signs_and_lengths() {
        let g = SymGroup::new(4);
        let even = g.elems().iter().filter(|p| p.sign() == 1).count();
        assert_eq!(even, 12);
        // longest element has length 6 = binom(4,2)
        let max_len = g.elems().iter().map(|p| p.length()).max().unwrap();
        assert_eq!(max_len, 6);
    }
}
