//! Words in a free monoid and the degree-lexicographic order.
//!
//! Generators are small integers `0..num_gens`; a [`Word`] is the sequence
//! of generator indices. The order used everywhere is *deglex*: compare by
//! length first, then lexicographically by generator *precedence*. The
//! canonical precedence is the identity (generator `0` smallest), which by
//! construction of the rack presets is the canonical rack-element order; a
//! [`MonomialOrder`] can carry any other precedence list.

use std::cmp::Ordering;
use std::fmt;

/// A word in the free monoid on generators `0..n`, ordered by deglex with
/// identity precedence.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: u8) -> Self {
        Word(vec![g])
    }

    pub fn from_slice(letters: &[u8]) -> Self {
        Word(letters.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, g: u8) {
        self.0.push(g);
    }

    /// First position at which `pat` occurs as a factor, if any.
    pub fn find_factor(&self, pat: &Word) -> Option<usize> {
        if pat.0.is_empty() || pat.0.len() > self.0.len() {
            return None;
        }
        self.0
            .windows(pat.0.len())
            .position(|win| win == pat.0.as_slice())
    }

    pub fn ends_with(&self, pat: &Word) -> bool {
        self.0.ends_with(&pat.0)
    }

    /// Split into `(prefix, suffix)` around the factor `pat` at `pos`.
    pub fn split_factor(&self, pat_len: usize, pos: usize) -> (Word, Word) {
        (
            Word(self.0[..pos].to_vec()),
            Word(self.0[pos + pat_len..].to_vec()),
        )
    }

    /// Length of the longest proper overlap `suffix(self) = prefix(other)`,
    /// iterated from the longest candidate down; yields every overlap length
    /// `l` with `0 < l < min(|self|, |other|)`.
    pub fn overlaps(&self, other: &Word) -> Vec<usize> {
        let max = self.0.len().min(other.0.len());
        (1..max)
            .filter(|&l| self.0[self.0.len() - l..] == other.0[..l])
            .collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Deglex over a generator precedence list.
///
/// `precedence[k]` is the generator that sits at rank `k` (rank 0 smallest).
/// Words are compared by length, then by rank sequence. Rewriting internally
/// *encodes* words into rank space so that the natural [`Word`] order is the
/// chosen order; callers never see encoded words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    precedence: Vec<u8>,
    rank: Vec<u8>,
}

impl MonomialOrder {
    /// The canonical order: identity precedence on `n` generators.
    pub fn canonical(num_gens: usize) -> Self {
        MonomialOrder::with_precedence((0..num_gens as u8).collect())
    }

    /// Deglex with the given precedence list (smallest generator first).
    /// The list must be a permutation of `0..n`.
    pub fn with_precedence(precedence: Vec<u8>) -> Self {
        let n = precedence.len();
        let mut rank = vec![u8::MAX; n];
        for (k, &g) in precedence.iter().enumerate() {
            assert!((g as usize) < n && rank[g as usize] == u8::MAX,
                "precedence list must be a permutation of 0..n");
            rank[g as usize] = k as u8;
        }
        MonomialOrder { precedence, rank }
    }

    pub fn num_gens(&self) -> usize {
        self.precedence.len()
    }

    pub fn is_identity(&self) -> bool {
        self.precedence.iter().enumerate().all(|(k, &g)| k == g as usize)
    }

    pub fn encode(&self, w: &Word) -> Word {
        Word(w.0.iter().map(|&g| self.rank[g as usize]).collect())
    }

    pub fn decode(&self, w: &Word) -> Word {
        Word(w.0.iter().map(|&r| self.precedence[r as usize]).collect())
    }

    pub fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        if self.is_identity() {
            a.cmp(b)
        } else {
            self.encode(a).cmp(&self.encode(b))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_orders_by_length_then_lex() {
        let w = |s: &[u8]| Word::from_slice(s);
        assert!(w(&[2]) < w(&[0, 0]));
        assert!(w(&[0, 1]) < w(&[0, 2]));
        assert!(w(&[0, 1, 0]) < w(&[1, 0, 1]));
        assert!(w(&[]) < w(&[0]));
    }

    #[test]
    fn overlaps_and_factors() {
        let aba = Word::from_slice(&[0, 1, 0]);
        let ab = Word::from_slice(&[0, 1]);
        assert_eq!(aba.find_factor(&ab), Some(0));
        // suffix "a" of aba = prefix "a" of ab
        assert_eq!(aba.overlaps(&ab), vec![1]);
        // self-overlap of aba: suffix "a" = prefix "a"
        assert_eq!(aba.overlaps(&aba), vec![1]);
        let (pre, post) = aba.split_factor(2, 0);
        assert_eq!(pre, Word::empty());
        assert_eq!(post, Word::gen(0));
    }

    #[test]
    fn precedence_reverses_order() {
        let ord = MonomialOrder::with_precedence(vec![2, 1, 0]);
        let a = Word::from_slice(&[0, 1]);
        let b = Word::from_slice(&[2, 1]);
        // under reversed precedence, generator 2 is smallest
        assert_eq!(ord.cmp(&a, &b), Ordering::Greater);
        assert_eq!(ord.decode(&ord.encode(&a)), a);
    }
}
