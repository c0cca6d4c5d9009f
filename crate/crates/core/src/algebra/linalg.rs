//! Exact rational and modular linear algebra used by subalgebra closures
//! and rank certificates.

use num_rational::BigRational;
use num_traits::Zero;

/// An incrementally built row space over `Q`, kept in reduced row-echelon
/// form. Rows are dense; the column count is fixed at construction.
#[derive(Clone, Debug)]
pub struct RatSpan {
    ncols: usize,
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl RatSpan {
    pub fn new(ncols: usize) -> Self {
        RatSpan { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the span in place; afterwards `v` is zero on all
    /// pivot columns.
    pub fn reduce(&self, v: &mut [BigRational]) {
        assert_eq!(v.len(), self.ncols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                // row[p] == 1, so this zeroes v[p] exactly
                let c = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &c * r;
                    }
                }
            }
        }
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &[BigRational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Insert a vector; returns `true` if it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<BigRational>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[p].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x /= &lead;
            }
        }
        // back-eliminate the new pivot from existing rows (v[p] == 1)
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, newx) in row.iter_mut().zip(&v) {
                    if !newx.is_zero() {
                        *x -= &c * newx;
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }
}

/// Rank of a dense matrix over `F_p` (destructive Gaussian elimination).
/// `p` must be an odd prime below 2^31 so products fit in `u64`.
pub fn rank_mod_p(mut rows: Vec<Vec<u32>>, p: u32) -> usize {
    let p64 = p as u64;
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        // find a pivot row at or below `rank`
        let Some(pos) = (rank..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, pos);
        let inv = inv_mod(rows[rank][col] as u64 % p64, p64);
        // normalize pivot row
        let pivot_row = std::mem::take(&mut rows[rank]);
        let pivot_row: Vec<u32> = pivot_row
            .iter()
            .map(|&x| ((x as u64 * inv) % p64) as u32)
            .collect();
        for r in rank + 1..rows.len() {
            let factor = rows[r][col] as u64 % p64;
            if factor != 0 {
                let neg = p64 - factor;
                let row = &mut rows[r];
                for (x, &pivx) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x = ((*x as u64 + neg * pivx as u64) % p64) as u32;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// `a^{-1} mod p` via Fermat (p prime).
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Reduce a rational to `F_p`; the denominator must be prime to `p`.
pub fn ratio_mod_p(r: &BigRational, p: u32) -> u32 {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let pbig = BigInt::from(p);
    let num = r.numer().mod_floor(&pbig);
    let den = r.denom().mod_floor(&pbig);
    let num: u64 = u64::try_from(&num).expect("mod_floor is in range");
    let den: u64 = u64::try_from(&den).expect("mod_floor is in range");
    assert!(den != 0, "denominator divisible by the chosen prime");
    (num * inv_mod(den, p as u64) % p as u64) as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn span_basics() {
        let mut s = RatSpan::new(3);
        assert!(s.insert(vec![rat(2), rat(4), rat(0)]));
        assert!(s.insert(vec![rat(0), rat(1), rat(1)]));
        // dependent vector
        assert!(!s.insert(vec![rat(1), rat(3), rat(1)]));
        assert_eq!(s.rank(), 2);
        assert!(s.contains(&[rat(3), rat(7), rat(1)]));
        assert!(!s.contains(&[rat(0), rat(0), rat(1)]));
        assert!(s.insert(vec![rat(0), rat(0), rat(5)]));
        assert_eq!(s.rank(), 3);
    }

    #[test]
    fn reduced_echelon_structure() {
        let mut s = RatSpan::new(3);
        s.insert(vec![rat(1), rat(1), rat(0)]);
        s.insert(vec![rat(1), rat(0), rat(0)]);
        // rows stay reduced: each pivot column is zero in the other rows
        for (k, row) in s.rows().iter().enumerate() {
            for (j, other) in s.rows().iter().enumerate() {
                if k != j {
                    assert!(other[s.pivots[k]].is_zero());
                }
                let _ = other;
            }
            assert!(row[s.pivots[k]].is_one());
        }
    }

    #[test]
    fn modular_rank() {
        let p = 32003;
        let m = vec![
            vec![1, 2, 3],
            vec![2, 4, 6],
            vec![0, 1, 1],
        ];
        assert_eq!(rank_mod_p(m, p), 2);
        let id = (0..5)
            .map(|i| (0..5).map(|j| u32::from(i == j)).collect())
            .collect();
        assert_eq!(rank_mod_p(id, p), 5);
    }

    #[test]
    fn modular_scalars() {
        let p = 32003u32;
        assert_eq!(pow_mod(5, 0, p as u64), 1);
        let half = ratio_mod_p(&(rat(1) / rat(2)), p);
        assert_eq!((half as u64 * 2) % p as u64, 1);
        let neg = ratio_mod_p(&rat(-1), p);
        assert_eq!(neg, p - 1);
    }
}
