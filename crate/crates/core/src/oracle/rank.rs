//! Exact ranks of sparse integer matrices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A sparse row: `(column, entry)` pairs with increasing columns and no zeros.
pub type SparseRow = Vec<(usize, i64)>;

/// Rank over the rationals by fraction-free elimination. Runs in `i64` with
/// checked arithmetic and repeats in big integers if anything overflows.
pub fn rank_rational(rows: &[SparseRow]) -> usize {
    match eliminate::<i64>(rows.to_vec()) {
        Some(r) => r,
        None => eliminate::<BigInt>(rows.iter().map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect()).collect())
            .expect("big integer elimination cannot overflow"),
    }
}

/// Rank over the field with two elements.
pub fn rank_f2(rows: &[SparseRow], ncols: usize) -> usize {
    let words = ncols.div_ceil(64);
    let mut pivots: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for row in rows {
        let mut bits = vec![0u64; words];
        for &(c, v) in row {
            if v.rem_euclid(2) == 1 {
                bits[c / 64] ^= 1 << (c % 64);
            }
        }
        while let Some(lead) = leading_bit(&bits) {
            match pivots.get(&lead) {
                Some(p) => bits.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots.insert(lead, bits);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn leading_bit(bits: &[u64]) -> Option<usize> {
    bits.iter().enumerate().find(|(_, &w)| w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
}

trait Exact: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn magnitude(&self) -> u128;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn checked_neg(&self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Exact for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn magnitude(&self) -> u128 {
        self.unsigned_abs() as u128
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i64::checked_mul(*self, *other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i64::checked_sub(*self, *other)
    }
    fn checked_neg(&self) -> Option<Self> {
        i64::checked_neg(*self)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
}

impl Exact for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude(&self) -> u128 {
        u128::try_from(self.abs()).unwrap_or(u128::MAX)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_unit(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
}

/// Echelon elimination keyed by leading column. Within each bucket the row
/// with the smallest leading entry (then fewest terms) becomes the pivot and
/// is cleared from the others by `r <- p_lead * r - r_lead * p`, after which
/// rows are divided by their content.
fn eliminate<T: Exact>(rows: Vec<Vec<(usize, T)>>) -> Option<usize> {
    let mut buckets: BTreeMap<usize, Vec<Vec<(usize, T)>>> = BTreeMap::new();
    for r in rows {
        let r: Vec<_> = r.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if let Some(&(c, _)) = r.first() {
            buckets.entry(c).or_default().push(r);
        }
    }
    let mut rank = 0;
    while let Some((_, mut bucket)) = buckets.pop_first() {
        let best = (0..bucket.len())
            .min_by_key(|&k| (bucket[k][0].1.magnitude(), bucket[k].len()))
            .expect("buckets are never empty");
        let pivot = bucket.swap_remove(best);
        rank += 1;
        for row in bucket {
            let reduced = combine(&pivot, &row)?;
            if let Some(&(c, _)) = reduced.first() {
                buckets.entry(c).or_default().push(reduced);
            }
        }
    }
    Some(rank)
}

fn combine<T: Exact>(p: &[(usize, T)], r: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let (a, b) = (&p[0].1, &r[0].1);
    let g = a.gcd(b);
    let (fa, fb) = (a.div_exact(&g), b.div_exact(&g));
    let mut out: Vec<(usize, T)> = Vec::with_capacity(p.len() + r.len());
    let (mut i, mut j) = (1, 1);
    while i < p.len() || j < r.len() {
        let ci = p.get(i).map_or(usize::MAX, |t| t.0);
        let cj = r.get(j).map_or(usize::MAX, |t| t.0);
        let (col, val) = if ci < cj {
            i += 1;
            (ci, p[i - 1].1.checked_mul(&fb)?)
        } else if cj < ci {
            j += 1;
            (cj, r[j - 1].1.checked_mul(&fa)?.checked_neg()?)
        } else {
            i += 1;
            j += 1;
            (ci, p[i - 1].1.checked_mul(&fb)?.checked_sub(&r[j - 1].1.checked_mul(&fa)?)?)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    // fb * p - fa * r, normalized by content.
    if let Some(first) = out.first() {
        let mut c = first.1.clone();
        for (_, v) in &out[1..] {
            if c.is_unit() {
                break;
            }
            c = c.gcd(v);
        }
        if !c.is_unit() && !c.is_zero() {
            for (_, v) in &mut out {
                *v = v.div_exact(&c);
            }
        }
    }
    Some(out)
}
