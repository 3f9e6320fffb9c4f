//! Exact matrix rank over ℚ, GF(2) and GF(p).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Rank over GF(2) of the matrix whose columns are the given bit vectors.
///
/// Each column is a little-endian bitset over the rows. Columns are reduced
/// against a basis keyed by lowest set bit.
pub fn rank_gf2(columns: Vec<Vec<u64>>, nrows: usize) -> usize {
    let words = nrows.div_ceil(64);
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; nrows];
    let mut basis: Vec<Vec<u64>> = Vec::new();
    for mut col in columns {
        debug_assert_eq!(col.len(), words);
        while let Some(low) = lowest_bit(&col) {
            match pivot_of_row[low] {
                Some(b) => {
                    let row = &basis[b];
                    // basis vector b has no bits below `low`
                    for w in low / 64..words {
                        col[w] ^= row[w];
                    }
                }
                None => {
                    pivot_of_row[low] = Some(basis.len());
                    basis.push(col);
                    break;
                }
            }
        }
    }
    basis.len()
}

#[inline]
fn lowest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Rank over GF(p) of a dense row-major matrix of residues.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for x in &mut rows[rank][col..ncols] {
            *x = *x * inv % p;
        }
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for j in col..ncols {
                row[j] = (row[j] + (p - factor) * pivot_row[j]) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank over ℚ of an integer matrix, by fraction-free (Bareiss) elimination.
///
/// Runs in `i128` and restarts with arbitrary precision if an intermediate
/// product would overflow.
pub fn rank_rational(rows: &[Vec<i64>], ncols: usize) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if let Some(rank) = bareiss_i128(small, ncols) {
        return rank;
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_big(big, ncols)
}

fn bareiss_i128(mut a: Vec<Vec<i128>>, ncols: usize) -> Option<usize> {
    let nrows = a.len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let p = a[rank][col];
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom {
            let lead = row[col];
            for (x, &y) in row[col + 1..ncols]
                .iter_mut()
                .zip(&pivot_row[col + 1..ncols])
            {
                *x = p.checked_mul(*x)?.checked_sub(lead.checked_mul(y)?)? / prev;
            }
            row[col] = 0;
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    let nrows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let p = a[rank][col].clone();
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom {
            let lead = row[col].clone();
            for (x, y) in row[col + 1..ncols]
                .iter_mut()
                .zip(&pivot_row[col + 1..ncols])
            {
                *x = (&p * &*x - &lead * y) / &prev;
            }
            row[col] = BigInt::zero();
        }
        debug_assert!(!p.abs().is_zero());
        prev = p;
        rank += 1;
    }
    rank
}
