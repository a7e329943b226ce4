//! Exact matrix rank over the rationals and over prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Rank over the rationals.
///
/// Fraction-free elimination over the integers: each row operation is
/// `row <- (a/g) * row - (b/g) * pivot_row` followed by division of the row
/// by its content, which keeps entries small. Runs in `i64` with checked
/// arithmetic and restarts with big integers on overflow.
pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    match rank_i64(rows.to_vec()) {
        Some(r) => r,
        None => rank_bigint(rows),
    }
}

fn rank_i64(mut m: Vec<Vec<i64>>) -> Option<usize> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        if rank == m.len() {
            break;
        }
        let Some(p) = (rank..m.len())
            .filter(|&r| m[r][c] != 0)
            .min_by_key(|&r| m[r][c].unsigned_abs())
        else {
            continue;
        };
        m.swap(rank, p);
        let (pivot_rows, rest) = m.split_at_mut(rank + 1);
        let pivot = &pivot_rows[rank];
        for row in rest.iter_mut() {
            let b = row[c];
            if b == 0 {
                continue;
            }
            let a = pivot[c];
            let g = a.gcd(&b);
            let (pa, pb) = (a / g, b / g);
            let mut content = 0i64;
            for k in c..ncols {
                let v = pa
                    .checked_mul(row[k])?
                    .checked_sub(pb.checked_mul(pivot[k])?)?;
                row[k] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                row[c..].iter_mut().for_each(|v| *v /= content);
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_bigint(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        if rank == m.len() {
            break;
        }
        let Some(p) = (rank..m.len())
            .filter(|&r| !m[r][c].is_zero())
            .min_by(|&x, &y| m[x][c].abs().cmp(&m[y][c].abs()))
        else {
            continue;
        };
        m.swap(rank, p);
        let (pivot_rows, rest) = m.split_at_mut(rank + 1);
        let pivot = &pivot_rows[rank];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = pivot[c].gcd(&row[c]);
            let pa = &pivot[c] / &g;
            let pb = &row[c] / &g;
            let mut content = BigInt::zero();
            for k in c..ncols {
                row[k] = &pa * &row[k] - &pb * &pivot[k];
                content = content.gcd(&row[k]);
            }
            if content > BigInt::from(1) {
                row[c..].iter_mut().for_each(|v| *v /= &content);
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over `GF(p)`; `p` must be prime.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let p128 = p as u128;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        if rank == m.len() {
            break;
        }
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = mod_inverse(m[rank][c], p);
        let (pivot_rows, rest) = m.split_at_mut(rank + 1);
        let pivot = &pivot_rows[rank];
        for row in rest.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let factor = (row[c] as u128 * inv as u128 % p128) as u64;
            for k in c..ncols {
                let sub = (factor as u128 * pivot[k] as u128 % p128) as u64;
                row[k] = (row[k] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let mut result = 1u128;
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    result as u64
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
