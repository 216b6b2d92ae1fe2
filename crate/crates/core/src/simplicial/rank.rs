//! Exact matrix rank over the rationals and over prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

use super::Field;

/// Rank of an integer matrix viewed over `field`.
pub fn rank(rows: &[Vec<i64>], field: Field) -> usize {
    match field {
        Field::Rationals => rank_rational(rows),
        Field::Prime(p) => rank_mod_p(rows, p),
    }
}

fn rank_rational(rows: &[Vec<i64>]) -> usize {
    if let Some(r) = eliminate(rows.to_vec()) {
        return r;
    }
    let wide: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    eliminate(wide).expect("big integers do not overflow")
}

/// Fraction-free row reduction; rows are divided by their content after every
/// update. Returns `None` on overflow.
fn eliminate<T>(mut rows: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let p = prow[col].clone();
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let a = row[col].clone();
            let g = p.gcd(&a);
            let (pm, am) = (p.clone() / g.clone(), a / g);
            let mut content = T::zero();
            for (x, y) in row.iter_mut().zip(prow.iter()).skip(col) {
                let v = x.checked_mul(&pm)?.checked_sub(&y.checked_mul(&am)?)?;
                content = content.gcd(&v);
                *x = v;
            }
            if !content.is_zero() && !content.is_one() {
                for x in row.iter_mut().skip(col) {
                    *x = x.clone() / content.clone();
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_mod_p(rows: &[Vec<i64>], p: u32) -> usize {
    let p64 = u64::from(p);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| row.iter().map(|&v| v.rem_euclid(i64::from(p)) as u64).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = pow_mod(m[rank][col], p64 - 2, p64);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p64;
        }
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let a = row[col];
            if a == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(prow.iter()).skip(col) {
                *x = (*x + p64 - a * y % p64) % p64;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
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
