//! Fraction-free (Bareiss) elimination over the integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::Poly;
use crate::uea::UeaElement;

/// Rank of an integer matrix, computed without leaving `Z`.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let height = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..width {
        if r == height {
            break;
        }
        let Some(pivot) = (r..height).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        for i in r + 1..height {
            for j in c + 1..width {
                // Exact by Sylvester's identity.
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant of a square integer matrix.
pub fn determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "square matrix required");
    if n == 0 {
        return BigInt::one();
    }
    let mut a = rows.to_vec();
    let mut prev = BigInt::one();
    let mut sign = 1;
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != k {
            a.swap(k, pivot);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    prev * sign
}

/// Coordinates of each polynomial on the union of their supports.
pub fn poly_coordinates(polys: &[Poly]) -> Vec<Vec<BigInt>> {
    let mut index = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    polys
        .iter()
        .map(|p| {
            let mut row = vec![BigInt::zero(); index.len()];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect()
}

/// PBW coordinates of each element on the union of their supports.
pub fn uea_coordinates(elems: &[UeaElement]) -> Vec<Vec<BigInt>> {
    let mut index = BTreeMap::new();
    for e in elems {
        for (m, _) in e.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    elems
        .iter()
        .map(|e| {
            let mut row = vec![BigInt::zero(); index.len()];
            for (m, c) in e.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect()
}
