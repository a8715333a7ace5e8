//! Small dense integer and rational linear algebra on row-major square matrices.

use alloc::vec;
use alloc::vec::Vec;
use num_rational::Ratio;
use num_traits::{One, Zero};

pub(crate) type Q = Ratio<i64>;

pub(crate) fn identity(r: usize) -> Vec<i32> {
    let mut m = vec![0; r * r];
    for i in 0..r {
        m[i * r + i] = 1;
    }
    m
}

pub(crate) fn mat_mul(r: usize, a: &[i32], b: &[i32]) -> Vec<i32> {
    let mut out = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let aik = a[i * r + k];
            if aik == 0 {
                continue;
            }
            for j in 0..r {
                out[i * r + j] += aik * b[k * r + j];
            }
        }
    }
    out
}

pub(crate) fn mat_vec(r: usize, m: &[i32], v: &[i32]) -> Vec<i32> {
    (0..r).map(|i| (0..r).map(|j| m[i * r + j] * v[j]).sum()).collect()
}

pub(crate) fn mat_vec_q(r: usize, m: &[i32], v: &[Q]) -> Vec<Q> {
    (0..r)
        .map(|i| (0..r).fold(Q::zero(), |acc, j| acc + v[j] * i64::from(m[i * r + j])))
        .collect()
}

/// Inverse of an integer matrix with determinant ±1.
pub(crate) fn inverse_unimodular(r: usize, m: &[i32]) -> Vec<i32> {
    let a: Vec<Vec<Q>> = (0..r)
        .map(|i| (0..r).map(|j| Q::from_integer(i64::from(m[i * r + j]))).collect())
        .collect();
    let mut out = vec![0; r * r];
    for col in 0..r {
        let b: Vec<Q> = (0..r).map(|i| if i == col { Q::one() } else { Q::zero() }).collect();
        let x = solve(a.clone(), b).expect("Weyl group matrices are invertible");
        for (i, xi) in x.into_iter().enumerate() {
            debug_assert!(xi.is_integer());
            out[i * r + col] = *xi.numer() as i32;
        }
    }
    out
}

/// Solve `a x = b` for square nonsingular `a`.
pub(crate) fn solve(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col];
        for j in col..n {
            a[col][j] /= p;
        }
        b[col] /= p;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in col..n {
                    let t = a[col][j];
                    a[r][j] -= f * t;
                }
                let t = b[col];
                b[r] -= f * t;
            }
        }
    }
    Some(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let m = [0, -1, 1, -1];
        let inv = inverse_unimodular(2, &m);
        assert_eq!(mat_mul(2, &m, &inv), identity(2));
    }

    #[test]
    fn solves() {
        let a = vec![
            vec![Q::from_integer(2), Q::from_integer(-1)],
            vec![Q::from_integer(-1), Q::from_integer(2)],
        ];
        let x = solve(a, vec![Q::from_integer(1), Q::from_integer(0)]).unwrap();
        assert_eq!(x, [Q::new(2, 3), Q::new(1, 3)]);
    }
}
