//! Exact linear algebra over ℚ.
//!
//! Elimination runs fraction-free (Bareiss) on integer rows obtained by
//! clearing denominators; rationals only appear during back substitution.

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Row echelon form of an integer matrix plus its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Bareiss elimination. Every division is exact.
pub fn echelon(rows: &[Vec<BigRational>], cols: usize) -> Echelon {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "ragged matrix");
            integer_row(r)
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots, cols }
}

pub fn rank(rows: &[Vec<BigRational>], cols: usize) -> usize {
    echelon(rows, cols).rank()
}

/// Reduced row echelon form over ℚ; zero rows dropped.
pub fn rref(rows: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    a
}

/// Basis of `{x : M x = 0}`, canonicalized to reduced row echelon form so
/// that each vector's first nonzero coordinate is 1.
pub fn nullspace(rows: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let e = echelon(rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !e.pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![BigRational::zero(); cols];
        x[f] = BigRational::one();
        for (ri, &pc) in e.pivots.iter().enumerate().rev() {
            let row = &e.rows[ri];
            let mut acc = BigRational::zero();
            for j in pc + 1..cols {
                if !row[j].is_zero() && !x[j].is_zero() {
                    acc += BigRational::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[pc] = -acc / BigRational::from_integer(row[pc].clone());
        }
        basis.push(x);
    }
    rref(&basis, cols)
}

/// Some solution of `M x = b`, if one exists.
pub fn solve(rows: &[Vec<BigRational>], b: &[BigRational], cols: usize) -> Option<Vec<BigRational>> {
    assert_eq!(rows.len(), b.len());
    let augmented: Vec<Vec<BigRational>> = rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(-bi.clone());
            r
        })
        .collect();
    let ns = nullspace(&augmented, cols + 1);
    // the rref basis has at most one vector whose last coordinate is a pivot
    let v = ns.iter().find(|v| !v[cols].is_zero())?;
    let scale = v[cols].clone();
    Some(v[..cols].iter().map(|x| x / &scale).collect())
}

pub fn is_zero_vector(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Largest |entry| as f64, for reporting.
pub fn max_abs(v: &[BigRational]) -> f64 {
    use num::traits::ToPrimitive;
    v.iter()
        .map(|x| x.abs().to_f64().unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn nullspace_of_rank_one() {
        // 2a + 2b = 0 on (a, b)
        let m = mat(&[&[2, 2]]);
        let ns = nullspace(&m, 2);
        assert_eq!(ns, vec![vec![q(1), q(-1)]]);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let m = mat(&[&[1, 2, 3], &[0, 1, 4], &[5, 6, 0]]);
        assert_eq!(rank(&m, 3), 3);
        assert!(nullspace(&m, 3).is_empty());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = mat(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, 1, 0]]);
        let ns = nullspace(&m, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let dot: BigRational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = mat(&[&[1, 1], &[1, -1]]);
        let x = solve(&m, &[q(3), q(1)], 2).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        let m = mat(&[&[1, 1], &[2, 2]]);
        assert!(solve(&m, &[q(1), q(3)], 2).is_none());
    }

    #[test]
    fn empty_matrix_kernel_is_everything() {
        let ns = nullspace(&[], 3);
        assert_eq!(ns.len(), 3);
    }
}
