//! Shared test oracles, deliberately independent of the library's own
//! computation paths: determinants by Laplace expansion, inverses by
//! Gauss–Jordan elimination, and seeded random instance generators.
#![allow(dead_code)] // each integration-test binary uses a different subset

use genchar_core::{Matrix, Mode, Scalar, SubsetIndex, Vector};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn rand_matrix(rng: &mut StdRng, n_rows: usize, n_cols: usize, mode: Mode) -> Matrix {
    if n_rows * n_cols == 0 {
        return Matrix::zeros(n_rows, n_cols, mode);
    }
    let entries = (0..n_rows * n_cols)
        .map(|_| Scalar::from_int(rng.random_range(-9..=9), mode))
        .collect();
    Matrix::new(n_rows, n_cols, entries).expect("well-formed random matrix")
}

pub fn rand_vector(rng: &mut StdRng, len: usize, mode: Mode) -> Vector {
    let values: Vec<i64> = (0..len).map(|_| rng.random_range(-9..=9)).collect();
    Vector::from_ints(&values, mode)
}

/// Random vector with every entry nonzero.
pub fn rand_nonzero_vector(rng: &mut StdRng, len: usize, mode: Mode) -> Vector {
    let values: Vec<i64> = (0..len)
        .map(|_| {
            let v = rng.random_range(1..=9);
            if rng.random_bool(0.5) {
                -v
            } else {
                v
            }
        })
        .collect();
    Vector::from_ints(&values, mode)
}

/// Determinant by recursive Laplace expansion along the first row.
pub fn laplace_det(m: &Matrix) -> Scalar {
    assert!(m.is_square());
    let n = m.n_rows();
    if n == 0 {
        return Scalar::one(m.mode());
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = Scalar::zero(m.mode());
    let rows = SubsetIndex::from_indices(&(2..=n).collect::<Vec<_>>(), n).unwrap();
    for j in 0..n {
        if m.get(0, j).is_zero() {
            continue;
        }
        let cols: Vec<usize> = (1..=n).filter(|&c| c != j + 1).collect();
        let cols = SubsetIndex::from_indices(&cols, n).unwrap();
        let sub = m.submatrix(rows, cols).unwrap();
        let term = m.get(0, j) * &laplace_det(&sub);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Inverse by Gauss–Jordan elimination with partial pivoting; `None` when
/// singular (exact zero pivot column, or all-zero pivot column in float).
pub fn gauss_jordan_inverse(m: &Matrix) -> Option<Matrix> {
    assert!(m.is_square());
    let n = m.n_rows();
    let mode = m.mode();
    let mut a = m.clone();
    let mut inv = Matrix::identity(n, mode);
    for k in 0..n {
        let pivot_row = (k..n).max_by(|&i, &j| {
            a.get(i, k)
                .abs()
                .partial_cmp(&a.get(j, k).abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a.get(pivot_row, k).is_zero() {
            return None;
        }
        if pivot_row != k {
            for j in 0..n {
                let tmp = a.get(k, j).clone();
                a.set(k, j, a.get(pivot_row, j).clone());
                a.set(pivot_row, j, tmp);
                let tmp = inv.get(k, j).clone();
                inv.set(k, j, inv.get(pivot_row, j).clone());
                inv.set(pivot_row, j, tmp);
            }
        }
        let pivot = a.get(k, k).clone();
        for j in 0..n {
            a.set(k, j, a.get(k, j) / &pivot);
            inv.set(k, j, inv.get(k, j) / &pivot);
        }
        for i in 0..n {
            if i == k || a.get(i, k).is_zero() {
                continue;
            }
            let factor = a.get(i, k).clone();
            for j in 0..n {
                a.set(i, j, a.get(i, j) - &(&factor * a.get(k, j)));
                inv.set(i, j, inv.get(i, j) - &(&factor * inv.get(k, j)));
            }
        }
    }
    Some(inv)
}

/// Least-squares residual norm²: f0 − Σ t_k f_k with t from the normal
/// equations solved through the oracle inverse.
pub fn residual_norm_sq(f0: &Vector, basis: &[Vector]) -> Option<Scalar> {
    let gram = genchar_core::gram_matrix(basis).ok()?;
    let inv = gauss_jordan_inverse(&gram)?;
    let b = Vector::new(basis.iter().map(|f| f.dot(f0).unwrap()).collect()).unwrap();
    let t = inv.mul_vec(&b).unwrap();
    let entries: Vec<Scalar> = (0..f0.len())
        .map(|i| {
            let mut acc = f0.get(i).clone();
            for (k, f) in basis.iter().enumerate() {
                acc = acc - t.get(k) * f.get(i);
            }
            acc
        })
        .collect();
    Some(Vector::new(entries).unwrap().norm_sq())
}
