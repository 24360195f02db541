//! Dense matrices and vectors over [`Scalar`], with the minor/cofactor/adjugate
//! machinery the subset expansions are built from.
//!
//! Exact determinants run fraction-free (Bareiss) on scaled integers; float
//! determinants use partially pivoted elimination. The 0×0 determinant is 1
//! and the 1×1 adjugate is `[[1]]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Mode, Scalar};
use crate::subset::SubsetIndex;

/// A vector of scalars in a single mode.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    mode: Mode,
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Result<Self> {
        let mode = uniform_mode(&entries)?
            .ok_or_else(|| Error::Shape("empty vector needs an explicit mode".into()))?;
        Ok(Vector { mode, entries })
    }

    pub fn empty(mode: Mode) -> Self {
        Vector {
            mode,
            entries: Vec::new(),
        }
    }

    pub fn from_ints(values: &[i64], mode: Mode) -> Self {
        Vector {
            mode,
            entries: values.iter().map(|&v| Scalar::from_int(v, mode)).collect(),
        }
    }

    pub fn zeros(len: usize, mode: Mode) -> Self {
        Vector {
            mode,
            entries: vec![Scalar::zero(mode); len],
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &Scalar> {
        self.entries.iter()
    }

    /// Bilinear dot product (no conjugation).
    pub fn dot(&self, other: &Vector) -> Result<Scalar> {
        if self.len() != other.len() {
            return Err(Error::Shape(format!(
                "dot product of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        let mut acc = Scalar::zero(self.mode);
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = acc + a * b;
        }
        Ok(acc)
    }

    pub fn norm_sq(&self) -> Scalar {
        self.dot(self).expect("same length")
    }

    /// Entries at the 1-based positions of `alpha`, ascending.
    pub fn restrict(&self, alpha: SubsetIndex) -> Result<Vector> {
        if alpha.ambient() != self.len() {
            return Err(Error::Shape(format!(
                "subset over {} applied to vector of length {}",
                alpha.ambient(),
                self.len()
            )));
        }
        Ok(Vector {
            mode: self.mode,
            entries: alpha
                .indices()
                .map(|k| self.entries[k - 1].clone())
                .collect(),
        })
    }

    /// Π_{k ∈ α} v_k, with the empty product equal to 1.
    pub fn product_over(&self, alpha: SubsetIndex) -> Result<Scalar> {
        if alpha.ambient() != self.len() {
            return Err(Error::Shape(format!(
                "subset over {} applied to vector of length {}",
                alpha.ambient(),
                self.len()
            )));
        }
        let mut acc = Scalar::one(self.mode);
        for k in alpha.indices() {
            acc = acc * &self.entries[k - 1];
        }
        Ok(acc)
    }

    pub fn product(&self) -> Scalar {
        let mut acc = Scalar::one(self.mode);
        for v in &self.entries {
            acc = acc * v;
        }
        acc
    }
}

/// Dense row-major matrix; rectangular unless an operation says otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n_rows: usize,
    n_cols: usize,
    mode: Mode,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(n_rows: usize, n_cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != n_rows * n_cols {
            return Err(Error::Shape(format!(
                "{n_rows}x{n_cols} matrix needs {} entries, got {}",
                n_rows * n_cols,
                entries.len()
            )));
        }
        let mode = uniform_mode(&entries)?
            .ok_or_else(|| Error::Shape("empty matrix needs an explicit mode".into()))?;
        Ok(Matrix {
            n_rows,
            n_cols,
            mode,
            entries,
        })
    }

    pub fn zeros(n_rows: usize, n_cols: usize, mode: Mode) -> Self {
        Matrix {
            n_rows,
            n_cols,
            mode,
            entries: vec![Scalar::zero(mode); n_rows * n_cols],
        }
    }

    pub fn identity(n: usize, mode: Mode) -> Self {
        let mut m = Self::zeros(n, n, mode);
        for i in 0..n {
            m.set(i, i, Scalar::one(mode));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.len());
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n_cols {
                return Err(Error::Shape(format!(
                    "ragged rows: row 1 has {n_cols} entries, row {} has {}",
                    i + 1,
                    r.len()
                )));
            }
        }
        Matrix::new(n_rows, n_cols, rows.into_iter().flatten().collect())
    }

    pub fn from_ints(rows: &[&[i64]], mode: Mode) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.len());
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| Scalar::from_int(v, mode)))
            .collect();
        Matrix {
            n_rows,
            n_cols,
            mode,
            entries,
        }
    }

    pub fn diag(v: &Vector) -> Self {
        let mut m = Self::zeros(v.len(), v.len(), v.mode());
        for i in 0..v.len() {
            m.set(i, i, v.get(i).clone());
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    /// Zero-based access.
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n_cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.mode(), self.mode, "entry mode must match matrix mode");
        self.entries[i * self.n_cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector {
            mode: self.mode,
            entries: (0..self.n_cols).map(|j| self.get(i, j).clone()).collect(),
        }
    }

    pub fn col(&self, j: usize) -> Vector {
        Vector {
            mode: self.mode,
            entries: (0..self.n_rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn rows(&self) -> Vec<Vector> {
        (0..self.n_rows).map(|i| self.row(i)).collect()
    }

    pub fn cols(&self) -> Vec<Vector> {
        (0..self.n_cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.n_cols, self.n_rows, self.mode);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if self.n_rows != other.n_rows || self.n_cols != other.n_cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.n_rows, self.n_cols, other.n_rows, other.n_cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a, b))
            .collect();
        Matrix::new(self.n_rows, self.n_cols, entries)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            mode: self.mode,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.n_cols != other.n_rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.n_rows, self.n_cols, other.n_rows, other.n_cols
            )));
        }
        let mut out = Matrix::zeros(self.n_rows, other.n_cols, self.mode);
        for i in 0..self.n_rows {
            for j in 0..other.n_cols {
                let mut acc = Scalar::zero(self.mode);
                for k in 0..self.n_cols {
                    acc = acc + self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        if self.n_cols != v.len() {
            return Err(Error::Shape(format!(
                "cannot apply {}x{} to vector of length {}",
                self.n_rows,
                self.n_cols,
                v.len()
            )));
        }
        let entries = (0..self.n_rows)
            .map(|i| {
                let mut acc = Scalar::zero(self.mode);
                for j in 0..self.n_cols {
                    acc = acc + self.get(i, j) * v.get(j);
                }
                acc
            })
            .collect();
        Ok(Vector {
            mode: self.mode,
            entries,
        })
    }

    pub fn trace(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::Shape("trace of a non-square matrix".into()));
        }
        let mut acc = Scalar::zero(self.mode);
        for i in 0..self.n_rows {
            acc = acc + self.get(i, i);
        }
        Ok(acc)
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.n_rows {
            for j in (i + 1)..self.n_cols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Max absolute row sum.
    pub fn norm_inf(&self) -> Scalar {
        let mut best = Scalar::zero(self.mode);
        for i in 0..self.n_rows {
            let mut sum = Scalar::zero(self.mode);
            for j in 0..self.n_cols {
                sum = sum + self.get(i, j).abs();
            }
            if sum.partial_cmp(&best) == Some(std::cmp::Ordering::Greater) {
                best = sum;
            }
        }
        best
    }

    /// Rows and columns at the 1-based positions of the masks, order preserved.
    pub fn submatrix(&self, rows: SubsetIndex, cols: SubsetIndex) -> Result<Matrix> {
        if rows.ambient() != self.n_rows || cols.ambient() != self.n_cols {
            return Err(Error::Shape(format!(
                "subset masks over {}x{} applied to {}x{} matrix",
                rows.ambient(),
                cols.ambient(),
                self.n_rows,
                self.n_cols
            )));
        }
        let row_idx: Vec<usize> = rows.indices().collect();
        let col_idx: Vec<usize> = cols.indices().collect();
        let mut entries = Vec::with_capacity(row_idx.len() * col_idx.len());
        for &i in &row_idx {
            for &j in &col_idx {
                entries.push(self.get(i - 1, j - 1).clone());
            }
        }
        Ok(Matrix {
            n_rows: row_idx.len(),
            n_cols: col_idx.len(),
            mode: self.mode,
            entries,
        })
    }

    /// Minor: determinant of the selected square submatrix.
    pub fn minor(&self, rows: SubsetIndex, cols: SubsetIndex) -> Result<Scalar> {
        if rows.len() != cols.len() {
            return Err(Error::Shape(format!(
                "minor needs |rows| = |cols|, got {} and {}",
                rows.len(),
                cols.len()
            )));
        }
        self.submatrix(rows, cols)?.determinant()
    }

    /// Principal cofactor A^α_α = M^α̂_α̂ (sign +1). Full set gives 1, empty
    /// set gives det C.
    pub fn principal_cofactor(&self, alpha: SubsetIndex) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::Shape(
                "principal cofactor of a non-square matrix".into(),
            ));
        }
        if alpha.ambient() != self.n_rows {
            return Err(Error::Shape(format!(
                "subset over {} applied to {}x{} matrix",
                alpha.ambient(),
                self.n_rows,
                self.n_cols
            )));
        }
        let hat = alpha.complement();
        self.minor(hat, hat)
    }

    /// Matrix of first-order cofactors A^i_j laid out at (i, j); its transpose
    /// satisfies Aᵀ·C = det(C)·I. The 1×1 adjugate is `[[1]]`.
    pub fn adjugate(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Shape("adjugate of a non-square matrix".into()));
        }
        let n = self.n_rows;
        if n == 0 {
            return Ok(Matrix::zeros(0, 0, self.mode));
        }
        if n == 1 {
            return Ok(Matrix::identity(1, self.mode));
        }
        let mut out = Matrix::zeros(n, n, self.mode);
        for i in 0..n {
            let rows = delete_index(i, n);
            for j in 0..n {
                let cols = delete_index(j, n);
                let m = self.submatrix(rows, cols)?.determinant()?;
                let signed = if (i + j) % 2 == 0 { m } else { -m };
                out.set(i, j, signed);
            }
        }
        Ok(out)
    }

    /// Determinant; 0×0 gives 1.
    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "determinant of a {}x{} matrix",
                self.n_rows, self.n_cols
            )));
        }
        match self.mode {
            Mode::Exact => Ok(Scalar::Exact(det_exact(self))),
            Mode::Float => Ok(Scalar::Float(det_float(self))),
        }
    }

    /// Solve A·x = b for symmetric positive definite A by eliminating without
    /// row exchanges; a nonpositive (exact) or below-threshold (float) pivot
    /// reports failure. Returns (solution, pivots).
    pub(crate) fn solve_spd(&self, b: &Vector) -> Result<Vector> {
        if !self.is_square() {
            return Err(Error::Shape("SPD solve needs a square matrix".into()));
        }
        let n = self.n_rows;
        if b.len() != n {
            return Err(Error::Shape(format!(
                "right-hand side length {} for {}x{} system",
                b.len(),
                n,
                n
            )));
        }
        let mut a: Vec<Scalar> = self.entries.clone();
        let mut rhs: Vec<Scalar> = b.entries.clone();
        let float_floor = match self.mode {
            Mode::Exact => None,
            Mode::Float => {
                let mut max = 0f64;
                for e in &a {
                    max = max.max(e.to_f64().abs());
                }
                Some(1e-10 * max.max(1.0))
            }
        };
        for k in 0..n {
            let pivot = a[k * n + k].clone();
            let ok = match (&self.mode, &float_floor) {
                (Mode::Exact, _) => pivot.is_positive(),
                (Mode::Float, Some(floor)) => pivot.to_f64() > *floor,
                _ => unreachable!(),
            };
            if !ok {
                return Err(Error::NotPositiveDefinite);
            }
            for i in (k + 1)..n {
                let factor = &a[i * n + k] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    a[i * n + j] = &a[i * n + j] - &(&factor * &a[k * n + j]);
                }
                rhs[i] = &rhs[i] - &(&factor * &rhs[k]);
            }
        }
        // back substitution
        let mut x = vec![Scalar::zero(self.mode); n];
        for k in (0..n).rev() {
            let mut acc = rhs[k].clone();
            for j in (k + 1)..n {
                acc = acc - &a[k * n + j] * &x[j];
            }
            x[k] = acc / &a[k * n + k];
        }
        Ok(Vector {
            mode: self.mode,
            entries: x,
        })
    }
}

/// Place an r×r block at the rows/columns selected by `alpha` inside an n×n
/// zero matrix.
pub fn embed_subset(block: &Matrix, alpha: SubsetIndex, n: usize) -> Result<Matrix> {
    let r = alpha.len();
    if block.n_rows() != r || block.n_cols() != r {
        return Err(Error::Shape(format!(
            "block is {}x{} but subset has {} elements",
            block.n_rows(),
            block.n_cols(),
            r
        )));
    }
    if alpha.ambient() != n {
        return Err(Error::Shape(format!(
            "subset over ambient {} embedded into size {}",
            alpha.ambient(),
            n
        )));
    }
    let idx: Vec<usize> = alpha.indices().collect();
    let mut out = Matrix::zeros(n, n, block.mode());
    for (bi, &i) in idx.iter().enumerate() {
        for (bj, &j) in idx.iter().enumerate() {
            out.set(i - 1, j - 1, block.get(bi, bj).clone());
        }
    }
    Ok(out)
}

/// Gram matrix of a vector family: entry (k, m) is the bilinear dot (x_k, x_m).
pub fn gram_matrix(vectors: &[Vector]) -> Result<Matrix> {
    if vectors.is_empty() {
        return Err(Error::Shape("Gram matrix of an empty family".into()));
    }
    let len = vectors[0].len();
    for (i, v) in vectors.iter().enumerate() {
        if v.len() != len {
            return Err(Error::Shape(format!(
                "ragged vector family: vector 1 has length {len}, vector {} has {}",
                i + 1,
                v.len()
            )));
        }
    }
    let m = vectors.len();
    let mode = vectors[0].mode();
    let mut out = Matrix::zeros(m, m, mode);
    for k in 0..m {
        for r in k..m {
            let d = vectors[k].dot(&vectors[r])?;
            out.set(r, k, d.clone());
            out.set(k, r, d);
        }
    }
    Ok(out)
}

/// Rank-one matrix a⊗a with entries a_k·a_r.
pub fn rank_one(a: &Vector) -> Matrix {
    let n = a.len();
    let mut out = Matrix::zeros(n, n, a.mode());
    for k in 0..n {
        for r in 0..n {
            out.set(k, r, a.get(k) * a.get(r));
        }
    }
    out
}

fn uniform_mode(entries: &[Scalar]) -> Result<Option<Mode>> {
    let mut mode = None;
    for e in entries {
        match mode {
            None => mode = Some(e.mode()),
            Some(m) if m != e.mode() => {
                return Err(Error::Shape("mixed exact/float entries".into()))
            }
            _ => {}
        }
    }
    Ok(mode)
}

/// Subset {1..n} \ {i+1} for a zero-based i (helper for first-order cofactors).
fn delete_index(i: usize, n: usize) -> SubsetIndex {
    let full = SubsetIndex::full(n).expect("n within word width");
    let mask = full.mask() & !(1u64 << i);
    SubsetIndex::new(mask, n).expect("mask in range")
}

/// Fraction-free determinant: scale rows to integers, run Bareiss, undo the
/// scaling. Exact for any rational entries.
fn det_exact(m: &Matrix) -> BigRational {
    let n = m.n_rows();
    if n == 0 {
        return BigRational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<BigInt> = Vec::with_capacity(n * n);
    for i in 0..n {
        let mut lcm = BigInt::one();
        for j in 0..n {
            let val = m.get(i, j).as_exact().expect("exact mode");
            lcm = lcm.lcm(val.denom());
        }
        for j in 0..n {
            let val = m.get(i, j).as_exact().expect("exact mode");
            a.push(val.numer() * (&lcm / val.denom()));
        }
        scale *= lcm;
    }

    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k * n + k].is_zero() {
            let swap = ((k + 1)..n).find(|&i| !a[i * n + k].is_zero());
            match swap {
                Some(i) => {
                    for j in 0..n {
                        a.swap(k * n + j, i * n + j);
                    }
                    sign = -sign;
                }
                None => return BigRational::zero(),
            }
        }
        if k == n - 1 {
            break;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = num / &prev;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = a[k * n + k].clone();
    }
    let mut det = a[(n - 1) * n + (n - 1)].clone();
    if sign < 0 {
        det = -det;
    }
    BigRational::new(det, scale)
}

impl Matrix {
    /// Smallest |pivot|/‖A‖_∞ seen during partially pivoted float
    /// elimination; 0.0 when elimination dies, ∞ for the 0×0 matrix. The
    /// singularity guards treat ≤ 1e−12 as effectively singular.
    pub(crate) fn min_scaled_pivot_float(&self) -> f64 {
        let n = self.n_rows();
        if n == 0 {
            return f64::INFINITY;
        }
        let norm = self.norm_inf().to_f64();
        if norm == 0.0 {
            return 0.0;
        }
        let mut a: Vec<f64> = self.entries.iter().map(|s| s.to_f64()).collect();
        let mut min_ratio = f64::INFINITY;
        for k in 0..n {
            let mut best = k;
            let mut best_abs = a[k * n + k].abs();
            for i in (k + 1)..n {
                let v = a[i * n + k].abs();
                if v > best_abs {
                    best = i;
                    best_abs = v;
                }
            }
            if best_abs == 0.0 {
                return 0.0;
            }
            min_ratio = min_ratio.min(best_abs / norm);
            if best != k {
                for j in 0..n {
                    a.swap(k * n + j, best * n + j);
                }
            }
            let pivot = a[k * n + k];
            for i in (k + 1)..n {
                let factor = a[i * n + k] / pivot;
                if factor == 0.0 {
                    continue;
                }
                for j in (k + 1)..n {
                    a[i * n + j] -= factor * a[k * n + j];
                }
            }
        }
        min_ratio
    }
}

/// Partially pivoted elimination on raw f64s.
fn det_float(m: &Matrix) -> f64 {
    let n = m.n_rows();
    if n == 0 {
        return 1.0;
    }
    let mut a: Vec<f64> = m.entries.iter().map(|s| s.to_f64()).collect();
    let mut det = 1.0f64;
    for k in 0..n {
        let mut best = k;
        let mut best_abs = a[k * n + k].abs();
        for i in (k + 1)..n {
            let v = a[i * n + k].abs();
            if v > best_abs {
                best = i;
                best_abs = v;
            }
        }
        if best_abs == 0.0 {
            return 0.0;
        }
        if best != k {
            for j in 0..n {
                a.swap(k * n + j, best * n + j);
            }
            det = -det;
        }
        let pivot = a[k * n + k];
        det *= pivot;
        for i in (k + 1)..n {
            let factor = a[i * n + k] / pivot;
            if factor == 0.0 {
                continue;
            }
            for j in (k + 1)..n {
                a[i * n + j] -= factor * a[k * n + j];
            }
        }
    }
    det
}
