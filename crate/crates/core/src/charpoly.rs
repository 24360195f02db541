//! Characteristic-polynomial coefficients by three routes, and the full
//! subset-indexed expansion of det(C + diag(λ)).
//!
//! The coefficient convention is p_C(t) = Σ_{k=0}^n t^{n−k}·(−1)^k·c_k with
//! c_0 = 1, so c_1 is the trace and c_n the determinant.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::{Mode, Scalar};
use crate::subset::SubsetIndex;

/// Default cap on the ambient size for 2ⁿ subset enumeration.
pub const DEFAULT_SUBSET_CAP: usize = 16;
/// Hard ceiling for explicit overrides in float mode.
pub const FLOAT_SUBSET_CAP: usize = 24;

pub(crate) fn check_subset_cap(n: usize, cap: usize, mode: Mode) -> Result<()> {
    let hard = match mode {
        Mode::Exact => DEFAULT_SUBSET_CAP,
        Mode::Float => FLOAT_SUBSET_CAP,
    };
    let effective = cap.min(hard);
    if n > effective {
        return Err(Error::Capacity { n, cap: effective });
    }
    Ok(())
}

/// Coefficients c_0..c_n of p_C(t) = Σ t^{n−k}·(−1)^k·c_k.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPolyCoeffs {
    n: usize,
    c: Vec<Scalar>,
}

impl CharPolyCoeffs {
    pub fn n(&self) -> usize {
        self.n
    }

    /// c_k for 0 ≤ k ≤ n.
    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.c[k]
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    /// Evaluate p_C(t) by Horner's scheme.
    pub fn eval_at(&self, t: &Scalar) -> Scalar {
        let mut acc = self.c[0].clone();
        for k in 1..=self.n {
            let signed = if k % 2 == 0 {
                self.c[k].clone()
            } else {
                -&self.c[k]
            };
            acc = acc * t + signed;
        }
        acc
    }
}

/// Faddeev–LeVerrier recursion: one matrix product per coefficient.
pub fn char_coeffs_faddeev(c: &Matrix) -> Result<CharPolyCoeffs> {
    if !c.is_square() {
        return Err(Error::Shape(
            "characteristic polynomial of a non-square matrix".into(),
        ));
    }
    let n = c.n_rows();
    let mode = c.mode();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(Scalar::one(mode));
    let mut m = Matrix::identity(n, mode);
    for k in 1..=n {
        let am = c.matmul(&m)?;
        let tr = am.trace()?;
        // e_k = (−1)^{k+1}·tr(C·M_k)/k
        let e_k = {
            let v = tr / Scalar::from_int(k as i64, mode);
            if k % 2 == 1 {
                v
            } else {
                -v
            }
        };
        if k < n {
            // M_{k+1} = C·M_k − (−1)^{k+1}·e_k·I
            let shift = if k % 2 == 1 { -&e_k } else { e_k.clone() };
            m = am.add(&Matrix::identity(n, mode).scale(&shift))?;
        }
        coeffs.push(e_k);
    }
    Ok(CharPolyCoeffs { n, c: coeffs })
}

/// c_k as (1/k!) times the determinant of the k×k banded trace matrix.
pub fn char_coeff_trace_det(c: &Matrix, k: usize) -> Result<Scalar> {
    if !c.is_square() {
        return Err(Error::Shape(
            "trace-determinant coefficient of a non-square matrix".into(),
        ));
    }
    let n = c.n_rows();
    if k == 0 {
        return Ok(Scalar::one(c.mode()));
    }
    if k > n {
        return Err(Error::Shape(format!(
            "coefficient index {k} exceeds size {n}"
        )));
    }
    let mode = c.mode();
    // traces of C, C², …, C^k
    let mut traces = Vec::with_capacity(k);
    let mut power = c.clone();
    traces.push(power.trace()?);
    for _ in 1..k {
        power = power.matmul(c)?;
        traces.push(power.trace()?);
    }
    let mut banded = Matrix::zeros(k, k, mode);
    for i in 1..=k {
        for j in 1..=k {
            if j <= i {
                banded.set(i - 1, j - 1, traces[i - j].clone());
            } else if j == i + 1 {
                banded.set(i - 1, j - 1, Scalar::from_int((k - i) as i64, mode));
            }
        }
    }
    let det = banded.determinant()?;
    let mut factorial = Scalar::one(mode);
    for i in 2..=k {
        factorial = factorial * Scalar::from_int(i as i64, mode);
    }
    Ok(det / factorial)
}

/// c_k as the sum of all principal minors of order k.
pub fn char_coeff_minor_sum(c: &Matrix, k: usize) -> Result<Scalar> {
    if !c.is_square() {
        return Err(Error::Shape(
            "minor-sum coefficient of a non-square matrix".into(),
        ));
    }
    let n = c.n_rows();
    if k > n {
        return Err(Error::Shape(format!(
            "coefficient index {k} exceeds size {n}"
        )));
    }
    let mut acc = Scalar::zero(c.mode());
    for alpha in SubsetIndex::all_of_size(n, k)? {
        acc = acc + c.minor(alpha, alpha)?;
    }
    Ok(acc)
}

/// All 2ⁿ coefficients of det(C + diag(λ)), indexed by subset mask.
///
/// `coeff[α]` is the principal cofactor A^α_α(C); in particular `coeff[∅]`
/// is det C and `coeff[full]` is 1.
#[derive(Debug, Clone, PartialEq)]
pub struct GenCharPoly {
    n: usize,
    mode: Mode,
    coeff: Vec<Scalar>,
}

impl GenCharPoly {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn coeff(&self, alpha: SubsetIndex) -> Result<&Scalar> {
        if alpha.ambient() != self.n {
            return Err(Error::Shape(format!(
                "subset over {} indexing a {}-variable polynomial",
                alpha.ambient(),
                self.n
            )));
        }
        Ok(&self.coeff[alpha.mask() as usize])
    }

    /// Coefficients in ascending mask order.
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeff
    }
}

pub fn gen_charpoly(c: &Matrix) -> Result<GenCharPoly> {
    gen_charpoly_with_cap(c, DEFAULT_SUBSET_CAP)
}

pub fn gen_charpoly_with_cap(c: &Matrix, cap: usize) -> Result<GenCharPoly> {
    if !c.is_square() {
        return Err(Error::Shape(
            "subset expansion of a non-square matrix".into(),
        ));
    }
    let n = c.n_rows();
    check_subset_cap(n, cap, c.mode())?;
    let mut coeff = Vec::with_capacity(1usize << n);
    for alpha in SubsetIndex::all(n)? {
        coeff.push(c.principal_cofactor(alpha)?);
    }
    Ok(GenCharPoly {
        n,
        mode: c.mode(),
        coeff,
    })
}

/// Evaluate Σ_α λ_α·`coeff[α]` by folding the coefficient array one variable at
/// a time (2ⁿ−1 multiply-adds).
///
/// All-integer exact inputs fold in checked i128 arithmetic and fall back to
/// full rationals on overflow; float inputs fold on raw f64 in the same
/// operation order.
pub fn eval_gen_charpoly(p: &GenCharPoly, lambda: &Vector) -> Result<Scalar> {
    if lambda.len() != p.n {
        return Err(Error::Shape(format!(
            "lambda has length {}, polynomial has {} variables",
            lambda.len(),
            p.n
        )));
    }
    if p.n > 0 && lambda.mode() != p.mode {
        return Err(Error::Shape(
            "lambda mode differs from coefficient mode".into(),
        ));
    }
    match p.mode {
        Mode::Float => {
            let coeffs: Vec<f64> = p.coeff.iter().map(Scalar::to_f64).collect();
            let lams: Vec<f64> = lambda.iter().map(Scalar::to_f64).collect();
            Ok(Scalar::Float(fold_f64(coeffs, &lams)))
        }
        Mode::Exact => {
            if let Some(v) = try_fold_i128(&p.coeff, lambda) {
                return Ok(v);
            }
            let mut work = p.coeff.clone();
            let mut len = work.len();
            for bit in (0..p.n).rev() {
                let lam = lambda.get(bit);
                let half = len / 2;
                for m in 0..half {
                    let hi = &work[half + m] * lam;
                    work[m] = &work[m] + &hi;
                }
                len = half;
            }
            Ok(work.swap_remove(0))
        }
    }
}

fn fold_f64(mut work: Vec<f64>, lambda: &[f64]) -> f64 {
    let mut len = work.len();
    for bit in (0..lambda.len()).rev() {
        let lam = lambda[bit];
        let half = len / 2;
        for m in 0..half {
            work[m] += lam * work[half + m];
        }
        len = half;
    }
    work[0]
}

fn scalar_to_i128(s: &Scalar) -> Option<i128> {
    use num_traits::ToPrimitive;
    let r = s.as_exact()?;
    if !r.is_integer() {
        return None;
    }
    r.numer().to_i128()
}

fn try_fold_i128(coeffs: &[Scalar], lambda: &Vector) -> Option<Scalar> {
    let mut work: Vec<i128> = coeffs.iter().map(scalar_to_i128).collect::<Option<_>>()?;
    let lams: Vec<i128> = lambda.iter().map(scalar_to_i128).collect::<Option<_>>()?;
    let mut len = work.len();
    for bit in (0..lams.len()).rev() {
        let lam = lams[bit];
        let half = len / 2;
        for m in 0..half {
            work[m] = work[m].checked_add(lam.checked_mul(work[half + m])?)?;
        }
        len = half;
    }
    Some(Scalar::Exact(num_rational::BigRational::from(
        num_bigint::BigInt::from(work[0]),
    )))
}

pub fn eval_gen_charpoly_minor_form(c: &Matrix, lambda: &Vector) -> Result<Scalar> {
    eval_gen_charpoly_minor_form_with_cap(c, lambda, DEFAULT_SUBSET_CAP)
}

/// The complementary route: (Π λ_k)·Σ_α M^α_α(C)/λ_α, minors computed
/// directly per subset. Requires every λ_k ≠ 0.
pub fn eval_gen_charpoly_minor_form_with_cap(
    c: &Matrix,
    lambda: &Vector,
    cap: usize,
) -> Result<Scalar> {
    if !c.is_square() {
        return Err(Error::Shape(
            "subset expansion of a non-square matrix".into(),
        ));
    }
    let n = c.n_rows();
    check_subset_cap(n, cap, c.mode())?;
    if lambda.len() != n {
        return Err(Error::Shape(format!(
            "lambda has length {}, matrix has size {}",
            lambda.len(),
            n
        )));
    }
    if n > 0 && lambda.mode() != c.mode() {
        return Err(Error::Shape("lambda mode differs from matrix mode".into()));
    }
    if lambda.iter().any(Scalar::is_zero) {
        return Err(Error::Domain(
            "minor form needs every lambda nonzero; use the cofactor form".into(),
        ));
    }
    let mut acc = Scalar::zero(c.mode());
    for alpha in SubsetIndex::all(n)? {
        let minor = c.minor(alpha, alpha)?;
        if minor.is_zero() {
            continue;
        }
        acc = acc + minor / lambda.product_over(alpha)?;
    }
    Ok(lambda.product() * acc)
}
