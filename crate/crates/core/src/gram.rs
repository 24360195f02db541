//! Gram determinants, the squared distance from a vector to a span (both the
//! determinant-ratio and the linear-solve form), and the shifted-Gram Δ
//! functional.

use crate::error::{Error, Result};
use crate::matrix::{gram_matrix, Matrix, Vector};
use crate::scalar::{Mode, Scalar};

/// Γ(x₁, …, x_n) = det γ(x₁, …, x_n); nonnegative for real vectors.
pub fn gram_det(vectors: &[Vector]) -> Result<Scalar> {
    gram_matrix(vectors)?.determinant()
}

/// A vector f₀ and the spanning family f₁…f_n it is measured against.
#[derive(Debug, Clone, PartialEq)]
pub struct SpanProblem {
    pub f0: Vector,
    pub basis: Vec<Vector>,
}

impl SpanProblem {
    pub fn new(f0: Vector, basis: Vec<Vector>) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::Shape("span problem needs a nonempty basis".into()));
        }
        let len = f0.len();
        for (i, v) in basis.iter().enumerate() {
            if v.len() != len {
                return Err(Error::Shape(format!(
                    "basis vector {} has length {}, expected {len}",
                    i + 1,
                    v.len()
                )));
            }
        }
        Ok(SpanProblem { f0, basis })
    }

    fn family_with_f0(&self) -> Vec<Vector> {
        let mut fam = Vec::with_capacity(self.basis.len() + 1);
        fam.push(self.f0.clone());
        fam.extend(self.basis.iter().cloned());
        fam
    }
}

fn check_gram_nondegenerate(det: &Scalar, gram: &Matrix) -> Result<()> {
    let degenerate = match det.mode() {
        Mode::Exact => det.is_zero(),
        Mode::Float => gram.min_scaled_pivot_float() <= 1e-12,
    };
    if degenerate {
        Err(Error::DegenerateBasis)
    } else {
        Ok(())
    }
}

/// d²(f₀, span) = Γ(f₀, f₁…f_n)/Γ(f₁…f_n).
pub fn distance_sq_gram(p: &SpanProblem) -> Result<Scalar> {
    let basis_gram = gram_matrix(&p.basis)?;
    let denom = basis_gram.determinant()?;
    check_gram_nondegenerate(&denom, &basis_gram)?;
    let numer = gram_det(&p.family_with_f0())?;
    Ok(numer / denom)
}

/// Coefficients t solving the normal equations γ(basis)·t = ((f_k, f₀))_k;
/// the projection of f₀ onto the span is Σ t_k·f_k.
pub fn span_coefficients(p: &SpanProblem) -> Result<Vector> {
    let gram = gram_matrix(&p.basis)?;
    let b = Vector::new(
        p.basis
            .iter()
            .map(|f| f.dot(&p.f0))
            .collect::<Result<Vec<_>>>()?,
    )?;
    gram.solve_spd(&b).map_err(|e| match e {
        Error::NotPositiveDefinite => Error::DegenerateBasis,
        other => other,
    })
}

/// d²(f₀, span) = (f₀, f₀) − (A⁻¹b, b) with A the basis Gram matrix and
/// b = ((f_k, f₀))_k. Agrees exactly with [`distance_sq_gram`].
pub fn distance_sq_solve(p: &SpanProblem) -> Result<Scalar> {
    let t = span_coefficients(p)?;
    let b = Vector::new(
        p.basis
            .iter()
            .map(|f| f.dot(&p.f0))
            .collect::<Result<Vec<_>>>()?,
    )?;
    Ok(p.f0.norm_sq() - t.dot(&b)?)
}

/// Δ(y₁, …, y_k) = det(I + γ(y₁…y_k))/det(I + γ(y₂…y_k)) − 1, with the
/// empty-family denominator equal to 1.
pub fn delta_functional(vectors: &[Vector]) -> Result<Scalar> {
    if vectors.is_empty() {
        return Err(Error::Shape(
            "delta functional needs at least one vector".into(),
        ));
    }
    let mode = vectors[0].mode();
    let numer = shifted_gram_det(vectors, mode)?;
    let denom = shifted_gram_det(&vectors[1..], mode)?;
    Ok(numer / denom - Scalar::one(mode))
}

/// det(I_k + γ(family)); 1 for the empty family.
pub(crate) fn shifted_gram_det(vectors: &[Vector], mode: Mode) -> Result<Scalar> {
    if vectors.is_empty() {
        return Ok(Scalar::one(mode));
    }
    Matrix::identity(vectors.len(), mode)
        .add(&gram_matrix(vectors)?)?
        .determinant()
}
