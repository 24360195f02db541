//! Exact linear algebra around the subset expansion of det(C + diag(λ)):
//! the full 2ⁿ-coefficient multilinear polynomial, the matching subset-sum
//! form of (C + diag(λ))⁻¹ and its quadratic form, Gram-determinant geometry,
//! closed-form constrained quadratic minima, and truncation-sequence
//! divergence diagnostics.
//!
//! Everything runs in one of two scalar modes: exact arbitrary-precision
//! rationals (the default, bit-exact) or binary64 floats.
//!
//! ```
//! use genchar_core::{eval_gen_charpoly, gen_charpoly, Matrix, Mode, Vector};
//!
//! let c = Matrix::from_ints(&[&[1, 2], &[3, 4]], Mode::Exact);
//! let p = gen_charpoly(&c)?;
//! // det(C + diag(5, 7)) from the precomputed subset coefficients
//! let lambda = Vector::from_ints(&[5, 7], Mode::Exact);
//! assert_eq!(eval_gen_charpoly(&p, &lambda)?.to_string(), "60");
//! # Ok::<(), genchar_core::Error>(())
//! ```

pub mod charpoly;
pub mod error;
pub mod gram;
pub mod matrix;
pub mod optimize;
pub mod resolvent;
pub mod scalar;
pub mod subset;

pub use charpoly::{
    char_coeff_minor_sum, char_coeff_trace_det, char_coeffs_faddeev, eval_gen_charpoly,
    eval_gen_charpoly_minor_form, eval_gen_charpoly_minor_form_with_cap, gen_charpoly,
    gen_charpoly_with_cap, CharPolyCoeffs, GenCharPoly, DEFAULT_SUBSET_CAP, FLOAT_SUBSET_CAP,
};
pub use error::{Error, Result};
pub use gram::{
    delta_functional, distance_sq_gram, distance_sq_solve, gram_det, span_coefficients, SpanProblem,
};
pub use matrix::{embed_subset, gram_matrix, rank_one, Matrix, Vector};
pub use optimize::{
    det_ratio_sequence, gram_ratio_sequence, min_quadratic_constrained, min_weighted_sum,
    min_weighted_sum_b, ones_plus_diag_distance, ones_plus_diag_gram_ratio,
    truncated_quadform_sequence, DivergenceReport, SequenceKind, SequenceSpec, Verdict,
};
pub use resolvent::{
    classical_resolvent, classical_resolvent_with_cap, eval_gen_resolvent, gen_resolvent_terms,
    gen_resolvent_terms_with_cap, gram_reduction_ratio, one_plus_quadform, quad_form_gen,
    quad_form_gen_with_cap, rank_one_det_ratio, GenResolventTerms, GramReductionInput,
};
pub use scalar::{Mode, Scalar};
pub use subset::SubsetIndex;
