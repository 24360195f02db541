//! The subset-sum resolvent: (C + diag(λ))⁻¹ assembled from embedded
//! adjugate-transposes of principal submatrices, the quadratic form
//! (C(λ)⁻¹a, a) evaluated without forming the inverse, the classical
//! resolvent (tI − C)⁻¹, the rank-one determinant ratio, and the reduction of
//! 1 + (C(λ)⁻¹a, a) to a ratio of small Gram-shifted determinants.

use crate::charpoly::{char_coeffs_faddeev, check_subset_cap, DEFAULT_SUBSET_CAP};
use crate::error::{Error, Result};
use crate::matrix::{embed_subset, gram_matrix, rank_one, Matrix, Vector};
use crate::scalar::{Mode, Scalar};
use crate::subset::SubsetIndex;

/// Reject an effectively singular matrix. Exact mode tests the determinant
/// for true zero; float mode runs pivoted elimination and treats a scaled
/// pivot at or below 1e−12 as singular.
fn check_nonsingular(det: &Scalar, m: &Matrix) -> Result<()> {
    let singular = match det.mode() {
        Mode::Exact => det.is_zero(),
        Mode::Float => m.min_scaled_pivot_float() <= 1e-12,
    };
    if singular {
        Err(Error::Singular { det: det.clone() })
    } else {
        Ok(())
    }
}

fn build_shifted(c: &Matrix, lambda: &Vector) -> Result<Matrix> {
    if !c.is_square() {
        return Err(Error::Shape("diagonal shift of a non-square matrix".into()));
    }
    if lambda.len() != c.n_rows() {
        return Err(Error::Shape(format!(
            "lambda has length {}, matrix has size {}",
            lambda.len(),
            c.n_rows()
        )));
    }
    c.add(&Matrix::diag(lambda))
}

/// Aᵀ(C_α): transpose of the cofactor matrix of the selected principal
/// submatrix. For |α| = 1 this is [[1]] by convention.
fn adjugate_transpose_block(c: &Matrix, alpha: SubsetIndex) -> Result<Matrix> {
    Ok(c.submatrix(alpha, alpha)?.adjugate()?.transpose())
}

/// All 2ⁿ−1 embedded adjugate-transposes of C's principal submatrices,
/// keyed by nonempty subset mask.
#[derive(Debug, Clone, PartialEq)]
pub struct GenResolventTerms {
    n: usize,
    mode: Mode,
    terms: Vec<Matrix>,
}

impl GenResolventTerms {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The embedded n×n term for a nonempty subset.
    pub fn term(&self, alpha: SubsetIndex) -> Result<&Matrix> {
        if alpha.ambient() != self.n {
            return Err(Error::Shape(format!(
                "subset over {} indexing terms over {}",
                alpha.ambient(),
                self.n
            )));
        }
        if alpha.is_empty() {
            return Err(Error::Shape(
                "resolvent terms are indexed by nonempty subsets".into(),
            ));
        }
        Ok(&self.terms[(alpha.mask() - 1) as usize])
    }
}

pub fn gen_resolvent_terms(c: &Matrix) -> Result<GenResolventTerms> {
    gen_resolvent_terms_with_cap(c, DEFAULT_SUBSET_CAP)
}

pub fn gen_resolvent_terms_with_cap(c: &Matrix, cap: usize) -> Result<GenResolventTerms> {
    if !c.is_square() {
        return Err(Error::Shape(
            "resolvent terms of a non-square matrix".into(),
        ));
    }
    let n = c.n_rows();
    check_subset_cap(n, cap, c.mode())?;
    let mut terms = Vec::with_capacity((1usize << n) - 1);
    for alpha in SubsetIndex::all(n)?.skip(1) {
        let block = adjugate_transpose_block(c, alpha)?;
        terms.push(embed_subset(&block, alpha, n)?);
    }
    Ok(GenResolventTerms {
        n,
        mode: c.mode(),
        terms,
    })
}

/// (C + diag(λ))⁻¹ = (Π λ_k / P_C(λ)) · Σ_{α≠∅} `terms[α]`/λ_α.
///
/// Every λ_k must be nonzero and P_C(λ) must not vanish.
pub fn eval_gen_resolvent(
    terms: &GenResolventTerms,
    c: &Matrix,
    lambda: &Vector,
) -> Result<Matrix> {
    let n = terms.n();
    if c.n_rows() != n || c.n_cols() != n {
        return Err(Error::Shape(format!(
            "terms built for size {n}, matrix is {}x{}",
            c.n_rows(),
            c.n_cols()
        )));
    }
    let shifted = build_shifted(c, lambda)?;
    if lambda.iter().any(Scalar::is_zero) {
        return Err(Error::Domain(
            "generalized resolvent needs every lambda nonzero".into(),
        ));
    }
    let p = shifted.determinant()?;
    check_nonsingular(&p, &shifted)?;

    let mode = c.mode();
    let mut acc = Matrix::zeros(n, n, mode);
    for alpha in SubsetIndex::all(n)?.skip(1) {
        let weight = lambda.product_over(alpha)?.recip();
        acc = acc.add(&terms.term(alpha)?.scale(&weight))?;
    }
    let factor = lambda.product() / p;
    Ok(acc.scale(&factor))
}

/// (C(λ)⁻¹a, a) via the subset sum over (Aᵀ(C_α)·a_α, a_α)/λ_α, never
/// materializing the inverse.
///
/// ```
/// use genchar_core::{quad_form_gen, Matrix, Mode, Vector};
///
/// let ones = Matrix::from_ints(&[&[1, 1], &[1, 1]], Mode::Exact);
/// let lambda = Vector::from_ints(&[1, 1], Mode::Exact);
/// let a = Vector::from_ints(&[1, 1], Mode::Exact);
/// assert_eq!(quad_form_gen(&ones, &lambda, &a)?.to_string(), "2/3");
/// # Ok::<(), genchar_core::Error>(())
/// ```
pub fn quad_form_gen(c: &Matrix, lambda: &Vector, a: &Vector) -> Result<Scalar> {
    quad_form_gen_with_cap(c, lambda, a, DEFAULT_SUBSET_CAP)
}

pub fn quad_form_gen_with_cap(
    c: &Matrix,
    lambda: &Vector,
    a: &Vector,
    cap: usize,
) -> Result<Scalar> {
    let shifted = build_shifted(c, lambda)?;
    let n = c.n_rows();
    check_subset_cap(n, cap, c.mode())?;
    if a.len() != n {
        return Err(Error::Shape(format!(
            "vector has length {}, matrix has size {n}",
            a.len()
        )));
    }
    if lambda.iter().any(Scalar::is_zero) {
        return Err(Error::Domain(
            "generalized resolvent needs every lambda nonzero".into(),
        ));
    }
    let p = shifted.determinant()?;
    check_nonsingular(&p, &shifted)?;

    let mut acc = Scalar::zero(c.mode());
    for alpha in SubsetIndex::all(n)?.skip(1) {
        let block = adjugate_transpose_block(c, alpha)?;
        let a_sub = a.restrict(alpha)?;
        let form = block.mul_vec(&a_sub)?.dot(&a_sub)?;
        if form.is_zero() {
            continue;
        }
        acc = acc + form / lambda.product_over(alpha)?;
    }
    Ok(lambda.product() / p * acc)
}

/// Classical resolvent (tI − C)⁻¹ assembled as
/// (1/p_C(t))·Σ_k t^{n−k}(−1)^{k+1} Σ_{|α|=k} embedded Aᵀ(C_α).
pub fn classical_resolvent(c: &Matrix, t: &Scalar) -> Result<Matrix> {
    classical_resolvent_with_cap(c, t, DEFAULT_SUBSET_CAP)
}

pub fn classical_resolvent_with_cap(c: &Matrix, t: &Scalar, cap: usize) -> Result<Matrix> {
    if !c.is_square() {
        return Err(Error::Shape("resolvent of a non-square matrix".into()));
    }
    let n = c.n_rows();
    check_subset_cap(n, cap, c.mode())?;
    let mode = c.mode();
    let p = char_coeffs_faddeev(c)?;
    let p_t = p.eval_at(t);
    let shifted = Matrix::identity(n, mode).scale(t).sub(c)?;
    check_nonsingular(&p_t, &shifted)?;

    let mut acc = Matrix::zeros(n, n, mode);
    for alpha in SubsetIndex::all(n)?.skip(1) {
        let r = alpha.len();
        let block = adjugate_transpose_block(c, alpha)?;
        let mut weight = t.powi((n - r) as u32);
        if r % 2 == 0 {
            weight = -weight;
        }
        acc = acc.add(&embed_subset(&block, alpha, n)?.scale(&weight))?;
    }
    Ok(acc.scale(&p_t.recip()))
}

/// det(A + a⊗a)/det(A); equals 1 + (A⁻¹a, a).
pub fn rank_one_det_ratio(a_mat: &Matrix, a: &Vector) -> Result<Scalar> {
    if !a_mat.is_square() {
        return Err(Error::Shape(
            "rank-one update of a non-square matrix".into(),
        ));
    }
    if a.len() != a_mat.n_rows() {
        return Err(Error::Shape(format!(
            "vector has length {}, matrix has size {}",
            a.len(),
            a_mat.n_rows()
        )));
    }
    let det = a_mat.determinant()?;
    check_nonsingular(&det, a_mat)?;
    let bumped = a_mat.add(&rank_one(a))?.determinant()?;
    Ok(bumped / det)
}

/// 1 + (C(λ)⁻¹a, a) as det(C(λ) + a⊗a)/det(C(λ)); no inverse formed.
pub fn one_plus_quadform(c: &Matrix, lambda: &Vector, a: &Vector) -> Result<Scalar> {
    let shifted = build_shifted(c, lambda)?;
    if a.len() != c.n_rows() {
        return Err(Error::Shape(format!(
            "vector has length {}, matrix has size {}",
            a.len(),
            c.n_rows()
        )));
    }
    let det = shifted.determinant()?;
    check_nonsingular(&det, &shifted)?;
    let bumped = shifted.add(&rank_one(a))?.determinant()?;
    Ok(bumped / det)
}

/// Input for the Gram-reduction ratio: an m×n coefficient matrix whose first
/// row is the vector a and whose remaining rows stack the family g_k
/// column-wise, plus positive weights λ.
#[derive(Debug, Clone, PartialEq)]
pub struct GramReductionInput {
    matrix: Matrix,
    lambda: Vector,
}

impl GramReductionInput {
    pub fn new(matrix: Matrix, lambda: Vector) -> Result<Self> {
        if matrix.n_rows() == 0 {
            return Err(Error::Shape(
                "coefficient matrix needs at least one row".into(),
            ));
        }
        if lambda.len() != matrix.n_cols() {
            return Err(Error::Shape(format!(
                "lambda has length {}, matrix has {} columns",
                lambda.len(),
                matrix.n_cols()
            )));
        }
        if matrix.n_cols() > 0 && matrix.mode() != lambda.mode() {
            return Err(Error::Shape("lambda mode differs from matrix mode".into()));
        }
        Ok(GramReductionInput { matrix, lambda })
    }

    pub fn m(&self) -> usize {
        self.matrix.n_rows()
    }

    pub fn n(&self) -> usize {
        self.matrix.n_cols()
    }

    /// First row: the vector paired with the quadratic form.
    pub fn a(&self) -> Vector {
        self.matrix.row(0)
    }

    pub fn lambda(&self) -> &Vector {
        &self.lambda
    }

    /// The Gram matrix γ(g₁, …, g_n) of the column family below the first
    /// row (n×n, zero when m = 1).
    pub fn gram_c(&self) -> Result<Matrix> {
        let n = self.n();
        let mode = self.matrix.mode();
        let g: Vec<Vector> = (0..n)
            .map(|k| {
                Vector::new(
                    (1..self.m())
                        .map(|r| self.matrix.get(r, k).clone())
                        .collect(),
                )
                .unwrap_or_else(|_| Vector::empty(mode))
            })
            .collect();
        if g.is_empty() {
            return Err(Error::Shape("empty coefficient matrix".into()));
        }
        gram_matrix(&g)
    }
}

/// The m-dimensional reduction of 1 + (C(λ)⁻¹a, a):
/// det(I_m + γ(y₁…y_m))/det(I_{m−1} + γ(y₂…y_m)) with y_r the rows of the
/// weight-scaled matrix x_{rk} = a_{rk}/√λ_k.
///
/// Exact mode needs every λ_k to be the square of a rational.
pub fn gram_reduction_ratio(input: &GramReductionInput) -> Result<Scalar> {
    let m = input.m();
    let n = input.n();
    let mode = input.matrix.mode();
    let mut roots = Vec::with_capacity(n);
    for k in 0..n {
        let lam = input.lambda.get(k);
        if !lam.is_positive() {
            return Err(Error::Domain(format!(
                "lambda must be positive, entry {} is {lam}",
                k + 1
            )));
        }
        let root = lam.sqrt().ok_or_else(|| {
            Error::Domain(format!(
                "exact mode needs lambda entries that are squares of rationals, entry {} is {lam}",
                k + 1
            ))
        })?;
        roots.push(root);
    }

    let mut rows: Vec<Vector> = Vec::with_capacity(m);
    for r in 0..m {
        let entries = (0..n)
            .map(|k| input.matrix.get(r, k) / &roots[k])
            .collect::<Vec<_>>();
        rows.push(if entries.is_empty() {
            Vector::empty(mode)
        } else {
            Vector::new(entries)?
        });
    }

    let numerator = Matrix::identity(m, mode)
        .add(&gram_row_family(&rows, mode)?)?
        .determinant()?;
    let denominator = if m == 1 {
        Scalar::one(mode)
    } else {
        Matrix::identity(m - 1, mode)
            .add(&gram_row_family(&rows[1..], mode)?)?
            .determinant()?
    };
    Ok(numerator / denominator)
}

fn gram_row_family(rows: &[Vector], mode: Mode) -> Result<Matrix> {
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, 0, mode));
    }
    gram_matrix(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(rows, Mode::Exact)
    }

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, Mode::Exact)
    }

    fn r(num: i64, den: i64) -> Scalar {
        Scalar::ratio(num, den)
    }

    #[test]
    fn classical_resolvent_1x1() {
        let c = exact(&[&[3]]);
        let res = classical_resolvent(&c, &s(5)).unwrap();
        assert_eq!(res, Matrix::from_rows(vec![vec![r(1, 2)]]).unwrap());
    }

    #[test]
    fn classical_resolvent_matches_direct_inverse() {
        let c = exact(&[&[1, 2], &[3, 4]]);
        let res = classical_resolvent(&c, &s(1)).unwrap();
        let expect =
            Matrix::from_rows(vec![vec![r(1, 2), r(-1, 3)], vec![r(-1, 2), s(0)]]).unwrap();
        assert_eq!(res, expect);
        // (tI − C)·res = I
        let shifted = Matrix::identity(2, Mode::Exact).sub(&c).unwrap();
        assert_eq!(
            shifted.matmul(&res).unwrap(),
            Matrix::identity(2, Mode::Exact)
        );
    }

    #[test]
    fn classical_resolvent_3x3_term_structure() {
        // t²·ΣAᵀ(C_k) − t·ΣAᵀ(C_kr) + Aᵀ(C_123), scaled by 1/p(t)
        let c = exact(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        let t = s(2);
        let p_t = char_coeffs_faddeev(&c).unwrap().eval_at(&t);
        let mut acc = Matrix::zeros(3, 3, Mode::Exact);
        for alpha in SubsetIndex::all(3).unwrap().skip(1) {
            let block = c
                .submatrix(alpha, alpha)
                .unwrap()
                .adjugate()
                .unwrap()
                .transpose();
            let signed = match alpha.len() {
                1 => t.powi(2),
                2 => -&t,
                _ => s(1),
            };
            acc = acc
                .add(&embed_subset(&block, alpha, 3).unwrap().scale(&signed))
                .unwrap();
        }
        let manual = acc.scale(&p_t.recip());
        assert_eq!(classical_resolvent(&c, &t).unwrap(), manual);
    }

    #[test]
    fn classical_resolvent_singularity() {
        let c = exact(&[&[1, 0], &[0, 2]]);
        match classical_resolvent(&c, &s(1)) {
            Err(Error::Singular { det }) => assert_eq!(det, s(0)),
            other => panic!("expected singularity error, got {other:?}"),
        }
    }

    #[test]
    fn resolvent_terms_2x2() {
        let c = exact(&[&[1, 2], &[3, 4]]);
        let terms = gen_resolvent_terms(&c).unwrap();
        let a1 = SubsetIndex::from_indices(&[1], 2).unwrap();
        let a2 = SubsetIndex::from_indices(&[2], 2).unwrap();
        let a12 = SubsetIndex::full(2).unwrap();
        assert_eq!(terms.term(a1).unwrap(), &exact(&[&[1, 0], &[0, 0]]));
        assert_eq!(terms.term(a2).unwrap(), &exact(&[&[0, 0], &[0, 1]]));
        assert_eq!(terms.term(a12).unwrap(), &exact(&[&[4, -2], &[-3, 1]]));
    }

    #[test]
    fn resolvent_terms_all_ones() {
        let n = 4;
        let ones = Matrix::new(n, n, vec![s(1); n * n]).unwrap();
        let terms = gen_resolvent_terms(&ones).unwrap();
        for alpha in SubsetIndex::all(n).unwrap().skip(1) {
            let term = terms.term(alpha).unwrap();
            match alpha.len() {
                1 => {
                    let k = alpha.indices().next().unwrap();
                    let mut expect = Matrix::zeros(n, n, Mode::Exact);
                    expect.set(k - 1, k - 1, s(1));
                    assert_eq!(term, &expect);
                }
                2 => {
                    let block = exact(&[&[1, -1], &[-1, 1]]);
                    assert_eq!(term, &embed_subset(&block, alpha, n).unwrap());
                }
                _ => assert_eq!(term, &Matrix::zeros(n, n, Mode::Exact)),
            }
        }
    }

    #[test]
    fn resolvent_terms_identity() {
        let i3 = Matrix::identity(3, Mode::Exact);
        let terms = gen_resolvent_terms(&i3).unwrap();
        for alpha in SubsetIndex::all(3).unwrap().skip(1) {
            let block = Matrix::identity(alpha.len(), Mode::Exact);
            assert_eq!(
                terms.term(alpha).unwrap(),
                &embed_subset(&block, alpha, 3).unwrap()
            );
        }
    }

    #[test]
    fn eval_gen_resolvent_2x2_formula() {
        // (1/P)·[[c22 + λ2, −c12], [−c21, c11 + λ1]]
        let c = exact(&[&[1, 2], &[3, 4]]);
        let lambda = Vector::from_ints(&[5, 7], Mode::Exact);
        let terms = gen_resolvent_terms(&c).unwrap();
        let res = eval_gen_resolvent(&terms, &c, &lambda).unwrap();
        let p = s(60);
        let expect = Matrix::from_rows(vec![
            vec![&s(11) / &p, &s(-2) / &p],
            vec![&s(-3) / &p, &s(6) / &p],
        ])
        .unwrap();
        assert_eq!(res, expect);
    }

    #[test]
    fn eval_gen_resolvent_diagonal() {
        let c = Matrix::zeros(2, 2, Mode::Exact);
        let lambda = Vector::from_ints(&[2, 5], Mode::Exact);
        let terms = gen_resolvent_terms(&c).unwrap();
        let res = eval_gen_resolvent(&terms, &c, &lambda).unwrap();
        let expect = Matrix::from_rows(vec![vec![r(1, 2), s(0)], vec![s(0), r(1, 5)]]).unwrap();
        assert_eq!(res, expect);
    }

    #[test]
    fn eval_gen_resolvent_rejects_zero_lambda_and_singular() {
        let c = exact(&[&[1, 2], &[3, 4]]);
        let terms = gen_resolvent_terms(&c).unwrap();
        let lam0 = Vector::from_ints(&[0, 7], Mode::Exact);
        assert!(matches!(
            eval_gen_resolvent(&terms, &c, &lam0),
            Err(Error::Domain(_))
        ));
        // P(λ) = λ1λ2 + λ1 + λ2 vanishes at λ = (-1/2, 1)
        let ones = Matrix::new(2, 2, vec![s(1); 4]).unwrap();
        let terms = gen_resolvent_terms(&ones).unwrap();
        let lam_sing = Vector::new(vec![r(-1, 2), s(1)]).unwrap();
        assert!(matches!(
            eval_gen_resolvent(&terms, &ones, &lam_sing),
            Err(Error::Singular { .. })
        ));
    }

    #[test]
    fn quad_form_diagonal_case() {
        let c = Matrix::zeros(3, 3, Mode::Exact);
        let lambda = Vector::from_ints(&[1, 2, 4], Mode::Exact);
        let a = Vector::from_ints(&[1, 1, 2], Mode::Exact);
        // Σ a_k²/λ_k = 1 + 1/2 + 1
        assert_eq!(quad_form_gen(&c, &lambda, &a).unwrap(), r(5, 2));
    }

    #[test]
    fn quad_form_all_ones() {
        let ones = Matrix::new(2, 2, vec![s(1); 4]).unwrap();
        let lambda = Vector::from_ints(&[1, 1], Mode::Exact);
        let a = Vector::from_ints(&[1, 1], Mode::Exact);
        assert_eq!(quad_form_gen(&ones, &lambda, &a).unwrap(), r(2, 3));
    }

    #[test]
    fn quad_form_3x3_term_by_term() {
        // hand-assembled subset sum: a_k²/λ_k singles, 2x2 adjugate-transpose
        // pairs [[c_jj, -c_ij], [-c_ji, c_ii]], and the full 3x3 cofactor
        // block, scaled by λ1λ2λ3/P
        let c = exact(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        let lambda = Vector::from_ints(&[2, 3, 5], Mode::Exact);
        let a = Vector::from_ints(&[1, -1, 2], Mode::Exact);
        let cell = |i: usize, j: usize| c.get(i, j).clone();
        let av = |i: usize| a.get(i).clone();
        let lv = |i: usize| lambda.get(i).clone();

        let mut sum = Scalar::zero(Mode::Exact);
        for k in 0..3 {
            sum = sum + &(&av(k) * &av(k)) / &lv(k);
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let form = &(&cell(j, j) * &(&av(i) * &av(i)))
                - &(&(&cell(i, j) + &cell(j, i)) * &(&av(i) * &av(j)))
                + &(&cell(i, i) * &(&av(j) * &av(j)));
            sum = sum + &form / &(&lv(i) * &lv(j));
        }
        // 3x3 cofactors A^i_j, transposed application (Aᵀ a, a)
        let minor2 = |r1: usize, r2: usize, c1: usize, c2: usize| {
            &(&cell(r1, c1) * &cell(r2, c2)) - &(&cell(r1, c2) * &cell(r2, c1))
        };
        let others = |k: usize| match k {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let mut triple = Scalar::zero(Mode::Exact);
        for i in 0..3 {
            for j in 0..3 {
                let (r1, r2) = others(i);
                let (c1, c2) = others(j);
                let mut cof = minor2(r1, r2, c1, c2);
                if (i + j) % 2 == 1 {
                    cof = -cof;
                }
                // Aᵀ entry (j, i) is A^i_j; quadratic form picks a_j·a_i
                triple = triple + &(&cof * &av(j)) * &av(i);
            }
        }
        sum = sum + &triple / &lambda.product();

        let p = c
            .add(&Matrix::diag(&lambda))
            .unwrap()
            .determinant()
            .unwrap();
        let expect = &(&lambda.product() / &p) * &sum;
        assert_eq!(quad_form_gen(&c, &lambda, &a).unwrap(), expect);
    }

    #[test]
    fn quad_form_matches_resolvent_application() {
        let c = exact(&[&[2, -1, 0], &[1, 3, 2], &[0, 1, 1]]);
        let lambda = Vector::from_ints(&[1, -2, 3], Mode::Exact);
        let a = Vector::from_ints(&[1, 2, -1], Mode::Exact);
        let terms = gen_resolvent_terms(&c).unwrap();
        let res = eval_gen_resolvent(&terms, &c, &lambda).unwrap();
        let direct = res.mul_vec(&a).unwrap().dot(&a).unwrap();
        assert_eq!(quad_form_gen(&c, &lambda, &a).unwrap(), direct);
    }

    #[test]
    fn rank_one_ratio_examples() {
        let i2 = Matrix::identity(2, Mode::Exact);
        let e1 = Vector::from_ints(&[1, 0], Mode::Exact);
        assert_eq!(rank_one_det_ratio(&i2, &e1).unwrap(), s(2));

        let ones = Vector::from_ints(&[1, 1], Mode::Exact);
        assert_eq!(rank_one_det_ratio(&i2, &ones).unwrap(), s(3));

        let a = exact(&[&[1, 2], &[3, 4]]);
        assert_eq!(rank_one_det_ratio(&a, &ones).unwrap(), s(1));

        let singular = exact(&[&[1, 2], &[2, 4]]);
        assert!(matches!(
            rank_one_det_ratio(&singular, &ones),
            Err(Error::Singular { .. })
        ));
    }

    #[test]
    fn one_plus_quadform_examples() {
        let ones = Matrix::new(2, 2, vec![s(1); 4]).unwrap();
        let lambda = Vector::from_ints(&[1, 1], Mode::Exact);
        let zero_vec = Vector::from_ints(&[0, 0], Mode::Exact);
        assert_eq!(one_plus_quadform(&ones, &lambda, &zero_vec).unwrap(), s(1));

        let a = Vector::from_ints(&[1, 1], Mode::Exact);
        assert_eq!(one_plus_quadform(&ones, &lambda, &a).unwrap(), r(5, 3));
    }

    #[test]
    fn gram_reduction_m1() {
        // single row: 1 + Σ a_k²/λ_k
        let input = GramReductionInput::new(
            exact(&[&[1, 2, 3]]),
            Vector::from_ints(&[1, 4, 9], Mode::Exact),
        )
        .unwrap();
        assert_eq!(gram_reduction_ratio(&input).unwrap(), s(4));
    }

    #[test]
    fn gram_reduction_m2_matches_quadform() {
        let a = exact(&[&[1, 0], &[0, 1]]);
        let lambda = Vector::from_ints(&[1, 1], Mode::Exact);
        let input = GramReductionInput::new(a, lambda.clone()).unwrap();
        let ratio = gram_reduction_ratio(&input).unwrap();

        let c = input.gram_c().unwrap();
        assert_eq!(c, exact(&[&[0, 0], &[0, 1]]));
        let quad = quad_form_gen(&c, &lambda, &input.a()).unwrap();
        assert_eq!(ratio, &s(1) + &quad);
    }

    #[test]
    fn gram_reduction_rejects_bad_lambda() {
        let a = exact(&[&[1, 1]]);
        let neg =
            GramReductionInput::new(a.clone(), Vector::from_ints(&[1, -1], Mode::Exact)).unwrap();
        assert!(matches!(gram_reduction_ratio(&neg), Err(Error::Domain(_))));
        // 2 is not a square of a rational
        let nonsq = GramReductionInput::new(a, Vector::from_ints(&[1, 2], Mode::Exact)).unwrap();
        assert!(matches!(
            gram_reduction_ratio(&nonsq),
            Err(Error::Domain(_))
        ));
    }
}
