//! The `verify` command: run every cross-identity on one input matrix and
//! stop loudly at the first mismatch, naming the offending subset or index.

use genchar_core::{
    char_coeff_minor_sum, char_coeff_trace_det, char_coeffs_faddeev, classical_resolvent,
    delta_functional, det_ratio_sequence, distance_sq_gram, distance_sq_solve, eval_gen_charpoly,
    eval_gen_charpoly_minor_form, eval_gen_resolvent, gen_charpoly, gen_resolvent_terms, gram_det,
    gram_matrix, gram_ratio_sequence, gram_reduction_ratio, one_plus_quadform, quad_form_gen,
    rank_one_det_ratio, Error, GramReductionInput, Matrix, Mode, Scalar, SequenceSpec, SpanProblem,
    SubsetIndex, Vector,
};

/// Outcome of one identity check.
pub enum CheckOutcome {
    Ok,
    Skipped(String),
    Mismatch(String),
}

pub struct CheckResult {
    pub name: &'static str,
    pub outcome: CheckOutcome,
}

fn approx_eq(a: &Scalar, b: &Scalar, mode: Mode) -> bool {
    match mode {
        Mode::Exact => a == b,
        Mode::Float => {
            let (x, y) = (a.to_f64(), b.to_f64());
            let scale = x.abs().max(y.abs()).max(1.0);
            (x - y).abs() <= 1e-9 * scale
        }
    }
}

fn matrices_eq(a: &Matrix, b: &Matrix, mode: Mode) -> Option<(usize, usize)> {
    for i in 0..a.n_rows() {
        for j in 0..a.n_cols() {
            if !approx_eq(a.get(i, j), b.get(i, j), mode) {
                return Some((i + 1, j + 1));
            }
        }
    }
    None
}

/// Run the whole suite; stops after the first mismatch.
pub fn run_verify(c: &Matrix, lambda: &Vector, a: &Vector) -> Vec<CheckResult> {
    let mut results = Vec::new();
    let mut failed = false;
    let push = |results: &mut Vec<CheckResult>,
                failed: &mut bool,
                name: &'static str,
                outcome: CheckOutcome| {
        if *failed {
            return;
        }
        if matches!(outcome, CheckOutcome::Mismatch(_)) {
            *failed = true;
        }
        results.push(CheckResult { name, outcome });
    };

    let mode = c.mode();
    let n = c.n_rows();

    // 1. coefficient routes agree
    let outcome = (|| {
        let fad = char_coeffs_faddeev(c)?;
        for k in 1..=n {
            let tr = char_coeff_trace_det(c, k)?;
            let ms = char_coeff_minor_sum(c, k)?;
            if !approx_eq(fad.coeff(k), &tr, mode) {
                return Ok(CheckOutcome::Mismatch(format!(
                    "trace-determinant route differs at k={k}: {} vs {}",
                    fad.coeff(k),
                    tr
                )));
            }
            if !approx_eq(fad.coeff(k), &ms, mode) {
                return Ok(CheckOutcome::Mismatch(format!(
                    "minor-sum route differs at k={k}: {} vs {}",
                    fad.coeff(k),
                    ms
                )));
            }
        }
        Ok::<_, Error>(CheckOutcome::Ok)
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(
        &mut results,
        &mut failed,
        "coefficient-triple-agreement",
        outcome,
    );

    // 2. subset expansion evaluates to the shifted determinant
    let outcome = (|| {
        let p = gen_charpoly(c)?;
        let zero = Vector::zeros(n, mode);
        for (label, lam) in [("given lambda", lambda), ("zero lambda", &zero)] {
            let direct = c.add(&Matrix::diag(lam))?.determinant()?;
            let via_subsets = eval_gen_charpoly(&p, lam)?;
            if !approx_eq(&via_subsets, &direct, mode) {
                return Ok(CheckOutcome::Mismatch(format!(
                    "{label}: subset evaluation {via_subsets} vs direct determinant {direct}"
                )));
            }
        }
        Ok::<_, Error>(CheckOutcome::Ok)
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(
        &mut results,
        &mut failed,
        "subset-eval-vs-determinant",
        outcome,
    );

    // 3. minor form equals cofactor form (lambda nonzero only)
    let outcome = if lambda.iter().any(Scalar::is_zero) {
        CheckOutcome::Skipped("lambda has zero entries".into())
    } else {
        (|| {
            let p = gen_charpoly(c)?;
            let cof = eval_gen_charpoly(&p, lambda)?;
            let min = eval_gen_charpoly_minor_form(c, lambda)?;
            if approx_eq(&cof, &min, mode) {
                Ok(CheckOutcome::Ok)
            } else {
                Ok::<_, Error>(CheckOutcome::Mismatch(format!(
                    "cofactor form {cof} vs minor form {min}"
                )))
            }
        })()
        .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()))
    };
    push(
        &mut results,
        &mut failed,
        "minor-form-vs-cofactor-form",
        outcome,
    );

    // 4. adjugate-transpose inverts up to det
    let outcome = (|| {
        let det = c.determinant()?;
        let adj_t = c.adjugate()?.transpose();
        let expect = Matrix::identity(n, mode).scale(&det);
        if let Some((i, j)) = matrices_eq(&adj_t.matmul(c)?, &expect, mode) {
            return Ok(CheckOutcome::Mismatch(format!(
                "adjugateᵀ·C differs from det·I at entry ({i},{j})"
            )));
        }
        Ok::<_, Error>(CheckOutcome::Ok)
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(&mut results, &mut failed, "adjugate-identity", outcome);

    // 5. resolvent reconstruction and quadratic form
    let outcome = (|| {
        if lambda.iter().any(Scalar::is_zero) {
            return Ok(CheckOutcome::Skipped("lambda has zero entries".into()));
        }
        let shifted = c.add(&Matrix::diag(lambda))?;
        let terms = gen_resolvent_terms(c)?;
        let res = match eval_gen_resolvent(&terms, c, lambda) {
            Ok(r) => r,
            Err(Error::Singular { det }) => {
                return Ok(CheckOutcome::Skipped(format!(
                    "C(lambda) singular, det {det}"
                )))
            }
            Err(e) => return Err(e),
        };
        if let Some((i, j)) = matrices_eq(&shifted.matmul(&res)?, &Matrix::identity(n, mode), mode)
        {
            return Ok(CheckOutcome::Mismatch(format!(
                "C(lambda)·resolvent differs from I at entry ({i},{j})"
            )));
        }
        let quad = quad_form_gen(c, lambda, a)?;
        let direct = res.mul_vec(a)?.dot(a)?;
        if !approx_eq(&quad, &direct, mode) {
            return Ok(CheckOutcome::Mismatch(format!(
                "subset quadratic form {quad} vs resolvent application {direct}"
            )));
        }
        let one_plus = one_plus_quadform(c, lambda, a)?;
        let expect = Scalar::one(mode) + quad;
        if !approx_eq(&one_plus, &expect, mode) {
            return Ok(CheckOutcome::Mismatch(format!(
                "determinant ratio {one_plus} vs 1 + quadratic form {expect}"
            )));
        }
        Ok::<_, Error>(CheckOutcome::Ok)
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(
        &mut results,
        &mut failed,
        "resolvent-reconstruction",
        outcome,
    );

    // 6. rank-one determinant identity
    let outcome = (|| {
        match rank_one_det_ratio(c, a) {
            Ok(ratio) => {
                // independent route: solve C·y = a by elimination-free Cramer data
                let det = c.determinant()?;
                let adj_t = c.adjugate()?.transpose();
                let y = adj_t.mul_vec(a)?;
                let quad = &y.dot(a)? / &det;
                let expect = Scalar::one(mode) + quad;
                if approx_eq(&ratio, &expect, mode) {
                    Ok(CheckOutcome::Ok)
                } else {
                    Ok::<_, Error>(CheckOutcome::Mismatch(format!(
                        "det ratio {ratio} vs 1 + (C⁻¹a, a) = {expect}"
                    )))
                }
            }
            Err(Error::Singular { det }) => {
                Ok(CheckOutcome::Skipped(format!("C singular, det {det}")))
            }
            Err(e) => Err(e),
        }
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(&mut results, &mut failed, "rank-one-identity", outcome);

    // 7. shifted Gram determinants across the transpose
    let outcome = (|| {
        let lhs = Matrix::identity(c.n_cols(), mode)
            .add(&gram_matrix(&c.cols())?)?
            .determinant()?;
        let rhs = Matrix::identity(c.n_rows(), mode)
            .add(&gram_matrix(&c.rows())?)?
            .determinant()?;
        if approx_eq(&lhs, &rhs, mode) {
            Ok(CheckOutcome::Ok)
        } else {
            Ok::<_, Error>(CheckOutcome::Mismatch(format!(
                "det(I + XᵀX) = {lhs} vs det(I + XXᵀ) = {rhs}"
            )))
        }
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(&mut results, &mut failed, "sylvester-shift", outcome);

    // 8. distance routes
    let outcome = (|| {
        if gram_det(&c.rows())?.is_zero() {
            return Ok(CheckOutcome::Skipped("rows of C are dependent".into()));
        }
        let p = SpanProblem::new(a.clone(), c.rows())?;
        let via_gram = distance_sq_gram(&p)?;
        let via_solve = distance_sq_solve(&p)?;
        if approx_eq(&via_gram, &via_solve, mode) {
            Ok(CheckOutcome::Ok)
        } else {
            Ok::<_, Error>(CheckOutcome::Mismatch(format!(
                "Gram-ratio distance {via_gram} vs solve-form distance {via_solve}"
            )))
        }
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(&mut results, &mut failed, "distance-two-routes", outcome);

    // 9. det-ratio sequence equals 1 + delta at every truncation
    let outcome = (|| {
        let rows: Vec<SequenceSpec> = (0..n.min(3))
            .map(|i| SequenceSpec::explicit(c.row(i).entries().to_vec()))
            .collect::<Result<_, _>>()?;
        if rows.is_empty() {
            return Ok(CheckOutcome::Skipped("matrix has no rows".into()));
        }
        let report = det_ratio_sequence(&rows, 0, n, None)?;
        for t in 1..=n {
            let fam: Vec<Vector> = rows
                .iter()
                .map(|spec| Vector::new(spec.generate(t).unwrap()).unwrap())
                .collect();
            let expect = Scalar::one(mode) + delta_functional(&fam)?;
            if !approx_eq(&report.values[t - 1], &expect, mode) {
                return Ok(CheckOutcome::Mismatch(format!(
                    "det ratio at truncation {t}: {} vs 1 + delta = {expect}",
                    report.values[t - 1]
                )));
            }
        }
        Ok::<_, Error>(CheckOutcome::Ok)
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(&mut results, &mut failed, "det-ratio-vs-delta", outcome);

    // 10. subset coefficients match complement minors one by one
    let outcome = (|| {
        let p = gen_charpoly(c)?;
        for alpha in SubsetIndex::all(n)? {
            let hat = alpha.complement();
            let minor = c.minor(hat, hat)?;
            if !approx_eq(p.coeff(alpha)?, &minor, mode) {
                return Ok(CheckOutcome::Mismatch(format!(
                    "coefficient at mask {} differs from complement minor: {} vs {minor}",
                    alpha.mask(),
                    p.coeff(alpha)?
                )));
            }
        }
        Ok::<_, Error>(CheckOutcome::Ok)
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(
        &mut results,
        &mut failed,
        "coefficients-vs-complement-minors",
        outcome,
    );

    // 11. Cayley–Hamilton residual
    let outcome = (|| {
        let p = char_coeffs_faddeev(c)?;
        let mut powers = vec![Matrix::identity(n, mode)];
        for _ in 0..n {
            powers.push(powers.last().unwrap().matmul(c)?);
        }
        let mut acc = Matrix::zeros(n, n, mode);
        for k in 0..=n {
            let coeff = if k % 2 == 0 {
                p.coeff(k).clone()
            } else {
                -p.coeff(k)
            };
            acc = acc.add(&powers[n - k].scale(&coeff))?;
        }
        // residual entries must vanish relative to the largest power entry
        let scale = powers[n].norm_inf().to_f64().max(1.0);
        for i in 0..n {
            for j in 0..n {
                let bad = match mode {
                    Mode::Exact => !acc.get(i, j).is_zero(),
                    Mode::Float => acc.get(i, j).to_f64().abs() > 1e-9 * scale,
                };
                if bad {
                    return Ok(CheckOutcome::Mismatch(format!(
                        "residual entry ({},{}) is {}",
                        i + 1,
                        j + 1,
                        acc.get(i, j)
                    )));
                }
            }
        }
        Ok::<_, Error>(CheckOutcome::Ok)
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(
        &mut results,
        &mut failed,
        "cayley-hamilton-residual",
        outcome,
    );

    // 12. evaluation at constant negative lambda recovers the classical polynomial
    let outcome = (|| {
        let p = gen_charpoly(c)?;
        let coeffs = char_coeffs_faddeev(c)?;
        for t_int in [1i64, 2, 5] {
            let t = Scalar::from_int(t_int, mode);
            let lam = Vector::new(vec![-&t; n]).unwrap_or_else(|_| Vector::zeros(0, mode));
            let lhs = eval_gen_charpoly(&p, &lam)?;
            let mut rhs = coeffs.eval_at(&t);
            if n % 2 == 1 {
                rhs = -rhs;
            }
            if !approx_eq(&lhs, &rhs, mode) {
                return Ok(CheckOutcome::Mismatch(format!(
                    "at t={t_int}: subset evaluation {lhs} vs signed classical value {rhs}"
                )));
            }
        }
        Ok::<_, Error>(CheckOutcome::Ok)
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(
        &mut results,
        &mut failed,
        "constant-lambda-specialization",
        outcome,
    );

    // 13. classical resolvent agrees with the shifted subset resolvent
    let outcome = (|| {
        let t = Scalar::from_int(1, mode);
        let shifted = Matrix::identity(n, mode).scale(&t).sub(c)?;
        let res = match classical_resolvent(c, &t) {
            Ok(r) => r,
            Err(Error::Singular { det }) => {
                return Ok(CheckOutcome::Skipped(format!(
                    "tI − C singular at t=1, p(t) {det}"
                )))
            }
            Err(e) => return Err(e),
        };
        if let Some((i, j)) = matrices_eq(&shifted.matmul(&res)?, &Matrix::identity(n, mode), mode)
        {
            return Ok(CheckOutcome::Mismatch(format!(
                "(tI − C)·resolvent differs from I at entry ({i},{j})"
            )));
        }
        let minus_c = Matrix::zeros(n, n, mode).sub(c)?;
        let terms = gen_resolvent_terms(&minus_c)?;
        let lam = Vector::new(vec![t.clone(); n]).unwrap_or_else(|_| Vector::zeros(0, mode));
        let via_subsets = eval_gen_resolvent(&terms, &minus_c, &lam)?;
        if let Some((i, j)) = matrices_eq(&res, &via_subsets, mode) {
            return Ok(CheckOutcome::Mismatch(format!(
                "classical and subset resolvents differ at entry ({i},{j})"
            )));
        }
        Ok::<_, Error>(CheckOutcome::Ok)
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(
        &mut results,
        &mut failed,
        "classical-resolvent-consistency",
        outcome,
    );

    // 14. trace powers of D = C⁻¹·(a⊗a)
    let outcome = (|| {
        let det = c.determinant()?;
        let singular = match mode {
            Mode::Exact => det.is_zero(),
            Mode::Float => det.to_f64() == 0.0,
        };
        if singular {
            return Ok(CheckOutcome::Skipped("C is singular".into()));
        }
        let adj_t = c.adjugate()?.transpose();
        let d = adj_t
            .matmul(&genchar_core::rank_one(a))?
            .scale(&det.recip());
        let tr = d.trace()?;
        let mut power = d.clone();
        for k in 1..=5u32 {
            if !approx_eq(&power.trace()?, &tr.powi(k), mode) {
                return Ok(CheckOutcome::Mismatch(format!(
                    "trace of the {k}-th power differs from the {k}-th power of the trace"
                )));
            }
            power = power.matmul(&d)?;
        }
        Ok::<_, Error>(CheckOutcome::Ok)
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(&mut results, &mut failed, "rank-one-trace-powers", outcome);

    // 15. Gram-reduction correspondence built from the input rows
    let outcome = (|| {
        if n == 0 {
            return Ok(CheckOutcome::Skipped("empty matrix".into()));
        }
        let m = n.min(3);
        let rows = SubsetIndex::from_indices(&(1..=m).collect::<Vec<_>>(), n)?;
        let cols = SubsetIndex::full(n)?;
        let block = c.submatrix(rows, cols)?;
        let lambda = Vector::new(
            (1..=n)
                .map(|k| Scalar::from_int((k * k) as i64, mode))
                .collect(),
        )?;
        let input = GramReductionInput::new(block.clone(), lambda.clone())?;
        let ratio = gram_reduction_ratio(&input)?;
        let gram_c = input.gram_c()?;
        let direct = one_plus_quadform(&gram_c, &lambda, &input.a())?;
        if !approx_eq(&ratio, &direct, mode) {
            return Ok(CheckOutcome::Mismatch(format!(
                "Gram reduction {ratio} vs determinant ratio {direct}"
            )));
        }
        // and through the delta functional on the weight-scaled rows
        let ys: Vec<Vector> = (0..m)
            .map(|r| {
                Vector::new(
                    (0..n)
                        .map(|k| block.get(r, k) / &lambda.get(k).sqrt().unwrap())
                        .collect(),
                )
            })
            .collect::<Result<_, _>>()?;
        let delta = delta_functional(&ys)?;
        let quad = quad_form_gen(&gram_c, &lambda, &input.a())?;
        if !approx_eq(&delta, &quad, mode) {
            return Ok(CheckOutcome::Mismatch(format!(
                "delta functional {delta} vs subset quadratic form {quad}"
            )));
        }
        Ok::<_, Error>(CheckOutcome::Ok)
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(
        &mut results,
        &mut failed,
        "gram-reduction-correspondence",
        outcome,
    );

    // 16. Gram-ratio sequence values are squared distances of row prefixes
    let outcome = (|| {
        if n < 2 {
            return Ok(CheckOutcome::Skipped("needs at least two rows".into()));
        }
        let m = n.min(3);
        let rows: Vec<SequenceSpec> = (0..m)
            .map(|i| SequenceSpec::explicit(c.row(i).entries().to_vec()))
            .collect::<Result<_, _>>()?;
        let report = gram_ratio_sequence(&rows, 0, n, None)?;
        for (idx, &t) in report.truncations.iter().enumerate() {
            let f0 = Vector::new(rows[0].generate(t)?)?;
            let basis: Vec<Vector> = rows[1..]
                .iter()
                .map(|spec| spec.generate(t).and_then(Vector::new))
                .collect::<Result<_, _>>()?;
            let d2 = match distance_sq_gram(&SpanProblem::new(f0, basis)?) {
                Ok(v) => v,
                Err(Error::DegenerateBasis) => continue,
                Err(e) => return Err(e),
            };
            if !approx_eq(&report.values[idx], &d2, mode) {
                return Ok(CheckOutcome::Mismatch(format!(
                    "ratio at truncation {t} is {} but the squared distance is {d2}",
                    report.values[idx]
                )));
            }
        }
        Ok::<_, Error>(CheckOutcome::Ok)
    })()
    .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()));
    push(&mut results, &mut failed, "gram-ratio-vs-distance", outcome);

    results
}
