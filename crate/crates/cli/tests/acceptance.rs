//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `--nocapture` to see them). Every tolerance is pinned in the
//! assertions below.
//!
//! Known failure, kept deliberately: `criterion_10a_gram_ratio_divergence`
//! expects the alternating-sign Gram ratio to exceed 1e3 by n = 200, but that
//! ratio is (n² − (n mod 2))/n, exactly 200 at n = 200 and first above 1e3 at
//! n = 1001. The check is asserted as specified and fails honestly; the
//! companion test pins the true linear growth.

use std::time::Instant;

use genchar_cli::bench::run_bench;
use genchar_core::*;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

fn pass(id: &str, what: &str) {
    println!("acceptance criterion {id} ({what}): PASS");
}

fn fail(id: &str, what: &str, detail: &str) -> ! {
    println!("acceptance criterion {id} ({what}): FAIL: {detail}");
    panic!("criterion {id} failed: {detail}");
}

fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn rand_matrix(rng: &mut StdRng, rows: usize, cols: usize, mode: Mode) -> Matrix {
    let entries = (0..rows * cols)
        .map(|_| Scalar::from_int(rng.random_range(-9..=9), mode))
        .collect();
    Matrix::new(rows, cols, entries).unwrap()
}

fn rand_vector(rng: &mut StdRng, len: usize, lo: i64, hi: i64, mode: Mode) -> Vector {
    let vals: Vec<i64> = (0..len).map(|_| rng.random_range(lo..=hi)).collect();
    Vector::from_ints(&vals, mode)
}

fn gauss_jordan_inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.n_rows();
    let mode = m.mode();
    let mut a = m.clone();
    let mut inv = Matrix::identity(n, mode);
    for k in 0..n {
        let pivot_row = (k..n).find(|&i| !a.get(i, k).is_zero())?;
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

fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

#[test]
fn criterion_01_gen_charpoly_oracle() {
    let what = "subset expansion equals shifted determinant, 500x8 matrices";
    let started = Instant::now();
    let mut rng = rng(101);
    for n in 1..=8usize {
        for _ in 0..500 {
            let c = rand_matrix(&mut rng, n, n, Mode::Exact);
            let p = gen_charpoly(&c).unwrap();
            for trial in 0..5 {
                let lambda = if trial == 0 {
                    Vector::zeros(n, Mode::Exact)
                } else {
                    rand_vector(&mut rng, n, -3, 3, Mode::Exact)
                };
                let direct = c
                    .add(&Matrix::diag(&lambda))
                    .unwrap()
                    .determinant()
                    .unwrap();
                let via_subsets = eval_gen_charpoly(&p, &lambda).unwrap();
                if via_subsets != direct {
                    fail(
                        "1",
                        what,
                        &format!("mismatch at n={n}: {via_subsets} vs {direct}"),
                    );
                }
            }
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    if elapsed >= 60.0 {
        fail("1", what, &format!("runtime {elapsed:.1}s exceeds 60s"));
    }
    pass("1", what);
}

#[test]
fn criterion_02_resolvent_reconstruction() {
    let what = "resolvent reconstruction and quadratic form, 200 instances";
    let mut rng = rng(102);
    let mut done = 0;
    while done < 200 {
        let n = rng.random_range(2..=6);
        let c = rand_matrix(&mut rng, n, n, Mode::Exact);
        let lambda = rand_vector(&mut rng, n, 1, 9, Mode::Exact);
        let lambda = Vector::new(
            lambda
                .iter()
                .map(|v| if rng.random_bool(0.5) { -v } else { v.clone() })
                .collect(),
        )
        .unwrap();
        let shifted = c.add(&Matrix::diag(&lambda)).unwrap();
        if shifted.determinant().unwrap().is_zero() {
            continue;
        }
        done += 1;
        let terms = gen_resolvent_terms(&c).unwrap();
        let res = eval_gen_resolvent(&terms, &c, &lambda).unwrap();
        if shifted.matmul(&res).unwrap() != Matrix::identity(n, Mode::Exact) {
            fail("2", what, &format!("reconstruction failed at n={n}"));
        }
        let a = rand_vector(&mut rng, n, -9, 9, Mode::Exact);
        let direct = gauss_jordan_inverse(&shifted)
            .unwrap()
            .mul_vec(&a)
            .unwrap()
            .dot(&a)
            .unwrap();
        let quad = quad_form_gen(&c, &lambda, &a).unwrap();
        if quad != direct {
            fail(
                "2",
                what,
                &format!("quadratic form mismatch at n={n}: {quad} vs {direct}"),
            );
        }
    }
    pass("2", what);
}

#[test]
fn criterion_03_rank_one_identity() {
    let what = "rank-one determinant identity and trace powers, 500 instances";
    let mut rng = rng(103);
    let mut done = 0;
    while done < 500 {
        let n = rng.random_range(1..=6);
        let a_mat = rand_matrix(&mut rng, n, n, Mode::Exact);
        let det = a_mat.determinant().unwrap();
        if det.is_zero() {
            continue;
        }
        done += 1;
        let a = rand_vector(&mut rng, n, -9, 9, Mode::Exact);
        let bumped = a_mat.add(&rank_one(&a)).unwrap().determinant().unwrap();
        let inv = gauss_jordan_inverse(&a_mat).unwrap();
        let quad = inv.mul_vec(&a).unwrap().dot(&a).unwrap();
        let expect = &det * &(Scalar::from_int(1, Mode::Exact) + &quad);
        if bumped != expect {
            fail("3", what, &format!("det(A + a⊗a) mismatch at n={n}"));
        }
        if rank_one_det_ratio(&a_mat, &a).unwrap() != &bumped / &det {
            fail("3", what, "det ratio disagrees with the two determinants");
        }
        // trace powers of D = A⁻¹·(a⊗a)
        let d = inv.matmul(&rank_one(&a)).unwrap();
        let tr = d.trace().unwrap();
        let mut power = d.clone();
        for k in 1..=5u32 {
            if power.trace().unwrap() != tr.powi(k) {
                fail("3", what, &format!("trace power failed at n={n}, k={k}"));
            }
            power = power.matmul(&d).unwrap();
        }
    }
    pass("3", what);
}

#[test]
fn criterion_04_coefficient_triple_agreement() {
    let what = "three coefficient routes agree; Cayley-Hamilton residual zero";
    let mut rng = rng(104);
    // exact, bit-exact
    for n in 1..=8usize {
        for _ in 0..20 {
            let c = rand_matrix(&mut rng, n, n, Mode::Exact);
            let fad = char_coeffs_faddeev(&c).unwrap();
            for k in 1..=n {
                let tr = char_coeff_trace_det(&c, k).unwrap();
                let ms = char_coeff_minor_sum(&c, k).unwrap();
                if fad.coeff(k) != &tr || fad.coeff(k) != &ms {
                    fail("4", what, &format!("exact routes differ at n={n}, k={k}"));
                }
            }
        }
    }
    // float, relative 1e-9 (integer-valued entries in [-9, 9], fixed seed)
    for n in 1..=8usize {
        for _ in 0..30 {
            let c = rand_matrix(&mut rng, n, n, Mode::Float);
            let fad = char_coeffs_faddeev(&c).unwrap();
            for k in 1..=n {
                let tr = char_coeff_trace_det(&c, k).unwrap().to_f64();
                let ms = char_coeff_minor_sum(&c, k).unwrap().to_f64();
                let f = fad.coeff(k).to_f64();
                if rel_diff(f, tr) > 1e-9 || rel_diff(f, ms) > 1e-9 {
                    fail(
                        "4",
                        what,
                        &format!("float routes differ at n={n}, k={k}: {f} vs {tr} vs {ms}"),
                    );
                }
            }
        }
    }
    // Cayley–Hamilton: Σ (−1)^k c_k C^{n−k} = 0 exactly
    for n in 1..=6usize {
        let c = rand_matrix(&mut rng, n, n, Mode::Exact);
        let p = char_coeffs_faddeev(&c).unwrap();
        let mut powers = vec![Matrix::identity(n, Mode::Exact)];
        for _ in 0..n {
            powers.push(powers.last().unwrap().matmul(&c).unwrap());
        }
        let mut acc = Matrix::zeros(n, n, Mode::Exact);
        for k in 0..=n {
            let coeff = if k % 2 == 0 {
                p.coeff(k).clone()
            } else {
                -p.coeff(k)
            };
            acc = acc.add(&powers[n - k].scale(&coeff)).unwrap();
        }
        if acc != Matrix::zeros(n, n, Mode::Exact) {
            fail(
                "4",
                what,
                &format!("Cayley-Hamilton residual nonzero at n={n}"),
            );
        }
    }
    pass("4", what);
}

#[test]
fn criterion_05_gram_reduction() {
    let what = "m-dimensional reduction equals determinant ratio";
    let mut rng = rng(105);
    // exact: λ squares of rationals, bit-exact, 100 instances per m
    for m in 1..=3usize {
        for _ in 0..100 {
            let n = rng.random_range(m..=10);
            let a = rand_matrix(&mut rng, m, n, Mode::Exact);
            let lambda = Vector::new(
                (0..n)
                    .map(|_| {
                        let p: i64 = rng.random_range(1..=6);
                        let q: i64 = rng.random_range(1..=6);
                        Scalar::ratio(p * p, q * q)
                    })
                    .collect(),
            )
            .unwrap();
            let input = GramReductionInput::new(a, lambda.clone()).unwrap();
            let ratio = gram_reduction_ratio(&input).unwrap();
            let c = input.gram_c().unwrap();
            let direct = one_plus_quadform(&c, &lambda, &input.a()).unwrap();
            if ratio != direct {
                fail("5", what, &format!("exact mismatch at m={m}, n={n}"));
            }
        }
    }
    // float: arbitrary positive λ, relative 1e-10
    for m in 1..=3usize {
        for _ in 0..100 {
            let n = rng.random_range(m..=10);
            let a = rand_matrix(&mut rng, m, n, Mode::Float);
            let lambda = Vector::new(
                (0..n)
                    .map(|_| Scalar::Float(rng.random_range(25..=800) as f64 / 100.0))
                    .collect(),
            )
            .unwrap();
            let input = GramReductionInput::new(a, lambda.clone()).unwrap();
            let ratio = gram_reduction_ratio(&input).unwrap().to_f64();
            let c = input.gram_c().unwrap();
            let direct = one_plus_quadform(&c, &lambda, &input.a()).unwrap().to_f64();
            let rel = rel_diff(ratio, direct);
            if rel > 1e-10 {
                fail(
                    "5",
                    what,
                    &format!("float relative deviation {rel:.3e} at m={m}, n={n}"),
                );
            }
        }
    }
    pass("5", what);
}

#[test]
fn criterion_06_sylvester_shift() {
    let what = "det(I + XᵀX) = det(I + XXᵀ), 500 rectangles";
    let mut rng = rng(106);
    for _ in 0..500 {
        let m = rng.random_range(1..=4);
        let n = rng.random_range(1..=10);
        let x = rand_matrix(&mut rng, m, n, Mode::Exact);
        let lhs = Matrix::identity(n, Mode::Exact)
            .add(&gram_matrix(&x.cols()).unwrap())
            .unwrap()
            .determinant()
            .unwrap();
        let rhs = Matrix::identity(m, Mode::Exact)
            .add(&gram_matrix(&x.rows()).unwrap())
            .unwrap()
            .determinant()
            .unwrap();
        if lhs != rhs {
            fail("6", what, &format!("mismatch at {m}x{n}: {lhs} vs {rhs}"));
        }
    }
    pass("6", what);
}

#[test]
fn criterion_07_distance_formulas() {
    let what = "Gram-ratio, solve-form and residual distances agree, 500 instances";
    let mut rng = rng(107);
    let mut done = 0;
    while done < 500 {
        let m = rng.random_range(2..=8);
        let k = rng.random_range(1..=4.min(m - 1));
        let f0 = rand_vector(&mut rng, m, -9, 9, Mode::Exact);
        let basis: Vec<Vector> = (0..k)
            .map(|_| rand_vector(&mut rng, m, -9, 9, Mode::Exact))
            .collect();
        if gram_det(&basis).unwrap().is_zero() {
            continue;
        }
        done += 1;
        let p = SpanProblem::new(f0.clone(), basis.clone()).unwrap();
        let via_gram = distance_sq_gram(&p).unwrap();
        let via_solve = distance_sq_solve(&p).unwrap();
        // residual through the oracle inverse of the basis Gram matrix
        let gram = gram_matrix(&basis).unwrap();
        let b = Vector::new(basis.iter().map(|f| f.dot(&f0).unwrap()).collect()).unwrap();
        let t = gauss_jordan_inverse(&gram).unwrap().mul_vec(&b).unwrap();
        let residual = Vector::new(
            (0..m)
                .map(|i| {
                    let mut acc = f0.get(i).clone();
                    for (j, f) in basis.iter().enumerate() {
                        acc = acc - t.get(j) * f.get(i);
                    }
                    acc
                })
                .collect(),
        )
        .unwrap()
        .norm_sq();
        if via_gram != via_solve || via_gram != residual {
            fail("7", what, &format!("mismatch at m={m}, k={k}"));
        }
    }
    pass("7", what);
}

#[test]
fn criterion_08_pinned_numerics() {
    let what = "pinned closed-form values";
    // all-ones 3x3 at lambda = (1,2,3)
    let ones3 = Matrix::new(3, 3, vec![Scalar::from_int(1, Mode::Exact); 9]).unwrap();
    let p = gen_charpoly(&ones3).unwrap();
    let lambda = Vector::from_ints(&[1, 2, 3], Mode::Exact);
    let value = eval_gen_charpoly(&p, &lambda).unwrap();
    if value != Scalar::from_int(17, Mode::Exact) {
        fail(
            "8",
            what,
            &format!("all-ones evaluation gave {value}, want 17"),
        );
    }

    // harmonic counterexample partial sums at N = 4 and N = 100
    let lam = SequenceSpec::harmonic(Scalar::from_int(1, Mode::Exact));
    let b = SequenceSpec::harmonic(Scalar::from_int(1, Mode::Exact));
    let report = truncated_quadform_sequence(&lam, &b, 4, None).unwrap();
    let expect4 = [
        Scalar::from_int(1, Mode::Exact),
        Scalar::ratio(3, 2),
        Scalar::ratio(11, 6),
        Scalar::ratio(25, 12),
    ];
    if report.values != expect4 {
        fail("8", what, "harmonic partial sums at N=4 are wrong");
    }
    let report = truncated_quadform_sequence(&lam, &b, 100, None).unwrap();
    let h100 = Scalar::parse(
        "14466636279520351160221518043104131447711/2788815009188499086581352357412492142272",
        Mode::Exact,
    )
    .unwrap();
    if report.values[99] != h100 {
        fail("8", what, "H_100 does not match the frozen exact rational");
    }

    // ones-plus-diagonal windows up to 64, closed form vs Gram ratio, bit-exact
    let diag = SequenceSpec::explicit((1..=64).map(|k| Scalar::from_int(k, Mode::Exact)).collect())
        .unwrap();
    for w in 1..=64usize {
        let closed = ones_plus_diag_distance(&diag, w).unwrap();
        let ratio = ones_plus_diag_gram_ratio(&diag, w).unwrap();
        if closed != ratio {
            fail(
                "8",
                what,
                &format!("ones-plus-diag window {w} routes disagree"),
            );
        }
    }
    // and a rational window for good measure
    let h = SequenceSpec::harmonic(Scalar::from_int(1, Mode::Exact)).with_start(3);
    for w in 1..=10usize {
        let closed = ones_plus_diag_distance(&h, w).unwrap();
        let ratio = ones_plus_diag_gram_ratio(&h, w).unwrap();
        if closed != ratio {
            fail("8", what, &format!("harmonic window {w} routes disagree"));
        }
    }
    pass("8", what);
}

#[test]
fn criterion_09_minimization() {
    let what = "minimizers feasible and optimal; diagonal specializations collapse";
    let mut rng = rng(109);
    for _ in 0..10 {
        let n = rng.random_range(2..=5);
        let b_half = rand_matrix(&mut rng, n, n, Mode::Exact);
        let spd = b_half
            .transpose()
            .matmul(&b_half)
            .unwrap()
            .add(&Matrix::identity(n, Mode::Exact))
            .unwrap();
        let b = loop {
            let candidate = rand_vector(&mut rng, n, -9, 9, Mode::Exact);
            if !candidate.iter().all(Scalar::is_zero) {
                break candidate;
            }
        };
        let (value, x) = min_quadratic_constrained(&spd, &b).unwrap();
        if x.dot(&b).unwrap() != Scalar::from_int(1, Mode::Exact) {
            fail("9", what, "minimizer is not feasible");
        }
        if spd.mul_vec(&x).unwrap().dot(&x).unwrap() != value {
            fail("9", what, "minimizer does not achieve the reported value");
        }
        let bb = b.norm_sq();
        for _ in 0..1000 {
            let raw = rand_vector(&mut rng, n, -9, 9, Mode::Exact);
            let vb = raw.dot(&b).unwrap();
            let v = Vector::new(
                (0..n)
                    .map(|i| raw.get(i) - &(&vb / &bb) * b.get(i))
                    .collect(),
            )
            .unwrap();
            let candidate = Vector::new((0..n).map(|i| x.get(i) + v.get(i)).collect()).unwrap();
            if candidate.dot(&b).unwrap() != Scalar::from_int(1, Mode::Exact) {
                fail("9", what, "perturbation left the constraint surface");
            }
            let cv = spd.mul_vec(&candidate).unwrap().dot(&candidate).unwrap();
            if v.iter().all(Scalar::is_zero) {
                if cv != value {
                    fail("9", what, "zero perturbation changed the value");
                }
            } else if cv <= value {
                fail("9", what, "a feasible perturbation beat the minimizer");
            }
        }
    }
    // specialization chain, bit-exact
    let a = Vector::new(vec![
        Scalar::from_int(2, Mode::Exact),
        Scalar::ratio(1, 3),
        Scalar::from_int(5, Mode::Exact),
    ])
    .unwrap();
    let ones = Vector::from_ints(&[1, 1, 1], Mode::Exact);
    let b = Vector::from_ints(&[2, -1, 3], Mode::Exact);
    let (v1, x1) = min_weighted_sum(&a).unwrap();
    let (v2, x2) = min_weighted_sum_b(&a, &ones).unwrap();
    let (v3, x3) = min_quadratic_constrained(&Matrix::diag(&a), &ones).unwrap();
    if v1 != v2 || v2 != v3 || x1 != x2 || x2 != x3 {
        fail("9", what, "all-ones specialization chain broke");
    }
    let (v4, x4) = min_weighted_sum_b(&a, &b).unwrap();
    let (v5, x5) = min_quadratic_constrained(&Matrix::diag(&a), &b).unwrap();
    if v4 != v5 || x4 != x5 {
        fail(
            "9",
            what,
            "diagonal specialization of the matrix form broke",
        );
    }
    pass("9", what);
}

#[test]
fn criterion_10a_gram_ratio_divergence() {
    let what = "alternating instance: monotone and above 1e3 by n=200";
    let one = Scalar::from_int(1, Mode::Exact);
    let rows = [
        SequenceSpec::power(one.clone(), one.clone()),
        SequenceSpec::power(one, Scalar::from_int(-1, Mode::Exact)),
    ];
    let report =
        gram_ratio_sequence(&rows, 0, 200, Some(Scalar::from_int(1000, Mode::Exact))).unwrap();
    if !report.monotone_nondecreasing {
        fail("10a", what, "sequence is not monotone nondecreasing");
    }
    let last = report.values.last().unwrap();
    let above =
        last.partial_cmp(&Scalar::from_int(1000, Mode::Exact)) == Some(std::cmp::Ordering::Greater);
    if !above {
        fail(
            "10a",
            what,
            &format!(
                "value at n=200 is exactly {last}; the ratio (n² − (n mod 2))/n grows \
                 linearly and first exceeds 1e3 at n=1001, so the 1e3-by-200 bound is \
                 unattainable for this instance"
            ),
        );
    }
    pass("10a", what);
}

#[test]
fn criterion_10a_companion_actual_growth() {
    let what = "alternating instance: true linear growth, pinned";
    let one = Scalar::from_int(1, Mode::Exact);
    let rows = [
        SequenceSpec::power(one.clone(), one.clone()),
        SequenceSpec::power(one, Scalar::from_int(-1, Mode::Exact)),
    ];
    let report =
        gram_ratio_sequence(&rows, 0, 200, Some(Scalar::from_int(100, Mode::Exact))).unwrap();
    assert!(report.monotone_nondecreasing);
    assert_eq!(report.values[199], Scalar::from_int(200, Mode::Exact));
    assert_eq!(report.verdict, Verdict::Diverging);
    assert_eq!(report.crossing_index, Some(101));
    pass("10a-companion", what);
}

#[test]
fn criterion_10b_det_ratio_equals_one_plus_delta() {
    let what = "det ratio equals 1 + delta at every truncation";
    let one = Scalar::from_int(1, Mode::Exact);
    let rows = [
        SequenceSpec::power(one.clone(), one.clone()),
        SequenceSpec::power(one.clone(), Scalar::from_int(-1, Mode::Exact)),
        SequenceSpec::harmonic(one.clone()),
    ];
    for omit in 0..rows.len() {
        let n = 60;
        let report = det_ratio_sequence(&rows, omit, n, None).unwrap();
        for t in 1..=n {
            let mut fam = Vec::new();
            let truncated: Vec<Vector> = rows
                .iter()
                .map(|spec| Vector::new(spec.generate(t).unwrap()).unwrap())
                .collect();
            fam.push(truncated[omit].clone());
            for (i, v) in truncated.iter().enumerate() {
                if i != omit {
                    fam.push(v.clone());
                }
            }
            let expect = &one + &delta_functional(&fam).unwrap();
            if report.values[t - 1] != expect {
                fail(
                    "10b",
                    what,
                    &format!("mismatch at omit={omit}, truncation {t}"),
                );
            }
        }
    }
    pass("10b", what);
}

#[test]
fn criterion_11_performance() {
    let what = "n=14 float expansion under 5s; subset eval beats direct at n=10";
    let mut rng = rng(111);
    let c14 = rand_matrix(&mut rng, 14, 14, Mode::Float);
    let started = Instant::now();
    let p = gen_charpoly(&c14).unwrap();
    let elapsed = started.elapsed().as_secs_f64();
    assert_eq!(p.coeffs().len(), 1 << 14);
    if elapsed >= 5.0 {
        fail(
            "11",
            what,
            &format!("n=14 float expansion took {elapsed:.2}s"),
        );
    }

    // bench: default (exact) mode must win at n = 10 with 120 grid points;
    // one retry absorbs scheduler noise from concurrently running tests
    let c10 = rand_matrix(&mut rng, 10, 10, Mode::Exact);
    let mut report = run_bench(&c10, 120, DEFAULT_SUBSET_CAP).unwrap();
    if report.max_abs_diff != 0.0 {
        fail("11", what, "exact bench routes disagreed");
    }
    if report.subset_eval_ms >= report.direct_ms {
        report = run_bench(&c10, 120, DEFAULT_SUBSET_CAP).unwrap();
    }
    if report.subset_eval_ms >= report.direct_ms {
        fail(
            "11",
            what,
            &format!(
                "subset evaluation ({:.3} ms) did not beat direct determinants ({:.3} ms)",
                report.subset_eval_ms, report.direct_ms
            ),
        );
    }
    // float timings are informational
    let c10f = rand_matrix(&mut rng, 10, 10, Mode::Float);
    let float_report = run_bench(&c10f, 120, DEFAULT_SUBSET_CAP).unwrap();
    println!(
        "criterion 11 info: exact speedup {:.2}x, float speedup {:.2}x, n=14 float build {:.2}s",
        report.speedup, float_report.speedup, elapsed
    );
    pass("11", what);
}
