//! Closed-form constrained quadratic minima and truncation-sequence
//! divergence diagnostics.
//!
//! Verdicts are finite-evidence classifications, never proofs: `Diverging`
//! means monotone growth past the threshold within the evaluated
//! truncations, `Bounded` means a finite sup was certified (all-zero terms, a
//! geometric tail, or a constant ratio sequence), everything else is
//! `Inconclusive`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::{Mode, Scalar};

/// Minimize Σ a_k·x_k² subject to Σ x_k = 1 (all a_k > 0).
///
/// Returns the minimum (Σ 1/a_k)⁻¹ and the minimizer x_k = value/a_k.
pub fn min_weighted_sum(a: &Vector) -> Result<(Scalar, Vector)> {
    if a.is_empty() {
        return Err(Error::Shape(
            "weighted minimum needs at least one weight".into(),
        ));
    }
    let mode = a.mode();
    let mut inv_sum = Scalar::zero(mode);
    for (k, w) in a.iter().enumerate() {
        if !w.is_positive() {
            return Err(Error::Domain(format!(
                "weights must be positive, entry {} is {w}",
                k + 1
            )));
        }
        inv_sum = inv_sum + w.recip();
    }
    let value = inv_sum.recip();
    let x = Vector::new(a.iter().map(|w| &value / w).collect())?;
    Ok((value, x))
}

/// Minimize Σ a_k·x_k² subject to Σ x_k·b_k = 1.
///
/// Returns the minimum (Σ b_k²/a_k)⁻¹ and the minimizer
/// x_k = (b_k/a_k)·(Σ b_j²/a_j)⁻¹.
pub fn min_weighted_sum_b(a: &Vector, b: &Vector) -> Result<(Scalar, Vector)> {
    if a.len() != b.len() {
        return Err(Error::Shape(format!(
            "weights have length {}, constraint has length {}",
            a.len(),
            b.len()
        )));
    }
    if a.is_empty() {
        return Err(Error::Shape(
            "weighted minimum needs at least one weight".into(),
        ));
    }
    if b.iter().all(Scalar::is_zero) {
        return Err(Error::Domain(
            "constraint vector is zero: no feasible point".into(),
        ));
    }
    let mode = a.mode();
    let mut q = Scalar::zero(mode);
    for (k, (w, bk)) in a.iter().zip(b.iter()).enumerate() {
        if !w.is_positive() {
            return Err(Error::Domain(format!(
                "weights must be positive, entry {} is {w}",
                k + 1
            )));
        }
        q = q + &(bk * bk) / w;
    }
    let value = q.recip();
    let x = Vector::new(
        a.iter()
            .zip(b.iter())
            .map(|(w, bk)| &(bk / w) * &value)
            .collect(),
    )?;
    Ok((value, x))
}

/// Minimize (Ax, x) subject to (x, b) = 1 for symmetric positive definite A.
///
/// Returns 1/(A⁻¹b, b) and the minimizer A⁻¹b/(A⁻¹b, b).
pub fn min_quadratic_constrained(a: &Matrix, b: &Vector) -> Result<(Scalar, Vector)> {
    if !a.is_square() {
        return Err(Error::Shape(
            "quadratic minimum needs a square matrix".into(),
        ));
    }
    if !a.is_symmetric() {
        return Err(Error::Domain("matrix is not symmetric".into()));
    }
    if b.len() != a.n_rows() {
        return Err(Error::Shape(format!(
            "constraint has length {}, matrix has size {}",
            b.len(),
            a.n_rows()
        )));
    }
    if b.iter().all(Scalar::is_zero) {
        return Err(Error::Domain(
            "constraint vector is zero: no feasible point".into(),
        ));
    }
    let y = a.solve_spd(b)?;
    let q = y.dot(b)?;
    let value = q.recip();
    let x = Vector::new(y.iter().map(|c| c * &value).collect())?;
    Ok((value, x))
}

/// Deterministic generator for one coordinate sequence.
#[derive(Clone)]
pub enum SequenceKind {
    /// Literal values; index k maps to the k-th entry.
    Explicit(Vec<Scalar>),
    /// scale / k.
    Harmonic { scale: Scalar },
    /// scale · ratio^(k−1).
    Power { scale: Scalar, ratio: Scalar },
    /// Arbitrary closure of the index; float mode only.
    Custom(Arc<dyn Fn(usize) -> f64 + Send + Sync>),
}

impl fmt::Debug for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceKind::Explicit(v) => write!(f, "Explicit({} values)", v.len()),
            SequenceKind::Harmonic { scale } => write!(f, "Harmonic {{ scale: {scale} }}"),
            SequenceKind::Power { scale, ratio } => {
                write!(f, "Power {{ scale: {scale}, ratio: {ratio} }}")
            }
            SequenceKind::Custom(_) => write!(f, "Custom(closure)"),
        }
    }
}

/// A sequence spec: a kind plus an index window start (position j generates
/// index k = start + j − 1; explicit lists are positional).
#[derive(Clone, Debug)]
pub struct SequenceSpec {
    kind: SequenceKind,
    start: usize,
    n_max: usize,
    /// Caller-asserted "no nontrivial combination lies in ℓ₂" label; echoed
    /// for reporting, never used in computation.
    pub asserted_not_l2: bool,
}

impl SequenceSpec {
    pub fn explicit(values: Vec<Scalar>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Shape(
                "explicit sequence needs at least one value".into(),
            ));
        }
        let n_max = values.len();
        Ok(SequenceSpec {
            kind: SequenceKind::Explicit(values),
            start: 1,
            n_max,
            asserted_not_l2: false,
        })
    }

    pub fn harmonic(scale: Scalar) -> Self {
        SequenceSpec {
            kind: SequenceKind::Harmonic { scale },
            start: 1,
            n_max: usize::MAX,
            asserted_not_l2: false,
        }
    }

    pub fn power(scale: Scalar, ratio: Scalar) -> Self {
        assert_eq!(scale.mode(), ratio.mode(), "power spec mixes modes");
        SequenceSpec {
            kind: SequenceKind::Power { scale, ratio },
            start: 1,
            n_max: usize::MAX,
            asserted_not_l2: false,
        }
    }

    pub fn custom(f: Arc<dyn Fn(usize) -> f64 + Send + Sync>) -> Self {
        SequenceSpec {
            kind: SequenceKind::Custom(f),
            start: 1,
            n_max: usize::MAX,
            asserted_not_l2: false,
        }
    }

    pub fn with_start(mut self, start: usize) -> Self {
        assert!(start >= 1, "index windows are 1-based");
        self.start = start;
        self
    }

    pub fn with_n_max(mut self, n_max: usize) -> Self {
        self.n_max = n_max;
        self
    }

    pub fn mode(&self) -> Mode {
        match &self.kind {
            SequenceKind::Explicit(v) => v[0].mode(),
            SequenceKind::Harmonic { scale } => scale.mode(),
            SequenceKind::Power { scale, .. } => scale.mode(),
            SequenceKind::Custom(_) => Mode::Float,
        }
    }

    pub fn kind(&self) -> &SequenceKind {
        &self.kind
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Value at 1-based position j.
    pub fn value_at(&self, j: usize) -> Result<Scalar> {
        if j == 0 || j > self.n_max {
            return Err(Error::Domain(format!(
                "position {j} outside the generated range 1..={}",
                self.n_max
            )));
        }
        let k = self.start + j - 1;
        Ok(match &self.kind {
            SequenceKind::Explicit(v) => v[j - 1].clone(),
            SequenceKind::Harmonic { scale } => scale / &Scalar::from_int(k as i64, scale.mode()),
            SequenceKind::Power { scale, ratio } => scale * &ratio.powi((k - 1) as u32),
            SequenceKind::Custom(f) => Scalar::Float(f(k)),
        })
    }

    /// First `n` values.
    pub fn generate(&self, n: usize) -> Result<Vec<Scalar>> {
        (1..=n).map(|j| self.value_at(j)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Diverging,
    Bounded,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Diverging => write!(f, "diverging"),
            Verdict::Bounded => write!(f, "bounded"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Finite-truncation evidence for a divergence claim.
#[derive(Debug, Clone)]
pub struct DivergenceReport {
    /// One value per evaluated truncation, in truncation order.
    pub values: Vec<Scalar>,
    /// Truncation size behind each value (skips degenerate truncations).
    pub truncations: Vec<usize>,
    /// Truncations whose denominator Gram determinant vanished.
    pub degenerate_truncations: Vec<usize>,
    pub monotone_nondecreasing: bool,
    pub threshold: Scalar,
    pub verdict: Verdict,
    /// Truncation at which the threshold was first exceeded.
    pub crossing_index: Option<usize>,
    /// A certified finite sup, when one exists.
    pub certified_sup: Option<Scalar>,
}

fn default_threshold(mode: Mode) -> Scalar {
    Scalar::from_int(1_000_000, mode)
}

fn build_report(
    values: Vec<Scalar>,
    truncations: Vec<usize>,
    degenerate_truncations: Vec<usize>,
    threshold: Scalar,
    certified_sup: Option<Scalar>,
) -> DivergenceReport {
    let monotone = values.windows(2).all(|w| {
        w[0].partial_cmp(&w[1])
            .is_some_and(|o| o != std::cmp::Ordering::Greater)
    });
    let crossing_index = values
        .iter()
        .position(|v| v.partial_cmp(&threshold) == Some(std::cmp::Ordering::Greater))
        .map(|i| truncations[i]);
    let last_exceeds = values
        .last()
        .is_some_and(|v| v.partial_cmp(&threshold) == Some(std::cmp::Ordering::Greater));
    let verdict = if monotone && last_exceeds && !values.is_empty() {
        Verdict::Diverging
    } else if certified_sup.is_some() {
        Verdict::Bounded
    } else {
        Verdict::Inconclusive
    };
    DivergenceReport {
        values,
        truncations,
        degenerate_truncations,
        monotone_nondecreasing: monotone,
        threshold,
        verdict,
        crossing_index,
        certified_sup,
    }
}

/// Partial sums Σ_{k≤n} b_k²/λ_k for diagonal truncations diag(λ₁…λ_n).
pub fn truncated_quadform_sequence(
    lambda_spec: &SequenceSpec,
    b_spec: &SequenceSpec,
    n: usize,
    threshold: Option<Scalar>,
) -> Result<DivergenceReport> {
    if lambda_spec.mode() != b_spec.mode() {
        return Err(Error::Shape(
            "sequence specs mix exact and float modes".into(),
        ));
    }
    let mode = lambda_spec.mode();
    let lambdas = lambda_spec.generate(n)?;
    let bs = b_spec.generate(n)?;
    for (k, lam) in lambdas.iter().enumerate() {
        if !lam.is_positive() {
            return Err(Error::Domain(format!(
                "lambda must be positive, entry {} is {lam}",
                k + 1
            )));
        }
    }
    let mut values = Vec::with_capacity(n);
    let mut acc = Scalar::zero(mode);
    let mut terms = Vec::with_capacity(n);
    for (lam, b) in lambdas.iter().zip(&bs) {
        let term = &(b * b) / lam;
        acc = &acc + &term;
        terms.push(term);
        values.push(acc.clone());
    }

    // certification: identically zero terms, or a geometric tail with ratio < 1
    let certified_sup = if bs.iter().all(Scalar::is_zero) {
        Some(values.last().cloned().unwrap_or_else(|| Scalar::zero(mode)))
    } else if let (SequenceKind::Power { ratio: rl, .. }, SequenceKind::Power { ratio: rb, .. }) =
        (lambda_spec.kind(), b_spec.kind())
    {
        if rl.is_positive() {
            let rho = &(rb * rb) / rl;
            let one = Scalar::one(mode);
            if rho.partial_cmp(&one) == Some(std::cmp::Ordering::Less) && !values.is_empty() {
                let tail = &(terms.last().unwrap() * &rho) / &(&one - &rho);
                Some(values.last().unwrap() + tail)
            } else {
                None
            }
        } else {
            None
        }
    } else {
        None
    };

    let threshold = threshold.unwrap_or_else(|| default_threshold(mode));
    Ok(build_report(
        values,
        (1..=n).collect(),
        Vec::new(),
        threshold,
        certified_sup,
    ))
}

fn truncated_rows(rows: &[SequenceSpec], n: usize) -> Result<Vec<Vec<Scalar>>> {
    let mode = rows[0].mode();
    for r in rows {
        if r.mode() != mode {
            return Err(Error::Shape("row specs mix exact and float modes".into()));
        }
    }
    rows.iter().map(|r| r.generate(n)).collect()
}

/// Incrementally maintained Gram matrix of row prefixes.
struct PrefixGram {
    m: usize,
    mode: Mode,
    entries: Vec<Scalar>,
}

impl PrefixGram {
    fn new(m: usize, mode: Mode) -> Self {
        PrefixGram {
            m,
            mode,
            entries: vec![Scalar::zero(mode); m * m],
        }
    }

    fn push_coordinate(&mut self, coords: &[Scalar]) {
        for i in 0..self.m {
            for j in i..self.m {
                let add = &coords[i] * &coords[j];
                let v = &self.entries[i * self.m + j] + &add;
                self.entries[i * self.m + j] = v.clone();
                if i != j {
                    self.entries[j * self.m + i] = v;
                }
            }
        }
    }

    /// Gram matrix of the selected row indices.
    fn select(&self, keep: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(keep.len(), keep.len(), self.mode);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                out.set(a, b, self.entries[i * self.m + j].clone());
            }
        }
        out
    }
}

fn ratio_certified_sup(values: &[Scalar]) -> Option<Scalar> {
    let first = values.first()?;
    if values.iter().all(|v| v == first) {
        Some(first.clone())
    } else {
        None
    }
}

/// Γ(f₀…f_m)/Γ(family without f_s) over truncations to the first n
/// coordinates. A vanishing denominator marks that truncation degenerate and
/// the sequence continues.
pub fn gram_ratio_sequence(
    rows: &[SequenceSpec],
    omit: usize,
    n: usize,
    threshold: Option<Scalar>,
) -> Result<DivergenceReport> {
    if rows.is_empty() {
        return Err(Error::Shape(
            "ratio sequence needs at least one row spec".into(),
        ));
    }
    if omit >= rows.len() {
        return Err(Error::Shape(format!(
            "omit index {omit} out of range 0..={}",
            rows.len() - 1
        )));
    }
    let mode = rows[0].mode();
    let data = truncated_rows(rows, n)?;
    let m = rows.len();
    let keep_all: Vec<usize> = (0..m).collect();
    let keep_omit: Vec<usize> = (0..m).filter(|&i| i != omit).collect();

    let mut gram = PrefixGram::new(m, mode);
    let mut values = Vec::new();
    let mut truncations = Vec::new();
    let mut degenerate = Vec::new();
    for t in 1..=n {
        let coords: Vec<Scalar> = data.iter().map(|row| row[t - 1].clone()).collect();
        gram.push_coordinate(&coords);
        let denom = if keep_omit.is_empty() {
            Scalar::one(mode)
        } else {
            gram.select(&keep_omit).determinant()?
        };
        if denom.is_zero() {
            degenerate.push(t);
            continue;
        }
        let numer = gram.select(&keep_all).determinant()?;
        values.push(numer / denom);
        truncations.push(t);
    }

    let threshold = threshold.unwrap_or_else(|| default_threshold(mode));
    let certified = ratio_certified_sup(&values);
    Ok(build_report(
        values,
        truncations,
        degenerate,
        threshold,
        certified,
    ))
}

/// det(I_{m+1} + γ(all rows))/det(I_m + γ(rows without f_s)) over
/// truncations; denominators are always ≥ 1.
pub fn det_ratio_sequence(
    rows: &[SequenceSpec],
    omit: usize,
    n: usize,
    threshold: Option<Scalar>,
) -> Result<DivergenceReport> {
    if rows.is_empty() {
        return Err(Error::Shape(
            "ratio sequence needs at least one row spec".into(),
        ));
    }
    if omit >= rows.len() {
        return Err(Error::Shape(format!(
            "omit index {omit} out of range 0..={}",
            rows.len() - 1
        )));
    }
    let mode = rows[0].mode();
    let data = truncated_rows(rows, n)?;
    let m = rows.len();
    let keep_all: Vec<usize> = (0..m).collect();
    let keep_omit: Vec<usize> = (0..m).filter(|&i| i != omit).collect();

    let mut gram = PrefixGram::new(m, mode);
    let mut values = Vec::with_capacity(n);
    for t in 1..=n {
        let coords: Vec<Scalar> = data.iter().map(|row| row[t - 1].clone()).collect();
        gram.push_coordinate(&coords);
        let numer = Matrix::identity(m, mode)
            .add(&gram.select(&keep_all))?
            .determinant()?;
        let denom = if keep_omit.is_empty() {
            Scalar::one(mode)
        } else {
            Matrix::identity(m - 1, mode)
                .add(&gram.select(&keep_omit))?
                .determinant()?
        };
        values.push(numer / denom);
    }

    let threshold = threshold.unwrap_or_else(|| default_threshold(mode));
    let certified = ratio_certified_sup(&values);
    Ok(build_report(
        values,
        (1..=n).collect(),
        Vec::new(),
        threshold,
        certified,
    ))
}

/// Closed form of the squared distance for the "all-ones plus diagonal" Gram
/// pair: (1 + Σ 1/a_k²)⁻¹ over the generated window.
pub fn ones_plus_diag_distance(a_spec: &SequenceSpec, window: usize) -> Result<Scalar> {
    let mode = a_spec.mode();
    let mut sum = Scalar::zero(mode);
    for (j, a) in a_spec.generate(window)?.iter().enumerate() {
        if a.is_zero() {
            return Err(Error::Domain(format!(
                "sequence entries must be nonzero, position {} is zero",
                j + 1
            )));
        }
        sum = sum + (a * a).recip();
    }
    Ok((Scalar::one(mode) + sum).recip())
}

/// The same distance evaluated as the ratio of the two explicit
/// "ones + diag(a²)" Gram determinants.
pub fn ones_plus_diag_gram_ratio(a_spec: &SequenceSpec, window: usize) -> Result<Scalar> {
    let mode = a_spec.mode();
    let a = a_spec.generate(window)?;
    if let Some(j) = a.iter().position(Scalar::is_zero) {
        return Err(Error::Domain(format!(
            "sequence entries must be nonzero, position {} is zero",
            j + 1
        )));
    }
    // numerator: (w+1)×(w+1) all-ones plus diag(0, a₁², …, a_w²)
    let w = window;
    let mut numer = Matrix::new(w + 1, w + 1, vec![Scalar::one(mode); (w + 1) * (w + 1)])?;
    for (j, ak) in a.iter().enumerate() {
        let bump = Scalar::one(mode) + ak * ak;
        numer.set(j + 1, j + 1, bump);
    }
    let mut denom = if w == 0 {
        Matrix::zeros(0, 0, mode)
    } else {
        Matrix::new(w, w, vec![Scalar::one(mode); w * w])?
    };
    for (j, ak) in a.iter().enumerate() {
        let bump = Scalar::one(mode) + ak * ak;
        denom.set(j, j, bump);
    }
    Ok(numer.determinant()? / denom.determinant()?)
}
