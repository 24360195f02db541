//! Dual-mode scalars: arbitrary-precision rationals or binary64 floats.
//!
//! Every quantity in this crate is a [`Scalar`]. A computation runs entirely
//! in one [`Mode`]; mixing modes in arithmetic is a caller bug and panics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arithmetic mode: exact rationals or binary64 floats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => write!(f, "exact"),
            Mode::Float => write!(f, "float"),
        }
    }
}

/// A number in one of the two modes.
///
/// Exact values are kept in lowest terms with a positive denominator
/// (`BigRational` maintains that canonical form).
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact(_) => Mode::Exact,
            Scalar::Float(_) => Mode::Float,
        }
    }

    pub fn zero(mode: Mode) -> Self {
        match mode {
            Mode::Exact => Scalar::Exact(BigRational::zero()),
            Mode::Float => Scalar::Float(0.0),
        }
    }

    pub fn one(mode: Mode) -> Self {
        match mode {
            Mode::Exact => Scalar::Exact(BigRational::one()),
            Mode::Float => Scalar::Float(1.0),
        }
    }

    pub fn from_int(v: i64, mode: Mode) -> Self {
        match mode {
            Mode::Exact => Scalar::Exact(BigRational::from(BigInt::from(v))),
            Mode::Float => Scalar::Float(v as f64),
        }
    }

    /// Exact rational p/q. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(x) => *x == 0.0,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_positive(),
            Scalar::Float(x) => *x > 0.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_negative(),
            Scalar::Float(x) => *x < 0.0,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Float(x) => Scalar::Float(x.abs()),
        }
    }

    pub fn recip(&self) -> Scalar {
        assert!(!self.is_zero(), "reciprocal of zero");
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.recip()),
            Scalar::Float(x) => Scalar::Float(1.0 / x),
        }
    }

    pub fn powi(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.pow(exp as i32)),
            Scalar::Float(x) => Scalar::Float(x.powi(exp as i32)),
        }
    }

    /// Square root. Exact mode succeeds only on perfect squares of rationals;
    /// float mode succeeds on any nonnegative value.
    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Exact(r) => {
                if r.is_negative() {
                    return None;
                }
                let num = r.numer();
                let den = r.denom();
                let sn = num.sqrt();
                let sd = den.sqrt();
                if &(&sn * &sn) == num && &(&sd * &sd) == den {
                    Some(Scalar::Exact(BigRational::new(sn, sd)))
                } else {
                    None
                }
            }
            Scalar::Float(x) => {
                if *x < 0.0 {
                    None
                } else {
                    Some(Scalar::Float(x.sqrt()))
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    /// Parse a scalar literal in the given mode.
    ///
    /// Accepts integers, `p/q` rationals and decimal literals. In exact mode a
    /// decimal like `0.5` becomes the exact rational 1/2.
    pub fn parse(text: &str, mode: Mode) -> Result<Scalar> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Domain("empty scalar literal".into()));
        }
        match mode {
            Mode::Float => {
                if let Some((num, den)) = text.split_once('/') {
                    let n: f64 = num.trim().parse().map_err(|_| bad_literal(text))?;
                    let d: f64 = den.trim().parse().map_err(|_| bad_literal(text))?;
                    if d == 0.0 {
                        return Err(Error::Domain(format!("zero denominator in `{text}`")));
                    }
                    return Ok(Scalar::Float(n / d));
                }
                let v: f64 = text.parse().map_err(|_| bad_literal(text))?;
                if !v.is_finite() {
                    return Err(bad_literal(text));
                }
                Ok(Scalar::Float(v))
            }
            Mode::Exact => {
                if let Some((num, den)) = text.split_once('/') {
                    let n = BigInt::from_str(num.trim()).map_err(|_| bad_literal(text))?;
                    let d = BigInt::from_str(den.trim()).map_err(|_| bad_literal(text))?;
                    if d.is_zero() {
                        return Err(Error::Domain(format!("zero denominator in `{text}`")));
                    }
                    return Ok(Scalar::Exact(BigRational::new(n, d)));
                }
                if let Some((int_part, frac_part)) = text.split_once('.') {
                    let digits = frac_part.trim();
                    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(bad_literal(text));
                    }
                    let negative = int_part.trim_start().starts_with('-');
                    let int = if int_part.is_empty() || int_part == "-" || int_part == "+" {
                        BigInt::zero()
                    } else {
                        BigInt::from_str(int_part).map_err(|_| bad_literal(text))?
                    };
                    let scale = BigInt::from(10u32).pow(digits.len() as u32);
                    let frac = BigInt::from_str(digits).map_err(|_| bad_literal(text))?;
                    let num = if negative || int.is_negative() {
                        int * &scale - frac
                    } else {
                        int * &scale + frac
                    };
                    return Ok(Scalar::Exact(BigRational::new(num, scale)));
                }
                let n = BigInt::from_str(text).map_err(|_| bad_literal(text))?;
                Ok(Scalar::Exact(BigRational::from(n)))
            }
        }
    }
}

fn bad_literal(text: &str) -> Error {
    Error::Domain(format!("invalid scalar literal `{text}`"))
}

/// Canonical form: exact as `p/q` in lowest terms (plain `p` for integers),
/// float as the shortest decimal that round-trips.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.partial_cmp(b),
            (Scalar::Float(a), Scalar::Float(b)) => a.partial_cmp(b),
            _ => None,
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt, $zero_check:expr) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => {
                        if $zero_check {
                            assert!(!b.is_zero(), "exact division by zero");
                        }
                        Scalar::Exact(a $op b)
                    }
                    (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a $op b),
                    _ => panic!("mixed exact/float arithmetic"),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, +, false);
scalar_binop!(Sub, sub, -, false);
scalar_binop!(Mul, mul, *, false);
scalar_binop!(Div, div, /, true);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(x) => Scalar::Float(-x),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
