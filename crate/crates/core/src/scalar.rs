//! Number types shared by every module.
//!
//! Two regimes exist side by side. Exact work uses [`Rational`], an
//! arbitrary-precision fraction that is always kept in lowest terms with a
//! positive denominator. Configurations with irrational coordinates (the
//! pentagon, the icosahedron) fall back to `f64` together with a tolerance.
//! Code that does not care which regime it runs in is generic over
//! [`Scalar`].

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::linalg::{self, SymMatrix};

/// Exact fraction of arbitrary-precision integers.
pub type Rational = BigRational;

/// Default tolerance for the floating regime.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Field element usable by the generic algorithms.
///
/// The linear-algebra kernels live on the trait because the two regimes use
/// entirely different algorithms: fraction-free elimination for rationals,
/// a symmetric eigensolver for floats.
pub trait Scalar:
    Clone
    + Debug
    + PartialOrd
    + Send
    + Sync
    + 'static
    + num_traits::Num
    + Signed
    + std::ops::Neg<Output = Self>
{
    /// `true` for the exact rational regime.
    const EXACT: bool;

    fn from_rational(q: &Rational) -> Self;

    fn from_i64(v: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Exact value; floats convert through their binary expansion.
    fn to_rational(&self) -> Option<Rational>;

    /// Equality: exact for rationals, within `tol` for floats.
    fn near(&self, other: &Self, tol: f64) -> bool;

    /// Sign test honoring the regime: floats within `tol` of zero count as zero.
    fn is_negligible(&self, tol: f64) -> bool {
        self.near(&Self::zero(), tol)
    }

    /// Exact fractions in the exact regime, 12 significant digits otherwise.
    fn render(&self) -> String;

    fn sym_rank(m: &SymMatrix<Self>) -> usize;

    fn sym_nullity_at(m: &SymMatrix<Self>, lambda: &Self) -> usize;

    fn sym_is_psd(m: &SymMatrix<Self>) -> bool;

    /// Sorted (ascending) eigenvalues; only available in the floating regime.
    fn sym_eigenvalues(m: &SymMatrix<Self>) -> Option<Vec<f64>>;
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn near(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn render(&self) -> String {
        self.to_string()
    }

    fn sym_rank(m: &SymMatrix<Self>) -> usize {
        linalg::exact_rank(m)
    }

    fn sym_nullity_at(m: &SymMatrix<Self>, lambda: &Self) -> usize {
        m.order() - linalg::exact_rank(&m.shifted(lambda))
    }

    fn sym_is_psd(m: &SymMatrix<Self>) -> bool {
        linalg::exact_is_psd(m)
    }

    fn sym_eigenvalues(_m: &SymMatrix<Self>) -> Option<Vec<f64>> {
        None
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_rational(q: &Rational) -> Self {
        ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn to_rational(&self) -> Option<Rational> {
        Rational::from_f64(*self)
    }

    fn near(&self, other: &Self, tol: f64) -> bool {
        (self - other).abs() <= tol
    }

    fn render(&self) -> String {
        format_decimal(*self)
    }

    fn sym_rank(m: &SymMatrix<Self>) -> usize {
        linalg::float_eigenvalues(m)
            .iter()
            .filter(|v| v.abs() > m.tolerance())
            .count()
    }

    fn sym_nullity_at(m: &SymMatrix<Self>, lambda: &Self) -> usize {
        linalg::float_eigenvalues(m)
            .iter()
            .filter(|v| (*v - lambda).abs() <= m.tolerance())
            .count()
    }

    fn sym_is_psd(m: &SymMatrix<Self>) -> bool {
        linalg::float_eigenvalues(m)
            .first()
            .is_none_or(|min| *min >= -m.tolerance())
    }

    fn sym_eigenvalues(m: &SymMatrix<Self>) -> Option<Vec<f64>> {
        Some(linalg::float_eigenvalues(m))
    }
}

/// Renders a float with 12 significant digits and no trailing zeros;
/// magnitudes outside `[1e-6, 1e15)` use exponent notation.
pub fn format_decimal(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return if v == 0.0 { "0".to_string() } else { v.to_string() };
    }
    let trim = |mut s: String| {
        if s.contains('.') {
            while s.ends_with('0') {
                s.pop();
            }
            if s.ends_with('.') {
                s.pop();
            }
        }
        s
    };
    let magnitude = v.abs().log10().floor() as i32;
    if !(-6..15).contains(&magnitude) {
        let s = format!("{:.11e}", v);
        let (mantissa, exponent) = s.split_once('e').expect("exponent form");
        return format!("{}e{exponent}", trim(mantissa.to_string()));
    }
    let decimals = (11 - magnitude).max(0) as usize;
    let s = trim(format!("{:.*}", decimals, v));
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

/// Error returned when a numeric literal cannot be read.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid number `{0}`")]
pub struct NumberError(pub String);

/// A literal read from text: either an exact fraction (`p/q` or an integer)
/// or a decimal.
#[derive(Debug, Clone, PartialEq)]
pub enum Literal {
    Exact(Rational),
    Decimal(f64),
}

impl Literal {
    pub fn to_f64(&self) -> f64 {
        match self {
            Literal::Exact(q) => Scalar::to_f64(q),
            Literal::Decimal(v) => *v,
        }
    }
}

impl FromStr for Literal {
    type Err = NumberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Ok(q) = parse_rational(s) {
            return Ok(Literal::Exact(q));
        }
        match s.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(Literal::Decimal(v)),
            _ => Err(NumberError(s.to_string())),
        }
    }
}

/// Parses `p/q` or a plain integer into a reduced fraction.
pub fn parse_rational(s: &str) -> Result<Rational, NumberError> {
    let err = || NumberError(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let valid = |t: &str| {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return Err(err());
    }
    let p: BigInt = num.trim_start_matches('+').parse().map_err(|_| err())?;
    let q: BigInt = den.trim_start_matches('+').parse().map_err(|_| err())?;
    if q.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(p, q))
}

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn uint(p: u64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Largest integer not exceeding `q`.
pub fn floor(q: &Rational) -> BigInt {
    q.floor().to_integer()
}

/// `Some(k)` when `q` is an integer.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Odd positive integer test on a rational.
pub fn as_odd_natural(q: &Rational) -> Option<u64> {
    let k = as_integer(q)?;
    if k.is_positive() && k.is_odd() {
        k.to_u64()
    } else {
        None
    }
}

/// Binomial coefficient `C(n, k)`; zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Best-effort conversion of a float to an exact fraction (binary expansion).
pub fn rational_from_f64(v: f64) -> Option<Rational> {
    Rational::from_f64(v)
}
