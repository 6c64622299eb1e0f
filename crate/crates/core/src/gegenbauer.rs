//! Normalized Gegenbauer polynomials `G_k^{(n)}`, the zonal polynomials of
//! the sphere `S^{n-1}`.
//!
//! **`n` is the dimension of the ambient space `R^n`**, not the dimension of
//! the sphere. Every bound downstream depends on this convention; getting it
//! off by one silently corrupts all of them.
//!
//! The normalization is `G_k^{(n)}(1) = 1`, with `G_0 = 1`, `G_1 = t` and
//!
//! ```text
//! G_k(t) = ((n + 2k - 4) t G_{k-1}(t) - (k - 1) G_{k-2}(t)) / (n + k - 3).
//! ```
//!
//! Coefficient sequences are computed once per `(n, k)` from the recurrence
//! and memoized; evaluation is then Horner's rule.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Signed, Zero};

use crate::scalar::{int, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GegenbauerError {
    #[error("ambient dimension must be at least 2, got {0}")]
    Dimension(u32),
    #[error("coefficient of degree {0} is negative")]
    NegativeCoefficient(u32),
    #[error("zonal combination has no nonzero coefficient")]
    Empty,
}

/// Degree `k` polynomial for the sphere in `R^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GegenbauerSpec {
    dimension: u32,
    degree: u32,
}

impl GegenbauerSpec {
    pub fn new(dimension: u32, degree: u32) -> Result<Self, GegenbauerError> {
        if dimension < 2 {
            return Err(GegenbauerError::Dimension(dimension));
        }
        Ok(GegenbauerSpec { dimension, degree })
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficients in increasing degree order.
    pub fn coefficients(&self) -> Arc<Vec<Rational>> {
        coefficients(self.dimension, self.degree)
    }
}

type Cache = RwLock<HashMap<(u32, u32), Arc<Vec<Rational>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn coefficients(n: u32, k: u32) -> Arc<Vec<Rational>> {
    if let Some(c) = cache().read().unwrap().get(&(n, k)) {
        return Arc::clone(c);
    }
    let computed = Arc::new(match k {
        0 => vec![Rational::one()],
        1 => vec![Rational::zero(), Rational::one()],
        _ => {
            let prev = coefficients(n, k - 1);
            let prev2 = coefficients(n, k - 2);
            let (n, kk) = (i64::from(n), i64::from(k));
            let a = int(n + 2 * kk - 4);
            let b = int(kk - 1);
            let d = int(n + kk - 3);
            let mut out = vec![Rational::zero(); k as usize + 1];
            for (i, c) in prev.iter().enumerate() {
                out[i + 1] += &a * c;
            }
            for (i, c) in prev2.iter().enumerate() {
                out[i] -= &b * c;
            }
            out.into_iter().map(|c| c / &d).collect()
        }
    });
    let mut guard = cache().write().unwrap();
    Arc::clone(guard.entry((n, k)).or_insert(computed))
}

/// `G_k^{(n)}(t)` by Horner evaluation of the memoized coefficients.
pub fn gegenbauer_eval<S: Scalar>(spec: GegenbauerSpec, t: &S) -> S {
    horner(&spec.coefficients(), t)
}

/// `G_k^{(n)}(t)` straight from the three-term recurrence, without the
/// coefficient cache.
pub fn gegenbauer_eval_recurrence<S: Scalar>(spec: GegenbauerSpec, t: &S) -> S {
    let n = i64::from(spec.dimension);
    let mut prev2 = S::one();
    if spec.degree == 0 {
        return prev2;
    }
    let mut prev = t.clone();
    for k in 2..=i64::from(spec.degree) {
        let next = (S::from_i64(n + 2 * k - 4) * t.clone() * prev.clone()
            - S::from_i64(k - 1) * prev2)
            / S::from_i64(n + k - 3);
        prev2 = prev;
        prev = next;
    }
    prev
}

fn horner<S: Scalar>(coefficients: &[Rational], t: &S) -> S {
    coefficients
        .iter()
        .rev()
        .fold(S::zero(), |acc, c| acc * t.clone() + S::from_rational(c))
}

/// Leading coefficient of `G_s^{(n)}`: `prod_{i=2}^{s} (n+2i-4)/(n+i-3)`.
pub fn leading_coefficient(n: u32, s: u32) -> Rational {
    let n = i64::from(n);
    (2..=i64::from(s)).fold(Rational::one(), |acc, i| {
        acc * Rational::new((n + 2 * i - 4).into(), (n + i - 3).into())
    })
}

/// Nonnegative combination `sum_k c_k G_k^{(n)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZonalCombination {
    dimension: u32,
    coefficients: BTreeMap<u32, Rational>,
}

impl ZonalCombination {
    pub fn new(
        dimension: u32,
        coefficients: impl IntoIterator<Item = (u32, Rational)>,
    ) -> Result<Self, GegenbauerError> {
        if dimension < 2 {
            return Err(GegenbauerError::Dimension(dimension));
        }
        let mut map = BTreeMap::new();
        for (degree, c) in coefficients {
            if c.is_negative() {
                return Err(GegenbauerError::NegativeCoefficient(degree));
            }
            if !c.is_zero() {
                *map.entry(degree).or_insert_with(Rational::zero) += c;
            }
        }
        if map.is_empty() {
            return Err(GegenbauerError::Empty);
        }
        Ok(ZonalCombination {
            dimension,
            coefficients: map,
        })
    }

    /// The single polynomial `G_k^{(n)}`.
    pub fn pure(dimension: u32, degree: u32) -> Result<Self, GegenbauerError> {
        Self::new(dimension, [(degree, Rational::one())])
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn coefficients(&self) -> &BTreeMap<u32, Rational> {
        &self.coefficients
    }

    pub fn degree(&self) -> u32 {
        *self.coefficients.keys().next_back().expect("nonempty")
    }

    /// `Some((k, c))` when the combination is `c * G_k`.
    pub fn as_single_term(&self) -> Option<(u32, &Rational)> {
        if self.coefficients.len() == 1 {
            self.coefficients.iter().next().map(|(k, c)| (*k, c))
        } else {
            None
        }
    }

    pub fn eval<S: Scalar>(&self, t: &S) -> S {
        zonal_combination_eval(self, t)
    }
}

pub fn zonal_combination_eval<S: Scalar>(c: &ZonalCombination, t: &S) -> S {
    c.coefficients.iter().fold(S::zero(), |acc, (&k, coef)| {
        let spec = GegenbauerSpec {
            dimension: c.dimension,
            degree: k,
        };
        acc + S::from_rational(coef) * gegenbauer_eval(spec, t)
    })
}
