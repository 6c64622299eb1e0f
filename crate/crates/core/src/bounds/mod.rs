//! Closed-form upper bounds on spherical few-distance sets and equiangular
//! sets, and the dimension-wise aggregators built from them.
//!
//! Arithmetic is exact throughout; reported values are floors of the
//! rational formula values.

mod facts;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::gegenbauer::leading_coefficient;
use crate::scalar::{as_odd_natural, binomial, floor, uint, Rational};

pub use facts::{ExcludedDesign, FactError, FactTable, NonexistenceFact};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

fn invalid<T>(message: impl Into<String>) -> Result<T, BoundError> {
    Err(BoundError::InvalidArgument(message.into()))
}

/// Outcome of one bound evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub name: &'static str,
    /// Classical result the formula comes from.
    pub source: &'static str,
    pub inputs: Vec<(&'static str, String)>,
    pub applicable: bool,
    pub reason: String,
    /// Rational formula value before flooring.
    pub exact: Option<Rational>,
    pub value: Option<BigInt>,
    pub notes: Vec<String>,
    /// For aggregators: name of the bound or case that produced the value.
    pub winner: Option<String>,
    /// For aggregators: every candidate that was evaluated.
    pub cases: Vec<(String, BigInt)>,
}

impl BoundReport {
    fn new(name: &'static str, source: &'static str, inputs: Vec<(&'static str, String)>) -> Self {
        BoundReport {
            name,
            source,
            inputs,
            applicable: false,
            reason: String::new(),
            exact: None,
            value: None,
            notes: Vec::new(),
            winner: None,
            cases: Vec::new(),
        }
    }

    fn with_exact(mut self, exact: Rational, reason: impl Into<String>) -> Self {
        self.applicable = true;
        self.reason = reason.into();
        self.value = Some(floor(&exact));
        self.exact = Some(exact);
        self
    }

    fn with_integer(self, value: BigInt, reason: impl Into<String>) -> Self {
        self.with_exact(Rational::from_integer(value), reason)
    }

    fn inapplicable(mut self, reason: impl Into<String>) -> Self {
        self.applicable = false;
        self.reason = reason.into();
        self.exact = None;
        self.value = None;
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// The value when it fits in `u64`.
    pub fn value_u64(&self) -> Option<u64> {
        self.value.as_ref().and_then(ToPrimitive::to_u64)
    }

    pub fn input(&self, key: &str) -> Option<&str> {
        self.inputs.iter().find(|(k, _)| *k == key).map(|(_, v)| v.as_str())
    }
}

/// Which results the dimension-wise aggregators may rely on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Only what the implemented bounds derive.
    #[default]
    Derivation,
    /// Also the published classification, which rests on external
    /// computations for small dimensions.
    AssumeTheorems,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Derivation => "derivation",
            Mode::AssumeTheorems => "assume-theorems",
        })
    }
}

impl FromStr for Mode {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "derivation" => Ok(Mode::Derivation),
            "assume-theorems" => Ok(Mode::AssumeTheorems),
            other => invalid(format!("unknown mode `{other}`")),
        }
    }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn gerzon_value(n: u64) -> BigInt {
    big(n) * big(n + 1) / 2
}

fn gerzon_type_value(a: u64) -> BigInt {
    let a2 = big(a) * big(a);
    (&a2 - 2) * (&a2 - 1) / 2
}

/// Dimension of the space of polynomials of degree at most `d` restricted
/// to the sphere in `R^n`: `C(n+d-1, d) + C(n+d-2, d-1)`.
pub fn polynomial_space_dim(n: u64, d: u64) -> BigInt {
    if d == 0 {
        return BigInt::one();
    }
    let (n, d) = (n as i64, d as i64);
    binomial(n + d - 1, d) + binomial(n + d - 2, d - 1)
}

/// Harmonic bound for `s`-distance sets on the sphere in `R^n`.
pub fn harmonic_bound(n: u64, s: u64) -> Result<BoundReport, BoundError> {
    if n < 2 || s < 1 {
        return invalid(format!("harmonic bound needs n >= 2 and s >= 1, got n={n}, s={s}"));
    }
    Ok(
        BoundReport::new("harmonic", "absolute bound for spherical s-distance sets", vec![
            ("n", n.to_string()),
            ("s", s.to_string()),
        ])
        .with_integer(polynomial_space_dim(n, s), "always applicable"),
    )
}

/// Gerzon's bound `n(n+1)/2` on equiangular sets in `R^n`.
pub fn gerzon_bound(n: u64) -> Result<BoundReport, BoundError> {
    if n < 2 {
        return invalid(format!("Gerzon bound needs n >= 2, got {n}"));
    }
    Ok(BoundReport::new("gerzon", "Gerzon", vec![("n", n.to_string())])
        .with_integer(gerzon_value(n), "always applicable"))
}

/// `n(1 - alpha^2) / (1 - n alpha^2)`, valid when `n alpha^2 < 1`.
pub fn relative_bound(n: u64, alpha: &Rational) -> Result<BoundReport, BoundError> {
    if !alpha.is_positive() || *alpha >= Rational::one() {
        return invalid(format!("relative bound needs 0 < alpha < 1, got {alpha}"));
    }
    let report = BoundReport::new("relative", "relative bound for equiangular sets", vec![
        ("n", n.to_string()),
        ("alpha", alpha.to_string()),
    ]);
    let a2 = alpha * alpha;
    let denom = Rational::one() - uint(n) * &a2;
    if !denom.is_positive() {
        return Ok(report.inapplicable(format!("n alpha^2 = {} is not below 1", uint(n) * &a2)));
    }
    let exact = uint(n) * (Rational::one() - a2) / denom;
    Ok(report.with_exact(exact, "n alpha^2 < 1"))
}

fn odd_at_least_three(a: u64) -> Result<(), BoundError> {
    if a < 3 || a.is_multiple_of(2) {
        return invalid(format!("a must be an odd integer >= 3, got {a}"));
    }
    Ok(())
}

/// `(a^2-2)(a^2-1)/2` for equiangular sets with angle `arccos(1/a)`,
/// valid when `n <= 3a^2 - 16`.
pub fn gerzon_type_bound(a: u64, n: u64) -> Result<BoundReport, BoundError> {
    odd_at_least_three(a)?;
    let report = BoundReport::new("gerzon-type", "Gerzon-type bound for fixed angle arccos(1/a)", vec![
        ("a", a.to_string()),
        ("n", n.to_string()),
    ]);
    let limit = 3 * a * a - 16;
    if n > limit {
        return Ok(report.inapplicable(format!("n = {n} exceeds 3a^2 - 16 = {limit}")));
    }
    Ok(report.with_integer(gerzon_type_value(a), format!("n <= 3a^2 - 16 = {limit}")))
}

/// `n(n+1)/2` for two-distance sets with `alpha + beta >= 0`.
pub fn musin_bound(n: u64, alpha: &Rational, beta: &Rational) -> Result<BoundReport, BoundError> {
    if alpha <= beta {
        return invalid(format!("need alpha > beta, got alpha={alpha}, beta={beta}"));
    }
    let report = BoundReport::new("musin", "Musin bound for alpha + beta >= 0", vec![
        ("n", n.to_string()),
        ("alpha", alpha.to_string()),
        ("beta", beta.to_string()),
    ]);
    let sum = alpha + beta;
    if sum.is_negative() {
        return Ok(report.inapplicable(format!("alpha + beta = {sum} is negative")));
    }
    Ok(report.with_integer(gerzon_value(n), "alpha + beta >= 0"))
}

/// `(1 + K(s-1)) / (1 - 1/(c_s prod(1 - beta_l)))` with
/// `K = polynomial_space_dim(n, s-1)` and `c_s` the leading coefficient of
/// `G_s`. With `regular` the numerator is `K(s-1)`.
pub fn s_distance_bound(n: u64, betas: &[Rational], regular: bool) -> Result<BoundReport, BoundError> {
    if n < 2 {
        return invalid(format!("dimension must be at least 2, got {n}"));
    }
    if betas.is_empty() {
        return invalid("at least one inner product is required");
    }
    for (i, b) in betas.iter().enumerate() {
        if *b >= Rational::one() {
            return invalid(format!("inner products must be below 1, got {b}"));
        }
        if betas[..i].contains(b) {
            return invalid(format!("inner product {b} is listed twice"));
        }
    }
    let s = betas.len() as u64;
    let rendered: Vec<String> = betas.iter().map(ToString::to_string).collect();
    let mut report = BoundReport::new("s-distance", "zonal polynomial bound for s-distance sets", vec![
        ("n", n.to_string()),
        ("betas", rendered.join(" ")),
        ("regular", regular.to_string()),
    ]);
    let k = polynomial_space_dim(n, s - 1);
    let numerator = Rational::from_integer(&k * big(s - 1) + if regular { 0 } else { 1 });
    let product = betas
        .iter()
        .fold(leading_coefficient(n as u32, s as u32), |acc, b| acc * (Rational::one() - b));
    let denom = Rational::one() - product.recip();
    report.inputs.push(("K", k.to_string()));
    if !denom.is_positive() {
        return Ok(report.inapplicable(format!("denominator {denom} is not positive")));
    }
    Ok(report.with_exact(numerator / denom, "denominator is positive"))
}

/// `(n+2) / (1 - (n-1)/(n(1-alpha)(1-beta)))`; `n+1` in the numerator with
/// `regular`.
pub fn two_distance_bound(
    n: u64,
    alpha: &Rational,
    beta: &Rational,
    regular: bool,
) -> Result<BoundReport, BoundError> {
    if n < 2 {
        return invalid(format!("dimension must be at least 2, got {n}"));
    }
    if alpha == beta {
        return invalid(format!("alpha and beta must differ, both are {alpha}"));
    }
    if *alpha >= Rational::one() || *beta >= Rational::one() {
        return invalid(format!("inner products must be below 1, got {alpha} and {beta}"));
    }
    let report = BoundReport::new("two-distance", "zonal polynomial bound for two-distance sets", vec![
        ("n", n.to_string()),
        ("alpha", alpha.to_string()),
        ("beta", beta.to_string()),
        ("regular", regular.to_string()),
    ]);
    let one = Rational::one();
    let denom = &one - uint(n - 1) / (uint(n) * (&one - alpha) * (&one - beta));
    if !denom.is_positive() {
        return Ok(report.inapplicable(format!("denominator {denom} is not positive")));
    }
    let numerator = uint(if regular { n + 1 } else { n + 2 });
    Ok(report.with_exact(numerator / denom, "denominator is positive"))
}

/// `(n^2 a^2 + n - 2) / (n + a^2 - 2)` for equiangular sets with angle
/// `arccos(1/a)`; always below `n a^2`.
pub fn derived_set_bound(n: u64, a: u64) -> Result<BoundReport, BoundError> {
    if a < 3 || n < 2 {
        return invalid(format!("derived-set bound needs a >= 3 and n >= 2, got a={a}, n={n}"));
    }
    let (nb, a2) = (big(n), big(a) * big(a));
    let exact = Rational::new(&nb * &nb * &a2 + &nb - 2, &nb + &a2 - 2);
    let envelope = &nb * &a2;
    Ok(
        BoundReport::new("derived-set", "derived-set bound for fixed angle arccos(1/a)", vec![
            ("n", n.to_string()),
            ("a", a.to_string()),
        ])
        .with_exact(exact, "always applicable")
        .note(format!("strict envelope n a^2 = {envelope}")),
    )
}

/// `(3a+5)/((a-1)(a+2)^2)` and `(3a-5)/((a+1)(a-2)^2)`.
pub fn split_constants(a: u64) -> (Rational, Rational) {
    let a = big(a);
    let c1 = Rational::new(3 * &a + 5, (&a - 1) * (&a + 2) * (&a + 2));
    let c2 = Rational::new(3 * &a - 5, (&a + 1) * (&a - 2) * (&a - 2));
    (c1, c2)
}

/// `n (2a^2/3 + 4/7) + 2`.
pub fn split_envelope(n: u64, a: u64) -> Rational {
    let a2 = uint(a * a);
    uint(n) * (Rational::new(2.into(), 3.into()) * a2 + Rational::new(4.into(), 7.into())) + uint(2)
}

/// `f(a) = (a-1)(a+2)^2/(3a+5) + (a+1)(a-2)^2/(3a-5) + 2 - 2a^2/3`, the slack
/// between the split bound's slope and `2a^2/3`.
pub fn split_slope_excess(a: u64) -> Rational {
    let (c1, c2) = split_constants(a);
    c1.recip() + c2.recip() + uint(2) - Rational::new(2.into(), 3.into()) * uint(a * a)
}

/// The equiangular set is split into the points on either side of a
/// derived set; each part is bounded by the two-distance bound and floored
/// separately: `floor(T1) + floor(T2) + 2` with
/// `T = n(n-2)(1+c) / (1+(n-2)c)`.
pub fn split_bound(n: u64, a: u64) -> Result<BoundReport, BoundError> {
    if a < 3 || n < 4 {
        return invalid(format!("split bound needs a >= 3 and n >= 4, got a={a}, n={n}"));
    }
    let (c1, c2) = split_constants(a);
    let part = |c: &Rational| {
        let m = uint(n - 2);
        uint(n) * &m * (Rational::one() + c) / (Rational::one() + m * c)
    };
    let (t1, t2) = (part(&c1), part(&c2));
    let exact = &t1 + &t2 + uint(2);
    let value = floor(&t1) + floor(&t2) + 2;
    let envelope = split_envelope(n, a);
    let mut report = BoundReport::new("split", "split bound for fixed angle arccos(1/a)", vec![
        ("n", n.to_string()),
        ("a", a.to_string()),
    ])
    .with_exact(exact, "always applicable")
    .note(format!(
        "parts floored separately: floor({t1}) + floor({t2}) + 2"
    ))
    .note(format!("closed envelope floor(n(2a^2/3 + 4/7) + 2) = {}", floor(&envelope)));
    report.value = Some(value);
    Ok(report)
}

/// Best bound for equiangular sets in `R^n` with angle `arccos(1/a)`.
///
/// For `a` not an odd integer the value is `min(2n, n(n+1)/2)`; otherwise
/// the minimum over every applicable fixed-angle bound.
pub fn equiangular_fixed_angle_bound(n: u64, a: &Rational) -> Result<BoundReport, BoundError> {
    if *a <= Rational::one() {
        return invalid(format!("need a > 1, got {a}"));
    }
    if n < 2 {
        return invalid(format!("dimension must be at least 2, got {n}"));
    }
    let mut report = BoundReport::new("equiangular-fixed-angle", "minimum of fixed-angle bounds", vec![
        ("n", n.to_string()),
        ("a", a.to_string()),
    ]);
    let mut candidates = vec![gerzon_bound(n)?];
    match as_odd_natural(a) {
        Some(odd) => {
            candidates.insert(0, relative_bound(n, &a.recip())?);
            candidates.insert(1, gerzon_type_bound(odd, n)?);
            candidates.insert(2, derived_set_bound(n, odd)?);
            if n >= 4 {
                candidates.insert(3, split_bound(n, odd)?);
            }
        }
        None => {
            let two_n = BoundReport::new("non-odd", "2n bound when 1/alpha is not an odd integer", vec![
                ("n", n.to_string()),
            ])
            .with_integer(big(2 * n), "a is not an odd integer");
            candidates.insert(0, two_n);
        }
    }
    let mut best: Option<&BoundReport> = None;
    for c in candidates.iter().filter(|c| c.applicable) {
        report.cases.push((c.name.to_string(), c.value.clone().expect("applicable")));
        if best.is_none_or(|b| c.value < b.value) {
            best = Some(c);
        }
    }
    let best = best.expect("Gerzon always applies");
    report.winner = Some(best.name.to_string());
    let value = best.value.clone().expect("applicable");
    Ok(report.with_integer(value, format!("minimum attained by {}", best.name)))
}

/// First dimension from which the three-case argument closes.
pub const THREE_CASE_THRESHOLD: u64 = 359;

/// The odd `a >= 1` with `a^2 - 2 <= n <= (a+2)^2 - 3`.
pub fn admissible_odd(n: u64) -> u64 {
    let mut a = 1u64;
    while (a + 2) * (a + 2) - 3 < n {
        a += 2;
    }
    a
}

/// `n = (2k+1)^2 - 3` for some `k >= 1`.
pub fn is_exceptional(n: u64) -> bool {
    let a = admissible_odd(n + 1);
    a >= 3 && a * a - 3 == n
}

/// Upper bound on the number of equiangular lines in `R^n`, any angle.
///
/// From `n = 359` on, the three cases of the argument are evaluated with
/// the implemented bounds and the maximum is reported; below that the
/// value is Gerzon's bound lowered by any fact whose range contains `n`.
pub fn equiangular_max_bound(n: u64, facts: &FactTable) -> Result<BoundReport, BoundError> {
    if n < 2 {
        return invalid(format!("dimension must be at least 2, got {n}"));
    }
    let a = admissible_odd(n);
    let mut report = BoundReport::new("equiangular-max", "maximum over angles", vec![("n", n.to_string())]);
    if a >= 3 {
        report.inputs.push(("a", a.to_string()));
    }
    if n >= THREE_CASE_THRESHOLD {
        let mut cases = Vec::new();
        // Case 1: b <= a with b^2 - 2 <= n <= 3b^2 - 16.
        let case1 = gerzon_type_bound(a, n)?;
        cases.push(("gerzon-type at b = a".to_string(), case1.value.clone().expect("n <= 3a^2-16")));
        // Case 2: b >= a+2, relative bound, largest at b = a+2 and n = (a+2)^2 - 3.
        let b = a + 2;
        let worst_n = b * b - 3;
        let case2 = relative_bound(worst_n, &Rational::new(1.into(), big(b)))?;
        cases.push((format!("relative at b = {b}, n = {worst_n}"), case2.value.clone().expect("applicable")));
        // Case 3: odd b with n >= 3b^2 - 15, split bound.
        let mut case3: Option<(u64, BigInt)> = None;
        let mut odd_b = 3;
        while 3 * odd_b * odd_b - 15 <= n {
            let v = split_bound(n, odd_b)?.value.expect("applicable");
            if case3.as_ref().is_none_or(|(_, best)| v > *best) {
                case3 = Some((odd_b, v));
            }
            odd_b += 2;
        }
        if let Some((b3, v)) = case3 {
            cases.push((format!("split at b = {b3}"), v));
        }
        let envelope_n = uint(worst_n);
        let envelope = (uint(14) * &envelope_n * &envelope_n + uint(246) * &envelope_n + uint(126)) / uint(63);
        report.notes.push(format!(
            "split envelope over the whole range, (14n^2 + 246n + 126)/63 at n = {worst_n}: {}",
            floor(&envelope)
        ));
        // Angles with 1/alpha not an odd integer.
        cases.push(("non-odd 2n".to_string(), big(2 * n)));
        let (label, max) = cases
            .iter()
            .max_by(|x, y| x.1.cmp(&y.1))
            .map(|(l, v)| (l.clone(), v.clone()))
            .expect("nonempty");
        let expected = gerzon_type_value(a);
        let dominant = cases[1..].iter().all(|(_, v)| *v < expected);
        if max != expected || !dominant {
            report.notes.push(format!("case comparison failed: maximum {max}, expected {expected}"));
        } else {
            report.notes.push("case 1 strictly dominates the other cases".into());
        }
        report.cases = cases;
        report.winner = Some(label);
        return Ok(report.with_integer(max, format!("three-case argument with a = {a}")));
    }
    let mut value = gerzon_value(n);
    let mut winner = "gerzon".to_string();
    report.cases.push((winner.clone(), value.clone()));
    for fact in facts.covering(n) {
        report.cases.push((format!("fact [{}, {}]", fact.lo, fact.hi), big(fact.cap)));
        if big(fact.cap) < value {
            value = big(fact.cap);
            winner = format!("fact: {}", fact.source);
        }
    }
    report.winner = Some(winner);
    Ok(report
        .with_integer(value, "Gerzon bound with known nonexistence results")
        .note(format!("out of theorem range: the three-case argument needs n >= {THREE_CASE_THRESHOLD}")))
}

/// Upper bound on two-distance sets in `R^n`.
///
/// In derivation mode: `min(harmonic, max(n(n+1)/2, equiangular_max(n+1)))`,
/// the first term for `alpha + beta >= 0`, the second through lifting. In
/// assume-theorems mode the published classification is used directly.
pub fn two_distance_max_bound(n: u64, mode: Mode, facts: &FactTable) -> Result<BoundReport, BoundError> {
    if n < 2 {
        return invalid(format!("dimension must be at least 2, got {n}"));
    }
    let mut report = BoundReport::new("two-distance-max", "maximum over inner products", vec![
        ("n", n.to_string()),
        ("mode", mode.to_string()),
    ]);
    let exceptional = is_exceptional(n);
    let harmonic = harmonic_bound(n, 2)?.value.expect("applicable");
    let gerzon = gerzon_value(n);
    if exceptional {
        let a = admissible_odd(n + 1);
        report.notes.push(format!("exceptional dimension n = {a}^2 - 3"));
        if let Some(fact) = facts.excluded_design(a) {
            report.notes.push(format!(
                "harmonic bound is not attained here ({}), so the true maximum is below {harmonic}",
                fact.source
            ));
        }
    }
    let (value, winner) = match mode {
        Mode::Derivation => {
            let lifted = equiangular_max_bound(n + 1, facts)?.value.expect("applicable");
            report.cases.push(("harmonic".into(), harmonic.clone()));
            report.cases.push(("musin (alpha + beta >= 0)".into(), gerzon.clone()));
            report.cases.push(("lifting to R^(n+1)".into(), lifted.clone()));
            let (inner, inner_name) = if lifted > gerzon {
                (lifted, "lifting to R^(n+1)")
            } else {
                (gerzon, "musin (alpha + beta >= 0)")
            };
            if n + 1 < THREE_CASE_THRESHOLD {
                report.notes.push(format!(
                    "out of derivation reach: the lifting step needs n >= {}; small dimensions rest on external computations",
                    THREE_CASE_THRESHOLD - 1
                ));
            }
            if harmonic <= inner {
                (harmonic, "harmonic")
            } else {
                (inner, inner_name)
            }
        }
        Mode::AssumeTheorems => {
            if exceptional {
                (harmonic, "harmonic")
            } else if n >= 7 {
                report.notes.push("classification for n >= 7; small n rest on external computations".into());
                (gerzon, "classification n(n+1)/2")
            } else {
                report.notes.push("n < 7: classification does not apply".into());
                (harmonic, "harmonic")
            }
        }
    };
    report.winner = Some(winner.to_string());
    report.inputs.push(("exceptional", exceptional.to_string()));
    Ok(report.with_integer(value, format!("{mode} mode")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn v(r: Result<BoundReport, BoundError>) -> u64 {
        r.unwrap().value_u64().unwrap()
    }

    #[test]
    fn polynomial_dimensions() {
        assert_eq!(polynomial_space_dim(9, 0), big(1));
        assert_eq!(polynomial_space_dim(9, 1), big(10));
        assert_eq!(polynomial_space_dim(2, 2), big(5));
        assert_eq!(polynomial_space_dim(3, 3), big(16));
    }

    #[test]
    fn simple_bounds() {
        assert_eq!(v(harmonic_bound(2, 2)), 5);
        assert_eq!(v(harmonic_bound(10, 2)), 65);
        assert_eq!(v(gerzon_bound(7)), 28);
        assert_eq!(v(gerzon_bound(23)), 276);
        assert_eq!(v(gerzon_bound(2)), 3);
        assert_eq!(v(relative_bound(7, &rat(1, 3))), 28);
        assert_eq!(v(relative_bound(23, &rat(1, 5))), 276);
        assert!(!relative_bound(9, &rat(1, 3)).unwrap().applicable);
        assert_eq!(v(gerzon_type_bound(3, 11)), 28);
        assert_eq!(v(gerzon_type_bound(5, 59)), 276);
        assert!(!gerzon_type_bound(5, 60).unwrap().applicable);
        assert!(gerzon_type_bound(4, 10).is_err());
        assert!(musin_bound(7, &int(0), &int(0)).is_err());
        assert_eq!(v(musin_bound(7, &rat(1, 3), &rat(-1, 3))), 28);
        assert!(!musin_bound(7, &int(0), &rat(-1, 3)).unwrap().applicable);
    }

    #[test]
    fn zonal_bounds() {
        assert_eq!(v(s_distance_bound(3, &[int(0), int(-1)], false)), 7);
        assert_eq!(v(s_distance_bound(6, &[rat(1, 4), rat(-1, 2)], false)), 30);
        assert_eq!(v(s_distance_bound(3, &[rat(1, 2), rat(-1, 2)], false)), 45);
        assert_eq!(v(two_distance_bound(3, &int(0), &int(-1), false)), 7);
        assert_eq!(v(two_distance_bound(6, &rat(1, 4), &rat(-1, 2), false)), 30);
        let r = s_distance_bound(3, &[int(0), int(-1)], true).unwrap();
        assert_eq!(r.exact, Some(int(6)));
    }

    #[test]
    fn fixed_angle_bounds() {
        assert_eq!(v(derived_set_bound(7, 3)), 31);
        assert_eq!(v(derived_set_bound(137, 5)), 2933);
        assert_eq!(v(split_bound(137, 5)), 2224);
        assert_eq!(v(split_bound(400, 5)), 6743);
        assert_eq!(floor(&split_envelope(400, 5)), big(6897));
        assert_eq!(split_slope_excess(3), rat(4, 7));

        let r = equiangular_fixed_angle_bound(137, &int(5)).unwrap();
        assert_eq!((r.value_u64(), r.winner.as_deref()), (Some(2224), Some("split")));
        let r = equiangular_fixed_angle_bound(23, &int(5)).unwrap();
        assert_eq!((r.value_u64(), r.winner.as_deref()), (Some(276), Some("relative")));
        let r = equiangular_fixed_angle_bound(15, &int(2)).unwrap();
        assert_eq!((r.value_u64(), r.winner.as_deref()), (Some(30), Some("non-odd")));
    }

    #[test]
    fn admissible_a() {
        assert_eq!(admissible_odd(359), 19);
        assert_eq!(admissible_odd(438), 19);
        assert_eq!(admissible_odd(439), 21);
        assert_eq!(admissible_odd(7), 3);
        assert_eq!(admissible_odd(22), 3);
        assert_eq!(admissible_odd(23), 5);
        assert!(is_exceptional(22) && is_exceptional(438) && is_exceptional(6));
        assert!(!is_exceptional(23) && !is_exceptional(7));
    }

    #[test]
    fn aggregators() {
        let none = FactTable::empty();
        let shipped = FactTable::shipped();
        assert_eq!(v(equiangular_max_bound(400, &none)), 64620);
        assert_eq!(v(equiangular_max_bound(50, &shipped)), 1127);
        assert_eq!(v(equiangular_max_bound(100, &shipped)), 3159);
        assert_eq!(v(equiangular_max_bound(50, &none)), 1275);

        assert_eq!(v(two_distance_max_bound(400, Mode::Derivation, &none)), 80200);
        assert_eq!(v(two_distance_max_bound(438, Mode::Derivation, &none)), 96579);
        assert_eq!(v(two_distance_max_bound(22, Mode::AssumeTheorems, &none)), 275);
        assert_eq!(v(two_distance_max_bound(7, Mode::AssumeTheorems, &none)), 28);
        assert_eq!(v(two_distance_max_bound(23, Mode::AssumeTheorems, &none)), 276);
    }
}
