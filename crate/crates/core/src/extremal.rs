//! Certification of extremal equiangular sets with angle `arccos(1/a)` and
//! `(a^2-2)(a^2-1)/2` points: switching, derived sets, strong regularity and
//! the Gram-rank dimension collapse.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::config::{derive_set, inner_product_spectrum, switch_to_common_product, PointConfiguration};
use crate::linalg::{self, SymMatrix};
use crate::scalar::{as_integer, rat, uint, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtremalError {
    #[error("a must be an odd integer >= 3, got {0}")]
    NotOdd(u64),
    #[error("{0} is not an integer")]
    Integrality(String),
    #[error("degree k = {k} must lie in 0..={max}")]
    Degree { k: u64, max: u64 },
}

/// Parameters `(v, k, lambda, mu)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgParameters {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParameters {
    /// `k^2 = k + lambda k + mu (v - 1 - k)`.
    pub fn satisfies_identity(&self) -> bool {
        let (v, k, l, m) = (
            BigInt::from(self.v),
            BigInt::from(self.k),
            BigInt::from(self.lambda),
            BigInt::from(self.mu),
        );
        &k * &k == &k + &l * &k + m * (v - 1 - &k)
    }
}

impl fmt::Display for SrgParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Nontrivial eigenvalues of the graph and their multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgSpectrum {
    pub e1: i64,
    pub d1: u64,
    pub e2: i64,
    pub d2: u64,
}

fn integral(q: Rational, what: &str) -> Result<BigInt, ExtremalError> {
    as_integer(&q).ok_or_else(|| ExtremalError::Integrality(format!("{what} = {q}")))
}

fn to_u64(v: BigInt, what: &str) -> Result<u64, ExtremalError> {
    v.to_u64().ok_or_else(|| ExtremalError::Integrality(format!("{what} = {v} out of range")))
}

fn check_odd(a: u64) -> Result<(), ExtremalError> {
    if a < 3 || a.is_multiple_of(2) {
        Err(ExtremalError::NotOdd(a))
    } else {
        Ok(())
    }
}

/// Size of the derived set of an extremal configuration: `(a^2-3)a^2/2`.
pub fn derived_size(a: u64) -> u64 {
    (a * a - 3) * a * a / 2
}

/// `N = (a^2-3)a^2/2`, `k = (N-a)(a+1)/(2a)`, `lambda = (3k-N-1)/2`,
/// `mu = k/2`.
pub fn srg_parameters_from_a(a: u64) -> Result<SrgParameters, ExtremalError> {
    check_odd(a)?;
    let n = uint(derived_size(a));
    let ar = uint(a);
    let k = integral((&n - &ar) * (&ar + uint(1)) / (uint(2) * &ar), "k")?;
    let kr = Rational::from_integer(k.clone());
    let lambda = integral((uint(3) * &kr - &n - uint(1)) / uint(2), "lambda")?;
    let mu = integral(kr / uint(2), "mu")?;
    let p = SrgParameters {
        v: derived_size(a),
        k: to_u64(k, "k")?,
        lambda: to_u64(lambda, "lambda")?,
        mu: to_u64(mu, "mu")?,
    };
    if !p.satisfies_identity() {
        return Err(ExtremalError::Integrality(format!("parameters {p} violate the regularity identity")));
    }
    Ok(p)
}

/// `e1 = (N-a)/(2a)`, `d1 = N(a^2-1)/(N+a^2)`, `e2 = -(a+1)/2`,
/// `d2 = (N^2-a^2)/(N+a^2)`.
pub fn srg_spectrum(p: &SrgParameters, a: u64) -> Result<SrgSpectrum, ExtremalError> {
    check_odd(a)?;
    let (n, ar) = (uint(p.v), uint(a));
    let a2 = &ar * &ar;
    let e1 = integral((&n - &ar) / (uint(2) * &ar), "e1")?;
    let d1 = integral(&n * (&a2 - uint(1)) / (&n + &a2), "d1")?;
    let e2 = integral(-(&ar + uint(1)) / uint(2), "e2")?;
    let d2 = integral((&n * &n - &a2) / (&n + &a2), "d2")?;
    let as_i64 = |v: BigInt, w: &str| v.to_i64().ok_or_else(|| ExtremalError::Integrality(format!("{w} out of range")));
    Ok(SrgSpectrum {
        e1: as_i64(e1, "e1")?,
        d1: to_u64(d1, "d1")?,
        e2: as_i64(e2, "e2")?,
        d2: to_u64(d2, "d2")?,
    })
}

/// Ordered-pair counts in the two second derived sets at a vertex `u` of
/// degree `k`: `t1, t2` inside the neighbourhood, `t1', t2'` inside the
/// non-neighbourhood.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SecondDerivedCounts {
    pub t1: u64,
    pub t2: u64,
    pub t1_prime: u64,
    pub t2_prime: u64,
}

impl SecondDerivedCounts {
    /// `t1 + t2 = k(k-1)` and `t1' + t2' = (N-k-1)(N-k-2)`.
    pub fn sums_hold(&self, n: u64, k: u64) -> bool {
        let rest = n - k - 1;
        self.t1 + self.t2 == k * k.saturating_sub(1) && self.t1_prime + self.t2_prime == rest * rest.saturating_sub(1)
    }
}

/// Lower bounds on `t1` and `t1'` and the square inequality they combine to.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondDerivedReport {
    pub n: u64,
    pub k: u64,
    pub a: u64,
    /// `(k^2(a+3) - k(a+1)^2) / (2(a+1))`.
    pub t1_lower: Rational,
    /// `(a+1)(N-k-1)(N-k-a) / (2(a-1))`.
    pub t1_prime_lower: Rational,
    /// `(a+1)N(N-a)/(2a)`.
    pub n1: Rational,
    /// `N1 - (2k + t1_lower + t1_prime_lower + k(N-k-1))`.
    pub gap: Rational,
    /// `(2a/(a^2-1)) (k - k*)^2`.
    pub square: Rational,
    /// `k* = (N-a)(a+1)/(2a)`.
    pub forced_k: Rational,
    /// `gap = -square` exactly.
    pub identity_holds: bool,
}

impl SecondDerivedReport {
    /// The combined inequality `0 >= square`.
    pub fn holds(&self) -> bool {
        !self.gap.is_negative()
    }

    pub fn consistent(&self) -> bool {
        self.square.is_zero()
    }
}

pub fn second_derived_inequalities(n: u64, k: u64, a: u64) -> Result<SecondDerivedReport, ExtremalError> {
    check_odd(a)?;
    if n == 0 || k > n - 1 {
        return Err(ExtremalError::Degree { k, max: n.saturating_sub(1) });
    }
    let (nr, kr, ar) = (uint(n), uint(k), uint(a));
    let one = uint(1);
    let two = uint(2);
    let rest = &nr - &kr - &one;
    let t1_lower = (&kr * &kr * (&ar + uint(3)) - &kr * (&ar + &one) * (&ar + &one)) / (&two * (&ar + &one));
    let t1_prime_lower = (&ar + &one) * &rest * (&nr - &kr - &ar) / (&two * (&ar - &one));
    let n1 = (&ar + &one) * &nr * (&nr - &ar) / (&two * &ar);
    let gap = &n1 - (&two * &kr + &t1_lower + &t1_prime_lower + &kr * &rest);
    let forced_k = (&nr - &ar) * (&ar + &one) / (&two * &ar);
    let diff = &kr - &forced_k;
    let square = &two * &ar / (&ar * &ar - &one) * &diff * &diff;
    Ok(SecondDerivedReport {
        n,
        k,
        a,
        identity_holds: gap == -square.clone(),
        t1_lower,
        t1_prime_lower,
        n1,
        gap,
        square,
        forced_k,
    })
}

/// One step of the pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct Stage {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalCertificate {
    pub a: u64,
    pub size: usize,
    /// `|X| - 1`.
    pub derived_size: Option<u64>,
    pub expected: Option<SrgParameters>,
    pub measured: Option<SrgParameters>,
    pub n1: Option<u64>,
    pub spectrum: Option<SrgSpectrum>,
    pub second_derived: Option<SecondDerivedCounts>,
    /// Distinct Gram eigenvalues of the derived set with multiplicities.
    pub gram_eigenvalues: Vec<(String, usize)>,
    pub gram_rank: Option<usize>,
    pub concluded_dimension: Option<usize>,
    pub original_rank: Option<usize>,
    pub stages: Vec<Stage>,
}

impl ExtremalCertificate {
    pub fn pass(&self) -> bool {
        !self.stages.is_empty() && self.stages.iter().all(|s| s.pass)
    }

    pub fn failed_stage(&self) -> Option<usize> {
        self.stages.iter().position(|s| !s.pass)
    }

    fn record(&mut self, name: &'static str, pass: bool, detail: impl Into<String>) -> bool {
        self.stages.push(Stage {
            name,
            pass,
            detail: detail.into(),
        });
        pass
    }
}

fn count_pairs<S: Scalar>(cfg: &PointConfiguration<S>, value: &S) -> u64 {
    let tol = cfg.tolerance();
    let n = cfg.len();
    (0..n)
        .into_par_iter()
        .map(|i| (0..n).filter(|&j| j != i && cfg.inner(i, j).near(value, tol)).count() as u64)
        .sum()
}

fn q<S: Scalar>(p: i64, d: i64) -> S {
    S::from_rational(&rat(p, d))
}

/// Runs every stage on `cfg`; stops at the first failing stage.
pub fn certify_extremal<S: Scalar>(cfg: &PointConfiguration<S>, a: u64) -> ExtremalCertificate {
    let mut cert = ExtremalCertificate {
        a,
        size: cfg.len(),
        derived_size: None,
        expected: None,
        measured: None,
        n1: None,
        spectrum: None,
        second_derived: None,
        gram_eigenvalues: Vec::new(),
        gram_rank: None,
        concluded_dimension: None,
        original_rank: None,
        stages: Vec::new(),
    };
    let _ = run_stages(cfg, a, &mut cert);
    cert
}

fn run_stages<S: Scalar>(cfg: &PointConfiguration<S>, a: u64, cert: &mut ExtremalCertificate) -> Option<()> {
    let tol = cfg.tolerance();
    let ai = a as i64;

    // Stage 0: preconditions.
    let params = match srg_parameters_from_a(a).and_then(|p| srg_spectrum(&p, a).map(|s| (p, s))) {
        Ok(p) => p,
        Err(e) => {
            cert.record("preconditions", false, e.to_string());
            return None;
        }
    };
    let (expected, spec) = params;
    cert.expected = Some(expected);
    cert.spectrum = Some(spec);
    let want = ((a * a - 2) * (a * a - 1) / 2) as usize;
    if cfg.len() != want {
        cert.record("preconditions", false, format!("size {} differs from (a^2-2)(a^2-1)/2 = {want}", cfg.len()));
        return None;
    }
    let spectrum = match inner_product_spectrum(cfg) {
        Ok(s) => s,
        Err(e) => {
            cert.record("preconditions", false, format!("spectrum: {e}"));
            return None;
        }
    };
    let plus = q::<S>(1, ai);
    let minus = -plus.clone();
    let admissible = spectrum.values().iter().all(|v| v.near(&plus, tol) || v.near(&minus, tol));
    if !cert.record(
        "preconditions",
        admissible,
        format!("size {want}, spectrum {} against {{1/{a}, -1/{a}}}", spectrum.render_values()),
    ) {
        return None;
    }

    // Stage 1: switching at point 0.
    let switched = switch_to_common_product(cfg, 0).ok()?;
    let aligned = (1..cfg.len()).all(|j| switched.inner(0, j).near(&plus, tol));
    if !cert.record("switch at point 0", aligned, format!("every product with point 0 equals 1/{a}")) {
        return None;
    }

    // Stage 2: derived set at 1/a.
    let derived = match derive_set(&switched, 0, &plus) {
        Ok(d) => d,
        Err(e) => {
            cert.record("derived set", false, e.to_string());
            return None;
        }
    };
    let n = derived.len() as u64;
    cert.derived_size = Some(n);
    let edge = q::<S>(1, ai + 1);
    let non_edge = q::<S>(-1, ai - 1);
    let dsp = inner_product_spectrum(&derived).ok()?;
    let two_values = dsp.values().iter().all(|v| v.near(&edge, tol) || v.near(&non_edge, tol));
    if !cert.record(
        "derived set",
        n == expected.v && two_values,
        format!("{n} points, spectrum {} against {{1/{}, -1/{}}}", dsp.render_values(), a + 1, a - 1),
    ) {
        return None;
    }

    // Stage 3: graph at product 1/(a+1) and its ordered edge count.
    let nn = n as usize;
    let adjacency: Vec<Vec<bool>> = (0..nn)
        .map(|i| (0..nn).map(|j| i != j && derived.inner(i, j).near(&edge, tol)).collect())
        .collect();
    let n1_measured: u64 = adjacency.iter().map(|r| r.iter().filter(|&&b| b).count() as u64).sum();
    let n1_expected = (a + 1) * n * (n - a) / (2 * a);
    cert.n1 = Some(n1_measured);
    if !cert.record(
        "edge count",
        n1_measured == n1_expected,
        format!("N1 = {n1_measured}, expected (a+1)N(N-a)/(2a) = {n1_expected}"),
    ) {
        return None;
    }

    // Stage 4: every vertex has the forced degree.
    let degrees: Vec<u64> = adjacency
        .par_iter()
        .map(|r| r.iter().filter(|&&b| b).count() as u64)
        .collect();
    let regular = degrees.iter().all(|&d| d == expected.k);
    if !cert.record("degrees", regular, format!("all degrees equal (N-a)(a+1)/(2a) = {}", expected.k)) {
        return None;
    }

    // Stage 5: common neighbours.
    let common = |i: usize, j: usize| (0..nn).filter(|&w| adjacency[i][w] && adjacency[j][w]).count() as u64;
    // Per vertex: common-neighbour count on edges, on non-edges, and whether each is constant.
    type RowCounts = (Option<u64>, Option<u64>, bool);
    let pair_counts: Vec<RowCounts> = (0..nn)
        .into_par_iter()
        .map(|i| {
            let (mut lam, mut mu, mut ok) = (None, None, true);
            for j in (i + 1)..nn {
                let c = common(i, j);
                let slot = if adjacency[i][j] { &mut lam } else { &mut mu };
                match *slot {
                    None => *slot = Some(c),
                    Some(prev) if prev != c => ok = false,
                    _ => {}
                }
            }
            (lam, mu, ok)
        })
        .collect();
    let uniform = |pick: fn(&RowCounts) -> Option<u64>| {
        let mut vals = pair_counts.iter().filter_map(pick);
        let first = vals.next();
        first.filter(|f| vals.all(|v| v == *f))
    };
    let lambda = uniform(|t| t.0);
    let mu = uniform(|t| t.1);
    let all_ok = pair_counts.iter().all(|t| t.2);
    let measured = match (lambda, mu) {
        (Some(lambda), Some(mu)) if all_ok => Some(SrgParameters {
            v: n,
            k: expected.k,
            lambda,
            mu,
        }),
        _ => None,
    };
    cert.measured = measured;
    let srg_pass = measured == Some(expected);
    let detail = match measured {
        Some(m) => format!("measured {m}, expected {expected}"),
        None => "common-neighbour counts are not constant".to_string(),
    };
    if !cert.record("strong regularity", srg_pass, detail) {
        return None;
    }

    // Stage 6: second derived sets at vertex 0.
    let k = expected.k;
    let t_in = derive_set(&derived, 0, &edge).ok()?;
    let t_out = derive_set(&derived, 0, &non_edge).ok()?;
    let counts = SecondDerivedCounts {
        t1: count_pairs(&t_in, &q::<S>(1, ai + 2)),
        t2: count_pairs(&t_in, &q::<S>(-(ai + 3), (ai - 1) * (ai + 2))),
        t1_prime: count_pairs(&t_out, &q::<S>(ai - 3, (ai + 1) * (ai - 2))),
        t2_prime: count_pairs(&t_out, &q::<S>(-1, ai - 2)),
    };
    cert.second_derived = Some(counts);
    let ineq = second_derived_inequalities(n, k, a).ok()?;
    let bounds_ok = uint(counts.t1) >= ineq.t1_lower && uint(counts.t1_prime) >= ineq.t1_prime_lower;
    let pass = counts.sums_hold(n, k) && bounds_ok && ineq.holds() && ineq.identity_holds;
    if !cert.record(
        "second derived sets",
        pass,
        format!(
            "t1 = {} (>= {}), t2 = {}, t1' = {} (>= {}), t2' = {}",
            counts.t1, ineq.t1_lower, counts.t2, counts.t1_prime, ineq.t1_prime_lower, counts.t2_prime
        ),
    ) {
        return None;
    }

    // Stage 7: adjacency eigenvalue multiplicities.
    let phi: SymMatrix<S> = SymMatrix::from_fn(nn, tol, |i, j| if adjacency[i][j] { S::one() } else { S::zero() });
    let m1 = linalg::nullity_at(&phi, &S::from_i64(spec.e1));
    let m2 = linalg::nullity_at(&phi, &S::from_i64(spec.e2));
    if !cert.record(
        "graph spectrum",
        m1 as u64 == spec.d1 && m2 as u64 == spec.d2,
        format!(
            "eigenvalue {} x{m1} (expected {}), eigenvalue {} x{m2} (expected {})",
            spec.e1, spec.d1, spec.e2, spec.d2
        ),
    ) {
        return None;
    }

    // Stage 8: Gram eigenvalues of the derived set.
    let gram = derived.gram();
    let top = S::from_rational(&((uint(n) + uint(a * a)) / uint(a * a - 1)));
    let z = linalg::nullity_at(&gram, &S::zero());
    let t = linalg::nullity_at(&gram, &top);
    cert.gram_eigenvalues = vec![("0".to_string(), z), (top.render(), t)];
    if !cert.record(
        "gram spectrum",
        z as u64 == spec.d2 + 1 && t as u64 == spec.d1 && z + t == nn,
        format!("0 x{z} (expected {}), {} x{t} (expected {})", spec.d2 + 1, top.render(), spec.d1),
    ) {
        return None;
    }

    // Stage 9: rank and dimension.
    let rank = linalg::rank(&gram);
    let original = cfg.span_dimension();
    cert.gram_rank = Some(rank);
    cert.concluded_dimension = Some(rank + 1);
    cert.original_rank = Some(original);
    let target = (a * a - 3) as usize;
    cert.record(
        "dimension",
        rank == target && original == target + 1,
        format!(
            "derived Gram rank {rank} (expected {target}), concluded dimension {}, original Gram rank {original}",
            rank + 1
        ),
    );
    Some(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{generate_named, Configuration, NamedFamily};
    use crate::scalar::int;

    fn lines28() -> PointConfiguration<Rational> {
        match generate_named(NamedFamily::Lines28) {
            Configuration::Exact(c) => c,
            Configuration::Floating(_) => unreachable!(),
        }
    }

    #[test]
    fn parameters() {
        let p = srg_parameters_from_a(3).unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.mu), (27, 16, 10, 8));
        let p5 = srg_parameters_from_a(5).unwrap();
        assert_eq!((p5.v, p5.k, p5.lambda, p5.mu), (275, 162, 105, 81));
        let p7 = srg_parameters_from_a(7).unwrap();
        assert_eq!((p7.v, p7.k), (1127, 640));
        assert!(p7.satisfies_identity());
        assert_eq!(srg_parameters_from_a(4).unwrap_err(), ExtremalError::NotOdd(4));
        assert_eq!(
            srg_spectrum(&p, 3).unwrap(),
            SrgSpectrum { e1: 4, d1: 6, e2: -2, d2: 20 }
        );
        assert_eq!(
            srg_spectrum(&p5, 5).unwrap(),
            SrgSpectrum { e1: 27, d1: 22, e2: -3, d2: 252 }
        );
    }

    #[test]
    fn second_derived() {
        let r = second_derived_inequalities(27, 16, 3).unwrap();
        assert!(r.holds() && r.consistent() && r.identity_holds);
        assert_eq!(r.t1_lower, int(160));
        assert_eq!(r.t1_prime_lower, int(80));
        assert_eq!(r.n1, int(432));
        let r = second_derived_inequalities(27, 15, 3).unwrap();
        assert!(!r.holds() && r.identity_holds);
        assert!(second_derived_inequalities(275, 162, 5).unwrap().consistent());
        assert!(second_derived_inequalities(27, 27, 3).is_err());
    }

    #[test]
    fn lines28_passes() {
        let cert = certify_extremal(&lines28(), 3);
        assert!(cert.pass(), "{:#?}", cert.stages);
        assert_eq!(cert.stages.len(), 10);
        assert_eq!(cert.measured.unwrap(), SrgParameters { v: 27, k: 16, lambda: 10, mu: 8 });
        assert_eq!(cert.gram_eigenvalues, vec![("0".into(), 21), ("9/2".into(), 6)]);
        assert_eq!((cert.gram_rank, cert.concluded_dimension, cert.original_rank), (Some(6), Some(7), Some(7)));
        let c = cert.second_derived.unwrap();
        assert_eq!((c.t1, c.t2, c.t1_prime, c.t2_prime), (160, 80, 80, 10));
    }

    #[test]
    fn failures_are_stage_zero() {
        let l = lines28();
        let short = l.select(&(1..28).collect::<Vec<_>>()).unwrap();
        assert_eq!(certify_extremal(&short, 3).failed_stage(), Some(0));
        assert_eq!(certify_extremal(&l, 5).failed_stage(), Some(0));
        assert_eq!(certify_extremal(&l, 4).failed_stage(), Some(0));
        let raw = [4, 2, 2, 0, 0, 0, 0, 0].map(int).to_vec();
        let bent = l.replace_point(0, raw).unwrap();
        let cert = certify_extremal(&bent, 3);
        assert_eq!(cert.failed_stage(), Some(0));
        assert!(cert.stages[0].detail.contains("spectrum"));
    }
}
