//! Spectral certificates on concrete configurations: adjacency matrices,
//! the `k_l` coefficients, interpolation identities, eigenvalue
//! multiplicities, zonal positivity and the two-sided zonal inequality.
//!
//! Mathematical failures are reported in the returned structures; only
//! malformed inputs produce errors.

use rayon::prelude::*;

use crate::config::{DistanceSpectrum, PointConfiguration};
use crate::gegenbauer::{gegenbauer_eval, leading_coefficient, GegenbauerSpec, ZonalCombination};
use crate::linalg::{self, SymMatrix};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AnalysisError {
    #[error("at least one inner product is required")]
    NoValues,
    #[error("inner product {0} is listed twice")]
    RepeatedValue(String),
    #[error("inner product {0} coincides with tau0")]
    ValueIsTau0(String),
    #[error("the inequality needs at least two inner products, got {0}")]
    TooFewValues(usize),
    #[error("the inequality needs |X| > 1 + K(s-1) = {threshold}, got |X| = {size}")]
    TooSmall { size: usize, threshold: u64 },
    #[error("zonal combination is for R^{combo} but the configuration is analysed in R^{config}")]
    DimensionMismatch { combo: u32, config: u32 },
}

/// Dimension used by every certificate: the Gram rank, at least 2.
pub fn analysis_dimension<S: Scalar>(cfg: &PointConfiguration<S>) -> u32 {
    cfg.span_dimension().max(2) as u32
}

/// One 0/1 matrix per spectrum value: `Phi_l[i][j] = 1` iff
/// `(x_i, x_j) = beta_l`.
pub fn adjacency_matrices<S: Scalar>(
    cfg: &PointConfiguration<S>,
    spectrum: &DistanceSpectrum<S>,
) -> Vec<SymMatrix<S>> {
    let n = cfg.len();
    (0..spectrum.s())
        .map(|l| {
            SymMatrix::from_fn(n, cfg.tolerance(), |i, j| {
                if spectrum.class_of(i, j) == Some(l) {
                    S::one()
                } else {
                    S::zero()
                }
            })
        })
        .collect()
}

/// `I + sum_l Phi_l = J`, entry by entry.
pub fn adjacency_partition_holds<S: Scalar>(order: usize, matrices: &[SymMatrix<S>]) -> bool {
    (0..order).all(|i| {
        (0..order).all(|j| {
            let diag = if i == j { S::one() } else { S::zero() };
            let sum = matrices.iter().fold(diag, |acc, m| acc + m.get(i, j).clone());
            sum.is_one()
        })
    })
}

/// `k_l = -prod_{i != l} (tau0 - beta_i) / (beta_l - beta_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct KCoefficients<S> {
    pub tau0: S,
    pub betas: Vec<S>,
    pub values: Vec<S>,
}

impl<S: Scalar> KCoefficients<S> {
    pub fn s(&self) -> usize {
        self.betas.len()
    }

    /// `tau0^d + sum_l k_l beta_l^d`.
    pub fn power_sum(&self, degree: u32) -> S {
        let pow = |x: &S| (0..degree).fold(S::one(), |acc, _| acc * x.clone());
        self.betas
            .iter()
            .zip(&self.values)
            .fold(pow(&self.tau0), |acc, (b, k)| acc + k.clone() * pow(b))
    }

    /// `prod_l (tau0 - beta_l)`.
    pub fn gap_product(&self) -> S {
        self.betas
            .iter()
            .fold(S::one(), |acc, b| acc * (self.tau0.clone() - b.clone()))
    }
}

pub fn k_coefficients<S: Scalar>(
    tau0: &S,
    betas: &[S],
    tol: f64,
) -> Result<KCoefficients<S>, AnalysisError> {
    if betas.is_empty() {
        return Err(AnalysisError::NoValues);
    }
    for (i, b) in betas.iter().enumerate() {
        if b.near(tau0, tol) {
            return Err(AnalysisError::ValueIsTau0(b.render()));
        }
        if betas[..i].iter().any(|c| c.near(b, tol)) {
            return Err(AnalysisError::RepeatedValue(b.render()));
        }
    }
    let values = (0..betas.len())
        .map(|l| {
            let prod = (0..betas.len()).filter(|&i| i != l).fold(S::one(), |acc, i| {
                acc * (tau0.clone() - betas[i].clone()) / (betas[l].clone() - betas[i].clone())
            });
            -prod
        })
        .collect();
    Ok(KCoefficients {
        tau0: tau0.clone(),
        betas: betas.to_vec(),
        values,
    })
}

/// Residuals of the interpolation identities.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport<S> {
    /// `(d, tau0^d + sum k_l beta_l^d)` for `d < s`; each must vanish.
    pub vanishing: Vec<(u32, S)>,
    /// Degree-`s` power sum and the product `prod (tau0 - beta_l)` it must equal.
    pub top_degree: (S, S),
    /// Power sums of degrees `s+1 ..= degree_probe`, for information only.
    pub higher: Vec<(u32, S)>,
    pub pass: bool,
}

impl<S: Scalar> IdentityReport<S> {
    pub fn top_residual(&self) -> S {
        self.top_degree.0.clone() - self.top_degree.1.clone()
    }
}

/// Checks the degree `< s` identities and the degree-`s` product identity.
/// `degree_probe` below `s` is raised to `s`.
pub fn interpolation_identity_check<S: Scalar>(
    kc: &KCoefficients<S>,
    degree_probe: u32,
    tol: f64,
) -> IdentityReport<S> {
    let s = kc.s() as u32;
    let vanishing: Vec<(u32, S)> = (0..s).map(|d| (d, kc.power_sum(d))).collect();
    let top_degree = (kc.power_sum(s), kc.gap_product());
    let higher = (s + 1..=degree_probe.max(s)).map(|d| (d, kc.power_sum(d))).collect();
    let pass = vanishing.iter().all(|(_, r)| r.is_negligible(tol)) && top_degree.0.near(&top_degree.1, tol);
    IdentityReport {
        vanishing,
        top_degree,
        higher,
        pass,
    }
}

/// Multiplicity of `k_l` as an eigenvalue of `Phi_l` against `|X| - K`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityCertificate<S> {
    pub index: usize,
    pub beta: S,
    pub k: S,
    pub required: i64,
    pub measured: usize,
    /// Exact nullity, or eigenvalue count within tolerance.
    pub exact: bool,
    pub pass: bool,
}

pub fn multiplicity_certificates<S: Scalar>(
    cfg: &PointConfiguration<S>,
    spectrum: &DistanceSpectrum<S>,
    k_space: u64,
) -> Vec<MultiplicityCertificate<S>> {
    let kc = k_coefficients(spectrum.tau0(), spectrum.values(), cfg.tolerance())
        .expect("spectrum values are distinct and below 1");
    let required = cfg.len() as i64 - k_space as i64;
    adjacency_matrices(cfg, spectrum)
        .into_par_iter()
        .enumerate()
        .map(|(l, phi)| {
            let k = kc.values[l].clone();
            let measured = linalg::nullity_at(&phi, &k);
            MultiplicityCertificate {
                index: l,
                beta: kc.betas[l].clone(),
                k,
                required,
                measured,
                exact: S::EXACT,
                pass: measured as i64 >= required.max(0),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZonalDegree {
    pub degree: u32,
    pub psd: bool,
    /// Smallest eigenvalue in the floating regime.
    pub min_eigenvalue: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZonalReport {
    pub dimension: u32,
    pub degrees: Vec<ZonalDegree>,
}

impl ZonalReport {
    pub fn pass(&self) -> bool {
        self.degrees.iter().all(|d| d.psd)
    }

    pub fn first_failure(&self) -> Option<u32> {
        self.degrees.iter().find(|d| !d.psd).map(|d| d.degree)
    }
}

/// Positive semidefiniteness of `(G_k((x_i, x_j)))` for `k = 0..=max_degree`.
pub fn zonal_psd_check<S: Scalar>(cfg: &PointConfiguration<S>, max_degree: u32) -> ZonalReport {
    let dimension = analysis_dimension(cfg);
    let gram = cfg.gram();
    let degrees = (0..=max_degree)
        .into_par_iter()
        .map(|degree| {
            let spec = GegenbauerSpec::new(dimension, degree).expect("dimension at least 2");
            let m = gram.map(|t| gegenbauer_eval(spec, t));
            ZonalDegree {
                degree,
                psd: linalg::is_psd(&m),
                min_eigenvalue: S::sym_eigenvalues(&m).and_then(|e| e.first().copied()),
            }
        })
        .collect();
    ZonalReport { dimension, degrees }
}

/// `P(tau0) + sum_l k_l P(beta_l)`.
pub fn zonal_bracket<S: Scalar>(kc: &KCoefficients<S>, combo: &ZonalCombination) -> S {
    kc.betas
        .iter()
        .zip(&kc.values)
        .fold(combo.eval(&kc.tau0), |acc, (b, k)| acc + k.clone() * combo.eval(b))
}

/// For combinations of degree at most `s`, only the `G_s` term survives in
/// the bracket, which then equals `c * c_s * prod (tau0 - beta_l)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BracketIdentity<S> {
    pub expected: S,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport<S> {
    pub dimension: u32,
    pub k_space: u64,
    pub size: usize,
    pub s: usize,
    pub bracket: S,
    /// `|X| - 1 - K(s-1)`.
    pub factor: u64,
    pub middle: S,
    /// `|X| P(tau0)`.
    pub upper: S,
    pub holds: bool,
    pub identity: Option<BracketIdentity<S>>,
}

impl<S: Scalar> InequalityReport<S> {
    pub fn lower_slack(&self) -> S {
        self.middle.clone()
    }

    pub fn upper_slack(&self) -> S {
        self.upper.clone() - self.middle.clone()
    }
}

/// `0 <= (|X| - 1 - K(s-1)) (P(tau0) + sum k_l P(beta_l)) <= |X| P(tau0)`.
pub fn general_inequality_check<S: Scalar>(
    cfg: &PointConfiguration<S>,
    spectrum: &DistanceSpectrum<S>,
    combo: &ZonalCombination,
    k_space: u64,
) -> Result<InequalityReport<S>, AnalysisError> {
    let s = spectrum.s();
    if s < 2 {
        return Err(AnalysisError::TooFewValues(s));
    }
    let threshold = 1 + k_space * (s as u64 - 1);
    if cfg.len() as u64 <= threshold {
        return Err(AnalysisError::TooSmall {
            size: cfg.len(),
            threshold,
        });
    }
    let dimension = analysis_dimension(cfg);
    if combo.dimension() != dimension {
        return Err(AnalysisError::DimensionMismatch {
            combo: combo.dimension(),
            config: dimension,
        });
    }
    let tol = cfg.tolerance();
    let kc = k_coefficients(spectrum.tau0(), spectrum.values(), tol)?;
    let bracket = zonal_bracket(&kc, combo);
    let factor = cfg.len() as u64 - threshold;
    let middle = S::from_i64(factor as i64) * bracket.clone();
    let upper = S::from_i64(cfg.len() as i64) * combo.eval(&kc.tau0);
    let nonneg = |v: &S| !v.is_negative() || v.is_negligible(tol);
    let holds = nonneg(&middle) && nonneg(&(upper.clone() - middle.clone()));
    let identity = (combo.degree() as usize <= s).then(|| {
        let c = combo
            .coefficients()
            .get(&(s as u32))
            .map(S::from_rational)
            .unwrap_or_else(S::zero);
        let expected = c * S::from_rational(&leading_coefficient(dimension, s as u32)) * kc.gap_product();
        BracketIdentity {
            holds: bracket.near(&expected, tol),
            expected,
        }
    });
    Ok(InequalityReport {
        dimension,
        k_space,
        size: cfg.len(),
        s,
        bracket,
        factor,
        middle,
        upper,
        holds,
        identity,
    })
}
