//! Full verification of one configuration: spectrum, coefficients,
//! identities, multiplicities, zonal positivity, the two-sided inequality
//! and every applicable bound.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::analysis::{
    adjacency_matrices, adjacency_partition_holds, analysis_dimension, general_inequality_check,
    interpolation_identity_check, k_coefficients, multiplicity_certificates, zonal_psd_check, AnalysisError,
};
use crate::bounds::{
    equiangular_fixed_angle_bound, equiangular_max_bound, gerzon_bound, harmonic_bound, musin_bound,
    polynomial_space_dim, relative_bound, s_distance_bound, two_distance_bound, two_distance_max_bound,
    BoundReport, FactTable, Mode,
};
use crate::config::{inner_product_spectrum, ConfigError, Configuration, PointConfiguration};
use crate::gegenbauer::ZonalCombination;
use crate::report::{Report, Status};
use crate::scalar::{rat, Rational, Scalar};

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Highest Gegenbauer degree for the positivity check.
    pub max_degree: u32,
    /// Use the smaller numerator of the zonal bounds.
    pub regular: bool,
    pub facts: FactTable,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_degree: 6,
            regular: false,
            facts: FactTable::shipped(),
        }
    }
}

/// Closest fraction with denominator at most `max_den`, found by continued
/// fractions, when it lies within `tol` of `v`.
pub fn snap_to_fraction(v: f64, tol: f64, max_den: i64) -> Option<Rational> {
    if !v.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut x = v;
    for _ in 0..64 {
        let a = x.floor();
        if a.abs() > 1e12 {
            break;
        }
        let ai = a as i64;
        let h2 = ai.checked_mul(h1)?.checked_add(h0)?;
        let k2 = ai.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (h1 as f64 / k1 as f64 - v).abs() <= tol {
            return Some(rat(h1, k1));
        }
        let frac = x - a;
        if frac.abs() < f64::EPSILON {
            break;
        }
        x = 1.0 / frac;
    }
    None
}

/// Exact value of a spectrum entry for use in closed-form bounds.
fn bound_input<S: Scalar>(v: &S, tol: f64, snapped: &mut bool) -> Option<Rational> {
    if S::EXACT {
        return v.to_rational();
    }
    match snap_to_fraction(v.to_f64(), tol, 10_000) {
        Some(q) => {
            *snapped = true;
            Some(q)
        }
        None => v.to_rational(),
    }
}

pub fn verify(cfg: &Configuration, options: &VerifyOptions) -> Result<Report, ConfigError> {
    match cfg {
        Configuration::Exact(c) => verify_configuration(c, options),
        Configuration::Floating(c) => verify_configuration(c, options),
    }
}

pub fn verify_configuration<S: Scalar>(
    cfg: &PointConfiguration<S>,
    options: &VerifyOptions,
) -> Result<Report, ConfigError> {
    let tol = cfg.tolerance();
    let spectrum = inner_product_spectrum(cfg)?;
    let mut r = Report::new();
    let n = analysis_dimension(cfg);
    let size = cfg.len();
    let s = spectrum.s();

    let section = "configuration";
    if let Some(label) = cfg.label() {
        r.info(section, "label", label);
    }
    r.info(section, "regime", if S::EXACT { "exact" } else { "floating" });
    if !S::EXACT {
        r.info(section, "tolerance", format!("{tol:e}"));
    }
    r.info(section, "points", size.to_string());
    r.info(section, "declared dimension", cfg.dim().to_string());
    r.info(section, "Gram rank", cfg.span_dimension().to_string());
    r.info(section, "analysis dimension", n.to_string());

    let section = "spectrum";
    r.info(section, "s", s.to_string());
    for (v, c) in spectrum.values().iter().zip(spectrum.pair_counts()) {
        r.info(section, format!("inner product {}", v.render()), format!("{c} ordered pairs"));
    }
    let phis = adjacency_matrices(cfg, &spectrum);
    r.check(section, "I + sum of adjacency matrices = J", "", adjacency_partition_holds(size, &phis));
    let alpha = spectrum.equiangular_alpha(tol).filter(|a| !a.is_negligible(tol));
    if let Some(a) = &alpha {
        r.info(section, "equiangular", format!("alpha = {}", a.render()));
    }

    let section = "coefficients";
    let kc = k_coefficients(spectrum.tau0(), spectrum.values(), tol).expect("spectrum values are distinct");
    for (b, k) in kc.betas.iter().zip(&kc.values) {
        r.info(section, format!("k for {}", b.render()), k.render());
    }
    let ids = interpolation_identity_check(&kc, s as u32 + 2, tol);
    for (d, res) in &ids.vanishing {
        r.check(section, format!("degree {d} power sum vanishes"), res.render(), res.is_negligible(tol));
    }
    let (top, prod) = &ids.top_degree;
    r.check(
        section,
        format!("degree {s} power sum equals product of gaps"),
        format!("{} = {}", top.render(), prod.render()),
        top.near(prod, tol),
    );
    for (d, v) in &ids.higher {
        r.info(section, format!("degree {d} power sum"), v.render());
    }

    let section = "multiplicities";
    let k_space = polynomial_space_dim(u64::from(n), s as u64 - 1).to_u64().unwrap_or(u64::MAX);
    r.info(section, "K", k_space.to_string());
    for c in multiplicity_certificates(cfg, &spectrum, k_space) {
        r.check(
            section,
            format!("eigenvalue {} of adjacency at {}", c.k.render(), c.beta.render()),
            format!(
                "multiplicity {} (required {}{})",
                c.measured,
                c.required.max(0),
                if c.exact { "" } else { ", counted within tolerance" }
            ),
            c.pass,
        );
    }
    if let Some(a) = &alpha {
        if let Some(q) = a.to_rational().filter(|q| !q.is_zero()) {
            let inv = q.recip();
            if inv.is_integer() {
                r.info(
                    section,
                    "sign note",
                    format!(
                        "at product +1/{inv} the coefficient is -({inv}+1)/2; integrality of ({inv}+1)/2 uses its magnitude"
                    ),
                );
            }
        }
    }

    let section = "zonal positivity";
    let zonal = zonal_psd_check(cfg, options.max_degree);
    for d in &zonal.degrees {
        let value = d
            .min_eigenvalue
            .map(|m| format!("smallest eigenvalue {}", crate::scalar::format_decimal(m)))
            .unwrap_or_default();
        r.check(section, format!("G_{} in R^{}", d.degree, zonal.dimension), value, d.psd);
    }

    let section = "zonal inequality";
    let combo = ZonalCombination::pure(n, s as u32).expect("dimension at least 2");
    match general_inequality_check(cfg, &spectrum, &combo, k_space) {
        Ok(ineq) => {
            r.info(section, "polynomial", format!("G_{s} in R^{n}"));
            r.info(section, "bracket", ineq.bracket.render());
            r.check(
                section,
                "0 <= middle <= upper",
                format!("0 <= {} <= {}", ineq.middle.render(), ineq.upper.render()),
                ineq.holds,
            );
            if let Some(id) = &ineq.identity {
                r.check(
                    section,
                    "bracket equals leading coefficient times product of gaps",
                    format!("{} = {}", ineq.bracket.render(), id.expected.render()),
                    id.holds,
                );
            }
        }
        Err(e @ (AnalysisError::TooSmall { .. } | AnalysisError::TooFewValues(_))) => {
            r.info(section, "not applicable", e.to_string());
        }
        Err(e) => r.push(section, "error", e.to_string(), Status::Fail),
    }

    let section = "bounds";
    let mut snapped = false;
    let values: Option<Vec<Rational>> = spectrum
        .values()
        .iter()
        .map(|v| bound_input(v, tol, &mut snapped))
        .collect();
    let n64 = u64::from(n);
    let mut reports: Vec<BoundReport> = Vec::new();
    let mut push = |b: Result<BoundReport, crate::bounds::BoundError>| {
        if let Ok(b) = b {
            reports.push(b);
        }
    };
    push(harmonic_bound(n64, s as u64));
    if let Some(values) = &values {
        push(s_distance_bound(n64, values, options.regular));
        if let [a, b] = values.as_slice() {
            push(two_distance_bound(n64, a, b, options.regular));
            push(musin_bound(n64, a, b));
            push(two_distance_max_bound(n64, Mode::Derivation, &options.facts));
        }
    }
    if let Some(a) = &alpha {
        push(gerzon_bound(n64));
        push(equiangular_max_bound(n64, &options.facts));
        if let Some(q) = bound_input(a, tol, &mut snapped) {
            if q.is_positive() && q < Rational::one() {
                push(relative_bound(n64, &q));
                push(equiangular_fixed_angle_bound(n64, &q.recip()));
            }
        }
    }
    for b in &reports {
        let label = match &b.winner {
            Some(w) => format!("{} (via {w})", b.name),
            None => b.name.to_string(),
        };
        match &b.value {
            Some(v) => r.check(
                section,
                label,
                format!("{size} <= {v}"),
                num_bigint::BigInt::from(size) <= *v,
            ),
            None => r.info(section, label, format!("not applicable: {}", b.reason)),
        }
    }
    if snapped {
        r.info(
            section,
            "inputs",
            "floating inner products were replaced by nearby fractions for the closed-form bounds",
        );
    }
    Ok(r)
}
