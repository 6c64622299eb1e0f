//! Derived sets, switching and lifting. All transforms return new
//! configurations and keep the coordinate frame of their input; only the
//! metric and the raw vectors change.

use crate::scalar::Scalar;

use super::{inner_product_spectrum, ConfigError, PointConfiguration};

/// The derived set through `base` at inner product `alpha`:
/// `{ (y - alpha x) / sqrt(1 - alpha^2) : (y, x) = alpha }`, which lies in
/// the orthogonal complement of `x`; the recorded dimension drops by one.
///
/// An inner product `beta` among the selected points becomes
/// `(beta - alpha^2) / (1 - alpha^2)`. The `1/sqrt(1 - alpha^2)` factor is
/// carried by the metric, so exact inputs stay exact.
pub fn derive_set<S: Scalar>(
    cfg: &PointConfiguration<S>,
    base_index: usize,
    alpha: &S,
) -> Result<PointConfiguration<S>, ConfigError> {
    cfg.check_index(base_index)?;
    let tol = cfg.tolerance();
    let (metric, points) = cfg.coordinates("derived sets")?;
    if alpha.abs().near(&S::one(), tol) || alpha.abs() > S::one() {
        return Err(ConfigError::UnitProduct(alpha.render()));
    }
    let x = &points[base_index];
    let selected: Vec<Vec<S>> = (0..points.len())
        .filter(|&j| j != base_index && cfg.inner(j, base_index).near(alpha, tol))
        .map(|j| {
            points[j]
                .iter()
                .zip(x)
                .map(|(yj, xj)| yj.clone() - alpha.clone() * xj.clone())
                .collect()
        })
        .collect();
    if selected.is_empty() {
        return Err(ConfigError::ProductNotRealized {
            base: base_index,
            product: alpha.render(),
        });
    }
    let scale = S::one() - alpha.clone() * alpha.clone();
    let metric: Vec<S> = metric.iter().map(|w| w.clone() / scale.clone()).collect();
    let dim = cfg.dim().saturating_sub(1).max(1);
    let mut out = PointConfiguration::with_metric(dim, metric, selected, tol)?;
    out.set_label(Some(match cfg.label() {
        Some(l) => format!("{l} derived at point {base_index} product {}", alpha.render()),
        None => format!("derived at point {base_index} product {}", alpha.render()),
    }));
    out.set_embedding(cfg.embedding().map(str::to_string));
    Ok(out)
}

/// Negates the listed points. Applying it twice with the same list restores
/// the input.
pub fn negate_points<S: Scalar>(
    cfg: &PointConfiguration<S>,
    indices: &[usize],
) -> Result<PointConfiguration<S>, ConfigError> {
    for &i in indices {
        cfg.check_index(i)?;
    }
    let (metric, points) = cfg.coordinates("switching")?;
    let mut points = points.to_vec();
    for &i in indices {
        for c in points[i].iter_mut() {
            *c = -c.clone();
        }
    }
    let mut out = PointConfiguration::with_metric(cfg.dim(), metric.to_vec(), points, cfg.tolerance())?;
    out.set_label(cfg.label().map(str::to_string));
    out.set_embedding(cfg.embedding().map(str::to_string));
    Ok(out)
}

/// Switches an equiangular configuration so that every other point has
/// inner product `+alpha` with `base_index`.
pub fn switch_to_common_product<S: Scalar>(
    cfg: &PointConfiguration<S>,
    base_index: usize,
) -> Result<PointConfiguration<S>, ConfigError> {
    cfg.check_index(base_index)?;
    let tol = cfg.tolerance();
    let spectrum = inner_product_spectrum(cfg)?;
    let alpha = spectrum
        .equiangular_alpha(tol)
        .filter(|a| !a.near(&S::one(), tol))
        .ok_or_else(|| ConfigError::NotEquiangular(spectrum.render_values()))?;
    let flips: Vec<usize> = (0..cfg.len())
        .filter(|&j| j != base_index)
        .filter(|&j| {
            let v = cfg.inner(j, base_index);
            !alpha.is_negligible(tol) && v.near(&-alpha.clone(), tol)
        })
        .collect();
    negate_points(cfg, &flips)
}

/// Parameters of the lifting `x -> t x + sqrt(1 - t^2) e_{n+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftParameters<S> {
    pub alpha: S,
    pub beta: S,
    /// `t^2 = 2 / (2 - alpha - beta)`.
    pub t_squared: S,
    /// Common absolute inner product of the lifted set.
    pub gamma: S,
}

impl<S: Scalar> LiftParameters<S> {
    pub fn new(alpha: S, beta: S) -> Result<Self, ConfigError> {
        let sum = alpha.clone() + beta.clone();
        if !sum.is_negative() {
            return Err(ConfigError::NoLifting(sum.render()));
        }
        let two = S::from_i64(2);
        let t_squared = two.clone() / (two - sum);
        let gamma = t_squared.clone() * alpha.clone() + (S::one() - t_squared.clone());
        Ok(LiftParameters {
            alpha,
            beta,
            t_squared,
            gamma,
        })
    }
}

/// Lifts a two-distance set with `alpha + beta < 0` to an equiangular set of
/// the same size one dimension up.
pub fn lift_to_equiangular<S: Scalar>(
    cfg: &PointConfiguration<S>,
) -> Result<(PointConfiguration<S>, LiftParameters<S>), ConfigError> {
    let (metric, points) = cfg.coordinates("lifting")?;
    let spectrum = inner_product_spectrum(cfg)?;
    let [alpha, beta] = spectrum.values() else {
        return Err(ConfigError::NotTwoDistance(spectrum.s()));
    };
    let params = LiftParameters::new(alpha.clone(), beta.clone())?;
    let t2 = &params.t_squared;
    let mut new_metric: Vec<S> = metric.iter().map(|w| w.clone() * t2.clone()).collect();
    new_metric.push(S::one() - t2.clone());
    let new_points: Vec<Vec<S>> = points
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.push(S::one());
            q
        })
        .collect();
    let mut out = PointConfiguration::with_metric(cfg.dim() + 1, new_metric, new_points, cfg.tolerance())?;
    out.set_label(Some(match cfg.label() {
        Some(l) => format!("{l} lifted"),
        None => "lifted".to_string(),
    }));
    if let Some(e) = cfg.embedding() {
        out.set_embedding(Some(format!("{e}, plus one lifting coordinate")));
    }
    Ok((out, params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{generate_named, generate_simplex_face_centers, Configuration, NamedFamily};
    use crate::scalar::{int, rat, Rational};

    fn exact(f: NamedFamily) -> PointConfiguration<Rational> {
        match generate_named(f) {
            Configuration::Exact(c) => c,
            Configuration::Floating(_) => panic!(),
        }
    }

    #[test]
    fn octahedron_derived_at_zero() {
        let oct = exact(NamedFamily::Octahedron);
        let d = derive_set(&oct, 0, &int(0)).unwrap();
        assert_eq!(d.len(), 4);
        let sp = inner_product_spectrum(&d).unwrap();
        assert_eq!(sp.values(), &[int(0), int(-1)]);
        assert_eq!(d.dim(), 2);
    }

    #[test]
    fn derive_errors() {
        let oct = exact(NamedFamily::Octahedron);
        assert!(matches!(
            derive_set(&oct, 0, &rat(1, 2)).unwrap_err(),
            ConfigError::ProductNotRealized { .. }
        ));
        assert!(matches!(derive_set(&oct, 0, &int(-1)).unwrap_err(), ConfigError::UnitProduct(_)));
        assert!(matches!(derive_set(&oct, 9, &int(0)).unwrap_err(), ConfigError::Index { .. }));
    }

    #[test]
    fn pentagon_near_neighbours() {
        let Configuration::Floating(p) = generate_named(NamedFamily::Pentagon) else {
            panic!()
        };
        let d = derive_set(&p, 0, &72f64.to_radians().cos()).unwrap();
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn lines28_switch_then_derive() {
        let l = exact(NamedFamily::Lines28);
        for base in [0, 5, 27] {
            let z = switch_to_common_product(&l, base).unwrap();
            assert!((0..28).filter(|&j| j != base).all(|j| z.inner(j, base) == rat(1, 3)));
            let t = derive_set(&z, base, &rat(1, 3)).unwrap();
            assert_eq!(t.len(), 27);
            assert_eq!(
                inner_product_spectrum(&t).unwrap().values(),
                &[rat(1, 4), rat(-1, 2)]
            );
        }
    }

    #[test]
    fn switching_rejects_non_equiangular() {
        let pair = PointConfiguration::from_points(1, vec![vec![int(1)], vec![int(-1)]], 1e-9).unwrap();
        assert!(matches!(
            switch_to_common_product(&pair, 0).unwrap_err(),
            ConfigError::NotEquiangular(_)
        ));
        let c5 = generate_simplex_face_centers(5, 2).unwrap();
        assert!(matches!(
            switch_to_common_product(&c5, 0).unwrap_err(),
            ConfigError::NotEquiangular(_)
        ));
    }

    #[test]
    fn aligned_configuration_is_unchanged() {
        let tri = generate_simplex_face_centers(2, 1).unwrap();
        let flipped = negate_points(&tri, &[1, 2]).unwrap();
        assert_eq!(switch_to_common_product(&flipped, 0).unwrap(), flipped);
        assert_eq!(negate_points(&flipped, &[1, 2]).unwrap(), tri);
    }

    #[test]
    fn lifting() {
        let oct = exact(NamedFamily::Octahedron);
        let (up, p) = lift_to_equiangular(&oct).unwrap();
        assert_eq!(p.t_squared, rat(2, 3));
        assert_eq!(p.gamma, rat(1, 3));
        assert_eq!(up.dim(), 4);
        assert_eq!(
            inner_product_spectrum(&up).unwrap().values(),
            &[rat(1, 3), rat(-1, 3)]
        );

        let c5 = generate_simplex_face_centers(5, 2).unwrap();
        let (up, p) = lift_to_equiangular(&c5).unwrap();
        assert_eq!(p.t_squared, rat(8, 9));
        assert_eq!(p.gamma, rat(1, 3));
        assert_eq!(up.len(), 15);
        assert_eq!(up.dim(), 6);

        // At n = 7 the products are ±1/3, alpha + beta = 0: no lifting.
        let c7 = generate_simplex_face_centers(7, 2).unwrap();
        assert!(matches!(lift_to_equiangular(&c7).unwrap_err(), ConfigError::NoLifting(_)));

        let c6 = generate_simplex_face_centers(6, 2).unwrap();
        let (_, p) = lift_to_equiangular(&c6).unwrap();
        // alpha = 3/10, beta = -2/5: t^2 = 2/(21/10) = 20/21, gamma = 6/21 + 1/21.
        assert_eq!(p.gamma, rat(1, 3));
    }
}
