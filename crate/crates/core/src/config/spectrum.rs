use crate::scalar::Scalar;

use super::{ConfigError, PointConfiguration};

/// Distinct off-diagonal inner products of a configuration, with counts.
///
/// `values` is sorted in decreasing order; `pair_counts[l]` counts ordered
/// pairs `(i, j)`, `i != j`, whose inner product is `values[l]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceSpectrum<S> {
    tau0: S,
    values: Vec<S>,
    pair_counts: Vec<usize>,
    order: usize,
    classes: Vec<usize>,
}

impl<S: Scalar> DistanceSpectrum<S> {
    /// Inner product of a point with itself; always 1 on the unit sphere.
    pub fn tau0(&self) -> &S {
        &self.tau0
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn pair_counts(&self) -> &[usize] {
        &self.pair_counts
    }

    /// Number of distinct inner products.
    pub fn s(&self) -> usize {
        self.values.len()
    }

    /// Number of points of the underlying configuration.
    pub fn point_count(&self) -> usize {
        self.order
    }

    /// Index into `values` of the inner product between points `i != j`.
    pub fn class_of(&self, i: usize, j: usize) -> Option<usize> {
        if i == j {
            None
        } else {
            Some(self.classes[i * self.order + j])
        }
    }

    /// `Some(alpha)` with `alpha >= 0` when every value is `±alpha`.
    pub fn equiangular_alpha(&self, tol: f64) -> Option<S> {
        match self.values.as_slice() {
            [v] => Some(v.abs()),
            [a, b] if a.near(&-b.clone(), tol) => Some(a.abs()),
            _ => None,
        }
    }

    /// Position of `value` among the spectrum values, within tolerance.
    pub fn position(&self, value: &S, tol: f64) -> Option<usize> {
        self.values.iter().position(|v| v.near(value, tol))
    }

    pub fn render_values(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(Scalar::render).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Groups the off-diagonal inner products of `cfg`.
///
/// In the floating regime values are clustered by single linkage with gap
/// threshold equal to the configuration tolerance; two clusters whose
/// representatives lie within ten tolerances of each other are reported as
/// ambiguous.
pub fn inner_product_spectrum<S: Scalar>(
    cfg: &PointConfiguration<S>,
) -> Result<DistanceSpectrum<S>, ConfigError> {
    let n = cfg.len();
    if n < 2 {
        return Err(ConfigError::TooFewPoints(2));
    }
    let tol = cfg.tolerance();
    let gram = cfg.gram();
    let mut pairs: Vec<(S, usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = gram.get(i, j).clone();
            if v.near(&S::one(), tol) {
                return Err(ConfigError::Duplicate(i, j));
            }
            let out_of_range = if S::EXACT {
                v > S::one() || v < -S::one()
            } else {
                v.to_f64().abs() > 1.0 + tol
            };
            if out_of_range {
                return Err(ConfigError::OutOfRange {
                    i,
                    j,
                    value: v.render(),
                });
            }
            pairs.push((v, i, j));
        }
    }
    pairs.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite inner products"));

    // Single-linkage clustering on the sorted list; exact values only merge
    // when equal.
    let mut groups: Vec<Vec<(S, usize, usize)>> = Vec::new();
    for p in pairs {
        match groups.last_mut() {
            Some(g) if g.last().expect("nonempty").0.near(&p.0, tol) => g.push(p),
            _ => groups.push(vec![p]),
        }
    }

    let values: Vec<S> = groups
        .iter()
        .map(|g| {
            if S::EXACT {
                g[0].0.clone()
            } else {
                let sum = g.iter().fold(S::zero(), |acc, p| acc + p.0.clone());
                sum / S::from_i64(g.len() as i64)
            }
        })
        .collect();

    if !S::EXACT {
        for w in values.windows(2) {
            if (w[0].to_f64() - w[1].to_f64()).abs() < 10.0 * tol {
                return Err(ConfigError::Ambiguous(w[0].render(), w[1].render()));
            }
        }
    }

    let mut classes = vec![usize::MAX; n * n];
    let mut pair_counts = Vec::with_capacity(groups.len());
    for (l, g) in groups.iter().enumerate() {
        for (_, i, j) in g {
            classes[i * n + j] = l;
            classes[j * n + i] = l;
        }
        pair_counts.push(2 * g.len());
    }

    Ok(DistanceSpectrum {
        tau0: S::one(),
        values,
        pair_counts,
        order: n,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{generate_named, Configuration, NamedFamily};
    use crate::scalar::{int, Rational};

    fn exact(cfg: Configuration) -> PointConfiguration<Rational> {
        match cfg {
            Configuration::Exact(c) => c,
            Configuration::Floating(_) => panic!("expected exact"),
        }
    }

    #[test]
    fn octahedron() {
        let cfg = exact(generate_named(NamedFamily::Octahedron));
        let sp = inner_product_spectrum(&cfg).unwrap();
        assert_eq!(sp.values(), &[int(0), int(-1)]);
        assert_eq!(sp.pair_counts(), &[24, 6]);
        assert_eq!(sp.tau0(), &int(1));
    }

    #[test]
    fn antipodal_pair() {
        let cfg = PointConfiguration::from_points(1, vec![vec![int(1)], vec![int(-1)]], 1e-9).unwrap();
        let sp = inner_product_spectrum(&cfg).unwrap();
        assert_eq!(sp.values(), &[int(-1)]);
        assert_eq!(sp.pair_counts(), &[2]);
    }

    #[test]
    fn pentagon_values() {
        let Configuration::Floating(cfg) = generate_named(NamedFamily::Pentagon) else {
            panic!("pentagon is floating")
        };
        let sp = inner_product_spectrum(&cfg).unwrap();
        assert_eq!(sp.s(), 2);
        assert!((sp.values()[0] - 72f64.to_radians().cos()).abs() < 1e-9);
        assert!((sp.values()[1] - 144f64.to_radians().cos()).abs() < 1e-9);
        assert_eq!(sp.pair_counts(), &[10, 10]);
    }

    #[test]
    fn errors() {
        let one = PointConfiguration::from_points(1, vec![vec![int(1)]], 1e-9).unwrap();
        assert_eq!(inner_product_spectrum(&one).unwrap_err(), ConfigError::TooFewPoints(2));
        let dup = PointConfiguration::from_points(1, vec![vec![int(1)], vec![int(1)]], 1e-9).unwrap();
        assert_eq!(inner_product_spectrum(&dup).unwrap_err(), ConfigError::Duplicate(0, 1));

        // Three points whose products 0 and 5e-9 can neither merge nor separate.
        let e = 5e-9f64;
        let c = (1.0 - e * e).sqrt();
        let noisy = PointConfiguration::from_points(
            3,
            vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![e, 0.0, c]],
            1e-9,
        )
        .unwrap();
        assert!(matches!(
            inner_product_spectrum(&noisy).unwrap_err(),
            ConfigError::Ambiguous(..)
        ));
    }
}
