use std::fmt;
use std::str::FromStr;

use crate::scalar::{int, Rational, DEFAULT_TOLERANCE};

use super::{ConfigError, Configuration, PointConfiguration};

/// Named configurations shipped with the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFamily {
    Octahedron,
    Pentagon,
    Icosahedron,
    /// 28 equiangular lines in `R^7` with common angle `arccos(1/3)`.
    Lines28,
}

impl NamedFamily {
    pub const ALL: [NamedFamily; 4] = [
        NamedFamily::Octahedron,
        NamedFamily::Pentagon,
        NamedFamily::Icosahedron,
        NamedFamily::Lines28,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedFamily::Octahedron => "octahedron",
            NamedFamily::Pentagon => "pentagon",
            NamedFamily::Icosahedron => "icosahedron",
            NamedFamily::Lines28 => "lines28",
        }
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedFamily {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| ConfigError::UnknownFamily(s.to_string()))
    }
}

pub fn generate_named(family: NamedFamily) -> Configuration {
    match family {
        NamedFamily::Octahedron => octahedron().into(),
        NamedFamily::Pentagon => pentagon().into(),
        NamedFamily::Icosahedron => icosahedron().into(),
        NamedFamily::Lines28 => lines28().into(),
    }
}

fn octahedron() -> PointConfiguration<Rational> {
    let mut points = Vec::new();
    for axis in 0..3 {
        for sign in [1, -1] {
            let mut p = vec![int(0); 3];
            p[axis] = int(sign);
            points.push(p);
        }
    }
    PointConfiguration::from_points(3, points, DEFAULT_TOLERANCE)
        .expect("unit vectors")
        .with_label("octahedron")
}

fn pentagon() -> PointConfiguration<f64> {
    let points = (0..5)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * f64::from(k) / 5.0;
            vec![angle.cos(), angle.sin()]
        })
        .collect();
    PointConfiguration::from_points(2, points, DEFAULT_TOLERANCE)
        .expect("unit vectors")
        .with_label("pentagon")
}

fn icosahedron() -> PointConfiguration<f64> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let scale = (1.0 + phi * phi).sqrt();
    let mut points = Vec::with_capacity(12);
    for s1 in [1.0, -1.0] {
        for s2 in [1.0, -1.0] {
            let (a, b) = (s1 / scale, s2 * phi / scale);
            points.push(vec![0.0, a, b]);
            points.push(vec![a, b, 0.0]);
            points.push(vec![b, 0.0, a]);
        }
    }
    PointConfiguration::from_points(3, points, DEFAULT_TOLERANCE)
        .expect("unit vectors")
        .with_label("icosahedron")
}

/// Vectors of `R^8` with six entries `+1` and two entries `-3`, under the
/// metric `1/24`. They lie on the zero-sum hyperplane, so the recorded
/// dimension is 7.
fn lines28() -> PointConfiguration<Rational> {
    let mut points = Vec::with_capacity(28);
    for i in 0..8 {
        for j in (i + 1)..8 {
            let mut p = vec![int(1); 8];
            p[i] = int(-3);
            p[j] = int(-3);
            points.push(p);
        }
    }
    PointConfiguration::with_metric(7, vec![Rational::new(1.into(), 24.into()); 8], points, DEFAULT_TOLERANCE)
        .expect("unit vectors")
        .with_label("lines28")
        .with_embedding("zero-sum hyperplane of R^8")
}

/// Normalized centers of the `s`-element faces of the regular simplex in
/// `R^n`.
///
/// The simplex vertices are realized on the zero-sum hyperplane of
/// `R^{n+1}`. The stored raw vector for a face `S` is `(n+1) 1_S - s 1`, an
/// integer vector of squared length `(n+1) s (n+1-s)`, which becomes the
/// common metric weight.
pub fn generate_simplex_face_centers(
    n: usize,
    s: usize,
) -> Result<PointConfiguration<Rational>, ConfigError> {
    if s < 1 || s > n {
        return Err(ConfigError::Parameters(format!(
            "face size must satisfy 1 <= s <= n, got n={n}, s={s}"
        )));
    }
    let m = n + 1;
    let norm_sq = (m * s * (m - s)) as i64;
    let mut points = Vec::new();
    for subset in k_subsets(m, s) {
        let mut p = vec![int(-(s as i64)); m];
        for &i in &subset {
            p[i] = int((m - s) as i64);
        }
        points.push(p);
    }
    let metric = vec![Rational::new(1.into(), norm_sq.into()); m];
    Ok(PointConfiguration::with_metric(n, metric, points, DEFAULT_TOLERANCE)?
        .with_label(format!("simplex-faces n={n} s={s}"))
        .with_embedding(format!("zero-sum hyperplane of R^{m}")))
}

fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let Some(pos) = (0..k).rev().find(|&i| current[i] != i + m - k) else {
            return out;
        };
        current[pos] += 1;
        for i in (pos + 1)..k {
            current[i] = current[i - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::inner_product_spectrum;
    use crate::scalar::Scalar;
    use crate::scalar::rat;

    fn is_unit<S: Scalar>(cfg: &PointConfiguration<S>) -> bool {
        (0..cfg.len()).all(|i| cfg.inner(i, i).near(&S::one(), cfg.tolerance()))
    }

    #[test]
    fn subsets() {
        assert_eq!(k_subsets(4, 2).len(), 6);
        assert_eq!(k_subsets(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(k_subsets(5, 1).len(), 5);
    }

    #[test]
    fn face_centers_small_cases() {
        let tri = generate_simplex_face_centers(2, 1).unwrap();
        assert_eq!(tri.len(), 3);
        assert_eq!(inner_product_spectrum(&tri).unwrap().values(), &[rat(-1, 2)]);

        let oct = generate_simplex_face_centers(3, 2).unwrap();
        assert_eq!(oct.len(), 6);
        assert_eq!(inner_product_spectrum(&oct).unwrap().values(), &[int(0), int(-1)]);

        // Both products collapse to ±1/3 at n = 7.
        let c7 = generate_simplex_face_centers(7, 2).unwrap();
        assert_eq!(c7.len(), 28);
        assert_eq!(
            inner_product_spectrum(&c7).unwrap().values(),
            &[rat(1, 3), rat(-1, 3)]
        );
        assert!(generate_simplex_face_centers(3, 0).is_err());
        assert!(generate_simplex_face_centers(3, 4).is_err());
    }

    #[test]
    fn named_families() {
        for f in NamedFamily::ALL {
            assert_eq!(f.name().parse::<NamedFamily>().unwrap(), f);
        }
        assert_eq!(
            "dodecahedron".parse::<NamedFamily>().unwrap_err(),
            ConfigError::UnknownFamily("dodecahedron".into())
        );
        let Configuration::Floating(ico) = generate_named(NamedFamily::Icosahedron) else {
            panic!()
        };
        assert!(is_unit(&ico));
        let sp = inner_product_spectrum(&ico).unwrap();
        let r5 = 1.0 / 5f64.sqrt();
        assert_eq!(sp.s(), 3);
        assert!((sp.values()[0] - r5).abs() < 1e-12);
        assert!((sp.values()[1] + r5).abs() < 1e-12);
        assert!((sp.values()[2] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn lines28_structure() {
        let Configuration::Exact(l) = generate_named(NamedFamily::Lines28) else {
            panic!()
        };
        assert_eq!(l.len(), 28);
        assert_eq!(
            inner_product_spectrum(&l).unwrap().values(),
            &[rat(1, 3), rat(-1, 3)]
        );
        assert_eq!(l.span_dimension(), 7);
        assert_eq!(l.dim(), 7);
        assert_eq!(l.coordinate_count(), Some(8));
    }
}
