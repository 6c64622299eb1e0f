//! Point configurations on the unit sphere.
//!
//! A configuration stores raw coordinate vectors together with a diagonal
//! metric `w`: the inner product of two stored vectors is
//! `sum_k w_k x_k y_k`, so the actual point has coordinates `x_k * sqrt(w_k)`.
//! This keeps objects such as the 28 lines in `R^8` (entries `±1/sqrt(24)`)
//! and lifted sets (scaled by an irrational `t`) in the exact regime: every
//! inner product is still a rational number.
//!
//! Dimension claims are made through the Gram rank. The recorded `dim` is the
//! dimension of the space the configuration is declared to live in, which may
//! differ from the number of stored coordinates (simplex constructions are
//! stored in `R^{n+1}` on the zero-sum hyperplane).

mod generate;
mod io;
mod spectrum;
mod transform;

pub use generate::{generate_named, generate_simplex_face_centers, NamedFamily};
pub use io::{parse_configuration, write_configuration};
pub use spectrum::{inner_product_spectrum, DistanceSpectrum};
pub use transform::{
    derive_set, lift_to_equiangular, negate_points, switch_to_common_product, LiftParameters,
};

use crate::linalg::SymMatrix;
use crate::scalar::{Rational, Scalar};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: point is not a unit vector (squared norm {norm_sq})")]
    NormViolation { line: usize, norm_sq: String },
    #[error("point {index} is not a unit vector (squared norm {norm_sq})")]
    NotUnit { index: usize, norm_sq: String },
    #[error("point {index} has {got} coordinates, expected {expected}")]
    Arity {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("metric weights must be positive")]
    Metric,
    #[error("a configuration needs at least {0} point(s)")]
    TooFewPoints(usize),
    #[error("configuration was given as a Gram matrix; coordinates are unavailable for {0}")]
    NoCoordinates(&'static str),
    #[error("points {0} and {1} coincide")]
    Duplicate(usize, usize),
    #[error("inner product {value} between points {i} and {j} lies outside [-1, 1]")]
    OutOfRange { i: usize, j: usize, value: String },
    #[error("inner products {0} and {1} are too close to separate at this tolerance")]
    Ambiguous(String, String),
    #[error("point index {index} out of range for {len} points")]
    Index { index: usize, len: usize },
    #[error("no point has inner product {product} with point {base}")]
    ProductNotRealized { base: usize, product: String },
    #[error("derivation needs |product| < 1, got {0}")]
    UnitProduct(String),
    #[error("configuration is not equiangular: inner products {0}")]
    NotEquiangular(String),
    #[error("expected a two-distance set, found {0} distinct inner products")]
    NotTwoDistance(usize),
    #[error("lifting needs alpha + beta < 0, got {0}")]
    NoLifting(String),
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

/// Storage for the points: explicit coordinates or just the Gram matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum Body<S> {
    Coordinates {
        metric: Vec<S>,
        points: Vec<Vec<S>>,
    },
    Gram(SymMatrix<S>),
}

/// Finite list of unit vectors with metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct PointConfiguration<S> {
    dim: usize,
    body: Body<S>,
    tolerance: f64,
    label: Option<String>,
    embedding: Option<String>,
}

impl<S: Scalar> PointConfiguration<S> {
    /// Points in `R^dim` with the standard inner product.
    pub fn from_points(dim: usize, points: Vec<Vec<S>>, tolerance: f64) -> Result<Self, ConfigError> {
        Self::with_metric(dim, vec![S::one(); dim], points, tolerance)
    }

    /// Raw vectors under a diagonal metric. The recorded dimension is
    /// `dim`; the vectors may have more coordinates than that.
    pub fn with_metric(
        dim: usize,
        metric: Vec<S>,
        points: Vec<Vec<S>>,
        tolerance: f64,
    ) -> Result<Self, ConfigError> {
        if points.is_empty() {
            return Err(ConfigError::TooFewPoints(1));
        }
        if metric.iter().any(|w| !w.is_positive()) {
            return Err(ConfigError::Metric);
        }
        for (index, p) in points.iter().enumerate() {
            if p.len() != metric.len() {
                return Err(ConfigError::Arity {
                    index,
                    expected: metric.len(),
                    got: p.len(),
                });
            }
            let norm = weighted_dot(&metric, p, p);
            if !norm.near(&S::one(), tolerance) {
                return Err(ConfigError::NotUnit {
                    index,
                    norm_sq: norm.render(),
                });
            }
        }
        Ok(PointConfiguration {
            dim,
            body: Body::Coordinates { metric, points },
            tolerance,
            label: None,
            embedding: None,
        })
    }

    /// A virtual configuration known only through its Gram matrix. The
    /// dimension is taken to be the Gram rank.
    pub fn from_gram(gram: SymMatrix<S>) -> Result<Self, ConfigError> {
        let tolerance = gram.tolerance();
        for i in 0..gram.order() {
            if !gram.get(i, i).near(&S::one(), tolerance) {
                return Err(ConfigError::NotUnit {
                    index: i,
                    norm_sq: gram.get(i, i).render(),
                });
            }
        }
        let dim = crate::linalg::rank(&gram);
        Ok(PointConfiguration {
            dim,
            body: Body::Gram(gram),
            tolerance,
            label: None,
            embedding: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn with_embedding(mut self, note: impl Into<String>) -> Self {
        self.embedding = Some(note.into());
        self
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        if let Body::Gram(g) = &mut self.body {
            *g = g.clone().with_tolerance(tolerance);
        }
        self
    }

    pub(crate) fn set_label(&mut self, label: Option<String>) {
        self.label = label;
    }

    pub(crate) fn set_embedding(&mut self, note: Option<String>) {
        self.embedding = note;
    }

    pub fn len(&self) -> usize {
        match &self.body {
            Body::Coordinates { points, .. } => points.len(),
            Body::Gram(g) => g.order(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Declared ambient dimension `n` (sphere `S^{n-1}`).
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of stored coordinates per point, when coordinates exist.
    pub fn coordinate_count(&self) -> Option<usize> {
        match &self.body {
            Body::Coordinates { metric, .. } => Some(metric.len()),
            Body::Gram(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        S::EXACT
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn embedding(&self) -> Option<&str> {
        self.embedding.as_deref()
    }

    pub fn body(&self) -> &Body<S> {
        &self.body
    }

    pub fn points(&self) -> Option<&[Vec<S>]> {
        match &self.body {
            Body::Coordinates { points, .. } => Some(points),
            Body::Gram(_) => None,
        }
    }

    pub fn metric(&self) -> Option<&[S]> {
        match &self.body {
            Body::Coordinates { metric, .. } => Some(metric),
            Body::Gram(_) => None,
        }
    }

    pub(crate) fn coordinates(&self, op: &'static str) -> Result<(&[S], &[Vec<S>]), ConfigError> {
        match &self.body {
            Body::Coordinates { metric, points } => Ok((metric, points)),
            Body::Gram(_) => Err(ConfigError::NoCoordinates(op)),
        }
    }

    /// Inner product of points `i` and `j`.
    pub fn inner(&self, i: usize, j: usize) -> S {
        match &self.body {
            Body::Coordinates { metric, points } => weighted_dot(metric, &points[i], &points[j]),
            Body::Gram(g) => g.get(i, j).clone(),
        }
    }

    pub fn gram(&self) -> SymMatrix<S> {
        match &self.body {
            Body::Gram(g) => g.clone(),
            Body::Coordinates { .. } => {
                SymMatrix::from_fn(self.len(), self.tolerance, |i, j| self.inner(i, j))
            }
        }
    }

    /// Dimension of the linear span of the points (Gram rank).
    pub fn span_dimension(&self) -> usize {
        crate::linalg::rank(&self.gram())
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<(), ConfigError> {
        if index < self.len() {
            Ok(())
        } else {
            Err(ConfigError::Index {
                index,
                len: self.len(),
            })
        }
    }

    /// Same configuration with the points listed in a new order.
    pub fn select(&self, indices: &[usize]) -> Result<Self, ConfigError> {
        for &i in indices {
            self.check_index(i)?;
        }
        if indices.is_empty() {
            return Err(ConfigError::TooFewPoints(1));
        }
        let body = match &self.body {
            Body::Coordinates { metric, points } => Body::Coordinates {
                metric: metric.clone(),
                points: indices.iter().map(|&i| points[i].clone()).collect(),
            },
            Body::Gram(g) => Body::Gram(SymMatrix::from_fn(indices.len(), g.tolerance(), |a, b| {
                g.get(indices[a], indices[b]).clone()
            })),
        };
        Ok(PointConfiguration {
            dim: self.dim,
            body,
            tolerance: self.tolerance,
            label: self.label.clone(),
            embedding: self.embedding.clone(),
        })
    }

    /// Replaces one stored point (raw coordinates), re-checking its norm.
    pub fn replace_point(&self, index: usize, raw: Vec<S>) -> Result<Self, ConfigError> {
        self.check_index(index)?;
        let (metric, points) = self.coordinates("point replacement")?;
        let mut points = points.to_vec();
        points[index] = raw;
        let mut out = Self::with_metric(self.dim, metric.to_vec(), points, self.tolerance)?;
        out.label = self.label.clone();
        out.embedding = self.embedding.clone();
        Ok(out)
    }
}

pub(crate) fn weighted_dot<S: Scalar>(metric: &[S], x: &[S], y: &[S]) -> S {
    metric
        .iter()
        .zip(x.iter().zip(y))
        .fold(S::zero(), |acc, (w, (a, b))| acc + w.clone() * a.clone() * b.clone())
}

/// A configuration in whichever regime its input dictated.
#[derive(Debug, Clone, PartialEq)]
pub enum Configuration {
    Exact(PointConfiguration<Rational>),
    Floating(PointConfiguration<f64>),
}

impl Configuration {
    pub fn len(&self) -> usize {
        match self {
            Configuration::Exact(c) => c.len(),
            Configuration::Floating(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Configuration::Exact(_))
    }

    pub fn dim(&self) -> usize {
        match self {
            Configuration::Exact(c) => c.dim(),
            Configuration::Floating(c) => c.dim(),
        }
    }

    pub fn label(&self) -> Option<&str> {
        match self {
            Configuration::Exact(c) => c.label(),
            Configuration::Floating(c) => c.label(),
        }
    }

    pub fn regime(&self) -> &'static str {
        if self.is_exact() {
            "exact"
        } else {
            "floating"
        }
    }
}

impl From<PointConfiguration<Rational>> for Configuration {
    fn from(c: PointConfiguration<Rational>) -> Self {
        Configuration::Exact(c)
    }
}

impl From<PointConfiguration<f64>> for Configuration {
    fn from(c: PointConfiguration<f64>) -> Self {
        Configuration::Floating(c)
    }
}
