//! Line-oriented text format for configurations.
//!
//! ```text
//! # comment
//! dim 3                  required, first non-comment line
//! coords 4               optional: stored coordinates per point (default dim)
//! metric 1/2 1/2 1/2 1/2 optional: diagonal metric weights (default all 1)
//! label octahedron       optional
//! embedding <free text>  optional
//! point 1 0 0            one line per point
//! ```
//!
//! Alternatively the first line is `gram <N>`, followed by `N` rows of `N`
//! entries. Numbers are integers, fractions `p/q`, or decimals. The file is
//! read in the exact regime when no decimal appears anywhere.

use std::fmt::Write as _;

use crate::linalg::SymMatrix;
use crate::scalar::{Literal, Rational, Scalar};

use super::{Body, ConfigError, Configuration, PointConfiguration};

struct Header {
    dim: usize,
    coords: Option<usize>,
    metric: Option<(usize, Vec<Literal>)>,
    label: Option<String>,
    embedding: Option<String>,
}

enum Layout {
    Points {
        header: Header,
        rows: Vec<(usize, Vec<Literal>)>,
    },
    Gram {
        order: usize,
        label: Option<String>,
        rows: Vec<(usize, Vec<Literal>)>,
    },
}

fn syntax(line: usize, message: impl Into<String>) -> ConfigError {
    ConfigError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_numbers(line: usize, fields: &[&str]) -> Result<Vec<Literal>, ConfigError> {
    fields
        .iter()
        .map(|f| f.parse::<Literal>().map_err(|e| syntax(line, e.to_string())))
        .collect()
}

fn parse_count(line: usize, keyword: &str, fields: &[&str]) -> Result<usize, ConfigError> {
    match fields {
        [v] => v
            .parse::<usize>()
            .ok()
            .filter(|&d| d > 0)
            .ok_or_else(|| syntax(line, format!("`{keyword}` needs a positive integer"))),
        _ => Err(syntax(line, format!("`{keyword}` takes exactly one argument"))),
    }
}

fn rest_of_line<'a>(raw: &'a str, keyword: &str) -> &'a str {
    raw.trim_start()[keyword.len()..].trim()
}

fn read_layout(text: &str) -> Result<Layout, ConfigError> {
    let mut layout: Option<Layout> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let (keyword, args) = fields.split_first().expect("nonempty line");
        match (&mut layout, *keyword) {
            (None, "dim") => {
                layout = Some(Layout::Points {
                    header: Header {
                        dim: parse_count(line, "dim", args)?,
                        coords: None,
                        metric: None,
                        label: None,
                        embedding: None,
                    },
                    rows: Vec::new(),
                })
            }
            (None, "gram") => {
                layout = Some(Layout::Gram {
                    order: parse_count(line, "gram", args)?,
                    label: None,
                    rows: Vec::new(),
                })
            }
            (None, _) => return Err(syntax(line, "expected `dim <n>` or `gram <N>` header")),
            (Some(Layout::Points { header, rows }), kw) => match kw {
                "point" => rows.push((line, parse_numbers(line, args)?)),
                _ if !rows.is_empty() => {
                    return Err(syntax(line, format!("unexpected `{kw}` after the first point")))
                }
                "coords" => header.coords = Some(parse_count(line, "coords", args)?),
                "metric" => header.metric = Some((line, parse_numbers(line, args)?)),
                "label" => header.label = Some(rest_of_line(trimmed, "label").to_string()),
                "embedding" => {
                    header.embedding = Some(rest_of_line(trimmed, "embedding").to_string())
                }
                other => return Err(syntax(line, format!("unknown directive `{other}`"))),
            },
            (Some(Layout::Gram { label, rows, .. }), kw) => match kw {
                "label" if rows.is_empty() => {
                    *label = Some(rest_of_line(trimmed, "label").to_string())
                }
                _ => rows.push((line, parse_numbers(line, &fields)?)),
            },
        }
    }
    layout.ok_or_else(|| syntax(0, "empty input: missing `dim <n>` header"))
}

fn all_exact<'a>(mut lits: impl Iterator<Item = &'a Literal>) -> bool {
    lits.all(|l| matches!(l, Literal::Exact(_)))
}

fn to_exact(l: &Literal) -> Rational {
    match l {
        Literal::Exact(q) => q.clone(),
        Literal::Decimal(_) => unreachable!("checked exact"),
    }
}

/// Reads a configuration; the regime is exact iff every number is a
/// fraction or integer.
pub fn parse_configuration(text: &str, tolerance: f64) -> Result<Configuration, ConfigError> {
    match read_layout(text)? {
        Layout::Points { header, rows } => {
            let exact = all_exact(rows.iter().flat_map(|(_, r)| r.iter()))
                && all_exact(header.metric.iter().flat_map(|(_, m)| m.iter()));
            if exact {
                build_points(header, rows, tolerance, to_exact).map(Configuration::Exact)
            } else {
                build_points(header, rows, tolerance, Literal::to_f64).map(Configuration::Floating)
            }
        }
        Layout::Gram { order, label, rows } => {
            let exact = all_exact(rows.iter().flat_map(|(_, r)| r.iter()));
            if exact {
                build_gram(order, label, rows, tolerance, to_exact).map(Configuration::Exact)
            } else {
                build_gram(order, label, rows, tolerance, Literal::to_f64).map(Configuration::Floating)
            }
        }
    }
}

fn build_points<S: Scalar>(
    header: Header,
    rows: Vec<(usize, Vec<Literal>)>,
    tolerance: f64,
    convert: impl Fn(&Literal) -> S,
) -> Result<PointConfiguration<S>, ConfigError> {
    let coords = header.coords.unwrap_or(header.dim);
    let metric: Vec<S> = match header.metric {
        Some((line, m)) => {
            if m.len() != coords {
                return Err(syntax(line, format!("metric needs {coords} weights, got {}", m.len())));
            }
            let m: Vec<S> = m.iter().map(&convert).collect();
            if m.iter().any(|w| !w.is_positive()) {
                return Err(syntax(line, "metric weights must be positive"));
            }
            m
        }
        None => vec![S::one(); coords],
    };
    if rows.is_empty() {
        return Err(syntax(0, "no `point` lines"));
    }
    let mut points = Vec::with_capacity(rows.len());
    for (line, row) in &rows {
        if row.len() != coords {
            return Err(syntax(
                *line,
                format!("point has {} coordinates, expected {coords}", row.len()),
            ));
        }
        let p: Vec<S> = row.iter().map(&convert).collect();
        let norm = super::weighted_dot(&metric, &p, &p);
        if !norm.near(&S::one(), tolerance) {
            return Err(ConfigError::NormViolation {
                line: *line,
                norm_sq: norm.render(),
            });
        }
        points.push(p);
    }
    let mut cfg = PointConfiguration::with_metric(header.dim, metric, points, tolerance)?;
    cfg.set_label(header.label);
    cfg.set_embedding(header.embedding);
    Ok(cfg)
}

fn build_gram<S: Scalar>(
    order: usize,
    label: Option<String>,
    rows: Vec<(usize, Vec<Literal>)>,
    tolerance: f64,
    convert: impl Fn(&Literal) -> S,
) -> Result<PointConfiguration<S>, ConfigError> {
    if rows.len() != order {
        let line = rows.last().map_or(0, |r| r.0);
        return Err(syntax(line, format!("expected {order} Gram rows, got {}", rows.len())));
    }
    let mut matrix = Vec::with_capacity(order);
    for (line, row) in &rows {
        if row.len() != order {
            return Err(syntax(*line, format!("Gram row has {} entries, expected {order}", row.len())));
        }
        matrix.push(row.iter().map(&convert).collect::<Vec<S>>());
    }
    for (i, (line, _)) in rows.iter().enumerate() {
        if !matrix[i][i].near(&S::one(), tolerance) {
            return Err(ConfigError::NormViolation {
                line: *line,
                norm_sq: matrix[i][i].render(),
            });
        }
        for j in 0..i {
            if !matrix[i][j].near(&matrix[j][i], tolerance) {
                return Err(syntax(*line, format!("Gram matrix is not symmetric in column {}", j + 1)));
            }
        }
    }
    let gram = SymMatrix::from_rows(matrix, tolerance).expect("checked square and symmetric");
    let mut cfg = PointConfiguration::from_gram(gram)?;
    cfg.set_label(label);
    Ok(cfg)
}

/// Writes a configuration in the text format. Exact configurations
/// round-trip byte for byte.
pub fn write_configuration(cfg: &Configuration) -> String {
    match cfg {
        Configuration::Exact(c) => write_generic(c),
        Configuration::Floating(c) => write_generic(c),
    }
}

fn write_generic<S: Scalar>(cfg: &PointConfiguration<S>) -> String {
    let mut out = String::new();
    let join = |v: &[S]| v.iter().map(Scalar::render).collect::<Vec<_>>().join(" ");
    match cfg.body() {
        Body::Coordinates { metric, points } => {
            writeln!(out, "dim {}", cfg.dim()).unwrap();
            if metric.len() != cfg.dim() {
                writeln!(out, "coords {}", metric.len()).unwrap();
            }
            if metric.iter().any(|w| !w.is_one()) {
                writeln!(out, "metric {}", join(metric)).unwrap();
            }
            write_meta(&mut out, cfg);
            for p in points {
                writeln!(out, "point {}", join(p)).unwrap();
            }
        }
        Body::Gram(g) => {
            writeln!(out, "gram {}", g.order()).unwrap();
            if let Some(l) = cfg.label() {
                writeln!(out, "label {l}").unwrap();
            }
            for row in g.rows() {
                writeln!(out, "{}", join(row)).unwrap();
            }
        }
    }
    out
}

fn write_meta<S: Scalar>(out: &mut String, cfg: &PointConfiguration<S>) {
    if let Some(l) = cfg.label() {
        writeln!(out, "label {l}").unwrap();
    }
    if let Some(e) = cfg.embedding() {
        writeln!(out, "embedding {e}").unwrap();
    }
}
