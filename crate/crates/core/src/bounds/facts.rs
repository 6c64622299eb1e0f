//! Table of externally established nonexistence results.

use std::str::FromStr;

/// Every equiangular set in `R^n` with `lo <= n <= hi` has at most `cap`
/// points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonexistenceFact {
    pub lo: u64,
    pub hi: u64,
    pub cap: u64,
    pub source: String,
}

impl NonexistenceFact {
    /// Size known not to occur at dimension `lo`.
    pub fn forbidden_size(&self) -> u64 {
        self.cap + 1
    }

    pub fn covers(&self, n: u64) -> bool {
        self.lo <= n && n <= self.hi
    }
}

/// No tight spherical 4-design exists in `R^{a^2-3}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcludedDesign {
    pub a: u64,
    pub source: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactTable {
    pub ranges: Vec<NonexistenceFact>,
    pub excluded: Vec<ExcludedDesign>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("fact file line {line}: {message}")]
pub struct FactError {
    pub line: usize,
    pub message: String,
}

const SHIPPED: &str = include_str!("../../data/nonexistence.facts");

impl FactTable {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The table bundled with the library.
    pub fn shipped() -> Self {
        SHIPPED.parse().expect("bundled fact file is well formed")
    }

    /// Facts whose range contains `n`.
    pub fn covering(&self, n: u64) -> impl Iterator<Item = &NonexistenceFact> {
        self.ranges.iter().filter(move |f| f.covers(n))
    }

    pub fn excluded_design(&self, a: u64) -> Option<&ExcludedDesign> {
        self.excluded.iter().find(|e| e.a == a)
    }
}

fn split_source(line: usize, rest: &str) -> Result<(Vec<&str>, String), FactError> {
    let err = |message: &str| FactError {
        line,
        message: message.to_string(),
    };
    let (head, tail) = rest
        .split_once("source")
        .ok_or_else(|| err("missing `source \"...\"`"))?;
    let quoted = tail.trim();
    let text = quoted
        .strip_prefix('"')
        .and_then(|t| t.strip_suffix('"'))
        .ok_or_else(|| err("source text must be enclosed in double quotes"))?;
    Ok((head.split_whitespace().collect(), text.to_string()))
}

fn number(line: usize, field: &str) -> Result<u64, FactError> {
    field.parse().map_err(|_| FactError {
        line,
        message: format!("expected a nonnegative integer, got `{field}`"),
    })
}

impl FromStr for FactTable {
    type Err = FactError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut table = FactTable::empty();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (fields, source) = split_source(line, trimmed)?;
            match fields.as_slice() {
                ["range", lo, hi, "cap", cap] => {
                    let (lo, hi, cap) = (number(line, lo)?, number(line, hi)?, number(line, cap)?);
                    if lo > hi {
                        return Err(FactError {
                            line,
                            message: format!("empty range {lo}..{hi}"),
                        });
                    }
                    table.ranges.push(NonexistenceFact { lo, hi, cap, source });
                }
                ["excluded-a", a] => table.excluded.push(ExcludedDesign {
                    a: number(line, a)?,
                    source,
                }),
                _ => {
                    return Err(FactError {
                        line,
                        message: "expected `range <lo> <hi> cap <value>` or `excluded-a <a>`".into(),
                    })
                }
            }
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_table() {
        let t = FactTable::shipped();
        assert_eq!(t.ranges.len(), 3);
        assert_eq!(t.covering(50).next().unwrap().cap, 1127);
        assert_eq!(t.covering(100).next().unwrap().cap, 3159);
        assert_eq!(t.covering(200).next().unwrap().forbidden_size(), 14028);
        assert!(t.covering(76).next().is_none());
        assert!(t.excluded_design(21).is_some());
        assert!(t.excluded_design(5).is_none());
    }

    #[test]
    fn malformed_lines() {
        let bad = ["range 5 3 cap 1 source \"x\"", "range 1 2 cap 3", "range 1 2 cap x source \"y\"", "cap 1 source \"z\""];
        for text in bad {
            assert_eq!(text.parse::<FactTable>().unwrap_err().line, 1, "{text}");
        }
    }
}
