//! Flat, line-oriented reports shared by the command line and the C API.

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "info",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub section: String,
    pub item: String,
    pub value: String,
    pub status: Status,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, section: &str, item: impl Into<String>, value: impl Into<String>, status: Status) {
        self.entries.push(Entry {
            section: section.to_string(),
            item: item.into(),
            value: value.into(),
            status,
        });
    }

    pub fn info(&mut self, section: &str, item: impl Into<String>, value: impl Into<String>) {
        self.push(section, item, value, Status::Info);
    }

    pub fn check(&mut self, section: &str, item: impl Into<String>, value: impl Into<String>, ok: bool) {
        self.push(section, item, value, Status::from_bool(ok));
    }

    /// No entry failed.
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut section = "";
        for e in &self.entries {
            if e.section != section {
                section = &e.section;
                writeln!(out, "== {section}").unwrap();
            }
            if e.value.is_empty() {
                writeln!(out, "[{}] {}", e.status.tag(), e.item).unwrap();
            } else {
                writeln!(out, "[{}] {}: {}", e.status.tag(), e.item, e.value).unwrap();
            }
        }
        writeln!(out, "result: {}", if self.pass() { "PASS" } else { "FAIL" }).unwrap();
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("section,item,value,status\n");
        for e in &self.entries {
            writeln!(
                out,
                "{},{},{},{}",
                csv_field(&e.section),
                csv_field(&e.item),
                csv_field(&e.value),
                e.status.tag()
            )
            .unwrap();
        }
        out
    }
}

/// Quotes a field, doubling embedded quotes.
pub fn csv_field(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let mut r = Report::new();
        r.info("spectrum", "values", "{1/3, -1/3}");
        r.check("zonal", "degree 2", "", true);
        assert!(r.pass());
        let text = r.to_text();
        assert!(text.contains("== spectrum\n[info] values: {1/3, -1/3}\n"));
        assert!(text.ends_with("result: PASS\n"));
        r.check("zonal", "degree 3", "say \"no\"", false);
        assert!(!r.pass());
        assert!(r.to_csv().contains("\"zonal\",\"degree 3\",\"say \"\"no\"\"\",FAIL"));
    }
}
