use std::fmt::Write as _;

use crate::error::{domain, Result};

pub const REPORT_HEADER: &str = "euclid-report v1";

/// Output of one command: parameters, per-item rows, summary values and
/// any violated properties. All integers are decimal strings and
/// rationals are `num/den`.
///
/// Keys keep insertion order, which is fixed per command.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub command: String,
    /// Canonical argument list that reproduces this report.
    pub invocation: Vec<String>,
    pub parameters: Vec<(String, String)>,
    pub rows: Vec<Vec<(String, String)>>,
    pub summary: Vec<(String, String)>,
    pub violations: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), ..Default::default() }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.push((key.to_string(), value.to_string()));
        self
    }

    pub fn summary(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.summary.push((key.to_string(), value.to_string()));
        self
    }

    pub fn row(&mut self, fields: Vec<(&str, String)>) -> &mut Self {
        self.rows.push(fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect());
        self
    }

    pub fn violation(&mut self, message: impl Into<String>) -> &mut Self {
        self.violations.push(message.into());
        self
    }

    pub fn summary_value(&self, key: &str) -> Option<&str> {
        self.summary.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Line-oriented machine-readable form.
    ///
    /// ```text
    /// euclid-report v1
    /// command=gcd
    /// invocation=gcd 240 46 --method remainder
    /// param.a=240
    /// row larger=240 smaller=46 quotient=5 remainder=10
    /// summary.g=2
    /// violation=...
    /// violations=0
    /// ```
    pub fn render_report(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{REPORT_HEADER}").unwrap();
        writeln!(out, "command={}", self.command).unwrap();
        writeln!(out, "invocation={}", self.invocation.join(" ")).unwrap();
        for (k, v) in &self.parameters {
            writeln!(out, "param.{k}={v}").unwrap();
        }
        for row in &self.rows {
            out.push_str("row");
            for (k, v) in row {
                write!(out, " {k}={v}").unwrap();
            }
            out.push('\n');
        }
        for (k, v) in &self.summary {
            writeln!(out, "summary.{k}={v}").unwrap();
        }
        for v in &self.violations {
            writeln!(out, "violation={v}").unwrap();
        }
        writeln!(out, "violations={}", self.violations.len()).unwrap();
        out
    }

    /// Human-readable form carrying the same values.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "{} ({})", self.command, params.join(", ")).unwrap();
        for (i, row) in self.rows.iter().enumerate() {
            let fields: Vec<String> = row.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(out, "  {:>4}. {}", i + 1, fields.join("  ")).unwrap();
        }
        for (k, v) in &self.summary {
            writeln!(out, "{k}: {v}").unwrap();
        }
        for v in &self.violations {
            writeln!(out, "VIOLATION: {v}").unwrap();
        }
        if self.violations.is_empty() {
            writeln!(out, "ok").unwrap();
        }
        out
    }

    /// Parses the output of [`Report::render_report`].
    pub fn parse(text: &str) -> Result<Report> {
        let bad = |line: &str| domain(format!("malformed report line: {line:?}"));
        let mut lines = text.lines();
        if lines.next() != Some(REPORT_HEADER) {
            return Err(domain("missing report header"));
        }
        let mut report = Report::default();
        let mut count = None;
        for line in lines {
            if let Some(rest) = line.strip_prefix("row") {
                let fields = rest
                    .split_whitespace()
                    .map(|f| f.split_once('=').map(|(k, v)| (k.to_string(), v.to_string())).ok_or_else(|| bad(line)))
                    .collect::<Result<Vec<_>>>()?;
                report.rows.push(fields);
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| bad(line))?;
            match key {
                "command" => report.command = value.to_string(),
                "invocation" => report.invocation = value.split(' ').filter(|s| !s.is_empty()).map(String::from).collect(),
                "violation" => report.violations.push(value.to_string()),
                "violations" => count = Some(value.parse::<usize>().map_err(|_| bad(line))?),
                _ => {
                    if let Some(k) = key.strip_prefix("param.") {
                        report.parameters.push((k.to_string(), value.to_string()));
                    } else if let Some(k) = key.strip_prefix("summary.") {
                        report.summary.push((k.to_string(), value.to_string()));
                    } else {
                        return Err(bad(line));
                    }
                }
            }
        }
        if count != Some(report.violations.len()) {
            return Err(domain("violation count does not match"));
        }
        Ok(report)
    }
}

/// Reals at 15 significant digits in scientific notation.
pub fn format_real(x: f64) -> String {
    format!("{x:.14e}")
}

pub fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_inverts_render() {
        let mut r = Report::new("gcd");
        r.invocation = vec!["gcd".into(), "240".into(), "46".into()];
        r.param("a", 240).param("b", 46);
        r.row(vec![("larger", "240".into()), ("smaller", "46".into())]);
        r.summary("g", 2).summary("value", "1/2");
        r.violation("something off");
        assert_eq!(Report::parse(&r.render_report()).unwrap(), r);
    }

    #[test]
    fn reals() {
        assert_eq!(format_real(29_008.512_345_678_9), "2.90085123456789e4");
        assert_eq!(format_real(1.0), "1.00000000000000e0");
    }
}
