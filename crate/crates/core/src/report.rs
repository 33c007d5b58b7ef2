//! Structured records of metric values and inequality margins.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// Metric values, inequality margins and pass flags.
///
/// Margins follow the convention `bound − value`, so a nonnegative margin
/// means the inequality held. Keys are kept sorted so that both text and
/// JSON output are byte-stable.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct MetricReport {
    pub metrics: BTreeMap<String, f64>,
    pub margins: BTreeMap<String, f64>,
    pub pass: BTreeMap<String, bool>,
    pub seed: Option<u64>,
    pub budget: Option<u64>,
    pub count: Option<u64>,
}

impl MetricReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn metric(&mut self, name: &str, value: f64) -> &mut Self {
        self.metrics.insert(name.to_string(), value);
        self
    }

    /// Records a margin that passes when nonnegative.
    pub fn margin(&mut self, name: &str, value: f64) -> &mut Self {
        self.margin_with_slack(name, value, 0.0)
    }

    /// Records a margin that passes when `value ≥ −slack`.
    pub fn margin_with_slack(&mut self, name: &str, value: f64, slack: f64) -> &mut Self {
        self.margins.insert(name.to_string(), value);
        self.pass.insert(name.to_string(), value >= -slack);
        self
    }

    /// Records `tol − residual` for a residual that must stay below `tol`.
    pub fn residual(&mut self, name: &str, residual: f64, tol: f64) -> &mut Self {
        self.margin(name, tol - residual)
    }

    pub fn all_pass(&self) -> bool {
        self.pass.values().all(|&p| p)
    }

    pub fn min_margin(&self) -> f64 {
        self.margins.values().copied().fold(f64::INFINITY, f64::min)
    }

    /// `key: value` lines, numbers with 12 significant digits.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metrics {
            let _ = writeln!(out, "{k}: {}", fmt_sig(*v));
        }
        for (k, v) in &self.margins {
            let verdict = if self.pass[k] { "pass" } else { "FAIL" };
            let _ = writeln!(out, "margin.{k}: {} ({verdict})", fmt_sig(*v));
        }
        if let Some(s) = self.seed {
            let _ = writeln!(out, "seed: {s}");
        }
        if let Some(b) = self.budget {
            let _ = writeln!(out, "budget: {b}");
        }
        if let Some(c) = self.count {
            let _ = writeln!(out, "count: {c}");
        }
        out
    }

    /// JSON document with fields `metrics`, `margins`, `pass`, `seed`,
    /// `budget` and `count`; values rounded to 12 significant digits.
    pub fn to_json(&self) -> String {
        let rounded = Self {
            metrics: self.metrics.iter().map(|(k, v)| (k.clone(), round_sig(*v))).collect(),
            margins: self.margins.iter().map(|(k, v)| (k.clone(), round_sig(*v))).collect(),
            ..self.clone()
        };
        serde_json::to_string_pretty(&rounded).expect("report serializes")
    }
}

/// Formats with 12 significant digits.
pub fn fmt_sig(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_string();
    }
    // Exponent after rounding, so 0.9999999999999 counts as 1.
    let sci = format!("{x:.11e}");
    let exp: i32 = sci[sci.find('e').map_or(0, |i| i + 1)..].parse().unwrap_or(0);
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

/// Rounds to 12 significant digits; non-finite values map to `NaN`-free
/// sentinels that JSON can carry (`±f64::MAX`).
pub fn round_sig(x: f64) -> f64 {
    if x.is_nan() {
        return 0.0;
    }
    if x.is_infinite() {
        return f64::MAX.copysign(x);
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_sig(3f64.ln()), "1.09861228867");
        assert_eq!(fmt_sig(-0.5), "-0.500000000000");
        assert_eq!(fmt_sig(1234.5), "1234.50000000");
        assert_eq!(fmt_sig(1e-9), "1.00000000000e-9");
        assert_eq!(fmt_sig(1.0 - 1e-15), "1.00000000000");
        assert_eq!(fmt_sig(99.99999999999999), "100.000000000");
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(round_sig(std::f64::consts::PI).to_string(), "3.14159265359");
    }

    #[test]
    fn margins_and_json() {
        let mut r = MetricReport::new();
        r.metric("h", 1.0).margin("ok", 0.5).margin("bad", -0.1).margin_with_slack("tiny", -1e-13, 1e-12);
        r.seed = Some(7);
        assert!(!r.all_pass());
        assert!(r.pass["tiny"]);
        assert!((r.min_margin() + 0.1).abs() < 1e-15);
        let j: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in ["metrics", "margins", "pass", "seed", "budget"] {
            assert!(j.get(key).is_some(), "missing {key}");
        }
        assert!(r.to_text().contains("margin.bad: -0.100000000000 (FAIL)"));
    }
}
