use std::fmt::Write;
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

/// Output of one command: text lines for humans plus the same data as JSON.
#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub results: Vec<Value>,
    pub timings: Vec<(String, Duration)>,
    pub passed: bool,
    lines: Vec<Line>,
}

#[derive(Debug)]
enum Line {
    Text(String),
    Timing(String, Duration),
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema_version: u32,
    command: &'a str,
    params: &'a Map<String, Value>,
    results: &'a [Value],
    timings: Map<String, Value>,
    passed: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), params: Map::new(), results: Vec::new(), timings: Vec::new(), passed: true, lines: Vec::new() }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(Line::Text(s.into()));
    }

    pub fn result(&mut self, v: Value) {
        self.results.push(v);
    }

    pub fn timing(&mut self, label: &str, d: Duration) {
        self.timings.push((label.to_string(), d));
        self.lines.push(Line::Timing(label.to_string(), d));
    }

    pub fn fail(&mut self) {
        self.passed = false;
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut out = String::new();
        for l in &self.lines {
            match l {
                Line::Text(s) => writeln!(out, "{s}").unwrap(),
                Line::Timing(label, d) if timings => writeln!(out, "  time {label}: {:.3}s", d.as_secs_f64()).unwrap(),
                Line::Timing(..) => {}
            }
        }
        writeln!(out, "{}", if self.passed { "PASS" } else { "FAIL" }).unwrap();
        out
    }

    pub fn to_json(&self, timings: bool) -> String {
        let timings = if timings {
            self.timings.iter().map(|(k, d)| (k.clone(), json!(d.as_secs_f64()))).collect()
        } else {
            Map::new()
        };
        let r = JsonReport {
            schema_version: SCHEMA_VERSION,
            command: &self.command,
            params: &self.params,
            results: &self.results,
            timings,
            passed: self.passed,
        };
        serde_json::to_string_pretty(&r).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn timings_can_be_dropped() {
        let mut r = Report::new("x");
        r.line("hello");
        r.timing("step", Duration::from_millis(1500));
        assert_eq!(r.to_text(false), "hello\nPASS\n");
        assert!(r.to_text(true).contains("time step: 1.500s"));
        let v: Value = serde_json::from_str(&r.to_json(false)).unwrap();
        assert_eq!(v["timings"], json!({}));
        assert_eq!(v["schema_version"], json!(1));
    }
}
