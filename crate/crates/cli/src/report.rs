use std::fmt::Write as _;
use std::time::Instant;

use icecount::exactalg::{Poly, RatFunc};
use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

/// A JSON number carrying an exact big integer.
pub fn big(n: &BigUint) -> Value {
    Value::Number(n.to_string().parse().expect("integer is a JSON number"))
}

/// Signed counterpart of [`big`].
pub fn big_int(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse().expect("integer is a JSON number"))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub kind: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

/// Everything a command produced, in the order it produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Vec<NamedValue>,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(skip)]
    started: Option<Instant>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: Map::new(),
            results: Vec::new(),
            checks: Vec::new(),
            warnings: Vec::new(),
            elapsed_ms: None,
            started: Some(Instant::now()),
        }
    }

    pub fn input(&mut self, name: &str, value: impl Into<Value>) {
        self.inputs.insert(name.to_string(), value.into());
    }

    fn push(&mut self, name: &str, kind: &str, value: Value) {
        self.results.push(NamedValue {
            name: name.to_string(),
            kind: kind.to_string(),
            value,
        });
    }

    pub fn count(&mut self, name: &str, n: &BigUint) {
        self.push(name, "count", big(n));
    }

    pub fn text(&mut self, name: &str, s: impl Into<String>) {
        self.push(name, "text", Value::String(s.into()));
    }

    pub fn poly(&mut self, name: &str, p: &Poly, var: &str) {
        let value = json!({ "text": p.render(var), "coeffs": p.to_json() });
        self.push(name, "poly", value);
    }

    pub fn ratfunc(&mut self, name: &str, r: &RatFunc, var: &str) {
        let mut value = r.to_json();
        value["text"] = Value::String(r.render(var));
        self.push(name, "ratfunc", value);
    }

    pub fn value(&mut self, name: &str, kind: &str, value: Value) {
        self.push(name, kind, value);
    }

    /// Records a check; `pass` is exact equality of the two values.
    pub fn check(&mut self, name: impl Into<String>, expected: Value, actual: Value) -> bool {
        let pass = expected == actual;
        self.checks.push(Check {
            name: name.into(),
            expected,
            actual,
            pass,
        });
        pass
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    pub fn finish(&mut self, with_meta: bool) {
        self.elapsed_ms = if with_meta {
            self.started.map(|t| t.elapsed().as_millis() as u64)
        } else {
            None
        };
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            if r.kind == "state" {
                continue;
            }
            let shown = match &r.value {
                Value::String(s) => s.clone(),
                Value::Object(o) if o.contains_key("text") => {
                    o["text"].as_str().unwrap_or_default().to_string()
                }
                other => other.to_string(),
            };
            if shown.contains('\n') {
                let _ = writeln!(out, "{}:\n{}", r.name, shown.trim_end());
            } else {
                let _ = writeln!(out, "{} = {}", r.name, shown);
            }
        }
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            if c.pass {
                let _ = writeln!(out, "{mark}  {}: {}", c.name, c.actual);
            } else {
                let _ = writeln!(
                    out,
                    "{mark}  {}: expected {}, got {}",
                    c.name, c.expected, c.actual
                );
            }
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        if !self.checks.is_empty() {
            let _ = writeln!(
                out,
                "{} checks, {} failed",
                self.checks.len(),
                self.failures()
            );
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed {ms} ms");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_compare_exactly() {
        let mut r = RunReport::new("t");
        assert!(r.check("a", json!(3), json!(3)));
        assert!(!r.check("b", json!([1, 2]), json!([1, 3])));
        assert_eq!(r.failures(), 1);
        assert!(!r.all_pass());
    }

    #[test]
    fn json_round_trip_without_meta() {
        let mut r = RunReport::new("count");
        r.input("partition", "2,2,0");
        r.count(
            "A_lambda",
            &"123456789012345678901234567890".parse().unwrap(),
        );
        r.check("x", json!(1), json!(1));
        r.warn("careful");
        r.finish(false);
        let s = r.to_json_string();
        assert!(s.contains("123456789012345678901234567890"));
        assert!(!s.contains("elapsed_ms"));
        let back: RunReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_json_string(), s);
    }

    #[test]
    fn meta_adds_elapsed() {
        let mut r = RunReport::new("t");
        r.finish(true);
        assert!(r.to_json_string().contains("elapsed_ms"));
    }
}
