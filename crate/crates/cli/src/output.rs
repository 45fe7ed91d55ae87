//! Output records and their two renderings.

use std::fmt::Write as _;

use deforma_core::gbasis::QuotientDimension;
use deforma_core::singularity::T1Verdict;
use deforma_core::{Monomial, Polynomial, Rational, Ring};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Human,
}

/// An ordered set of fields, printed either as one compact JSON object or as
/// `key: value` lines.
#[derive(Debug, Default)]
pub struct Record(Map<String, Value>);

impl Record {
    pub fn new() -> Self {
        Record(Map::new())
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.0.insert(key.to_string(), value.into());
        self
    }

    pub fn into_value(self) -> Value {
        Value::Object(self.0)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string(&self.0).expect("records serialize");
                s.push('\n');
                s
            }
            Format::Human => {
                let mut s = String::new();
                for (k, v) in &self.0 {
                    let _ = writeln!(s, "{}: {}", k, human(v));
                }
                s
            }
        }
    }
}

fn human(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".to_string(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(human).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(m) => {
            let parts: Vec<String> = m.iter().map(|(k, v)| format!("{}={}", k, human(v))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

/// Always `p/q`, also for integers.
pub fn rational(r: &Rational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn polynomial(p: &Polynomial) -> Value {
    Value::String(p.to_string())
}

pub fn monomial(ring: &std::sync::Arc<Ring>, m: &Monomial) -> Value {
    let p = Polynomial::term(ring, m.clone(), Rational::from_integer(1.into()));
    Value::String(p.to_string())
}

pub fn verdict(rec: &mut Record, v: &T1Verdict) {
    match *v {
        T1Verdict::Smooth => {
            rec.put("verdict", "smooth").put("tau", 0);
        }
        T1Verdict::IsolatedSingular { tau } => {
            rec.put("verdict", "isolated").put("tau", tau);
        }
        T1Verdict::NonIsolated { sing_dim } => {
            rec.put("verdict", "non-isolated").put("tau", "infinite").put("sing_dim", sing_dim);
        }
    }
}

pub fn dimension(rec: &mut Record, key: &str, d: QuotientDimension) {
    match d {
        QuotientDimension::Finite(n) => {
            rec.put(key, n);
        }
        QuotientDimension::Infinite(k) => {
            rec.put(key, "infinite").put("sing_dim", k);
        }
    }
}
