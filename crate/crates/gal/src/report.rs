//! JSON report document with a stable schema:
//! `{meta{version,tolerances,seed}, graphs[], checks[], series[], witnesses[]}`.
//!
//! Rationals are emitted as `{"num","den"}` strings so nothing is lost;
//! floats are rounded to 9 significant digits at construction time, which
//! keeps reruns byte-identical.

use serde::Serialize;

use crate::rational::{self, Rational};

/// Rounds to `digits` significant digits.
pub fn round_sig(x: f64, digits: i32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(digits - 1 - magnitude);
    (x * factor).round() / factor
}

#[derive(Serialize, Clone, Copy, Debug)]
pub struct Tolerances {
    pub tol_gap: f64,
    pub tol_feas: f64,
    pub value_match: f64,
    pub equality: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            tol_gap: 1e-7,
            tol_feas: 1e-8,
            value_match: 1e-5,
            equality: 1e-4,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct Meta {
    pub version: String,
    pub tolerances: Tolerances,
    pub seed: u64,
}

impl Meta {
    pub fn new(tolerances: Tolerances, seed: u64) -> Self {
        Meta {
            version: env!("CARGO_PKG_VERSION").to_string(),
            tolerances,
            seed,
        }
    }
}

/// A reported scalar: integer, rounded float, or exact rational.
#[derive(Serialize, Clone, Debug)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Float(f64),
    Rational { num: String, den: String },
}

impl Value {
    pub fn float(x: f64) -> Value {
        Value::Float(round_sig(x, 9))
    }

    pub fn int(x: i64) -> Value {
        Value::Int(x)
    }

    pub fn rational(r: &Rational) -> Value {
        Value::Rational {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Int(x) => *x as f64,
            Value::Float(x) => *x,
            Value::Rational { num, den } => {
                let n: f64 = num.parse().unwrap_or(f64::NAN);
                let d: f64 = den.parse().unwrap_or(f64::NAN);
                n / d
            }
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct Check {
    pub name: String,
    pub paper_ref: String,
    pub lhs: Value,
    pub rhs: Value,
    pub residual: f64,
    /// true/false for asserted checks; null for informational or skipped
    /// entries.
    pub pass: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct GraphSummary {
    pub id: String,
    pub n: usize,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta_minus: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta_plus: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_star: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<u64>,
}

#[derive(Serialize, Clone, Debug)]
pub struct SeriesLevel {
    pub level: u64,
    pub multiplicities: Vec<u64>,
    pub alpha: Value,
    pub partner_value: f64,
    pub ratio: f64,
    pub lower_bound: f64,
}

#[derive(Serialize, Clone, Debug)]
pub struct Series {
    pub graph: String,
    pub variant: String,
    pub weights: Vec<f64>,
    pub base_value: f64,
    pub base_gap: f64,
    pub unit_value: f64,
    pub alpha_equality_residual: f64,
    pub unit_residual: f64,
    pub levels: Vec<SeriesLevel>,
}

#[derive(Serialize, Clone, Debug)]
pub struct Witness {
    pub graph: String,
    pub packing: Vec<Value>,
    pub denominator: String,
    pub multiplicities: Vec<u64>,
    pub blowup_vertices: u64,
    pub alpha_product: Value,
    pub alpha_blowup: Value,
    pub alpha_star: Value,
    pub residual: Value,
}

#[derive(Serialize, Clone, Debug)]
pub struct Document {
    pub meta: Meta,
    pub graphs: Vec<GraphSummary>,
    pub checks: Vec<Check>,
    pub series: Vec<Series>,
    pub witnesses: Vec<Witness>,
}

impl Document {
    pub fn new(meta: Meta) -> Self {
        Document {
            meta,
            graphs: vec![],
            checks: vec![],
            series: vec![],
            witnesses: vec![],
        }
    }

    pub fn all_asserted_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass != Some(false))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

pub fn rational_value(r: &Rational) -> Value {
    if rational::is_integer(r) {
        if let Some(v) = rational::to_u64(r) {
            if v <= i64::MAX as u64 {
                return Value::Int(v as i64);
            }
        }
    }
    Value::rational(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn rounding() {
        assert_eq!(round_sig(5f64.sqrt(), 9), 2.23606798);
        assert_eq!(round_sig(0.0, 9), 0.0);
        assert_eq!(round_sig(-123456789.123, 9), -123456789.0);
        assert_eq!(round_sig(1.23e-12, 3), 1.23e-12);
    }

    #[test]
    fn values_serialize() {
        let v = serde_json::to_string(&Value::rational(&rat(5, 2))).unwrap();
        assert_eq!(v, r#"{"num":"5","den":"2"}"#);
        let v = serde_json::to_string(&Value::float(1.0 / 3.0)).unwrap();
        assert_eq!(v, "0.333333333");
        assert_eq!(serde_json::to_string(&Value::int(7)).unwrap(), "7");
    }

    #[test]
    fn document_reruns_identical() {
        let meta = Meta::new(Tolerances::default(), 42);
        let mut doc = Document::new(meta.clone());
        doc.checks.push(Check {
            name: "demo".into(),
            paper_ref: "sandwich".into(),
            lhs: Value::float(2.0_f64.sqrt()),
            rhs: Value::int(2),
            residual: 0.1,
            pass: Some(true),
            note: None,
        });
        let mut doc2 = Document::new(meta);
        doc2.checks = doc.checks.clone();
        assert_eq!(doc.to_json(), doc2.to_json());
        assert!(doc.all_asserted_pass());
    }
}
