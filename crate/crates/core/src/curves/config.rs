//! JSON curve configuration.
//!
//! ```json
//! {"curves": [{"name": "J(2)", "param": "l", "family": "so_even",
//!              "indices": {"m": 2},
//!              "c": {"num": [[0, 1], [3, 2]], "den": [[1, 1]]},
//!              "lambda": {"num": [...], "den": [...]},
//!              "excluded": [{"value": "-1/2", "reason": "pole_of_lambda"}]}]}
//! ```
//!
//! Coefficients are `[numerator, denominator]` integer pairs in ascending
//! degree. `family` is optional; `"D"` with index `n` denotes the built-in
//! coset family, any other string is an external tag. Big integers are kept
//! exact.

use std::str::FromStr;

use log::warn;
use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use super::{merge_exclusions, pole_data, Exclusion, ExclusionReason, Family, TruncationCurve};
use crate::exactalg::{format_scalar, parse_scalar, ExactScalar, RatFunc, UPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {msg}")]
pub struct ConfigError {
    pub path: String,
    pub msg: String,
}

fn err(path: &str, msg: impl Into<String>) -> ConfigError {
    ConfigError {
        path: path.to_string(),
        msg: msg.into(),
    }
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, ConfigError> {
    obj.get(key)
        .ok_or_else(|| err(&format!("{path}.{key}"), "missing field"))
}

fn get_str<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a str, ConfigError> {
    get(obj, key, path)?
        .as_str()
        .ok_or_else(|| err(&format!("{path}.{key}"), "expected string"))
}

fn as_bigint(v: &Value, path: &str) -> Result<BigInt, ConfigError> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| err(path, format!("expected integer, got {n}"))),
        _ => Err(err(path, "expected integer")),
    }
}

fn parse_upoly(v: &Value, path: &str) -> Result<UPoly, ConfigError> {
    let arr = v
        .as_array()
        .ok_or_else(|| err(path, "expected coefficient list"))?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for (i, pair) in arr.iter().enumerate() {
        let p = format!("{path}[{i}]");
        let pr = pair
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| err(&p, "expected [numerator, denominator]"))?;
        let num = as_bigint(&pr[0], &format!("{p}[0]"))?;
        let den = as_bigint(&pr[1], &format!("{p}[1]"))?;
        if den == BigInt::from(0) {
            return Err(err(&format!("{p}[1]"), "zero denominator"));
        }
        coeffs.push(ExactScalar::new(num, den));
    }
    Ok(UPoly::from_coeffs(coeffs))
}

fn parse_ratfunc(v: &Value, var: &str, path: &str) -> Result<RatFunc, ConfigError> {
    let obj = v.as_object().ok_or_else(|| err(path, "expected object"))?;
    let num = parse_upoly(get(obj, "num", path)?, &format!("{path}.num"))?;
    let den = parse_upoly(get(obj, "den", path)?, &format!("{path}.den"))?;
    if den.is_zero() {
        return Err(err(&format!("{path}.den"), "zero denominator polynomial"));
    }
    if !num.is_zero() && !num.gcd(&den).is_constant() {
        warn!("{path}: numerator and denominator share a factor; normalizing");
    }
    RatFunc::new(var, num, den).map_err(|e| err(path, e.to_string()))
}

fn parse_curve(v: &Value, path: &str) -> Result<TruncationCurve, ConfigError> {
    let obj = v.as_object().ok_or_else(|| err(path, "expected object"))?;
    let name = get_str(obj, "name", path)?.to_string();
    let param = get_str(obj, "param", path)?.to_string();
    if param.is_empty() || !param.chars().all(|c| c.is_alphanumeric() || c == '_') {
        return Err(err(&format!("{path}.param"), "expected an identifier"));
    }
    let mut indices = Vec::new();
    if let Some(iv) = obj.get("indices") {
        let io = iv
            .as_object()
            .ok_or_else(|| err(&format!("{path}.indices"), "expected object"))?;
        for (k, v) in io {
            let p = format!("{path}.indices.{k}");
            let n = v.as_i64().ok_or_else(|| err(&p, "expected integer"))?;
            indices.push((k.clone(), n));
        }
    }
    indices.sort();
    let family = match obj.get("family") {
        None => Family::External {
            tag: "external".into(),
        },
        Some(Value::String(s)) if s == "D" => {
            let n = indices
                .iter()
                .find(|(k, _)| k == "n")
                .map(|(_, v)| *v)
                .filter(|&n| n >= 1)
                .ok_or_else(|| err(&format!("{path}.indices.n"), "family D needs n >= 1"))?;
            Family::D(n as u32)
        }
        Some(Value::String(s)) => Family::External { tag: s.clone() },
        Some(_) => return Err(err(&format!("{path}.family"), "expected string")),
    };
    let c = parse_ratfunc(get(obj, "c", path)?, &param, &format!("{path}.c"))?;
    let lambda = parse_ratfunc(get(obj, "lambda", path)?, &param, &format!("{path}.lambda"))?;
    let ex_path = format!("{path}.excluded");
    let ex_arr = get(obj, "excluded", path)?
        .as_array()
        .ok_or_else(|| err(&ex_path, "expected list"))?;
    let mut declared = Vec::new();
    for (i, e) in ex_arr.iter().enumerate() {
        let p = format!("{ex_path}[{i}]");
        let eo = e.as_object().ok_or_else(|| err(&p, "expected object"))?;
        let value = parse_scalar(get_str(eo, "value", &p)?)
            .map_err(|e| err(&format!("{p}.value"), e.to_string()))?;
        let rs = get_str(eo, "reason", &p)?;
        let reason = ExclusionReason::parse(rs)
            .ok_or_else(|| err(&format!("{p}.reason"), format!("unknown reason {rs:?}")))?;
        let f = match reason {
            ExclusionReason::Critical => None,
            ExclusionReason::PoleOfC => Some(&c),
            ExclusionReason::PoleOfLambda => Some(&lambda),
        };
        if let Some(f) = f {
            if f.eval(&value).is_some() {
                return Err(err(
                    &format!("{p}.value"),
                    format!("{} is not a pole ({rs})", format_scalar(&value)),
                ));
            }
        }
        declared.push(Exclusion { value, reason });
    }
    let (poles, irr) = pole_data(&c, &lambda);
    for pole in &poles {
        if !declared.iter().any(|d| d.value == pole.value) {
            return Err(err(
                &ex_path,
                format!(
                    "missing rational pole {} ({})",
                    format_scalar(&pole.value),
                    pole.reason
                ),
            ));
        }
    }
    Ok(TruncationCurve {
        name,
        family,
        indices,
        param,
        c,
        lambda,
        excluded: merge_exclusions(declared),
        irrational_pole_factor: irr,
    })
}

/// Parses and validates a curve configuration document.
pub fn load_curves(text: &str) -> Result<Vec<TruncationCurve>, ConfigError> {
    let v: Value = serde_json::from_str(text).map_err(|e| {
        err(
            &format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let curves = v
        .as_object()
        .and_then(|o| o.get("curves"))
        .ok_or_else(|| err("curves", "missing field"))?
        .as_array()
        .ok_or_else(|| err("curves", "expected list"))?;
    let mut out: Vec<TruncationCurve> = Vec::with_capacity(curves.len());
    for (i, c) in curves.iter().enumerate() {
        let path = format!("curves[{i}]");
        let curve = parse_curve(c, &path)?;
        if out.iter().any(|o| o.name == curve.name) {
            return Err(err(
                &format!("{path}.name"),
                format!("duplicate name {:?}", curve.name),
            ));
        }
        out.push(curve);
    }
    Ok(out)
}

fn int_value(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

fn upoly_value(p: &UPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::Array(vec![int_value(c.numer()), int_value(c.denom())]))
            .collect(),
    )
}

fn ratfunc_value(f: &RatFunc) -> Value {
    let mut m = Map::new();
    m.insert("num".into(), upoly_value(f.num()));
    m.insert("den".into(), upoly_value(f.den()));
    Value::Object(m)
}

/// Serializes curves to the configuration format. Loading the output
/// reproduces the curves exactly.
pub fn serialize_curves(curves: &[TruncationCurve]) -> String {
    let list: Vec<Value> = curves
        .iter()
        .map(|c| {
            let mut m = Map::new();
            m.insert("name".into(), Value::String(c.name.clone()));
            m.insert("param".into(), Value::String(c.param.clone()));
            match &c.family {
                Family::D(_) => {
                    m.insert("family".into(), Value::String("D".into()));
                }
                Family::External { tag } => {
                    m.insert("family".into(), Value::String(tag.clone()));
                }
            }
            let mut idx = Map::new();
            for (k, v) in &c.indices {
                idx.insert(k.clone(), Value::from(*v));
            }
            m.insert("indices".into(), Value::Object(idx));
            m.insert("c".into(), ratfunc_value(&c.c));
            m.insert("lambda".into(), ratfunc_value(&c.lambda));
            let ex = c
                .excluded
                .iter()
                .map(|e| {
                    let mut em = Map::new();
                    em.insert("value".into(), Value::String(format_scalar(&e.value)));
                    em.insert("reason".into(), Value::String(e.reason.as_str().into()));
                    Value::Object(em)
                })
                .collect();
            m.insert("excluded".into(), Value::Array(ex));
            Value::Object(m)
        })
        .collect();
    let mut root = Map::new();
    root.insert("curves".into(), Value::Array(list));
    let mut s = serde_json::to_string_pretty(&Value::Object(root)).expect("serializable");
    s.push('\n');
    s
}
