//! Canonical JSON: object keys sorted, two-space indentation, floats with
//! 17 significant digits. Non-finite floats, which JSON cannot carry, are
//! written as the strings `"inf"`, `"-inf"` and `"nan"` by [`float`].

use serde_json::{Map, Number, Value};

/// A float as a JSON value, keeping non-finite values as strings.
pub fn float(x: f64) -> Value {
    if x.is_nan() {
        Value::String("nan".into())
    } else if x.is_infinite() {
        Value::String(if x > 0.0 { "inf" } else { "-inf" }.into())
    } else {
        Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
    }
}

fn number(n: &Number) -> String {
    if let Some(u) = n.as_u64() {
        u.to_string()
    } else if let Some(i) = n.as_i64() {
        i.to_string()
    } else {
        format!("{:.16e}", n.as_f64().unwrap_or(f64::NAN))
    }
}

fn write(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize, out: &mut String| out.extend(std::iter::repeat_n(' ', n));
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => out.push_str(&number(n)),
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(xs) if xs.is_empty() => out.push_str("[]"),
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                pad(indent + 2, out);
                write(x, indent + 2, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            pad(indent, out);
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            let mut keys: Vec<&String> = m.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, k) in keys.iter().enumerate() {
                pad(indent + 2, out);
                out.push_str(&Value::String((*k).clone()).to_string());
                out.push_str(": ");
                write(&m[*k], indent + 2, out);
                out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
            }
            pad(indent, out);
            out.push('}');
        }
    }
}

/// Serializes `v` canonically, with a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut out = String::new();
    write(v, 0, &mut out);
    out.push('\n');
    out
}

/// A JSON object from `(key, value)` pairs.
pub fn object<I: IntoIterator<Item = (&'static str, Value)>>(pairs: I) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn keys_sorted_and_floats_padded() {
        let v = json!({"b": 1, "a": [0.1, -3], "c": {"z": true, "y": null}, "d": "x\"y"});
        let s = to_canonical_string(&v);
        assert_eq!(
            s,
            "{\n  \"a\": [\n    1.0000000000000001e-1,\n    -3\n  ],\n  \"b\": 1,\n  \"c\": {\n    \"y\": null,\n    \"z\": true\n  },\n  \"d\": \"x\\\"y\"\n}\n"
        );
    }

    #[test]
    fn floats_round_trip() {
        for x in [0.1, 1e-300, 123456.789, -2.5e17, f64::MIN_POSITIVE, 1.0 / 3.0] {
            let s = to_canonical_string(&float(x));
            assert_eq!(s.trim().parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn non_finite_floats_become_strings() {
        assert_eq!(float(f64::INFINITY), json!("inf"));
        assert_eq!(float(f64::NEG_INFINITY), json!("-inf"));
        assert_eq!(float(f64::NAN), json!("nan"));
        assert_eq!(to_canonical_string(&json!([])), "[]\n");
    }
}
