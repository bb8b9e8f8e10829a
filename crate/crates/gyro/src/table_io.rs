//! Cayley table files: `{"order": n, "elements": [labels], "oplus": [[indices]]}`,
//! rows indexed by the left operand.

use std::path::Path;

use gyro_core::finite::CayleyTable;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::json::to_canonical_string;

fn parse_err(path: &str, message: impl Into<String>) -> CliError {
    CliError::Parse {
        path: path.to_string(),
        message: message.into(),
    }
}

/// Parses a table from JSON text. `origin` names the source in errors.
pub fn parse_table(text: &str, origin: &str) -> Result<CayleyTable, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(origin, format!("invalid JSON: {e}")))?;
    table_from_value(&v, origin)
}

pub fn table_from_value(v: &Value, origin: &str) -> Result<CayleyTable, CliError> {
    let obj = v.as_object().ok_or_else(|| parse_err(origin, "top level must be an object"))?;
    let field = |name: &str| obj.get(name).ok_or_else(|| parse_err(origin, format!("missing field \"{name}\"")));
    let order = field("order")?
        .as_u64()
        .filter(|&n| n > 0)
        .ok_or_else(|| parse_err(origin, "field \"order\" must be a positive integer"))? as usize;

    let elements = field("elements")?
        .as_array()
        .ok_or_else(|| parse_err(origin, "field \"elements\" must be an array"))?;
    if elements.len() != order {
        return Err(parse_err(
            origin,
            format!("field \"elements\" has {} labels, expected {order}", elements.len()),
        ));
    }
    let mut labels: Vec<String> = Vec::with_capacity(order);
    for (i, e) in elements.iter().enumerate() {
        let s = match e {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            _ => return Err(parse_err(origin, format!("elements[{i}] must be a string or number"))),
        };
        if let Some(j) = labels.iter().position(|l| *l == s) {
            return Err(parse_err(origin, format!("elements[{i}] duplicates elements[{j}] ({s:?})")));
        }
        labels.push(s);
    }

    let rows_v = field("oplus")?
        .as_array()
        .ok_or_else(|| parse_err(origin, "field \"oplus\" must be an array of rows"))?;
    if rows_v.len() != order {
        return Err(parse_err(origin, format!("field \"oplus\" has {} rows, expected {order}", rows_v.len())));
    }
    let mut rows = Vec::with_capacity(order);
    for (i, r) in rows_v.iter().enumerate() {
        let r = r.as_array().ok_or_else(|| parse_err(origin, format!("oplus[{i}] must be an array")))?;
        if r.len() != order {
            return Err(parse_err(origin, format!("oplus[{i}] has {} entries, expected {order} (ragged row)", r.len())));
        }
        let mut row = Vec::with_capacity(order);
        for (j, c) in r.iter().enumerate() {
            let k = c
                .as_u64()
                .ok_or_else(|| parse_err(origin, format!("oplus[{i}][{j}] = {c} is not a nonnegative integer")))?;
            if k as usize >= order {
                return Err(parse_err(
                    origin,
                    format!("oplus[{i}][{j}] = {k} is out of range 0..{order}"),
                ));
            }
            row.push(k as usize);
        }
        rows.push(row);
    }
    CayleyTable::new(labels, rows).map_err(|e| parse_err(origin, e.to_string()))
}

/// Reads and shape-checks a table file. Axioms are not checked here.
pub fn load_table(path: &Path) -> Result<CayleyTable, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    parse_table(&text, &shown)
}

pub fn table_to_value(t: &CayleyTable) -> Value {
    json!({
        "order": t.order(),
        "elements": t.labels(),
        "oplus": t.rows(),
    })
}

/// Canonical file text; the identity, when there is one, is moved to index 0.
pub fn canonical_table_text(t: &CayleyTable) -> String {
    let t = t.with_identity_first().unwrap_or_else(|_| t.clone());
    to_canonical_string(&table_to_value(&t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn msg(r: Result<CayleyTable, CliError>) -> String {
        match r {
            Err(e @ CliError::Parse { .. }) => e.to_string(),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn round_trip() {
        let t = CayleyTable::cyclic(4).unwrap();
        let back = parse_table(&canonical_table_text(&t), "z4").unwrap();
        assert_eq!(back, t);
        assert_eq!(back.order(), 4);
    }

    #[test]
    fn numeric_labels_are_accepted() {
        let t = parse_table(r#"{"order":2,"elements":[0,1],"oplus":[[0,1],[1,0]]}"#, "x").unwrap();
        assert_eq!(t.labels(), ["0", "1"]);
    }

    #[test]
    fn shape_errors_name_the_problem() {
        assert!(msg(parse_table(r#"{"order":2,"elements":["e","a"],"oplus":[[0,1],[1]]}"#, "x")).contains("ragged"));
        let m = msg(parse_table(r#"{"order":2,"elements":["e","a"],"oplus":[[0,1],[1,2]]}"#, "x"));
        assert!(m.contains("oplus[1][1]") && m.contains("out of range"), "{m}");
        assert!(msg(parse_table(r#"{"order":2,"elements":["e","e"],"oplus":[[0,1],[1,0]]}"#, "x")).contains("duplicates"));
        assert!(msg(parse_table(r#"{"elements":["e"],"oplus":[[0]]}"#, "x")).contains("\"order\""));
        assert!(msg(parse_table(r#"{"order":1,"elements":["e"]}"#, "x")).contains("\"oplus\""));
        assert!(msg(parse_table(r#"{"order":2,"elements":["e"],"oplus":[[0,1],[1,0]]}"#, "x")).contains("elements"));
        assert!(msg(parse_table(r#"{"order":1,"elements":["e"],"oplus":[[-1]]}"#, "x")).contains("oplus[0][0]"));
        assert!(msg(parse_table("[1", "x")).contains("invalid JSON"));
    }

    #[test]
    fn canonical_text_puts_identity_first() {
        let t = CayleyTable::from_rows(vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]]).unwrap();
        let c = parse_table(&canonical_table_text(&t), "c").unwrap();
        assert_eq!(c.identity(), Some(0));
    }
}
