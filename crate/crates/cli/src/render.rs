//! JSON and TSV rendering of report values.

use serde_json::Value;

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            xs.iter().map(cell).collect::<Vec<_>>().join(",")
        }
        Value::Bool(_) | Value::Number(_) => v.to_string(),
        _ => v.to_string(),
    }
}

fn is_table(v: &Value) -> bool {
    matches!(v, Value::Array(xs) if !xs.is_empty() && xs.iter().all(Value::is_object))
}

/// Scalars as `key<TAB>value`; arrays of objects as a named table.
pub fn tsv(v: &Value) -> String {
    let mut out = String::new();
    let Value::Object(map) = v else {
        out.push_str(&cell(v));
        out.push('\n');
        return out;
    };
    for (k, x) in map {
        if !is_table(x) {
            out.push_str(&format!("{k}\t{}\n", cell(x)));
        }
    }
    for (k, x) in map {
        if !is_table(x) {
            continue;
        }
        let rows = x.as_array().unwrap();
        let cols: Vec<&String> = rows[0].as_object().unwrap().keys().collect();
        out.push_str(&format!("\n[{k}]\n"));
        out.push_str(&cols.iter().map(|c| c.as_str()).collect::<Vec<_>>().join("\t"));
        out.push('\n');
        for r in rows {
            let line: Vec<String> = cols.iter().map(|c| cell(&r[c.as_str()])).collect();
            out.push_str(&line.join("\t"));
            out.push('\n');
        }
    }
    out
}

pub fn json_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report is serialisable");
    s.push('\n');
    s
}

pub fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("report is serialisable");
    s.push('\n');
    s
}
