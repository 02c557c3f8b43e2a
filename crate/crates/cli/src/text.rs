//! Plain-text rendering of a report tree. Every number is printed with
//! the shortest representation that parses back to the same `f64`.

use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(match (n.as_u64(), n.as_i64(), n.as_f64()) {
            (Some(u), _, _) => u.to_string(),
            (_, Some(i), _) => i.to_string(),
            (_, _, Some(f)) => format!("{f:?}"),
            _ => n.to_string(),
        }),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn inline(v: &Value) -> Option<String> {
    if let Some(s) = scalar(v) {
        return Some(s);
    }
    match v {
        Value::Array(a) if a.iter().all(|e| scalar(e).is_some()) => Some(format!(
            "[{}]",
            a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn walk(out: &mut String, depth: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(depth);
    if let Some(s) = inline(v) {
        let _ = writeln!(out, "{pad}{key}: {s}");
        return;
    }
    let _ = writeln!(out, "{pad}{key}:");
    match v {
        Value::Object(m) => {
            for (k, e) in m {
                walk(out, depth + 1, k, e);
            }
        }
        Value::Array(a) => {
            for (i, e) in a.iter().enumerate() {
                walk(out, depth + 1, &format!("[{i}]"), e);
            }
        }
        _ => unreachable!("scalars are inline"),
    }
}

/// `header` lines followed by every field of `report`, one per line.
pub fn render<T: Serialize>(header: &[String], report: &T) -> serde_json::Result<String> {
    let mut out = String::new();
    for h in header {
        out.push_str(h);
        out.push('\n');
    }
    out.push('\n');
    if let Value::Object(m) = serde_json::to_value(report)? {
        for (k, e) in &m {
            walk(&mut out, 0, k, e);
        }
    }
    Ok(out)
}
