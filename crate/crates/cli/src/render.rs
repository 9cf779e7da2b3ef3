//! Plain-text rendering of JSON reports.

use serde_json::{Map, Value};

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn inline(items: &[Value]) -> Option<String> {
    let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
    parts.map(|p| format!("[{}]", p.join(", ")))
}

fn is_check(v: &Value) -> bool {
    v.get("passed").is_some_and(Value::is_boolean) && v.get("name").is_some()
}

fn check_line(v: &Value) -> String {
    let mark = if v["passed"] == Value::Bool(true) { "PASS" } else { "FAIL" };
    let example = v.get("example").and_then(Value::as_str).unwrap_or("");
    let name = v["name"].as_str().unwrap_or("");
    match v.get("detail").and_then(Value::as_str) {
        Some(d) => format!("{mark}  {example:<20} {name}  ({d})"),
        None => format!("{mark}  {example:<20} {name}"),
    }
}

fn object(map: &Map<String, Value>, depth: usize, out: &mut Vec<String>) {
    let pad = "  ".repeat(depth);
    for (key, v) in map {
        if let Some(s) = scalar(v) {
            out.push(format!("{pad}{key}: {s}"));
            continue;
        }
        match v {
            Value::Array(items) => {
                if let Some(s) = inline(items) {
                    out.push(format!("{pad}{key}: {s}"));
                } else if items.iter().all(is_check) {
                    out.push(format!("{pad}{key}:"));
                    out.extend(items.iter().map(|c| format!("{pad}  {}", check_line(c))));
                } else {
                    out.push(format!("{pad}{key}:"));
                    for item in items {
                        value(item, depth + 1, out);
                    }
                }
            }
            Value::Object(inner) => {
                out.push(format!("{pad}{key}:"));
                object(inner, depth + 1, out);
            }
            _ => unreachable!(),
        }
    }
}

fn value(v: &Value, depth: usize, out: &mut Vec<String>) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            let mut inner = Vec::new();
            object(map, 0, &mut inner);
            for (i, line) in inner.into_iter().enumerate() {
                let lead = if i == 0 { "- " } else { "  " };
                out.push(format!("{pad}{lead}{line}"));
            }
        }
        Value::Array(items) => match inline(items) {
            Some(s) => out.push(format!("{pad}{s}")),
            None => {
                out.push(format!("{pad}-"));
                for item in items {
                    value(item, depth + 1, out);
                }
            }
        },
        other => out.push(format!("{pad}{}", scalar(other).unwrap_or_default())),
    }
}

pub fn text(v: &Value) -> String {
    let mut out = Vec::new();
    match v {
        Value::Object(map) => object(map, 0, &mut out),
        other => value(other, 0, &mut out),
    }
    out.join("\n") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders_nested_reports() {
        let v = json!({
            "stable": false,
            "pairs": [{"e_simple_dim": 1, "a_simple_dim": 2}],
            "degrees": [1, 1, 2],
            "action": [[[1, 0], [0, 1]]],
            "checks": [{"example": "s3", "name": "blocks", "passed": true}],
        });
        let t = text(&v);
        assert!(t.contains("stable: false\n"));
        assert!(t.contains("pairs:\n  - e_simple_dim: 1\n    a_simple_dim: 2\n"));
        assert!(t.contains("degrees: [1, 1, 2]\n"));
        assert!(t.contains("    [1, 0]\n"));
        assert!(t.contains("PASS  s3"));
    }
}
