//! Human-readable rendering of the JSON documents the commands produce.
//! Both output modes come from the same document, so they always carry the
//! same numbers; the table view rounds to six significant digits.

use serde_json::{Map, Value};

const SIG_DIGITS: usize = 6;

/// Formats `v` with six significant digits.
pub fn sig(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    if !(-5..=9).contains(&magnitude) {
        return format!("{:.*e}", SIG_DIGITS - 1, v);
    }
    let decimals = (SIG_DIGITS as i32 - 1 - magnitude).max(0) as usize;
    let s = format!("{v:.decimals$}");
    // Rounding can carry into a new leading digit (9.999995 -> 10.00000).
    if s.trim_start_matches('-').replace('.', "").trim_start_matches('0').len() > SIG_DIGITS && decimals > 0 {
        format!("{:.*}", decimals - 1, v)
    } else {
        s
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.as_f64().map(sig).unwrap_or_else(|| n.to_string()),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(", "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", scalar(v)))
            .collect::<Vec<_>>()
            .join(" "),
    }
}

fn is_flat_object(v: &Value) -> bool {
    v.as_object()
        .is_some_and(|m| m.values().all(|x| !x.is_object() && !x.is_array()))
}

fn table(rows: &[Value], indent: usize, out: &mut String) {
    let keys: Vec<&String> = rows[0].as_object().map(|m| m.keys().collect()).unwrap_or_default();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| keys.iter().map(|k| scalar(&r[k.as_str()])).collect())
        .collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(i, k)| cells.iter().map(|c| c[i].len()).chain([k.len()]).max().unwrap_or(0))
        .collect();
    let pad = " ".repeat(indent);
    let line = |items: Vec<&str>| -> String {
        items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    out.push_str(&format!("{pad}{}\n", line(keys.iter().map(|k| k.as_str()).collect())));
    for c in &cells {
        out.push_str(&format!("{pad}{}\n", line(c.iter().map(String::as_str).collect())));
    }
}

fn object(map: &Map<String, Value>, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    for (k, v) in map {
        match v {
            Value::Object(inner) if !inner.is_empty() && !is_flat_object(v) => {
                out.push_str(&format!("{pad}{k}:\n"));
                object(inner, indent + 2, out);
            }
            Value::Array(items) if !items.is_empty() && items.iter().all(is_flat_object) => {
                out.push_str(&format!("{pad}{k}:\n"));
                table(items, indent + 2, out);
            }
            other => out.push_str(&format!("{pad}{k}: {}\n", scalar(other))),
        }
    }
}

pub fn human(doc: &Value) -> String {
    let mut out = String::new();
    match doc {
        Value::Object(map) => object(map, 0, &mut out),
        other => {
            out.push_str(&scalar(other));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig(5.62045), "5.62045");
        assert_eq!(sig(0.578190000001), "0.578190");
        assert_eq!(sig(4.132411797), "4.13241");
        assert_eq!(sig(-0.0768249863), "-0.0768250");
        assert_eq!(sig(7.0), "7.00000");
        assert_eq!(sig(9.9999996), "10.0000");
        assert_eq!(sig(1.25e-9), "1.25000e-9");
        assert_eq!(sig(0.0), "0");
    }

    #[test]
    fn renders_nested_documents() {
        let doc = json!({
            "verdict": "more-polarized",
            "centers": {"lo": 7.0, "hi": 7.0},
            "rows": [{"x": 0.0, "diff": 0.5}, {"x": 1.0, "diff": -0.25}],
            "witness": null,
        });
        let text = human(&doc);
        assert!(text.contains("verdict: more-polarized"));
        assert!(text.contains("centers: lo=7.00000 hi=7.00000"));
        assert!(text.contains("-0.250000"));
        assert!(text.contains("witness: none"));
    }
}
