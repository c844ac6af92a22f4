//! Canonical JSON (sorted keys, `%.12g` floats) and a Markdown view of reports.

use serde_json::Value;

/// Formats like C's `%.12g`.
pub fn format_g12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.11e}", x);
    let (mant, exp) = sci.split_once('e').expect("exponent");
    let e: i32 = exp.parse().expect("integer exponent");
    if !(-4..12).contains(&e) {
        let mant = strip_zeros(mant);
        let sign = if e < 0 { '-' } else { '+' };
        format!("{mant}e{sign}{:02}", e.abs())
    } else {
        strip_zeros(&format!("{:.*}", (11 - e) as usize, x)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Compact JSON with keys in sorted order and floats through [`format_g12`].
pub fn to_canonical_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, &mut out);
    out
}

fn write_value(v: &Value, out: &mut String) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if n.is_i64() || n.is_u64() {
                out.push_str(&n.to_string());
            } else {
                out.push_str(&format_g12(n.as_f64().unwrap_or(f64::NAN)));
            }
        }
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(a) => {
            out.push('[');
            for (i, x) in a.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_value(x, out);
            }
            out.push(']');
        }
        Value::Object(m) => {
            let mut keys: Vec<&String> = m.keys().collect();
            keys.sort();
            out.push('{');
            for (i, k) in keys.into_iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&Value::String(k.clone()).to_string());
                out.push(':');
                write_value(&m[k], out);
            }
            out.push('}');
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if !(n.is_i64() || n.is_u64()) => format_g12(n.as_f64().unwrap_or(f64::NAN)),
        other => to_canonical_json(other),
    }
}

fn is_subgroup(v: &Value) -> bool {
    v.get("kind").and_then(Value::as_str).is_some_and(|k| ["full", "zero", "cyclic"].contains(&k))
}

/// Markdown rendering: scalar fields in one table, each map of subgroups in
/// its own table, other nested values as JSON code blocks.
pub fn to_markdown(title: &str, report: &Value) -> String {
    let mut out = format!("# {title}\n\n");
    let Some(obj) = report.as_object() else {
        return out + &format!("```json\n{}\n```\n", to_canonical_json(report));
    };
    let mut keys: Vec<&String> = obj.keys().collect();
    keys.sort();

    let scalars: Vec<&&String> = keys.iter().filter(|k| !obj[k.as_str()].is_object() && !obj[k.as_str()].is_array()).collect();
    if !scalars.is_empty() {
        out.push_str("| field | value |\n|---|---|\n");
        for k in scalars {
            out.push_str(&format!("| {k} | {} |\n", cell(&obj[k.as_str()])));
        }
        out.push('\n');
    }
    let symbolic = obj.get("symbolic");
    for k in &keys {
        let v = &obj[k.as_str()];
        if k.as_str() == "symbolic" || !(v.is_object() || v.is_array()) {
            continue;
        }
        out.push_str(&format!("## {k}\n\n"));
        match v.as_object() {
            Some(m) if !m.is_empty() && m.values().all(is_subgroup) => {
                out.push_str("| invariant | kind | generator | symbolic | resolution limited |\n|---|---|---|---|---|\n");
                let mut names: Vec<&String> = m.keys().collect();
                names.sort();
                for name in names {
                    let g = &m[name];
                    let sym = symbolic.and_then(|s| s.get(name.as_str())).map(cell).unwrap_or_default();
                    out.push_str(&format!(
                        "| {name} | {} | {} | {sym} | {} |\n",
                        cell(&g["kind"]),
                        g.get("generator").map(cell).unwrap_or_else(|| "-".into()),
                        cell(&g["resolution_limited"]),
                    ));
                }
            }
            _ => out.push_str(&format!("```json\n{}\n```\n", to_canonical_json(v))),
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn g12_matches_c() {
        assert_eq!(format_g12(0.5), "0.5");
        assert_eq!(format_g12(std::f64::consts::PI / 2f64.ln()), "4.53236014183");
        assert_eq!(format_g12(1e-13), "1e-13");
        assert_eq!(format_g12(1.5e-5), "1.5e-05");
        assert_eq!(format_g12(0.0001), "0.0001");
        assert_eq!(format_g12(123456789012.0), "123456789012");
        assert_eq!(format_g12(1234567890123.0), "1.23456789012e+12");
        assert_eq!(format_g12(-2.0), "-2");
        assert_eq!(format_g12(0.1 + 0.2), "0.3");
    }

    #[test]
    fn canonical_round_trip() {
        let v = json!({"b": [1, 2.5, {"z": true, "a": null}], "a": "x\"y", "c": 0.1 + 0.2});
        let s = to_canonical_json(&v);
        assert_eq!(s, r#"{"a":"x\"y","b":[1,2.5,{"a":null,"z":true}],"c":0.3}"#);
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(to_canonical_json(&back), s);
    }

    #[test]
    fn markdown_tables() {
        let v = json!({
            "upsilon": 2,
            "invariants": {"T_tau": {"kind": "cyclic", "generator": 4.5, "resolution_limited": false}},
            "symbolic": {"T_tau": "pi/log(q)"}
        });
        let md = to_markdown("rootsys", &v);
        assert!(md.contains("| upsilon | 2 |"));
        assert!(md.contains("| T_tau | cyclic | 4.5 | pi/log(q) | false |"));
    }
}
