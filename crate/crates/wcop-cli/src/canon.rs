//! Canonical JSON emission: fixed key order (insertion order of the builder)
//! and fixed float formatting (17 significant digits, scientific) so that
//! identical runs produce byte-identical files.

use wcop::C64;

/// JSON value with ordered object keys.
#[derive(Debug, Clone, PartialEq)]
pub enum Json {
    Bool(bool),
    Num(f64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(String, Json)>),
}

impl Json {
    pub fn complex(z: C64) -> Json {
        Json::Arr(vec![Json::Num(z.re), Json::Num(z.im)])
    }

    pub fn complex_vec(values: &[C64]) -> Json {
        Json::Arr(values.iter().map(|&z| Json::complex(z)).collect())
    }

    pub fn real_vec(values: &[f64]) -> Json {
        Json::Arr(values.iter().map(|&v| Json::Num(v)).collect())
    }

    pub fn matrix(m: &wcop::Matrix64) -> Json {
        let n = m.dim();
        Json::Arr(
            (0..n)
                .map(|i| Json::Arr((0..n).map(|j| Json::complex(m.get(i, j))).collect()))
                .collect(),
        )
    }
}

/// 17 significant digits, scientific; deterministic for every finite double.
pub fn format_float(x: f64) -> String {
    debug_assert!(x.is_finite(), "reports never contain non-finite numbers");
    format!("{x:.16e}")
}

pub fn to_canonical_string(value: &Json) -> String {
    let mut out = String::new();
    write_value(value, &mut out);
    out.push('\n');
    out
}

fn write_value(value: &Json, out: &mut String) {
    match value {
        Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Json::Num(x) => out.push_str(&format_float(*x)),
        Json::Str(s) => write_string(s, out),
        Json::Arr(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_value(item, out);
            }
            out.push(']');
        }
        Json::Obj(fields) => {
            out.push('{');
            for (i, (key, item)) in fields.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_string(key, out);
                out.push(':');
                write_value(item, out);
            }
            out.push('}');
        }
    }
}

fn write_string(s: &str, out: &mut String) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                out.push_str(&format!("\\u{:04x}", c as u32));
            }
            c => out.push(c),
        }
    }
    out.push('"');
}
