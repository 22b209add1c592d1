use num_complex::Complex64 as C64;
use serde_json::{json, Value};

/// Shortest decimal that parses back to the same `f64`; scientific notation
/// outside `[1e-5, 1e16)`. Negative zero prints as `0`.
pub fn real(x: f64) -> String {
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let x = x + 0.0;
    let a = x.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// `a+bi` with round-trip precision.
pub fn complex(z: C64) -> String {
    let im = z.im + 0.0;
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{}{}{}i", real(z.re), sign, real(im.abs()))
}

/// 17 significant digits in scientific notation, independent of locale.
pub fn csv_real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        real(x)
    }
}

pub fn json_complex(z: C64) -> Value {
    json!([json_real(z.re), json_real(z.im)])
}

/// JSON has no infinities; they are written as strings.
pub fn json_real(x: f64) -> Value {
    if x.is_finite() {
        json!(x + 0.0)
    } else if x.is_nan() {
        Value::Null
    } else {
        json!(real(x))
    }
}
