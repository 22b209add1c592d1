use num_complex::Complex64 as C64;

/// Prefixes a space to arguments such as `-0.5`, `-i` or `-.3+2i` so the
/// argument parser reads them as values, not flags. Parsers below trim.
pub fn protect_negative_values(args: impl Iterator<Item = String>) -> Vec<String> {
    args.map(|a| {
        let numeric = a.len() > 1
            && a.starts_with('-')
            && a[1..].starts_with(|c: char| c.is_ascii_digit() || matches!(c, '.' | 'i' | 'j'));
        if numeric {
            format!(" {a}")
        } else {
            a
        }
    })
    .collect()
}

pub fn parse_real(text: &str) -> Result<f64, String> {
    let t = text.trim();
    let x = match t.to_ascii_lowercase().as_str() {
        "inf" | "+inf" | "infinity" => f64::INFINITY,
        "-inf" | "-infinity" => f64::NEG_INFINITY,
        _ => t.parse::<f64>().map_err(|_| format!("not a real number: {t:?}"))?,
    };
    if x.is_nan() {
        return Err(format!("not a real number: {t:?}"));
    }
    Ok(x)
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` (with `j` accepted for `i`).
pub fn parse_complex(text: &str) -> Result<C64, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("not a complex number: {:?}", text.trim());
    if t.is_empty() {
        return Err(bad());
    }
    let finite = |x: f64| if x.is_finite() { Ok(x) } else { Err(bad()) };
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return Ok(C64::new(finite(t.parse().map_err(|_| bad())?)?, 0.0));
    };
    // split before the last sign that does not belong to an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => s.parse().map_err(|_| bad())?,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    Ok(C64::new(finite(re)?, finite(im)?))
}

/// Reads `arity` complex numbers either as one literal each or as pairs of reals.
pub fn parse_point(tokens: &[String], arity: usize) -> Result<Vec<C64>, String> {
    if tokens.len() == arity {
        tokens.iter().map(|t| parse_complex(t)).collect()
    } else if tokens.len() == 2 * arity {
        tokens
            .chunks(2)
            .map(|pair| {
                let re = parse_real(&pair[0])?;
                let im = parse_real(&pair[1])?;
                if !(re.is_finite() && im.is_finite()) {
                    return Err("coordinates must be finite".to_string());
                }
                Ok(C64::new(re, im))
            })
            .collect()
    } else {
        Err(format!(
            "expected {arity} complex numbers (or {} reals), got {} values",
            2 * arity,
            tokens.len()
        ))
    }
}
