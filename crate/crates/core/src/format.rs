//! Decimal rendering of floats with a fixed number of significant digits.

/// Significant digits that make every `f64` re-parse to the same value.
pub const LOSSLESS_DIGITS: usize = 17;

/// Renders `x` with `digits` significant digits in plain decimal notation
/// (scientific for very large or small magnitudes), trailing zeros removed.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "NaN".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let digits = digits.clamp(1, LOSSLESS_DIGITS);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-7..=20).contains(&exp) {
        return format!("{}e{}", trim_fraction(mantissa), exp);
    }
    let negative = mantissa.starts_with('-');
    let digits_only: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp < 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-exp - 1) as usize));
        out.push_str(&digits_only);
    } else {
        let point = exp as usize + 1;
        if digits_only.len() <= point {
            out.push_str(&digits_only);
            out.extend(std::iter::repeat_n('0', point - digits_only.len()));
        } else {
            out.push_str(&digits_only[..point]);
            out.push('.');
            out.push_str(&digits_only[point..]);
        }
    }
    trim_fraction(&out)
}

fn trim_fraction(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Fewest significant digits (at most 17) that still re-parse to `x`.
pub fn format_shortest(x: f64) -> String {
    (1..LOSSLESS_DIGITS)
        .map(|d| format_sig(x, d))
        .find(|s| s.parse::<f64>().ok() == Some(x))
        .unwrap_or_else(|| format_sig(x, LOSSLESS_DIGITS))
}

/// `digits` significant digits, or the shortest lossless form for `None`.
pub fn format_number(x: f64, digits: Option<usize>) -> String {
    match digits {
        Some(d) => format_sig(x, d),
        None => format_shortest(x),
    }
}

pub fn format_vector(values: &[f64], digits: Option<usize>) -> String {
    values
        .iter()
        .map(|&v| format_number(v, digits))
        .collect::<Vec<_>>()
        .join(",")
}
