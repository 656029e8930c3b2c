//! Output plumbing: significant-figure formatting, CSV assembly, and the
//! stdout/file sink.

use std::io::Write;
use std::path::Path;

/// Formats `x` to `sig` significant figures the way C's `%g` does: fixed
/// notation for moderate exponents, scientific otherwise, trailing zeros
/// stripped. Three significant figures is the table reporting convention.
pub fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sig = sig.max(1);
    // decimal rounding via the scientific formatter, then choose notation
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp_str) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp_str.parse().expect("exponent");
    if exp < -4 || exp >= sig as i32 {
        let mantissa = strip_trailing_zeros(mantissa);
        format!("{mantissa}e{}{:02}", if exp < 0 { "-" } else { "+" }, exp.abs())
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        strip_trailing_zeros(&format!("{x:.decimals$}"))
    }
}

fn strip_trailing_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let trimmed = s.trim_end_matches('0').trim_end_matches('.');
    trimmed.to_string()
}

/// Assembles an RFC-style CSV: comma separators, one header row, `.` decimal
/// separator, no quoting (cells are numeric or plain identifiers).
pub fn csv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&headers.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Full-precision cell for CSV: Rust's shortest round-trip representation.
pub fn num(x: f64) -> String {
    format!("{x}")
}

/// Writes `text` to `out` when given, stdout otherwise.
pub fn sink(out: Option<&Path>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())
        }
    }
}
