//! Number formatting shared by every output mode.

use serde::Serializer;

/// Significant digits for reported values.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// `x` with 12 significant digits, trailing zeros trimmed; scientific
/// notation outside `[1e-5, 1e15)`.
pub fn value(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..15).contains(&exp) {
        let s = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
        let (mantissa, e) = s.split_once('e').expect("exponent");
        return format!("{}e{}", trim(mantissa), e);
    }
    let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
    trim(&format!("{x:.decimals$}")).to_string()
}

/// Residuals: scientific notation with four significant digits.
pub fn residual(x: f64) -> String {
    format!("{x:.3e}")
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `x` rounded to its 12-significant-digit representation.
pub fn round_value(x: f64) -> f64 {
    value(x).parse().unwrap_or(x)
}

pub fn round_residual(x: f64) -> f64 {
    residual(x).parse().unwrap_or(x)
}

/// Serde adapters so JSON numbers carry the same precision as text output.
pub fn ser_value<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_value(*x))
}

pub fn ser_residual<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_residual(*x))
}

pub fn ser_opt_value<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&round_value(*v)),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(value(2.0 / 3.0), "0.666666666667");
        assert_eq!(value(8.0 / 3.0), "2.66666666667");
        assert_eq!(value(4.0), "4");
        assert_eq!(value(0.0), "0");
        assert_eq!(value(-1234.5), "-1234.5");
        assert_eq!(value(1.0e-7 / 3.0), "3.33333333333e-8");
    }

    #[test]
    fn residuals_are_scientific() {
        assert_eq!(residual(0.0), "0.000e0");
        assert_eq!(residual(1.234567e-15), "1.235e-15");
    }
}
