//! Deterministic text rendering of numbers for the CSV and SVG emitters.

/// Scientific notation with the requested number of significant digits.
/// Output is locale-independent and byte-deterministic.
pub fn format_significant(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    format!("{:.*e}", digits - 1, x)
}
