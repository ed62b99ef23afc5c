//! Number formatting shared by CSV writers and the CLI.

/// Shortest representation that round-trips through `f64` parsing; never
/// more than 17 significant digits. Very small and very large magnitudes use
/// exponent notation.
pub fn num(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let a = v.abs();
    if a != 0.0 && !(1e-4..1e15).contains(&a) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_print_bare() {
        assert_eq!(num(1.0), "1");
        assert_eq!(num(0.0), "0");
        assert_eq!(num(-3.0), "-3");
    }

    #[test]
    fn round_trips() {
        for v in [1.0 / 96.0, 17.0 / 184320.0, 2.404825557695773, 1e-300, 6.02e23] {
            assert_eq!(num(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn exponent_for_tiny() {
        assert_eq!(num(1.5e-7), "1.5e-7");
    }
}
