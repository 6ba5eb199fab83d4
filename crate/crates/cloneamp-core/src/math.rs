//! Small float helpers missing from `core`.

/// Integer power by binary exponentiation.
///
/// Accumulates at most `log2(n)` rounding errors, so `powi(s, 5000)`
/// is still accurate to a few ulp. `powi(0.0, 0) == 1.0`.
pub(crate) fn powi(base: f64, mut n: u32) -> f64 {
    let mut acc = 1.0;
    let mut sq = base;
    while n > 0 {
        if n & 1 == 1 {
            acc *= sq;
        }
        sq *= sq;
        n >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powi_edge_cases() {
        assert_eq!(powi(0.0, 0), 1.0);
        assert_eq!(powi(0.0, 3), 0.0);
        assert_eq!(powi(2.0, 10), 1024.0);
        assert!((powi(0.5, 61) - 0.5f64.powi(61)).abs() < 1e-30);
    }
}
