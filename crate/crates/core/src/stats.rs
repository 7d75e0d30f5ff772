//! Exact tail checks for counts, without floating point.

use num_bigint::BigInt;
use num_rational::BigRational;

/// Whether `|count - trials·p| < k·σ` with `σ² = trials·p(1-p)`, the
/// binomial standard deviation. Decided exactly by comparing squares.
///
/// For sums of negatively correlated indicators the true deviation is no
/// larger than the binomial one, so the check stays conservative there.
pub fn within_sigmas(count: u64, trials: u64, p: &BigRational, k: u32) -> bool {
    let n = BigRational::from_integer(BigInt::from(trials));
    let dev = BigRational::from_integer(BigInt::from(count)) - &n * p;
    let var = &n * p * (BigRational::from_integer(BigInt::from(1)) - p);
    let k2 = BigRational::from_integer(BigInt::from(k * k));
    &dev * &dev < k2 * var
}

/// `(count - trials·p) / σ` rounded toward zero to two decimals, as text;
/// for display only.
pub fn sigma_text(count: u64, trials: u64, p: &BigRational) -> String {
    let n = BigRational::from_integer(BigInt::from(trials));
    let dev = BigRational::from_integer(BigInt::from(count)) - &n * p;
    let var = &n * p * (BigRational::from_integer(BigInt::from(1)) - p);
    // search the largest h with (h/100)² ≤ dev²/var
    let ratio = &dev * &dev / var;
    let mut lo = 0i64;
    let mut hi = 100_000i64;
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        let h = BigRational::new(BigInt::from(mid * mid), BigInt::from(10_000));
        if h <= ratio {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let sign = if dev < BigRational::from_integer(BigInt::from(0)) { "-" } else { "" };
    format!("{sign}{}.{:02}", lo / 100, lo % 100)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::rational;

    #[test]
    fn exact_bounds() {
        // n = 100, p = 1/2: σ = 5
        let half = rational(1, 2);
        assert!(within_sigmas(50, 100, &half, 3));
        assert!(within_sigmas(64, 100, &half, 3));
        assert!(!within_sigmas(65, 100, &half, 3));
        assert!(!within_sigmas(35, 100, &half, 3));
        assert_eq!(sigma_text(65, 100, &half), "3.00");
        assert_eq!(sigma_text(40, 100, &half), "-2.00");
        assert_eq!(sigma_text(51, 100, &half), "0.20");
    }
}
