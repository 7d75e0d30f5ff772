use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::descent::alpha;
use super::dyck::{enumerate_dd, DispersedDyckWord, DyckLetter};
use crate::error::{out_of_range, Error, Result};
use crate::word::{SignWord, Word};

/// Longest word accepted by [`q_formula`]; the sum runs over `DD(n - 1)`.
pub const MAX_FORMULA_LEN: usize = 14;

/// Run boundaries of `y` as half-open index ranges.
fn run_ranges(y: &SignWord) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for len in y.runs() {
        out.push((start, start + len));
        start += len;
    }
    out
}

/// Flips whole interior runs of `y` so that the `j`-th sign change between
/// runs survives exactly when `w_j = 0`.
pub fn transform_y_w(y: &SignWord, w: &DispersedDyckWord) -> Result<SignWord> {
    let ranges = run_ranges(y);
    let slots = ranges.len().saturating_sub(1);
    if w.len() != slots {
        return Err(Error::SlotMismatch {
            expected: slots,
            actual: w.len(),
        });
    }
    let Some(&first) = y.signs().first() else {
        return Ok(y.clone());
    };
    let mut signs = Vec::with_capacity(y.len());
    let mut current = first;
    for (j, &(a, b)) in ranges.iter().enumerate() {
        if j > 0 && w.letters()[j - 1] == DyckLetter::Zero {
            current = current.flip();
        }
        signs.extend(std::iter::repeat_n(current, b - a));
    }
    Ok(SignWord::new(signs))
}

/// `c(w, y, z)`: the product over sign changes of `y` of the `z` entry just
/// before the change (for `+`), just after it (for `-`), or `1` (for `0`).
pub fn sign_factor(w: &DispersedDyckWord, y: &SignWord, z: &SignWord) -> Result<i8> {
    if y.len() != z.len() {
        return Err(Error::LengthMismatch {
            left: y.len(),
            right: z.len(),
        });
    }
    let ranges = run_ranges(y);
    let slots = ranges.len().saturating_sub(1);
    if w.len() != slots {
        return Err(Error::SlotMismatch {
            expected: slots,
            actual: w.len(),
        });
    }
    let z = z.signs();
    let mut c = 1i8;
    for (j, letter) in w.letters().iter().enumerate() {
        let boundary = ranges[j].1;
        c *= match letter {
            DyckLetter::Plus => z[boundary - 1].value(),
            DyckLetter::Minus => z[boundary].value(),
            DyckLetter::Zero => 1,
        };
    }
    Ok(c)
}

/// The dispersed-Dyck formula with a caller-supplied replacement for `α`.
/// Non-proper words give `0`.
pub fn q_formula_with<F>(x: &Word, mut alpha_fn: F) -> Result<BigInt>
where
    F: FnMut(&SignWord) -> BigInt,
{
    if x.len() > MAX_FORMULA_LEN {
        return Err(out_of_range(
            "x",
            format!("length must be <= {MAX_FORMULA_LEN}"),
        ));
    }
    let (y, z) = x.to_sign_rows()?;
    if !x.is_proper() {
        return Ok(BigInt::zero());
    }
    if x.is_empty() {
        return Ok(BigInt::one());
    }
    let n = x.len();
    let m = y.runs().len();
    let mut cache: HashMap<SignWord, BigInt> = HashMap::new();
    let mut total = BigInt::zero();
    for w in enumerate_dd(m - 1)? {
        let yw = transform_y_w(&y, &w)?;
        let a = cache.entry(yw).or_insert_with_key(|k| alpha_fn(k)).clone();
        let mut term = a * BigInt::from(sign_factor(&w, &y, &z)?);
        if w.plus_count() % 2 == 1 {
            term = -term;
        }
        total += term;
    }
    Ok(total << (n - m))
}

/// `Q(x)` for a word over `[4]`; equal to the building count.
pub fn q_formula(x: &Word) -> Result<BigInt> {
    q_formula_with(x, |y| BigInt::from(alpha(y)))
}

/// Convenience used by identity checks: `Q` on a pair of sign rows.
pub(crate) fn q_of_rows(y: &SignWord, z: &SignWord) -> Result<BigInt> {
    q_formula(&Word::from_sign_rows(y, z)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buildings::BuildingTable;

    fn sw(s: &str) -> SignWord {
        s.parse().unwrap()
    }

    fn dd(s: &str) -> DispersedDyckWord {
        s.parse().unwrap()
    }

    #[test]
    fn worked_transform() {
        let y = sw("+++--+-++---+-+");
        let w = dd("++--0+-0");
        // +++ ++ + + ++ --- - - +
        assert_eq!(transform_y_w(&y, &w).unwrap(), sw("+++++++++-----+"));
        assert_eq!(
            transform_y_w(&y, &w).unwrap(),
            transform_y_w(&y, &dd("+-+-0+-0")).unwrap()
        );
        assert_eq!(transform_y_w(&y, &dd("00000000")).unwrap(), y);
        assert!(matches!(
            transform_y_w(&y, &dd("0000")),
            Err(Error::SlotMismatch { expected: 8, actual: 4 })
        ));
    }

    #[test]
    fn sign_factor_cases() {
        let y = sw("++---++-");
        let z = sw("+-+-+-+-");
        assert_eq!(sign_factor(&dd("000"), &y, &z).unwrap(), 1);
        // l_1 = z_2 = -, r_2 = z_6 = -
        assert_eq!(sign_factor(&dd("+-0"), &y, &z).unwrap(), 1);
        let y3 = sw("++---+");
        let z3 = sw("+--+-+");
        // l_1 = z_2 = -, r_2 = z_6 = +
        assert_eq!(sign_factor(&dd("+-"), &y3, &z3).unwrap(), -1);
        assert!(sign_factor(&dd("+-"), &y3, &sw("+")).is_err());
    }

    #[test]
    fn formula_small_values() {
        assert_eq!(q_formula(&Word::parse(4, "1").unwrap()).unwrap(), BigInt::one());
        assert_eq!(q_formula(&Word::parse(4, "1,1").unwrap()).unwrap(), BigInt::zero());
        assert_eq!(q_formula(&Word::empty(4).unwrap()).unwrap(), BigInt::one());
    }

    #[test]
    fn formula_matches_buildings_exhaustively() {
        let mut table = BuildingTable::new();
        for n in 0..=6 {
            for x in Word::all(4, n) {
                let b = BigInt::from(table.count(x.symbols()));
                assert_eq!(q_formula(&x).unwrap(), b, "x={x}");
            }
        }
    }

    #[test]
    fn formula_is_symmetric_in_rows() {
        for n in 0..=6 {
            for y in SignWord::all(n) {
                for z in SignWord::all(n) {
                    assert_eq!(q_of_rows(&y, &z).unwrap(), q_of_rows(&z, &y).unwrap());
                }
            }
        }
    }

    #[test]
    fn fair_sign_alpha_gives_negative_value() {
        let x = Word::from_sign_rows(&sw("+-+-"), &sw("++++")).unwrap();
        // alpha'(y) = (n+1)!/2^n; every y_w has the same length, so the
        // common factor 2^-n is dropped and the sign is unaffected
        let q = q_formula_with(&x, |y| (1..=y.len() as u32 + 1).map(BigInt::from).product())
        .unwrap();
        assert!(q < BigInt::zero(), "got {q}");
    }
}
