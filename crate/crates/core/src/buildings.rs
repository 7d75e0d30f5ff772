//! Counting proper buildings.
//!
//! A permutation `σ ∈ S_n` is read as arrival times: symbol `x_i` arrives at
//! time `σ(i)`. It is a *proper building* of `x` when, at every time `t`, the
//! symbols that have arrived (kept in their positional order) form a proper
//! coloring. `B(x)` is the number of proper buildings.
//!
//! Conditioning on the last arrival gives `B(x) = Σ_i B(x̂_i)` for proper
//! `x`, which [`BuildingTable`] evaluates with memoization. Since `B` is
//! invariant under relabeling colors, memo keys are words relabeled in order
//! of first appearance.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{out_of_range, Error, Result};
use crate::report::Check;
use crate::word::{is_proper, Word};

/// Default bound on the word length for the `n!` enumeration.
pub const ORACLE_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BuildingCount(pub BigUint);

impl BuildingCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

impl fmt::Display for BuildingCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for BuildingCount {
    fn from(v: u64) -> Self {
        BuildingCount(BigUint::from(v))
    }
}

/// Whether the arrival order `arrival` (`arrival[i]` is the 0-based time at
/// which position `i` arrives) is a proper building of `x`.
pub fn is_proper_building(x: &[u8], arrival: &[usize]) -> bool {
    let n = x.len();
    (0..n).all(|t| {
        let arrived: Vec<u8> = (0..n).filter(|&i| arrival[i] <= t).map(|i| x[i]).collect();
        is_proper(&arrived)
    })
}

/// Rearranges `perm` into the next permutation in lexicographic order;
/// returns `false` after the last one.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// `B(x)` by enumerating all of `S_n`. Refuses words longer than
/// [`ORACLE_CAP`].
pub fn count_buildings_oracle(x: &Word) -> Result<BuildingCount> {
    count_buildings_oracle_capped(x, ORACLE_CAP)
}

pub fn count_buildings_oracle_capped(x: &Word, cap: usize) -> Result<BuildingCount> {
    let n = x.len();
    if n > cap {
        return Err(Error::CapExceeded { len: n, cap });
    }
    // The full arrival set is x itself.
    if !x.is_proper() {
        return Ok(BuildingCount(BigUint::zero()));
    }
    let mut arrival: Vec<usize> = (0..n).collect();
    let mut count: u64 = 0;
    loop {
        if is_proper_building(x.symbols(), &arrival) {
            count += 1;
        }
        if !next_permutation(&mut arrival) {
            break;
        }
    }
    Ok(BuildingCount::from(count))
}

/// Relabels colors in order of first appearance, e.g. `3,1,3,2 -> 1,2,1,3`.
pub fn canonical_key(symbols: &[u8]) -> Vec<u8> {
    let mut map = [0u8; 256];
    let mut next = 1u8;
    symbols
        .iter()
        .map(|&s| {
            let slot = &mut map[s as usize];
            if *slot == 0 {
                *slot = next;
                next += 1;
            }
            *slot
        })
        .collect()
}

/// Memo table for the deletion recursion. One table may serve any number of
/// queries (and any alphabet); it is not synchronized, so give each thread
/// its own.
#[derive(Debug, Default, Clone)]
pub struct BuildingTable {
    memo: HashMap<Vec<u8>, BigUint>,
}

impl BuildingTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn count_word(&mut self, x: &Word) -> BuildingCount {
        BuildingCount(self.count(x.symbols()))
    }

    /// `B(x)` for a raw symbol slice.
    pub fn count(&mut self, x: &[u8]) -> BigUint {
        if !is_proper(x) {
            return BigUint::zero();
        }
        if x.len() <= 1 {
            return BigUint::one();
        }
        let key = canonical_key(x);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        let mut sub = Vec::with_capacity(key.len() - 1);
        for i in 0..key.len() {
            sub.clear();
            sub.extend_from_slice(&key[..i]);
            sub.extend_from_slice(&key[i + 1..]);
            total += self.count(&sub);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `B(x)` via the memoized recursion, with a fresh table.
pub fn count_buildings(x: &Word) -> BuildingCount {
    BuildingTable::new().count_word(x)
}

/// `Σ(q, n) = ∏_{k=1..n} [k(q-2)+2]`, the total of `B` over `[q]^n`.
pub fn total_buildings(q: u32, n: usize) -> BuildingCount {
    let mut acc = BigUint::one();
    for k in 1..=n as u64 {
        acc *= BigUint::from(k * (q as u64 - 2) + 2);
    }
    BuildingCount(acc)
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `Σ_a B(xa) = [n(q-2)+q] B(x)` for every `x ∈ [q]^n`, `n ≤ max_len`.
pub fn check_consistency_identity(table: &mut BuildingTable, q: u8, max_len: usize) -> Check {
    let mut check = Check::new(format!("extension sum, q={q}, n<={max_len}"));
    for n in 0..=max_len {
        let factor = BigUint::from(n as u64 * (q as u64 - 2) + q as u64);
        for x in Word::all(q, n) {
            let mut ext = x.symbols().to_vec();
            ext.push(0);
            let mut lhs = BigUint::zero();
            for a in 1..=q {
                *ext.last_mut().unwrap() = a;
                lhs += table.count(&ext);
            }
            let rhs = &factor * table.count(x.symbols());
            check.record(lhs == rhs, || format!("x={x}: {lhs} != {rhs}"));
        }
    }
    check
}

/// For `q = 4`: `Σ_a B(xay) = 2 C(m+n+2, m+1) B(x) B(y)`;
/// for `q = 3`: `Σ_{a,b} B(xaby) = 2 C(m+n+4, m+2) B(x) B(y)`;
/// over all `x ∈ [q]^m`, `y ∈ [q]^n` with `m + n ≤ max_total`.
pub fn check_dependence_identity(
    table: &mut BuildingTable,
    q: u8,
    max_total: usize,
) -> Result<Check> {
    let gap = match q {
        4 => 1,
        3 => 2,
        _ => return Err(out_of_range("q", "the gap identity is stated for q = 3 or 4")),
    };
    let mut check = Check::new(format!("gap product, q={q}, m+n<={max_total}"));
    let mut buf = Vec::new();
    for total in 0..=max_total {
        for m in 0..=total {
            let n = total - m;
            let coeff = BigUint::from(2u32) * binomial((m + n + 2 * gap) as u64, (m + gap) as u64);
            for x in Word::all(q, m) {
                let bx = table.count(x.symbols());
                for y in Word::all(q, n) {
                    let rhs = &coeff * &bx * table.count(y.symbols());
                    let mut lhs = BigUint::zero();
                    for w in Word::all(q, gap) {
                        buf.clear();
                        buf.extend_from_slice(x.symbols());
                        buf.extend_from_slice(w.symbols());
                        buf.extend_from_slice(y.symbols());
                        lhs += table.count(&buf);
                    }
                    check.record(lhs == rhs, || format!("x={x}, y={y}: {lhs} != {rhs}"));
                }
            }
        }
    }
    Ok(check)
}

/// `Σ_{x ∈ [q]^n} [B(1x2) - B(1x1)]`, computed by summation.
pub fn two_point_gap(table: &mut BuildingTable, q: u8, n: usize) -> BigInt {
    let mut acc = BigInt::zero();
    let mut buf = Vec::with_capacity(n + 2);
    for x in Word::all(q, n) {
        buf.clear();
        buf.push(1);
        buf.extend_from_slice(x.symbols());
        buf.push(2);
        acc += BigInt::from(table.count(&buf));
        *buf.last_mut().unwrap() = 1;
        acc -= BigInt::from(table.count(&buf));
    }
    acc
}

/// `2 ∏_{k=1..n} [k(q-2)-2]`.
pub fn two_point_closed_form(q: u8, n: usize) -> BigInt {
    let mut acc = BigInt::from(2);
    for k in 1..=n as i64 {
        acc *= BigInt::from(k * (q as i64 - 2) - 2);
    }
    acc
}

pub fn check_two_point_identity(table: &mut BuildingTable, q: u8, max_len: usize) -> Check {
    let mut check = Check::new(format!("two-point difference, q={q}, n<={max_len}"));
    for n in 0..=max_len {
        let lhs = two_point_gap(table, q, n);
        let rhs = two_point_closed_form(q, n);
        check.record(lhs == rhs, || format!("n={n}: {lhs} != {rhs}"));
    }
    check
}

/// Runs every identity that applies to `q` up to `max_len`. Failures are
/// reported in the returned checks, never raised.
pub fn verify_identities(q: u8, max_len: usize) -> Result<Vec<Check>> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q as u32));
    }
    if (q as f64).powi(max_len as i32 + 2) > 5.0e6 {
        return Err(out_of_range("max_len", "exhaustive enumeration too large"));
    }
    let mut table = BuildingTable::new();
    let mut checks = vec![check_consistency_identity(&mut table, q, max_len)];
    if q == 3 || q == 4 {
        checks.push(check_dependence_identity(&mut table, q, max_len)?);
    }
    checks.push(check_two_point_identity(&mut table, q, max_len));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(q: u8, s: &[u8]) -> Word {
        Word::new(q, s.to_vec()).unwrap()
    }

    fn b(q: u8, s: &[u8]) -> u64 {
        count_buildings(&w(q, s)).0.try_into().unwrap()
    }

    fn oracle(q: u8, s: &[u8]) -> u64 {
        count_buildings_oracle(&w(q, s)).unwrap().0.try_into().unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle(4, &[1]), 1);
        assert_eq!(oracle(4, &[1, 2, 1]), 4);
        assert_eq!(oracle(4, &[1, 1]), 0);
        assert_eq!(oracle(4, &[]), 1);
    }

    #[test]
    fn oracle_cap() {
        let x = w(2, &[1, 2, 1, 2, 1, 2, 1, 2, 1]);
        assert_eq!(
            count_buildings_oracle(&x),
            Err(Error::CapExceeded { len: 9, cap: 8 })
        );
    }

    #[test]
    fn identity_is_a_building_of_121_but_231_is_not() {
        assert!(is_proper_building(&[1, 2, 1], &[0, 1, 2]));
        // σ = (2,3,1): position 3 arrives first, then position 1.
        assert!(!is_proper_building(&[1, 2, 1], &[1, 2, 0]));
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(b(4, &[1, 2, 3]), 6);
        assert_eq!(b(4, &[1, 2, 1]), 4);
        assert_eq!(b(4, &[2, 1]) + b(4, &[1, 1]) + b(4, &[1, 2]), 4);
        assert_eq!(b(4, &[]), 1);
        assert_eq!(b(4, &[3, 3]), 0);
    }

    #[test]
    fn alternating_length_ten_matches_oracle_truncations() {
        let long: Vec<u8> = (0..10).map(|i| 1 + (i % 2) as u8).collect();
        for n in 0..=8 {
            assert_eq!(b(2, &long[..n]), oracle(2, &long[..n]), "n={n}");
        }
        // Σ(2, n) = 2^n is shared by the two proper words of [2]^n.
        assert_eq!(b(2, &long), 1 << 9);
    }

    #[test]
    fn totals_examples() {
        assert_eq!(total_buildings(4, 2), BuildingCount::from(24));
        assert_eq!(total_buildings(3, 3), BuildingCount::from(60));
        assert_eq!(total_buildings(2, 5), BuildingCount::from(32));
        assert_eq!(total_buildings(4, 0), BuildingCount::from(1));
    }

    #[test]
    fn totals_match_closed_forms() {
        let mut fact = BigUint::one();
        for n in 1..=10usize {
            fact *= BigUint::from(n);
            let two_n = BigUint::one() << n;
            assert_eq!(total_buildings(2, n).0, two_n);
            assert_eq!(total_buildings(3, n).0, &fact * BigUint::from((n + 1) * (n + 2)) / 2u32);
            assert_eq!(total_buildings(4, n).0, &fact * BigUint::from(n + 1) * &two_n);
        }
    }

    #[test]
    fn totals_match_enumeration() {
        let mut table = BuildingTable::new();
        for q in 2..=5u8 {
            for n in 0..=6 {
                let sum: BigUint = Word::all(q, n).map(|x| table.count(x.symbols())).sum();
                assert_eq!(sum, total_buildings(q as u32, n).0, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn canonical_key_relabels() {
        assert_eq!(canonical_key(&[3, 1, 3, 2]), vec![1, 2, 1, 3]);
        assert_eq!(canonical_key(&[]), Vec::<u8>::new());
    }

    #[test]
    fn identities_q4() {
        let checks = verify_identities(4, 4).unwrap();
        assert_eq!(checks.len(), 3);
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
    }

    #[test]
    fn two_point_q5_n1() {
        let mut t = BuildingTable::new();
        assert_eq!(two_point_gap(&mut t, 5, 1), BigInt::from(2));
        assert_eq!(two_point_closed_form(5, 1), BigInt::from(2));
    }

    #[test]
    fn two_point_vanishes_for_q4() {
        let mut t = BuildingTable::new();
        for n in 1..=5 {
            assert_eq!(two_point_gap(&mut t, 4, n), BigInt::zero());
        }
    }

    #[test]
    fn dependence_identity_rejects_other_q() {
        let mut t = BuildingTable::new();
        assert!(check_dependence_identity(&mut t, 5, 2).is_err());
    }

    #[test]
    fn dependence_identity_fails_for_q5() {
        // 4·4 = 16 versus 3·6 = 18: the sum depends on more than lengths.
        let mut t = BuildingTable::new();
        let s1: BigUint = (1..=5u8).map(|a| t.count(&[1, a, 1])).sum();
        let s2: BigUint = (1..=5u8).map(|a| t.count(&[1, a, 2])).sum();
        assert_ne!(s1, s2);
    }
}
