use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::word::{Sign, Word};

/// `Q(x)` through the `Q_r^k` recurrence on suffixes of `x`, in `O(n³)`
/// big-integer additions. Non-proper words give `0`.
///
/// `Q_r^k` sums over partial dispersed Dyck words that need `k` leading `+`s
/// to be completed, with `α` restricted to permutations starting at `r`.
pub fn q_fast(x: &Word) -> Result<BigInt> {
    let (y, z) = x.to_sign_rows()?;
    if !x.is_proper() {
        return Ok(BigInt::zero());
    }
    let n = x.len();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let y = y.signs();
    let z = z.signs();
    let width = n + 2;

    // table[r - 1][k] for the current suffix; r runs over 1..=len+1
    let last = n - 1;
    let mut table: Vec<Vec<BigInt>> = (1..=2usize)
        .map(|r| {
            let mut row = vec![BigInt::zero(); width];
            if y[last] == Sign::parity(r + 1) {
                row[0] = BigInt::one();
            }
            row
        })
        .collect();

    for start in (0..last).rev() {
        let len = n - start;
        let (y1, y2) = (y[start], y[start + 1]);
        let (z1, z2) = (z[start].value(), z[start + 1].value());

        // prefix[k][s] = Σ_{t ≤ s} table[t - 1][k], s = 0..=len
        let prefix: Vec<Vec<BigInt>> = (0..width)
            .map(|k| {
                let mut acc = BigInt::zero();
                let mut p = Vec::with_capacity(len + 1);
                p.push(BigInt::zero());
                for row in &table {
                    acc += &row[k];
                    p.push(acc.clone());
                }
                p
            })
            .collect();
        let range_sum = |k_src: usize, r: usize, k_cur: usize| -> BigInt {
            if k_src >= width {
                return BigInt::zero();
            }
            let p = &prefix[k_src];
            if y1 == Sign::parity(k_cur) {
                // s ∈ {r, …, len}
                if r > len {
                    BigInt::zero()
                } else {
                    &p[len] - &p[r - 1]
                }
            } else {
                // s ∈ {1, …, r - 1}
                p[r - 1].clone()
            }
        };

        let mut next = Vec::with_capacity(len + 1);
        for r in 1..=len + 1 {
            let mut row = vec![BigInt::zero(); width];
            for (k, cell) in row.iter_mut().enumerate().take(len + 1) {
                *cell = if y1 == y2 {
                    range_sum(k, r, k) * 2
                } else if k == 0 {
                    range_sum(0, r, 0) - range_sum(1, r, 0) * z1
                } else {
                    range_sum(k - 1, r, k) * z2 - range_sum(k + 1, r, k) * z1
                };
            }
            next.push(row);
        }
        table = next;
    }
    Ok(table.iter().map(|row| &row[0]).sum())
}
