use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::word::{Sign, SignWord};

/// `α(y)`: permutations `π ∈ S_{n+1}` with `π_i < π_{i+1}` exactly where
/// `y_i = +`.
///
/// Dynamic program over the rank of the last placed element among those
/// placed so far; `O(n²)` additions.
pub fn alpha(y: &SignWord) -> BigUint {
    let mut counts = vec![BigUint::one()];
    for &s in y.signs() {
        let len = counts.len() + 1;
        let mut next = vec![BigUint::zero(); len];
        match s {
            Sign::Plus => {
                // new last element has rank j; previous rank < j
                let mut acc = BigUint::zero();
                for j in 0..len {
                    next[j] = acc.clone();
                    if j < counts.len() {
                        acc += &counts[j];
                    }
                }
            }
            Sign::Minus => {
                // previous rank ≥ j
                let mut acc = BigUint::zero();
                for j in (0..len).rev() {
                    if j < counts.len() {
                        acc += &counts[j];
                    }
                    next[j] = acc.clone();
                }
            }
        }
        counts = next;
    }
    counts.into_iter().sum()
}

/// Run lengths `k_1, …, k_m`. Zero entries are allowed and make the
/// neighbouring runs coalesce: `(a, b, 0, c, d) ~ (a, b + c, d)` and
/// `(0, a, b) ~ (a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RunComposition(pub Vec<usize>);

impl RunComposition {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// The sign word with these run lengths, starting with `+`.
    pub fn to_sign_word(&self) -> SignWord {
        SignWord::from_runs(Sign::Plus, &self.0)
    }

    /// Positive run lengths after coalescing zeros.
    pub fn normalized(&self) -> RunComposition {
        RunComposition(self.to_sign_word().runs())
    }
}

/// `α(k_1, …, k_m)` computed through the maximum-removal recursion
/// `α(k) = Σ_j α(k_1, …, k_j - 1, …, k_m)`, memoized on normalized
/// compositions. This route is independent of the descent DP in [`alpha`].
pub fn alpha_runs(c: &RunComposition) -> BigUint {
    fn go(c: Vec<usize>, memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
        if c.is_empty() {
            return BigUint::one();
        }
        if let Some(v) = memo.get(&c) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for j in 0..c.len() {
            let mut d = c.clone();
            d[j] -= 1;
            total += go(RunComposition(d).normalized().0, memo);
        }
        memo.insert(c, total.clone());
        total
    }
    go(c.normalized().0, &mut HashMap::new())
}

/// `q_m = P(U_1 < U_2 > U_3 < … > U_{2m+1})` from
/// `(2m+1) q_m = Σ_{i=1..m} q_{i-1} q_{m-i}`, `q_0 = 1`.
pub fn peak_probs(m_max: usize) -> Vec<BigRational> {
    let mut q = vec![BigRational::one()];
    for m in 1..=m_max {
        let s: BigRational = (1..=m).map(|i| &q[i - 1] * &q[m - i]).sum();
        q.push(s / BigInt::from(2 * m + 1));
    }
    q
}

pub fn peak_prob(m: usize) -> BigRational {
    peak_probs(m).pop().expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::rational;

    fn alpha_by_enumeration(y: &SignWord) -> u64 {
        let n = y.len() + 1;
        let mut count = 0;
        for p in itertools::Itertools::permutations(0..n, n) {
            if y
                .signs()
                .iter()
                .enumerate()
                .all(|(i, s)| (p[i] < p[i + 1]) == (*s == Sign::Plus))
            {
                count += 1;
            }
        }
        count
    }

    fn sw(s: &str) -> SignWord {
        s.parse().unwrap()
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&sw("+-++")), BigUint::from(9u32));
        assert_eq!(alpha(&sw("+-")), BigUint::from(2u32));
        assert_eq!(alpha(&sw("")), BigUint::one());
        for n in 1..=12 {
            assert_eq!(alpha(&SignWord::from_runs(Sign::Plus, &[n])), BigUint::one());
        }
    }

    #[test]
    fn alpha_matches_enumeration() {
        for n in 0..=8 {
            for y in SignWord::all(n) {
                assert_eq!(alpha(&y), BigUint::from(alpha_by_enumeration(&y)), "y={y}");
            }
        }
    }

    #[test]
    fn alternating_runs_give_zigzag_numbers() {
        // value taken from the enumeration, not from a table
        let zig = alpha_by_enumeration(&sw("+-+-"));
        assert_eq!(alpha_runs(&RunComposition(vec![1, 1, 1, 1])), BigUint::from(zig));
        assert_eq!(zig, 16);
    }

    #[test]
    fn alpha_runs_examples() {
        assert_eq!(alpha_runs(&RunComposition(vec![7])), BigUint::one());
        assert_eq!(alpha_runs(&RunComposition(vec![])), BigUint::one());
        let c = RunComposition(vec![2, 3, 1]);
        let expected = alpha(&c.to_sign_word());
        assert_eq!(alpha_runs(&c), expected);
        let reduced: BigUint = [vec![1, 3, 1], vec![2, 2, 1], vec![2, 3, 0]]
            .into_iter()
            .map(|d| alpha(&RunComposition(d).to_sign_word()))
            .sum();
        assert_eq!(expected, reduced);
    }

    #[test]
    fn zero_runs_coalesce() {
        assert_eq!(
            RunComposition(vec![2, 1, 0, 3, 1]).normalized(),
            RunComposition(vec![2, 4, 1])
        );
        assert_eq!(RunComposition(vec![0, 2, 3]).normalized(), RunComposition(vec![2, 3]));
        assert_eq!(RunComposition(vec![2, 0, 0, 3]).normalized(), RunComposition(vec![2, 3]));
    }

    fn compositions(total: usize) -> Vec<Vec<usize>> {
        if total == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for k in 1..=total {
            for mut rest in compositions(total - k) {
                rest.insert(0, k);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn run_recursion_holds_for_all_small_compositions() {
        for total in 1..=10 {
            for c in compositions(total) {
                let lhs = alpha(&RunComposition(c.clone()).to_sign_word());
                let rhs: BigUint = (0..c.len())
                    .map(|j| {
                        let mut d = c.clone();
                        d[j] -= 1;
                        alpha(&RunComposition(d).to_sign_word())
                    })
                    .sum();
                assert_eq!(lhs, rhs, "{c:?}");
                assert_eq!(alpha_runs(&RunComposition(c.clone())), lhs);
            }
        }
    }

    #[test]
    fn peak_examples() {
        assert_eq!(peak_prob(0), rational(1, 1));
        assert_eq!(peak_prob(1), rational(1, 3));
        assert_eq!(peak_prob(2), rational(2, 15));
        for m in 0..=4 {
            let y = SignWord::new(
                (0..2 * m)
                    .map(|i| if i % 2 == 0 { Sign::Plus } else { Sign::Minus })
                    .collect(),
            );
            let fact: u64 = (1..=(2 * m as u64 + 1)).product();
            assert_eq!(peak_prob(m), rational(alpha_by_enumeration(&y) as i64, fact as i64));
        }
    }
}
