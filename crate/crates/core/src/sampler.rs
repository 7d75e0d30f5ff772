//! Exact samplers for finite windows of the colorings.
//!
//! The insertion sampler grows a proper word one symbol at a time. From a
//! word of length `L`, every valid (location, color) insertion is equally
//! likely: each of the `L-1` interior gaps admits `q-2` colors and each end
//! admits `q-1`, for `(L+1)(q-2)+2` insertions in all. The result after
//! `n-1` steps has the law `B(x)/Σ(q,n)`.
//!
//! The rejection sampler draws an i.i.d. uniform word and a uniform arrival
//! order and accepts when the order is a proper building of the word.
//!
//! All choices are made with integer draws on exact denominators.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::buildings::{is_proper_building, next_permutation, total_buildings};
use crate::error::{out_of_range, Error, Result};
use crate::measure::CylinderMeasure;
use crate::rng::SeededRng;
use crate::word::{is_proper, Word};

pub const MAX_LAW_LEN: usize = 5;
pub const MAX_REJECTION_LEN: usize = 12;

fn check_q(q: u8) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q as u32));
    }
    Ok(())
}

/// Number of valid insertions into a proper word of length `len ≥ 1`.
fn insertion_count(q: u8, len: usize) -> usize {
    (len + 1) * (q as usize - 2) + 2
}

/// The `r`-th valid insertion into `cur` (order: left end, right end, then
/// interior gaps left to right), `0 ≤ r < insertion_count(q, cur.len())`.
fn apply_insertion(q: u8, cur: &[u8], mut r: usize) -> Vec<u8> {
    let nth_color_avoiding = |avoid: &[u8], k: usize| -> u8 {
        (1..=q)
            .filter(|c| !avoid.contains(c))
            .nth(k)
            .expect("color index in range")
    };
    let end_choices = q as usize - 1;
    let len = cur.len();
    let mut out = Vec::with_capacity(len + 1);
    if r < end_choices {
        out.push(nth_color_avoiding(&cur[..1], r));
        out.extend_from_slice(cur);
        return out;
    }
    r -= end_choices;
    if r < end_choices {
        out.extend_from_slice(cur);
        out.push(nth_color_avoiding(&cur[len - 1..], r));
        return out;
    }
    r -= end_choices;
    let inner = q as usize - 2;
    let (gap, k) = (r / inner, r % inner);
    out.extend_from_slice(&cur[..=gap]);
    out.push(nth_color_avoiding(&cur[gap..gap + 2], k));
    out.extend_from_slice(&cur[gap + 1..]);
    out
}

/// A proper word of length `n` with the law of `(X_1, …, X_n)`.
pub fn sample_insertion(q: u8, n: usize, rng: &mut SeededRng) -> Result<Word> {
    check_q(q)?;
    if n == 0 {
        return Word::empty(q);
    }
    let mut cur = vec![rng.gen_range(1..=q)];
    while cur.len() < n {
        let r = rng.gen_range(0..insertion_count(q, cur.len()));
        cur = apply_insertion(q, &cur, r);
    }
    debug_assert!(is_proper(&cur));
    Word::new(q, cur)
}

/// Exact output law of [`sample_insertion`], by enumerating every
/// insertion history.
pub fn insertion_law(q: u8, n: usize) -> Result<BTreeMap<Word, BigRational>> {
    check_q(q)?;
    if n > MAX_LAW_LEN {
        return Err(out_of_range("n", format!("must be <= {MAX_LAW_LEN}")));
    }
    let mut law: BTreeMap<Vec<u8>, BigRational> = BTreeMap::new();
    if n == 0 {
        law.insert(Vec::new(), BigRational::one());
    } else {
        let first = BigRational::new(BigInt::one(), BigInt::from(q));
        for c in 1..=q {
            law.insert(vec![c], first.clone());
        }
    }
    for len in 1..n {
        let count = insertion_count(q, len);
        let step = BigRational::new(BigInt::one(), BigInt::from(count));
        let mut next: BTreeMap<Vec<u8>, BigRational> = BTreeMap::new();
        for (word, pr) in &law {
            let share = pr * &step;
            for r in 0..count {
                *next.entry(apply_insertion(q, word, r)).or_insert_with(BigRational::zero) +=
                    &share;
            }
        }
        law = next;
    }
    law.into_iter()
        .map(|(w, p)| Ok((Word::new(q, w)?, p)))
        .collect()
}

/// One attempt of the rejection sampler: `Some(Z)` when the uniform arrival
/// order is a proper building of the uniform word `Z`.
pub fn rejection_trial(q: u8, n: usize, rng: &mut SeededRng) -> Option<Word> {
    let z: Vec<u8> = (0..n).map(|_| rng.gen_range(1..=q)).collect();
    let mut arrival: Vec<usize> = (0..n).collect();
    arrival.shuffle(rng);
    if is_proper_building(&z, &arrival) {
        Some(Word::new(q, z).expect("symbols drawn from [q]"))
    } else {
        None
    }
}

/// Repeats [`rejection_trial`] until acceptance. Returns the accepted word
/// and the number of attempts used (at least 1).
pub fn sample_rejection(q: u8, n: usize, rng: &mut SeededRng) -> Result<(Word, u64)> {
    check_q(q)?;
    if q > 6 {
        return Err(out_of_range("q", "rejection sampler supports q in 2..=6"));
    }
    if n > MAX_REJECTION_LEN {
        return Err(out_of_range("n", format!("must be <= {MAX_REJECTION_LEN}")));
    }
    let mut attempts = 0u64;
    loop {
        attempts += 1;
        if let Some(w) = rejection_trial(q, n, rng) {
            return Ok((w, attempts));
        }
    }
}

/// `Σ(q,n) / (n! q^n)`, the chance that one rejection trial succeeds.
pub fn acceptance_probability(q: u8, n: usize) -> BigRational {
    let mut denom = BigUint::one();
    for k in 1..=n {
        denom *= BigUint::from(k) * BigUint::from(q);
    }
    BigRational::new(
        BigInt::from(total_buildings(q as u32, n).0),
        BigInt::from(denom),
    )
}

/// Conditional law of the accepted word, by enumerating every pair
/// (word, arrival order).
pub fn rejection_law(q: u8, n: usize) -> Result<BTreeMap<Word, BigRational>> {
    check_q(q)?;
    if n > 4 {
        return Err(out_of_range("n", "exhaustive pair enumeration needs n <= 4"));
    }
    let mut counts: BTreeMap<Word, u64> = BTreeMap::new();
    let mut accepted = 0u64;
    for z in Word::all(q, n) {
        let mut arrival: Vec<usize> = (0..n).collect();
        let mut hits = 0;
        loop {
            if is_proper_building(z.symbols(), &arrival) {
                hits += 1;
            }
            if !next_permutation(&mut arrival) {
                break;
            }
        }
        if hits > 0 {
            accepted += hits;
            counts.insert(z, hits);
        }
    }
    Ok(counts
        .into_iter()
        .map(|(w, c)| (w, BigRational::new(BigInt::from(c), BigInt::from(accepted))))
        .collect())
}

/// Cylinder law on `[q]^n`, restricted to its support.
pub fn exact_law(q: u8, n: usize) -> Result<BTreeMap<Word, BigRational>> {
    let mut measure = CylinderMeasure::new(q)?;
    Ok(Word::all(q, n)
        .filter_map(|x| {
            let p = measure.prob(x.symbols());
            (!p.is_zero()).then_some((x, p))
        })
        .collect())
}

/// Total-variation distance between the empirical law of `samples`
/// insertion draws and the exact law. With no samples the empirical law is
/// taken to be empty and the distance is 1.
pub fn empirical_distance(
    q: u8,
    n: usize,
    samples: u64,
    rng: &mut SeededRng,
) -> Result<BigRational> {
    if n > 6 {
        return Err(out_of_range("n", "must be <= 6"));
    }
    let exact = exact_law(q, n)?;
    if samples == 0 {
        return Ok(BigRational::one());
    }
    let mut counts: HashMap<Word, u64> = HashMap::new();
    for _ in 0..samples {
        let w = sample_insertion(q, n, rng)?;
        assert!(w.is_proper(), "sampler emitted improper word {w}");
        *counts.entry(w).or_insert(0) += 1;
    }
    let total = BigInt::from(samples);
    let mut sum = BigRational::zero();
    for (w, p) in &exact {
        let c = counts.remove(w).unwrap_or(0);
        sum += (BigRational::new(BigInt::from(c), total.clone()) - p).abs();
    }
    // words outside the exact support
    for (_, c) in counts {
        sum += BigRational::new(BigInt::from(c), total.clone());
    }
    Ok(sum / BigInt::from(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::cylinder_prob;
    use crate::word::rational;

    #[test]
    fn insertion_q4_n1_uniform() {
        let law = insertion_law(4, 1).unwrap();
        assert_eq!(law.len(), 4);
        assert!(law.values().all(|p| *p == rational(1, 4)));
    }

    #[test]
    fn insertion_q4_n2_uniform_on_proper_pairs() {
        let law = insertion_law(4, 2).unwrap();
        assert_eq!(law.len(), 12);
        assert!(law.values().all(|p| *p == rational(1, 12)));
    }

    #[test]
    fn insertion_law_examples() {
        let law3 = insertion_law(3, 3).unwrap();
        assert_eq!(law3[&Word::new(3, vec![1, 2, 1]).unwrap()], rational(1, 15));
        let law4 = insertion_law(4, 4).unwrap();
        let x = Word::new(4, vec![1, 2, 1, 2]).unwrap();
        assert_eq!(law4[&x], cylinder_prob(4, &x).unwrap());
    }

    #[test]
    fn insertion_law_equals_cylinder_law() {
        for q in [3u8, 4] {
            for n in 0..=MAX_LAW_LEN {
                assert_eq!(insertion_law(q, n).unwrap(), exact_law(q, n).unwrap(), "q={q} n={n}");
            }
        }
    }

    #[test]
    fn insertion_law_for_other_q() {
        for q in [2u8, 5] {
            for n in 0..=4 {
                assert_eq!(insertion_law(q, n).unwrap(), exact_law(q, n).unwrap());
            }
        }
    }

    #[test]
    fn insertion_law_cap() {
        assert!(insertion_law(4, 6).is_err());
    }

    #[test]
    fn samples_are_proper_and_deterministic() {
        let mut a = SeededRng::new(11);
        let mut b = SeededRng::new(11);
        for _ in 0..200 {
            let x = sample_insertion(4, 20, &mut a).unwrap();
            assert!(x.is_proper());
            assert_eq!(x.len(), 20);
            assert_eq!(x, sample_insertion(4, 20, &mut b).unwrap());
        }
        assert!(sample_insertion(3, 0, &mut a).unwrap().is_empty());
    }

    #[test]
    fn acceptance_probability_closed_forms() {
        for n in 1..=10usize {
            assert_eq!(acceptance_probability(4, n), rational(n as i64 + 1, 1 << n));
            let choose = ((n + 2) * (n + 1) / 2) as i64;
            assert_eq!(acceptance_probability(3, n), rational(choose, 3i64.pow(n as u32)));
        }
        assert_eq!(acceptance_probability(2, 3), rational(1, 6));
    }

    #[test]
    fn rejection_law_equals_cylinder_law() {
        for q in [3u8, 4] {
            for n in 0..=4 {
                assert_eq!(rejection_law(q, n).unwrap(), exact_law(q, n).unwrap());
            }
        }
    }

    #[test]
    fn rejection_sampler_outputs_proper_words() {
        let mut rng = SeededRng::new(3);
        let mut attempts = 0;
        for _ in 0..100 {
            let (w, a) = sample_rejection(4, 5, &mut rng).unwrap();
            assert!(w.is_proper());
            assert!(a >= 1);
            attempts += a;
        }
        // mean attempts ≈ 32/6
        assert!(attempts > 100);
        assert!(sample_rejection(7, 3, &mut rng).is_err());
        assert!(sample_rejection(4, 13, &mut rng).is_err());
    }

    #[test]
    fn empirical_distance_conventions() {
        let mut rng = SeededRng::new(5);
        assert_eq!(empirical_distance(4, 3, 0, &mut rng).unwrap(), rational(1, 1));
        let tv = empirical_distance(4, 3, 50_000, &mut rng).unwrap();
        assert!(tv < rational(1, 50), "tv={tv}");
    }
}
