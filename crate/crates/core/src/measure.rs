//! Cylinder probabilities of the colorings and the checks built on them.
//!
//! For any `q ≥ 2`, `P_q(x) = B(x) / Σ(q, |x|)` is a consistent family of
//! window laws. For `q = 4` it is 1-dependent and for `q = 3` it is
//! 2-dependent; for other `q` it is not finitely dependent, and
//! [`check_k_dependence`] produces a witness.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::buildings::{total_buildings, BuildingTable};
use crate::error::{out_of_range, Error, Result};
use crate::report::Check;
use crate::word::{fmt_rational, rational, Word};

/// Lazily evaluated window law `x ↦ B(x)/Σ(q,|x|)`.
#[derive(Debug, Clone)]
pub struct CylinderMeasure {
    q: u8,
    table: BuildingTable,
}

impl CylinderMeasure {
    pub fn new(q: u8) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q as u32));
        }
        Ok(CylinderMeasure {
            q,
            table: BuildingTable::new(),
        })
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    /// The dependence range the measure is known to have: 1 for `q = 4`,
    /// 2 for `q = 3`, none otherwise.
    pub fn dependence_range(&self) -> Option<usize> {
        match self.q {
            4 => Some(1),
            3 => Some(2),
            _ => None,
        }
    }

    pub fn buildings(&mut self, x: &[u8]) -> BigUint {
        self.table.count(x)
    }

    /// `P(x)` for a raw slice of symbols in `[q]`.
    pub fn prob(&mut self, x: &[u8]) -> BigRational {
        let b = self.table.count(x);
        if b.is_zero() {
            return BigRational::zero();
        }
        let total = total_buildings(self.q as u32, x.len()).0;
        BigRational::new(BigInt::from(b), BigInt::from(total))
    }

    pub fn prob_word(&mut self, x: &Word) -> Result<BigRational> {
        check_alphabet(self.q, x)?;
        Ok(self.prob(x.symbols()))
    }

    /// Probability that the color-1 indicator matches `u` on a window.
    pub fn pattern_prob(&mut self, u: &BinaryPattern) -> BigRational {
        let n = u.len();
        let choices: Vec<Vec<u8>> = u
            .symbols()
            .iter()
            .map(|s| match s {
                PatternSymbol::One => vec![1],
                PatternSymbol::Zero => (2..=self.q).collect(),
                PatternSymbol::Any => (1..=self.q).collect(),
            })
            .collect();
        if choices.iter().any(|c| c.is_empty()) {
            return BigRational::zero();
        }
        let mut idx = vec![0usize; n];
        let mut word: Vec<u8> = choices.iter().map(|c| c[0]).collect();
        let mut sum = BigUint::zero();
        loop {
            sum += self.table.count(&word);
            // odometer step
            let mut i = n;
            loop {
                if i == 0 {
                    let total = total_buildings(self.q as u32, n).0;
                    return BigRational::new(BigInt::from(sum), BigInt::from(total));
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    word[i] = choices[i][idx[i]];
                    break;
                }
                idx[i] = 0;
                word[i] = choices[i][0];
            }
        }
    }
}

fn check_alphabet(q: u8, x: &Word) -> Result<()> {
    for (i, &s) in x.symbols().iter().enumerate() {
        if s > q {
            return Err(Error::InvalidSymbol {
                symbol: s as u32,
                position: i + 1,
                q,
            });
        }
    }
    Ok(())
}

/// `B(x)/Σ(q,|x|)` with a fresh memo table.
pub fn cylinder_prob(q: u8, x: &Word) -> Result<BigRational> {
    CylinderMeasure::new(q)?.prob_word(x)
}

/// Counterexample to `Σ_{w ∈ [q]^k} P(u w v) = P(u) P(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DependenceWitness {
    pub u: Word,
    pub v: Word,
    /// `Σ_w P(uwv)`
    pub joint: String,
    /// `P(u) P(v)`
    pub product: String,
    /// `joint - product`
    pub gap: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DependenceReport {
    pub q: u8,
    pub k: usize,
    pub max_len: usize,
    pub cases: u64,
    pub passed: bool,
    pub witness: Option<DependenceWitness>,
}

impl DependenceReport {
    pub fn to_check(&self) -> Check {
        let mut c = Check::new(format!(
            "{}-dependence, q={}, |u|,|v|<={}",
            self.k, self.q, self.max_len
        ));
        c.cases = self.cases;
        c.passed = self.passed;
        if let Some(w) = &self.witness {
            c.detail = format!("u={}, v={}, gap={}", w.u, w.v, w.gap);
        }
        c
    }
}

/// Checks `Σ_{w ∈ [q]^k} P(u·w·v) = P(u)P(v)` for all `u, v` with
/// `|u|, |v| ≤ max_len`, in order of increasing `|u| + |v|`. Stops at the
/// first failure and reports it as a witness.
pub fn check_k_dependence(q: u8, k: usize, max_len: usize) -> Result<DependenceReport> {
    let mut measure = CylinderMeasure::new(q)?;
    if (q as f64).powi((2 * max_len + k) as i32) > 2.0e7 {
        return Err(out_of_range("max_len", "exhaustive range too large"));
    }
    let mut report = DependenceReport {
        q,
        k,
        max_len,
        cases: 0,
        passed: true,
        witness: None,
    };
    let gaps: Vec<Word> = Word::all(q, k).collect();
    let mut buf = Vec::new();
    for total in 0..=2 * max_len {
        for m in total.saturating_sub(max_len)..=total.min(max_len) {
            let n = total - m;
            for u in Word::all(q, m) {
                let pu = measure.prob(u.symbols());
                for v in Word::all(q, n) {
                    let product = &pu * measure.prob(v.symbols());
                    let mut joint = BigRational::zero();
                    for w in &gaps {
                        buf.clear();
                        buf.extend_from_slice(u.symbols());
                        buf.extend_from_slice(w.symbols());
                        buf.extend_from_slice(v.symbols());
                        joint += measure.prob(&buf);
                    }
                    report.cases += 1;
                    if joint != product {
                        report.passed = false;
                        report.witness = Some(DependenceWitness {
                            gap: fmt_rational(&(&joint - &product)),
                            joint: fmt_rational(&joint),
                            product: fmt_rational(&product),
                            u,
                            v,
                        });
                        return Ok(report);
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Consistency on both sides: `Σ_a P(xa) = P(x) = Σ_a P(ax)` for all
/// `|x| ≤ max_len`, and `Σ_{x ∈ [q]^n} P(x) = 1`.
pub fn check_consistency(q: u8, max_len: usize) -> Result<Check> {
    let mut measure = CylinderMeasure::new(q)?;
    let mut check = Check::new(format!("consistency, q={q}, n<={max_len}"));
    for n in 0..=max_len {
        let mut total = BigRational::zero();
        for x in Word::all(q, n) {
            let px = measure.prob(x.symbols());
            total += &px;
            let mut right = BigRational::zero();
            let mut left = BigRational::zero();
            for a in 1..=q {
                let mut xa = x.symbols().to_vec();
                xa.push(a);
                right += measure.prob(&xa);
                let mut ax = vec![a];
                ax.extend_from_slice(x.symbols());
                left += measure.prob(&ax);
            }
            check.record(right == px && left == px, || format!("x={x}"));
        }
        check.record(total.is_one(), || format!("total mass at n={n} is {total}"));
    }
    Ok(check)
}

/// The 3-coloring is the 4-coloring conditioned to avoid color 4:
/// `P₃(x) · Σ_{x' ∈ [3]^n} P₄(x') = P₄(x)` for every `x ∈ [3]^n`.
pub fn check_conditional(n: usize) -> bool {
    let mut p3 = CylinderMeasure::new(3).expect("q=3");
    let mut p4 = CylinderMeasure::new(4).expect("q=4");
    let words: Vec<Word> = Word::all(3, n).collect();
    let mass: BigRational = words.iter().map(|x| p4.prob(x.symbols())).sum();
    words
        .iter()
        .all(|x| p3.prob(x.symbols()) * &mass == p4.prob(x.symbols()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternSymbol {
    Zero,
    One,
    Any,
}

/// A pattern over `{0, 1, *}` for the indicator `J_i = 1[X_i = 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct BinaryPattern {
    symbols: Vec<PatternSymbol>,
}

impl BinaryPattern {
    pub fn new(symbols: Vec<PatternSymbol>) -> Self {
        BinaryPattern { symbols }
    }

    pub fn symbols(&self) -> &[PatternSymbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// `1 0^{k_1-1} 1 0^{k_2-1} 1 … 0^{k_m-1} 1`.
    pub fn from_gaps(gaps: &[usize]) -> Self {
        let mut symbols = vec![PatternSymbol::One];
        for &k in gaps {
            symbols.extend(std::iter::repeat_n(PatternSymbol::Zero, k.saturating_sub(1)));
            symbols.push(PatternSymbol::One);
        }
        BinaryPattern { symbols }
    }

    /// All `2^n` patterns over `{0, 1}` of length `n`.
    pub fn all_binary(n: usize) -> impl Iterator<Item = BinaryPattern> {
        (0u64..1 << n).map(move |bits| BinaryPattern {
            symbols: (0..n)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        PatternSymbol::One
                    } else {
                        PatternSymbol::Zero
                    }
                })
                .collect(),
        })
    }

    pub fn concat(&self, other: &BinaryPattern) -> BinaryPattern {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        BinaryPattern { symbols }
    }
}

impl FromStr for BinaryPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '0' => Ok(PatternSymbol::Zero),
                '1' => Ok(PatternSymbol::One),
                '*' => Ok(PatternSymbol::Any),
                _ => Err(Error::Parse {
                    what: "pattern",
                    input: s.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryPattern::new)
    }
}

impl fmt::Display for BinaryPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            let c = match s {
                PatternSymbol::Zero => '0',
                PatternSymbol::One => '1',
                PatternSymbol::Any => '*',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub const MAX_PATTERN_LEN: usize = 9;

/// `P(J_i = u_i for every i with u_i ≠ *)`, summing the cylinder law over
/// every matching word.
pub fn single_color_prob(q: u8, u: &BinaryPattern) -> Result<BigRational> {
    if u.len() > MAX_PATTERN_LEN {
        return Err(out_of_range("pattern", format!("length must be <= {MAX_PATTERN_LEN}")));
    }
    Ok(CylinderMeasure::new(q)?.pattern_prob(u))
}

/// Probability that the descent indicators `1[b_i > b_{i+1}]` of `|u|+1`
/// i.i.d. fair bits match `u`, by enumeration of all bit strings.
pub fn fair_bit_descent_prob(u: &BinaryPattern) -> BigRational {
    let n = u.len();
    let mut hits: u64 = 0;
    for bits in 0u64..1 << (n + 1) {
        let bit = |i: usize| bits >> i & 1;
        let ok = u.symbols().iter().enumerate().all(|(i, s)| {
            let descent = bit(i) == 1 && bit(i + 1) == 0;
            match s {
                PatternSymbol::Any => true,
                PatternSymbol::One => descent,
                PatternSymbol::Zero => !descent,
            }
        });
        if ok {
            hits += 1;
        }
    }
    rational(hits as i64, 1i64 << (n + 1))
}

/// Taylor coefficients of `G(s) = p s² / (1 - s + p s²)`, the generating
/// function of the gap between consecutive occurrences of one color in a
/// stationary 1-dependent coloring where that color has marginal `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenewalSeries {
    pub p: BigRational,
    /// `coefficients[n]` is the coefficient of `s^n`.
    pub coefficients: Vec<BigRational>,
}

impl RenewalSeries {
    pub fn coefficient(&self, n: usize) -> Option<&BigRational> {
        self.coefficients.get(n)
    }

    pub fn first_negative(&self) -> Option<(usize, BigRational)> {
        self.coefficients
            .iter()
            .enumerate()
            .find(|(_, c)| c.is_negative())
            .map(|(i, c)| (i, c.clone()))
    }

    /// Partial sums never exceed 1.
    pub fn partial_sums_bounded(&self) -> bool {
        let mut acc = BigRational::zero();
        let one = BigRational::one();
        self.coefficients.iter().all(|c| {
            acc += c;
            acc <= one
        })
    }
}

/// Coefficients `g_0 … g_{n_max}` via `g_n = g_{n-1} - p g_{n-2} + p [n = 2]`.
pub fn renewal_series(p: &BigRational, n_max: usize) -> Result<RenewalSeries> {
    if !p.is_positive() || *p > BigRational::one() {
        return Err(out_of_range("p", "need 0 < p <= 1"));
    }
    let mut g: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut v = BigRational::zero();
        if n >= 1 {
            v += &g[n - 1];
        }
        if n >= 2 {
            v -= p * &g[n - 2];
        }
        if n == 2 {
            v += p;
        }
        g.push(v);
    }
    Ok(RenewalSeries {
        p: p.clone(),
        coefficients: g,
    })
}

fn compositions(total: usize, out: &mut Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
    if total == 0 {
        out.push(prefix.clone());
        return;
    }
    for k in 1..=total {
        prefix.push(k);
        compositions(total - k, out, prefix);
        prefix.pop();
    }
}

/// For the 4-coloring (`p = 1/4`):
/// (a) `P(1 0^{k_1-1} 1 … 0^{k_m-1} 1) = p ∏ p_{k_i}` for every gap
///     sequence whose pattern has length `≤ n`;
/// (b) every binary pattern of length `≤ n` has the same probability as
///     for the descent indicators of i.i.d. fair bits.
pub fn check_renewal_structure(n: usize) -> Result<Vec<Check>> {
    if n > MAX_PATTERN_LEN {
        return Err(out_of_range("n", format!("must be <= {MAX_PATTERN_LEN}")));
    }
    let quarter = rational(1, 4);
    let series = renewal_series(&quarter, n)?;
    let mut measure = CylinderMeasure::new(4)?;

    let mut product = Check::new(format!("renewal product, length<={n}"));
    for len in 1..=n {
        let mut comps = Vec::new();
        compositions(len - 1, &mut comps, &mut Vec::new());
        for gaps in comps {
            let pattern = BinaryPattern::from_gaps(&gaps);
            let lhs = measure.pattern_prob(&pattern);
            let rhs = gaps
                .iter()
                .fold(quarter.clone(), |acc, &k| acc * &series.coefficients[k]);
            product.record(lhs == rhs, || {
                format!("{pattern}: {} != {}", fmt_rational(&lhs), fmt_rational(&rhs))
            });
        }
    }

    let mut descent = Check::new(format!("fair-bit descents, length<={n}"));
    for len in 0..=n {
        for u in BinaryPattern::all_binary(len) {
            let lhs = measure.pattern_prob(&u);
            let rhs = fair_bit_descent_prob(&u);
            descent.record(lhs == rhs, || {
                format!("{u}: {} != {}", fmt_rational(&lhs), fmt_rational(&rhs))
            });
        }
    }
    Ok(vec![product, descent])
}

/// `P(X_1, …, X_n ∈ {2,3,4})` for the 4-coloring and the closed form
/// `(n+2)/2^{n+1}`.
pub fn avoid_one_color(n: usize) -> Result<(BigRational, BigRational)> {
    let pattern = BinaryPattern::new(vec![PatternSymbol::Zero; n]);
    let value = single_color_prob(4, &pattern)?;
    let closed = BigRational::new(BigInt::from(n + 2), BigInt::one() << (n + 1));
    Ok((value, closed))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarterReport {
    /// Every coefficient up to `horizon` is nonnegative at `p = 1/4`.
    pub quarter_nonnegative: bool,
    pub horizon: usize,
    /// First negative coefficient at `p = 1/3`: index and value.
    pub third_first_negative: Option<(usize, String)>,
    /// Coefficient of `s^7` at `p = 1/3`.
    pub third_s7: String,
    pub above_quarter_p: String,
    pub above_quarter_first_negative: Option<(usize, String)>,
}

impl QuarterReport {
    pub fn passed(&self) -> bool {
        self.quarter_nonnegative
            && self.third_first_negative.as_ref().map(|(i, v)| (*i, v.as_str()))
                == Some((8, "-1/81"))
            && self.above_quarter_first_negative.is_some()
    }
}

/// At `p = 1/4` the gap law is a proper distribution; any larger `p` forces a
/// negative coefficient.
pub fn check_quarter_bound() -> QuarterReport {
    let horizon = 50;
    let series = |p: BigRational| renewal_series(&p, horizon).expect("valid p");
    let quarter = series(rational(1, 4));
    let third = series(rational(1, 3));
    let above = rational(26, 100);
    let above_series = series(above.clone());
    let fmt = |x: Option<(usize, BigRational)>| x.map(|(i, v)| (i, fmt_rational(&v)));
    QuarterReport {
        quarter_nonnegative: quarter.first_negative().is_none(),
        horizon,
        third_first_negative: fmt(third.first_negative()),
        third_s7: fmt_rational(&third.coefficients[7]),
        above_quarter_p: fmt_rational(&above),
        above_quarter_first_negative: fmt(above_series.first_negative()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(q: u8, s: &[u8]) -> BigRational {
        cylinder_prob(q, &Word::new(q, s.to_vec()).unwrap()).unwrap()
    }

    fn pat(s: &str) -> BinaryPattern {
        s.parse().unwrap()
    }

    #[test]
    fn cylinder_examples() {
        assert_eq!(p(4, &[1]), rational(1, 4));
        assert_eq!(p(4, &[1, 2]), rational(1, 12));
        assert_eq!(p(3, &[1, 2, 1]), rational(1, 15));
        assert_eq!(p(4, &[]), rational(1, 1));
        assert_eq!(p(4, &[2, 2]), rational(0, 1));
    }

    #[test]
    fn symbol_outside_measure_alphabet() {
        let x = Word::new(5, vec![5]).unwrap();
        assert!(cylinder_prob(4, &x).is_err());
    }

    #[test]
    fn dependence_examples() {
        assert!(check_k_dependence(4, 1, 3).unwrap().passed);
        assert!(check_k_dependence(3, 2, 3).unwrap().passed);
        let r = check_k_dependence(3, 1, 2).unwrap();
        assert!(!r.passed);
        let w = r.witness.unwrap();
        assert!(!w.u.is_empty() && !w.v.is_empty());
    }

    #[test]
    fn three_coloring_is_not_one_dependent_at_121() {
        // Σ_a P₃(1a1) = 2/15 but P₃(1)² = 1/9.
        let joint: BigRational = (1..=3).map(|a| p(3, &[1, a, 1])).sum();
        assert_eq!(joint, rational(2, 15));
        assert_ne!(joint, rational(1, 9));
    }

    #[test]
    fn consistency_both_sides() {
        for q in [3, 4] {
            let c = check_consistency(q, 5).unwrap();
            assert!(c.passed, "{c:?}");
        }
        // also for q outside {3, 4}
        assert!(check_consistency(5, 3).unwrap().passed);
    }

    #[test]
    fn symmetry_and_reversal() {
        let mut m = CylinderMeasure::new(4).unwrap();
        let perms: [[u8; 4]; 3] = [[2, 3, 4, 1], [4, 3, 2, 1], [1, 3, 2, 4]];
        for n in 0..=5 {
            for x in Word::all(4, n) {
                let px = m.prob(x.symbols());
                assert_eq!(m.prob(x.reversed().symbols()), px);
                for perm in &perms {
                    assert_eq!(m.prob(x.relabeled(perm).unwrap().symbols()), px);
                }
            }
        }
    }

    #[test]
    fn conditional_law() {
        for n in [1, 3, 6] {
            assert!(check_conditional(n), "n={n}");
        }
        assert_eq!(p(4, &[1]) / rational(3, 4), p(3, &[1]));
    }

    #[test]
    fn single_color_examples() {
        assert_eq!(single_color_prob(4, &pat("1")).unwrap(), rational(1, 4));
        assert_eq!(single_color_prob(4, &pat("11")).unwrap(), rational(0, 1));
        assert_eq!(single_color_prob(3, &pat("1*1")).unwrap(), rational(2, 15));
        assert_eq!(single_color_prob(4, &pat("")).unwrap(), rational(1, 1));
        assert!(single_color_prob(4, &pat("0000000000")).is_err());
        assert!("1x".parse::<BinaryPattern>().is_err());
    }

    #[test]
    fn color_indicator_is_one_dependent() {
        let mut m = CylinderMeasure::new(4).unwrap();
        let star = pat("*");
        for a in 0..=3 {
            for b in 0..=3 {
                for u in BinaryPattern::all_binary(a) {
                    for v in BinaryPattern::all_binary(b) {
                        let lhs = m.pattern_prob(&u.concat(&star).concat(&v));
                        let rhs = m.pattern_prob(&u) * m.pattern_prob(&v);
                        assert_eq!(lhs, rhs, "u={u} v={v}");
                    }
                }
            }
        }
    }

    #[test]
    fn renewal_examples() {
        let third = renewal_series(&rational(1, 3), 8).unwrap();
        assert_eq!(third.coefficients[8], rational(-1, 81));
        assert_eq!(third.coefficients[0], rational(0, 1));
        assert_eq!(third.coefficients[1], rational(0, 1));
        let quarter = renewal_series(&rational(1, 4), 10).unwrap();
        for n in 2..=10usize {
            assert_eq!(quarter.coefficients[n], rational(n as i64 - 1, 1 << n));
        }
        assert!(quarter.partial_sums_bounded());
        assert!(renewal_series(&rational(0, 1), 3).is_err());
        assert!(renewal_series(&rational(3, 2), 3).is_err());
    }

    #[test]
    fn s7_coefficient_symbolic() {
        for (a, b) in [(1, 5), (1, 4), (2, 7), (1, 3), (3, 10), (1, 2)] {
            let pr = rational(a, b);
            let s = renewal_series(&pr, 7).unwrap();
            let one = BigRational::one();
            let expected = &pr * (&one - &pr) * (&one - rational(3, 1) * &pr);
            assert_eq!(s.coefficients[7], expected);
        }
    }

    #[test]
    fn renewal_structure_examples() {
        let u = pat("101");
        let mut m = CylinderMeasure::new(4).unwrap();
        assert_eq!(m.pattern_prob(&u), rational(1, 16));
        assert_eq!(fair_bit_descent_prob(&u), rational(1, 16));
        assert_eq!(fair_bit_descent_prob(&pat("1")), rational(1, 4));
        let checks = check_renewal_structure(5).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
    }

    #[test]
    fn avoid_one_color_closed_form() {
        for n in 0..=6 {
            let (v, c) = avoid_one_color(n).unwrap();
            assert_eq!(v, c, "n={n}");
        }
    }

    #[test]
    fn quarter_bound() {
        let r = check_quarter_bound();
        assert!(r.quarter_nonnegative);
        assert_eq!(r.third_first_negative, Some((8, "-1/81".to_string())));
        assert_eq!(r.third_s7, "0/1");
        assert!(r.above_quarter_first_negative.is_some());
        assert!(r.passed());
    }
}
