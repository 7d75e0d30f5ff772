//! Independence polynomials of finite graphs and the hard-core model.
//!
//! `Z_A(λ) = Σ_{I ⊆ A independent} λ^{|I|}`. At `λ = -p` this is the
//! probability that a 1-dependent process with density `p` and no two
//! adjacent ones vanishes on `A`, so a negative value certifies that no such
//! process exists.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};
use crate::measure::{BinaryPattern, CylinderMeasure, PatternSymbol};
use crate::report::Check;
use crate::rng::SeededRng;
use crate::word::{fmt_rational, parse_rational, rational};

/// A subset of a graph's vertices, stored as a bitset over vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn empty(size: usize) -> Self {
        VertexSet {
            bits: vec![0; size.div_ceil(64)],
        }
    }

    pub fn full(size: usize) -> Self {
        let mut s = Self::empty(size);
        for v in 0..size {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices(size: usize, vertices: &[usize]) -> Result<Self> {
        let mut s = Self::empty(size);
        for &v in vertices {
            if v >= size {
                return Err(Error::VertexOutsideGraph { vertex: v, size });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.get(v / 64).is_some_and(|w| w >> (v % 64) & 1 == 1)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max(&self) -> Option<usize> {
        self.bits
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| 64 * i + 63 - w.leading_zeros() as usize)
    }

    pub fn min(&self) -> Option<usize> {
        self.bits
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| 64 * i + w.trailing_zeros() as usize)
    }

    fn minus(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(i, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| 64 * i + b)
        })
    }
}

/// A simple undirected graph on vertices `0..n`, optionally with lattice
/// coordinates (in which case vertex order is lexicographic in them).
#[derive(Debug, Clone)]
pub struct FiniteGraph {
    neighbors: Vec<Vec<usize>>,
    masks: Vec<VertexSet>,
    coordinates: Vec<Vec<usize>>,
}

impl FiniteGraph {
    pub fn from_edges(size: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut neighbors = vec![Vec::new(); size];
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= size {
                    return Err(Error::VertexOutsideGraph { vertex: v, size });
                }
            }
            if a == b {
                return Err(out_of_range("edges", format!("loop at {a}")));
            }
            if !neighbors[a].contains(&b) {
                neighbors[a].push(b);
                neighbors[b].push(a);
            }
        }
        for n in &mut neighbors {
            n.sort_unstable();
        }
        let masks = neighbors
            .iter()
            .map(|n| VertexSet::from_vertices(size, n))
            .collect::<Result<_>>()?;
        Ok(FiniteGraph {
            neighbors,
            masks,
            coordinates: Vec::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.neighbors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.neighbors.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn coordinates(&self, v: usize) -> Option<&[usize]> {
        self.coordinates.get(v).map(Vec::as_slice)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|v| self.neighbors[v].iter().all(|&u| !set.contains(u)))
    }
}

/// The box `[d_1] × … × [d_k]` with nearest-neighbour edges.
pub fn grid(dims: &[usize]) -> Result<FiniteGraph> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(out_of_range("dims", "need at least one dimension, all >= 1"));
    }
    let size: usize = dims.iter().product();
    // row-major with the last coordinate fastest, i.e. lexicographic order
    let mut strides = vec![1; dims.len()];
    for i in (0..dims.len() - 1).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    let coordinates: Vec<Vec<usize>> = (0..size)
        .map(|v| dims.iter().zip(&strides).map(|(&d, &s)| v / s % d).collect())
        .collect();
    let mut edges = Vec::new();
    for (v, c) in coordinates.iter().enumerate() {
        for (axis, &stride) in strides.iter().enumerate() {
            if c[axis] + 1 < dims[axis] {
                edges.push((v, v + stride));
            }
        }
    }
    let mut g = FiniteGraph::from_edges(size, &edges)?;
    g.coordinates = coordinates;
    Ok(g)
}

/// The path `0 - 1 - … - (n-1)`.
pub fn path(n: usize) -> FiniteGraph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    FiniteGraph::from_edges(n, &edges).expect("path edges are in range")
}

/// Which vertex the deletion recursion removes first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum RemovalRule {
    #[default]
    Largest,
    Smallest,
}

/// `Z_A(λ)` together with the number of nonempty sets memoized on the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyValue {
    pub value: BigRational,
    pub memo_size: usize,
}

/// `Z_A(λ)` via `Z_A = Z_{A∖u} + λ Z_{A∖N[u]}`, memoized on vertex sets.
pub fn independence_poly(g: &FiniteGraph, a: &VertexSet, lambda: &BigRational) -> Result<BigRational> {
    Ok(independence_poly_with(g, a, lambda, RemovalRule::Largest)?.value)
}

pub fn independence_poly_with(
    g: &FiniteGraph,
    a: &VertexSet,
    lambda: &BigRational,
    rule: RemovalRule,
) -> Result<PolyValue> {
    if let Some(v) = a.max() {
        if v >= g.len() {
            return Err(Error::VertexOutsideGraph { vertex: v, size: g.len() });
        }
    }
    let mut a = a.clone();
    a.bits.resize(g.len().div_ceil(64), 0);
    let mut memo = HashMap::new();
    let value = poly_rec(g, &a, lambda, rule, &mut memo);
    Ok(PolyValue {
        value,
        memo_size: memo.len(),
    })
}

fn poly_rec(
    g: &FiniteGraph,
    a: &VertexSet,
    lambda: &BigRational,
    rule: RemovalRule,
    memo: &mut HashMap<VertexSet, BigRational>,
) -> BigRational {
    let u = match rule {
        RemovalRule::Largest => a.max(),
        RemovalRule::Smallest => a.min(),
    };
    let Some(u) = u else {
        return BigRational::one();
    };
    if let Some(v) = memo.get(a) {
        return v.clone();
    }
    let mut without = a.clone();
    without.remove(u);
    let closed = without.minus(&g.masks[u]);
    let value = poly_rec(g, &without, lambda, rule, memo) + lambda * poly_rec(g, &closed, lambda, rule, memo);
    memo.insert(a.clone(), value.clone());
    value
}

/// Largest `|A|` accepted by [`independence_poly_brute`].
pub const BRUTE_FORCE_CAP: usize = 20;

/// `Z_A(λ)` by enumerating all subsets of `A`.
pub fn independence_poly_brute(g: &FiniteGraph, a: &VertexSet, lambda: &BigRational) -> Result<BigRational> {
    let vertices: Vec<usize> = a.iter().collect();
    if vertices.len() > BRUTE_FORCE_CAP {
        return Err(out_of_range("A", format!("at most {BRUTE_FORCE_CAP} vertices")));
    }
    if let Some(&v) = vertices.iter().find(|&&v| v >= g.len()) {
        return Err(Error::VertexOutsideGraph { vertex: v, size: g.len() });
    }
    let mut counts = vec![0u64; vertices.len() + 1];
    for mask in 0u32..1 << vertices.len() {
        let chosen: Vec<usize> = (0..vertices.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| vertices[i])
            .collect();
        let ok = chosen
            .iter()
            .all(|&v| g.neighbors(v).iter().all(|u| !chosen.contains(u)));
        if ok {
            counts[chosen.len()] += 1;
        }
    }
    let mut power = BigRational::one();
    let mut total = BigRational::zero();
    for c in counts {
        total += &power * BigInt::from(c);
        power *= lambda;
    }
    Ok(total)
}

/// A box, an activity, and the exact value it must produce.
#[derive(Debug, Clone)]
pub struct ReferenceValue {
    pub dims: &'static [usize],
    pub lambda: (i64, i64),
    pub value: &'static str,
    /// Number of distinct nonempty sets the recursion memoizes, when known.
    pub memo_size: Option<usize>,
}

pub const REFERENCE_VALUES: [ReferenceValue; 3] = [
    ReferenceValue {
        dims: &[3, 3],
        lambda: (-1, 5),
        value: "-21/3125",
        memo_size: None,
    },
    ReferenceValue {
        dims: &[13, 10],
        lambda: (-1, 8),
        value: "-60294169567161237625416728069877775945051113/\
                25108406941546723055343157692830665664409421777856138051584",
        memo_size: None,
    },
    ReferenceValue {
        dims: &[12, 4, 4],
        lambda: (-1, 11),
        value: "-463442954667789552122160489238852809787756684428362788275310889047735211360981028087687/\
                9412343651268540526001186511911506574868063110469548823950876000379062365652829504091329792873336961",
        memo_size: Some(89077),
    },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessResult {
    pub dims: Vec<usize>,
    pub lambda: String,
    pub value: String,
    pub expected: String,
    pub negative: bool,
    pub memo_size: usize,
    pub expected_memo_size: Option<usize>,
    pub passed: bool,
}

/// Recomputes every entry of [`REFERENCE_VALUES`].
pub fn ph_witnesses() -> Result<Vec<WitnessResult>> {
    REFERENCE_VALUES.iter().map(evaluate_reference).collect()
}

pub fn evaluate_reference(r: &ReferenceValue) -> Result<WitnessResult> {
    let g = grid(r.dims)?;
    let lambda = rational(r.lambda.0, r.lambda.1);
    let out = independence_poly_with(&g, &g.all_vertices(), &lambda, RemovalRule::Largest)?;
    let expected = parse_rational(&r.value.split_whitespace().collect::<String>())?;
    let negative = out.value.is_negative();
    let memo_ok = r.memo_size.is_none_or(|m| m == out.memo_size);
    Ok(WitnessResult {
        dims: r.dims.to_vec(),
        lambda: fmt_rational(&lambda),
        value: fmt_rational(&out.value),
        expected: fmt_rational(&expected),
        negative,
        memo_size: out.memo_size,
        expected_memo_size: r.memo_size,
        passed: negative && out.value == expected && memo_ok,
    })
}

/// Largest path length accepted by [`coloring_hardcore_check`].
pub const MAX_BRIDGE_LEN: usize = 8;

/// For the 4-coloring, `P(X_i ≠ 1 for all i ∈ A) = Z_A(-1/4)` on the path,
/// for every `A ⊆ {1, …, n}`.
pub fn coloring_hardcore_check(n: usize) -> Result<Check> {
    if n > MAX_BRIDGE_LEN {
        return Err(out_of_range("n", format!("must be <= {MAX_BRIDGE_LEN}")));
    }
    let g = path(n);
    let lambda = rational(-1, 4);
    let mut measure = CylinderMeasure::new(4)?;
    let mut check = Check::new(format!("P(color 1 absent on A) = Z_A(-1/4), A in {{1..{n}}}"));
    for mask in 0u32..1 << n {
        let a: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let set = VertexSet::from_vertices(n, &a)?;
        let top = a.last().map_or(0, |v| v + 1);
        let pattern = BinaryPattern::new(
            (0..top)
                .map(|i| {
                    if set.contains(i) {
                        PatternSymbol::Zero
                    } else {
                        PatternSymbol::Any
                    }
                })
                .collect(),
        );
        let prob = measure.pattern_prob(&pattern);
        let z = independence_poly(&g, &set, &lambda)?;
        check.record(prob == z, || {
            format!("A={a:?}: {} != {}", fmt_rational(&prob), fmt_rational(&z))
        });
    }
    Ok(check)
}

/// `(Δ-1)^{Δ-1} / Δ^Δ`.
pub fn tree_marginal(delta: u32) -> BigRational {
    let d = BigInt::from(delta);
    BigRational::new(num_traits::pow(&d - 1u32, delta as usize - 1), num_traits::pow(d, delta as usize))
}

pub const MAX_TREE_VERTICES: usize = 1 << 22;

/// One sample of the tree hard-core process on a rooted tree in which
/// every vertex has `Δ - 1` children, down to `depth`.
#[derive(Debug, Clone)]
pub struct TreeSample {
    pub delta: u32,
    pub depth: usize,
    /// Breadth-first occupation; children of `v` are
    /// `v(Δ-1) + 1 ..= v(Δ-1) + Δ - 1`.
    pub occupied: Vec<bool>,
    pub marginal: BigRational,
}

impl TreeSample {
    pub fn parent(&self, v: usize) -> Option<usize> {
        (v > 0).then(|| (v - 1) / (self.delta as usize - 1))
    }

    pub fn is_independent(&self) -> bool {
        (1..self.occupied.len())
            .all(|v| !(self.occupied[v] && self.occupied[self.parent(v).expect("non-root")]))
    }

    pub fn occupied_count(&self) -> usize {
        self.occupied.iter().filter(|&&b| b).count()
    }
}

fn tree_size(children: usize, depth: usize) -> Option<usize> {
    let mut total = 0usize;
    let mut level = 1usize;
    for _ in 0..=depth {
        total = total.checked_add(level)?;
        level = level.checked_mul(children)?;
    }
    Some(total)
}

/// Labels every vertex 1 with probability `1/Δ`; a vertex is occupied when
/// its label is 1 and all its children are labelled 0. Labels are drawn one
/// level deeper than `depth` so every reported vertex has its children.
pub fn tree_hardcore(delta: u32, depth: usize, rng: &mut SeededRng) -> Result<TreeSample> {
    if !(2..=16).contains(&delta) {
        return Err(out_of_range("delta", "must be in 2..=16"));
    }
    let children = delta as usize - 1;
    let too_big = || out_of_range("depth", format!("tree exceeds {MAX_TREE_VERTICES} vertices"));
    let labelled = tree_size(children, depth + 1).ok_or_else(too_big)?;
    if labelled > MAX_TREE_VERTICES {
        return Err(too_big());
    }
    let reported = tree_size(children, depth).ok_or_else(too_big)?;
    let labels: Vec<bool> = (0..labelled).map(|_| rng.gen_range(0..delta) == 0).collect();
    let occupied = (0..reported)
        .map(|v| labels[v] && (1..=children).all(|c| !labels[v * children + c]))
        .collect();
    Ok(TreeSample {
        delta,
        depth,
        occupied,
        marginal: tree_marginal(delta),
    })
}

/// Lower bounds on the number of colors of a 1-dependent coloring of `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub d: usize,
    /// `(d+1)^{d+1} / d^d`.
    pub lattice_bound: String,
    pub lattice_min_colors: u64,
    /// `Δ^Δ / (Δ-1)^{Δ-1}` for the regular tree with `Δ = 2d`.
    pub tree_bound: String,
    pub tree_min_colors: u64,
    /// Activity `p` with `Z_A(-p) < 0` for some box, if one is known.
    pub witness_p: Option<String>,
    pub witness_min_colors: Option<u64>,
}

fn ceil_rational(r: &BigRational) -> u64 {
    let (q, rem) = r.numer().div_rem(r.denom());
    let q: u64 = q.try_into().expect("small bound");
    if rem.is_zero() {
        q
    } else {
        q + 1
    }
}

/// Colors needed when some color has density at least `1/q` and the
/// density must stay strictly below `p`: `q > 1/p`.
fn strict_min_colors(p: &BigRational) -> u64 {
    let inv = p.recip();
    let floor: u64 = inv.floor().to_integer().try_into().expect("small bound");
    floor + 1
}

pub const MAX_BOUNDS_DIM: usize = 4;

pub fn bounds_arithmetic(d: usize) -> Result<BoundsReport> {
    if !(1..=MAX_BOUNDS_DIM).contains(&d) {
        return Err(out_of_range("d", format!("must be in 1..={MAX_BOUNDS_DIM}")));
    }
    let lattice = BigRational::new(
        num_traits::pow(BigInt::from(d + 1), d + 1),
        num_traits::pow(BigInt::from(d), d),
    );
    let tree = tree_marginal(2 * d as u32).recip();
    let witness = REFERENCE_VALUES
        .iter()
        .filter(|r| r.dims.len() == d)
        .map(|r| rational(-r.lambda.0, r.lambda.1))
        .min();
    Ok(BoundsReport {
        d,
        lattice_bound: fmt_rational(&lattice),
        lattice_min_colors: ceil_rational(&lattice),
        tree_bound: fmt_rational(&tree),
        tree_min_colors: ceil_rational(&tree),
        witness_min_colors: witness.as_ref().map(strict_min_colors),
        witness_p: witness.as_ref().map(fmt_rational),
    })
}

/// `⌈Δ^Δ / (Δ-1)^{Δ-1}⌉`.
pub fn tree_min_colors(delta: u32) -> u64 {
    ceil_rational(&tree_marginal(delta).recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn grid_shapes() {
        let g = grid(&[3, 3]).unwrap();
        assert_eq!((g.len(), g.edge_count()), (9, 12));
        let g = grid(&[2, 2]).unwrap();
        assert_eq!((g.len(), g.edge_count()), (4, 4));
        assert!(g.neighbors(0).iter().all(|&v| g.neighbors(v).contains(&0)));
        let g = grid(&[1]).unwrap();
        assert_eq!((g.len(), g.edge_count()), (1, 0));
        let g = grid(&[2, 3, 4]).unwrap();
        // (d_i - 1) * prod of the others, summed over axes
        assert_eq!(g.edge_count(), 12 + 16 + 18);
        assert_eq!(g.coordinates(5), Some(&[0, 1, 1][..]));
        assert!(grid(&[3, 0]).is_err());
    }

    #[test]
    fn small_polynomials() {
        let lambda = rational(-2, 7);
        let one = grid(&[1]).unwrap();
        assert_eq!(
            independence_poly(&one, &one.all_vertices(), &lambda).unwrap(),
            rational(5, 7)
        );
        let g = path(3);
        assert_eq!(
            independence_poly(&g, &VertexSet::empty(3), &lambda).unwrap(),
            BigRational::one()
        );
        // 1 + 3λ + λ²
        let l = rational(1, 2);
        assert_eq!(
            independence_poly(&g, &g.all_vertices(), &l).unwrap(),
            rational(11, 4)
        );
        let far = VertexSet::from_vertices(3, &[7]);
        assert!(matches!(far, Err(Error::VertexOutsideGraph { .. })));
    }

    #[test]
    fn three_by_three_reference() {
        let r = evaluate_reference(&REFERENCE_VALUES[0]).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.value, "-21/3125");
        assert_eq!(r.memo_size, 17);
    }

    #[test]
    fn thirteen_by_ten_reference() {
        let r = evaluate_reference(&REFERENCE_VALUES[1]).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn three_dimensional_reference() {
        let r = evaluate_reference(&REFERENCE_VALUES[2]).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.memo_size, 89077);
    }

    #[test]
    fn path_at_quarter_is_nonnegative() {
        let g = path(10);
        let z = independence_poly(&g, &g.all_vertices(), &rational(-1, 4)).unwrap();
        assert!(!z.is_negative());
    }

    #[test]
    fn recursion_matches_enumeration() {
        let lambdas = [rational(-1, 5), rational(3, 2), rational(-1, 11)];
        for dims in [vec![4, 4], vec![2, 2, 3], vec![16], vec![3, 5]] {
            let g = grid(&dims).unwrap();
            for l in &lambdas {
                let a = g.all_vertices();
                assert_eq!(
                    independence_poly(&g, &a, l).unwrap(),
                    independence_poly_brute(&g, &a, l).unwrap(),
                    "{dims:?}"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn removal_rule_does_not_matter(mask in 0u32..(1 << 12), num in -5i64..5, den in 1i64..9) {
            let g = grid(&[3, 4]).unwrap();
            let verts: Vec<usize> = (0..12).filter(|i| mask >> i & 1 == 1).collect();
            let a = VertexSet::from_vertices(12, &verts).unwrap();
            let l = rational(num, den);
            let big = independence_poly_with(&g, &a, &l, RemovalRule::Largest).unwrap().value;
            let small = independence_poly_with(&g, &a, &l, RemovalRule::Smallest).unwrap().value;
            prop_assert_eq!(&big, &small);
            prop_assert_eq!(big, independence_poly_brute(&g, &a, &l).unwrap());
        }

        #[test]
        fn thinning_is_monotone_on_paths(mask in 0u32..(1 << 12), p_num in 1i64..25, gap in 1i64..25) {
            // p = p_num / 100 ≤ 1/4, p' = p - gap/1000 (when positive)
            let p = rational(p_num, 100);
            let p_low = &p - rational(gap, 1000);
            prop_assume!(p_low.is_positive());
            let g = path(12);
            let verts: Vec<usize> = (0..12).filter(|i| mask >> i & 1 == 1).collect();
            let a = VertexSet::from_vertices(12, &verts).unwrap();
            let hi = independence_poly(&g, &a, &-p).unwrap();
            let lo = independence_poly(&g, &a, &-p_low).unwrap();
            prop_assert!(!hi.is_negative());
            prop_assert!(lo >= hi);
        }
    }

    #[test]
    fn bridge_examples() {
        let g = path(3);
        let l = rational(-1, 4);
        let z = |v: &[usize]| independence_poly(&g, &VertexSet::from_vertices(3, v).unwrap(), &l).unwrap();
        assert_eq!(z(&[0]), rational(3, 4));
        assert_eq!(z(&[0, 1]), rational(1, 2));
        assert_eq!(z(&[0, 2]), rational(9, 16));
        assert!(coloring_hardcore_check(5).unwrap().passed);
    }

    #[test]
    fn tree_marginals() {
        assert_eq!(tree_marginal(2), rational(1, 4));
        assert_eq!(tree_marginal(3), rational(4, 27));
        assert_eq!(tree_min_colors(3), 7);
        assert_eq!(tree_min_colors(2), 4);
    }

    #[test]
    fn tree_samples_are_independent_sets() {
        let mut rng = SeededRng::new(5);
        for delta in 2..=5 {
            let s = tree_hardcore(delta, 6, &mut rng).unwrap();
            assert!(s.is_independent());
            assert_eq!(s.marginal, tree_marginal(delta));
        }
        let mut rng = SeededRng::new(6);
        let s = tree_hardcore(3, 14, &mut rng).unwrap();
        let n = s.occupied.len() as f64;
        let p = 4.0 / 27.0;
        let sigma = (p * (1.0 - p) / n).sqrt();
        assert!((s.occupied_count() as f64 / n - p).abs() < 4.0 * sigma);
        assert!(tree_hardcore(3, 40, &mut rng).is_err());
    }

    #[test]
    fn color_bounds() {
        let b2 = bounds_arithmetic(2).unwrap();
        assert_eq!(b2.lattice_bound, "27/4");
        assert_eq!(b2.lattice_min_colors, 7);
        assert_eq!(b2.witness_min_colors, Some(9));
        let b3 = bounds_arithmetic(3).unwrap();
        assert_eq!(b3.lattice_bound, "256/27");
        assert_eq!(b3.witness_min_colors, Some(12));
        let b1 = bounds_arithmetic(1).unwrap();
        assert_eq!(b1.lattice_min_colors, 4);
        assert_eq!(b1.witness_min_colors, None);
        assert!(bounds_arithmetic(5).is_err());
    }
}
