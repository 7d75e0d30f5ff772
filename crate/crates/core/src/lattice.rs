//! Range-`m` colorings of boxes in `Z^d` built from independent copies of
//! the 1-dependent 4-coloring along lines.
//!
//! For every direction `h` with `0 < ‖h‖₁ ≤ m` (one of each `±h` pair) the
//! box is cut into lines `{a + ih}`, each colored by its own copy of the
//! 4-coloring. A vertex's color is the vector of its colors over all
//! directions, so two vertices within distance `m` differ in the coordinate
//! of the direction joining them.

use std::cmp::Reverse;

use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};
use crate::rng::{mix, SeededRng};
use crate::sampler::sample_insertion;

/// Canonical directions: every nonzero `h` with `‖h‖₁ ≤ m` whose first
/// nonzero coordinate is positive, ordered by norm and then
/// lexicographically decreasing (so `m = 1` gives the standard basis in
/// order).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectionSet {
    pub dim: usize,
    pub range: usize,
    pub vectors: Vec<Vec<i64>>,
}

impl DirectionSet {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

fn norm(h: &[i64]) -> usize {
    h.iter().map(|x| x.unsigned_abs() as usize).sum()
}

fn lex_positive(h: &[i64]) -> bool {
    h.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

pub const MAX_DIM: usize = 6;

pub fn directions(d: usize, m: usize) -> Result<DirectionSet> {
    if d == 0 || d > MAX_DIM {
        return Err(out_of_range("d", format!("must be in 1..={MAX_DIM}")));
    }
    if m == 0 || m > 8 {
        return Err(out_of_range("m", "must be in 1..=8"));
    }
    let side = 2 * m as i64 + 1;
    let mut vectors = Vec::new();
    for code in 0..side.pow(d as u32) {
        let mut c = code;
        let h: Vec<i64> = (0..d)
            .map(|_| {
                let x = c % side - m as i64;
                c /= side;
                x
            })
            .collect();
        if norm(&h) <= m && lex_positive(&h) {
            vectors.push(h);
        }
    }
    vectors.sort_by_key(|h| (norm(h), Reverse(h.clone())));
    Ok(DirectionSet {
        dim: d,
        range: m,
        vectors,
    })
}

/// A colored box. `colors[v]` has one entry in `1..=4` per direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxColoring {
    pub dims: Vec<usize>,
    pub directions: Vec<Vec<i64>>,
    /// Vertices in lexicographic order of their coordinates.
    pub colors: Vec<Vec<u8>>,
}

impl BoxColoring {
    pub fn new(dims: Vec<usize>, directions: Vec<Vec<i64>>, colors: Vec<Vec<u8>>) -> Result<Self> {
        let size: usize = dims.iter().product();
        if colors.len() != size {
            return Err(Error::LengthMismatch {
                left: size,
                right: colors.len(),
            });
        }
        if let Some(c) = colors.iter().find(|c| c.len() != directions.len()) {
            return Err(Error::LengthMismatch {
                left: directions.len(),
                right: c.len(),
            });
        }
        Ok(BoxColoring {
            dims,
            directions,
            colors,
        })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of available colors, `4^{|H|}`.
    pub fn palette_size(&self) -> u64 {
        4u64.pow(self.directions.len() as u32)
    }

    pub fn coordinates(&self, v: usize) -> Vec<usize> {
        let mut rest = v;
        let mut out = vec![0; self.dims.len()];
        for (i, &d) in self.dims.iter().enumerate().rev() {
            out[i] = rest % d;
            rest /= d;
        }
        out
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&c, &d)| acc * d + c)
    }

    /// The color vector packed into one integer in `0..4^{|H|}`.
    pub fn packed(&self, v: usize) -> u64 {
        self.colors[v]
            .iter()
            .fold(0, |acc, &c| acc * 4 + (c as u64 - 1))
    }

    /// One row per vertex: coordinates, packed color, then the per-direction
    /// colors.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let coord_names: Vec<String> = (0..self.dims.len()).map(|i| format!("x{i}")).collect();
        let dir_names: Vec<String> = (0..self.directions.len()).map(|i| format!("h{i}")).collect();
        out.push_str(&coord_names.join(","));
        out.push_str(",color,");
        out.push_str(&dir_names.join(","));
        out.push('\n');
        for v in 0..self.len() {
            let coords: Vec<String> = self.coordinates(v).iter().map(|c| c.to_string()).collect();
            let cols: Vec<String> = self.colors[v].iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("{},{},{}\n", coords.join(","), self.packed(v), cols.join(",")));
        }
        out
    }
}

fn in_box(p: &[i64], dims: &[usize]) -> bool {
    p.iter().zip(dims).all(|(&x, &d)| x >= 0 && (x as usize) < d)
}

pub const MAX_BOX_VERTICES: usize = 1 << 20;

/// Samples the line construction on the box `∏ [dims_i]` (0-based).
///
/// The line through anchor `a` in direction `k` draws from the substream
/// `mix(k, a)` of `rng`'s seed, so the result depends only on the seed and
/// not on the order lines are visited.
pub fn sample_box(m: usize, dims: &[usize], rng: &SeededRng) -> Result<BoxColoring> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(out_of_range("dims", "need at least one dimension, all >= 1"));
    }
    let size = dims
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .filter(|&s| s <= MAX_BOX_VERTICES)
        .ok_or_else(|| out_of_range("dims", format!("box exceeds {MAX_BOX_VERTICES} vertices")))?;
    let dirs = directions(dims.len(), m)?;
    let mut coloring = BoxColoring {
        dims: dims.to_vec(),
        directions: dirs.vectors.clone(),
        colors: vec![vec![0; dirs.len()]; size],
    };
    for (k, h) in dirs.vectors.iter().enumerate() {
        for v in 0..size {
            let a: Vec<i64> = coloring.coordinates(v).iter().map(|&c| c as i64).collect();
            let prev: Vec<i64> = a.iter().zip(h).map(|(x, y)| x - y).collect();
            if in_box(&prev, dims) {
                continue;
            }
            // `a` is the lexicographically smallest box point on its line
            let mut line = Vec::new();
            let mut p = a.clone();
            while in_box(&p, dims) {
                let coords: Vec<usize> = p.iter().map(|&x| x as usize).collect();
                line.push(coloring.index(&coords));
                p.iter_mut().zip(h).for_each(|(x, y)| *x += y);
            }
            let mut key = vec![k as u64];
            key.extend(a.iter().map(|&x| x as u64));
            let mut line_rng = rng.substream(mix(&key));
            let word = sample_insertion(4, line.len(), &mut line_rng)?;
            for (&vertex, &c) in line.iter().zip(word.symbols()) {
                coloring.colors[vertex][k] = c;
            }
        }
    }
    Ok(coloring)
}

/// Whether every two distinct vertices within `‖·‖₁` distance `m` get
/// different color vectors.
pub fn verify_range(c: &BoxColoring, m: usize) -> bool {
    let d = c.dims.len();
    let offsets: Vec<Vec<i64>> = match directions(d.max(1), m.max(1)) {
        Ok(dirs) if m > 0 => dirs.vectors,
        _ => return true,
    };
    for v in 0..c.len() {
        let base: Vec<i64> = c.coordinates(v).iter().map(|&x| x as i64).collect();
        for h in &offsets {
            let u: Vec<i64> = base.iter().zip(h).map(|(x, y)| x + y).collect();
            if in_box(&u, &c.dims) {
                let coords: Vec<usize> = u.iter().map(|&x| x as usize).collect();
                if c.colors[c.index(&coords)] == c.colors[v] {
                    return false;
                }
            }
        }
    }
    true
}
