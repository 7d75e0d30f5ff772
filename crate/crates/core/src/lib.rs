//! Exact construction, sampling and verification of the stationary
//! 1-dependent 4-coloring and 2-dependent 3-coloring of the integers.
//!
//! Both processes are defined on finite windows by
//! `P(x) = B(x) / Σ(q, |x|)`, where `B(x)` counts the *proper buildings* of
//! the word `x` (orders of arrival under which every partial word is a
//! proper coloring) and `Σ(q, n) = ∏_{k=1..n} [k(q-2)+2]` is the total over
//! all words of length `n`.
//!
//! Module map:
//!
//! | module | contents |
//! |--------|----------|
//! | [`word`] | words over `[q]`, sign words, runs, exact-rational helpers |
//! | [`buildings`] | `B(x)` by enumeration and by memoized deletion recursion; identity checks |
//! | [`measure`] | cylinder probabilities, dependence / consistency checks, one-color marginals, renewal series |
//! | [`sampler`] | insertion and rejection samplers, their exact laws, total-variation estimates |
//! | [`combinatorics`] | descent counts `α`, dispersed Dyck words, the alternating-sum formula `Q(x)` and its `O(n³)` recurrence |
//! | [`hardcore`] | independence polynomials on finite graphs, grid witnesses, tree hard-core process |
//! | [`lattice`] | range-`m` colorings of boxes in `Z^d` built from independent line colorings |
//! | [`stats`] | exact σ-bounds for empirical counts |
//! | [`report`] | serializable reports shared by the checks and the CLI |
//! | [`acceptance`] | the end-to-end acceptance criteria as runnable checks |
//!
//! All probabilities are exact [`BigRational`]s. Nothing on a verification
//! path uses floating point.

pub mod acceptance;
pub mod buildings;
pub mod combinatorics;
pub mod error;
pub mod hardcore;
pub mod lattice;
pub mod measure;
pub mod report;
pub mod rng;
pub mod sampler;
pub mod stats;
pub mod word;

pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
pub use rng::SeededRng;
pub use word::{Sign, SignWord, Word};
