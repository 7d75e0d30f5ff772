//! Descent statistics, dispersed Dyck words, and the alternating-sum
//! formula for `B(x)` on 4-color words.
//!
//! A word `x ∈ [4]^n` is split into sign rows `(y; z)`. The count `α(y)` of
//! permutations of `n+1` elements with ascents exactly where `y` is `+`
//! drives both the law of `y` and the formula
//!
//! ```text
//! Q(x) = 2^{n-m} Σ_{w ∈ DD(m-1)} (-1)^{|w|} c(w, y, z) α(y_w)
//! ```
//!
//! for proper `x` (and `0` otherwise), where `m` is the number of runs of
//! `y`. `Q = B` on every word. [`q_fast`] evaluates the same quantity in
//! `O(n³)` arithmetic operations.

mod descent;
mod dyck;
mod formula;
mod identities;
mod recurrence;

pub use descent::{alpha, alpha_runs, peak_prob, peak_probs, RunComposition};
pub use dyck::{enumerate_dd, DispersedDyckWord, DispersedDyckWords, DyckLetter, MAX_DD_LEN};
pub use formula::{q_formula, q_formula_with, sign_factor, transform_y_w, MAX_FORMULA_LEN};
pub use identities::{
    catalan, catalan_identity, check_s_y_identity, check_z_marginal, curious_identity,
    marginal_identities, CURIOUS_IDENTITY_CAP, MAX_IDENTITY_LEN,
};
pub use recurrence::q_fast;
