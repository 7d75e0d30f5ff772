//! Cross-module checks through the public API only.

use findep::buildings::{count_buildings, total_buildings};
use findep::combinatorics::{q_fast, q_formula};
use findep::hardcore::{grid, independence_poly};
use findep::lattice::{sample_box, verify_range};
use findep::measure::{cylinder_prob, renewal_series};
use findep::sampler::{exact_law, insertion_law, sample_insertion};
use findep::word::{fmt_rational, parse_rational, rational};
use findep::{BigInt, BigRational, SeededRng, Word};

#[test]
fn cylinder_law_is_a_distribution() {
    for (q, n) in [(3, 4), (4, 4), (5, 3)] {
        let total: BigRational = Word::all(q, n).map(|x| cylinder_prob(q, &x).unwrap()).sum();
        assert_eq!(total, rational(1, 1), "q={q}, n={n}");
    }
}

#[test]
fn three_routes_to_buildings_agree() {
    let mut rng = SeededRng::new(11);
    for n in 1..=10 {
        let x = sample_insertion(4, n, &mut rng).unwrap();
        let b = BigInt::from(count_buildings(&x).0);
        assert_eq!(q_fast(&x).unwrap(), b, "{x}");
        assert_eq!(q_formula(&x).unwrap(), b, "{x}");
    }
}

#[test]
fn insertion_sampler_law_is_exact() {
    for (q, n) in [(3, 3), (4, 4)] {
        assert_eq!(insertion_law(q, n).unwrap(), exact_law(q, n).unwrap());
    }
}

#[test]
fn totals_grow_by_the_expected_factor() {
    for q in 2..=6u32 {
        for n in 1..=6usize {
            let prev = total_buildings(q, n - 1).0;
            let next = total_buildings(q, n).0;
            assert_eq!(next, prev * (n as u32 * (q - 2) + 2));
        }
    }
}

#[test]
fn grid_polynomial_through_text_round_trip() {
    let lambda = parse_rational("-1/5").unwrap();
    let g = grid(&[3, 3]).unwrap();
    let z = independence_poly(&g, &g.all_vertices(), &lambda).unwrap();
    assert_eq!(fmt_rational(&z), "-21/3125");
}

#[test]
fn renewal_series_at_a_quarter_stays_nonnegative() {
    let s = renewal_series(&rational(1, 4), 60).unwrap();
    assert!(s.first_negative().is_none());
    assert!(s.partial_sums_bounded());
}

#[test]
fn box_samples_depend_only_on_seed() {
    let a = sample_box(1, &[6, 5], &SeededRng::new(3)).unwrap();
    let b = sample_box(1, &[6, 5], &SeededRng::new(3)).unwrap();
    let c = sample_box(1, &[6, 5], &SeededRng::new(4)).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert!(verify_range(&a, 1));
    let wide = sample_box(2, &[5, 5], &SeededRng::new(3)).unwrap();
    assert!(verify_range(&wide, 2));
}
