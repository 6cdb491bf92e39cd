//! Shared generators and independent oracles for the integration suites.
//!
//! The oracles here deliberately use different algorithms from the library
//! (breadth-first sum-set closure instead of the coin-problem table, window
//! scan instead of the conductor formula) so that agreement is meaningful.

// Each integration test binary uses its own subset of these helpers.
#![allow(dead_code)]

use std::collections::HashSet;

use plane_branch::semigroup::SemigroupData;
use plane_branch::{IntBivarPoly, IntUnivarPoly, Parametrization, PrimeField};
use proptest::prelude::*;

/// All semigroup elements up to `limit`, by breadth-first closure.
pub fn semigroup_elements(gens: &[u64], limit: u64) -> HashSet<u64> {
    let mut set = HashSet::from([0u64]);
    let mut frontier = vec![0u64];
    while let Some(s) = frontier.pop() {
        for &g in gens {
            let t = s + g;
            if t <= limit && set.insert(t) {
                frontier.push(t);
            }
        }
    }
    set
}

/// Conductor by scanning for the first `s` whose window `[s, s + gens[0])`
/// lies in the semigroup while `s - 1` does not; the search bound grows
/// until the window fits.
pub fn conductor_by_scan(gens: &[u64]) -> u64 {
    let g0 = gens[0];
    let mut limit = 4 * gens.iter().max().unwrap() + 4;
    loop {
        let set = semigroup_elements(gens, limit);
        for s in 1..=limit.saturating_sub(g0) {
            let window = (s..s + g0).all(|v| set.contains(&v));
            if window && !set.contains(&(s - 1)) {
                return s;
            }
        }
        limit *= 2;
    }
}

/// Count of gaps (non-elements) strictly below `bound`.
pub fn gaps_below(gens: &[u64], bound: u64) -> u64 {
    let set = semigroup_elements(gens, bound);
    (0..bound).filter(|s| !set.contains(s)).count() as u64
}

/// Random valid parametrization over assorted small primes.
pub fn arb_branch() -> impl Strategy<Value = Parametrization> {
    let primes = prop::sample::select(vec![3u64, 5, 7, 11, 13, 17, 23]);
    (primes, 2u64..=6)
        .prop_flat_map(|(p, n)| {
            let term = (1u64..=14, 1u64..2_000u64);
            (
                Just(p),
                Just(n),
                proptest::collection::vec(term, 1..=3),
            )
        })
        .prop_filter_map("branch hypotheses", |(p, n, terms)| {
            let y =
                IntUnivarPoly::from_terms(terms.into_iter().map(|(off, c)| (n + off, c as i128)));
            Parametrization::validate(p, n, &y).ok()
        })
}

/// Like [`arb_branch`] but restricted to instances cheap enough to push
/// through the Milnor pipeline many times.
pub fn arb_small_branch(max_conductor: u64) -> impl Strategy<Value = Parametrization> {
    arb_branch().prop_filter("conductor within budget", move |b| {
        SemigroupData::from_char_exponents(&b.char_exponents()).conductor() <= max_conductor
    })
}

/// Random bivariate integer template for test curves `h`.
pub fn arb_curve_template() -> impl Strategy<Value = IntBivarPoly> {
    proptest::collection::vec(((0u64..5, 0u64..5), 1i128..40), 1..=4)
        .prop_map(IntBivarPoly::from_terms)
}

pub fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}
