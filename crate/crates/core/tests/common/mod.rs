//! Shared helpers for the integration suites: seeded random data and the
//! brute-force permutation oracle for mixable-shuffle enumeration.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use baxter_core::{AlgebraCtx, LaurentPoly, Monomial, RingId, Scalar, ShuffleElement, TensorWord};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_scalar(rng: &mut StdRng, ring: RingId) -> Scalar {
    match ring {
        RingId::RationalQ => Scalar::rational(rng.gen_range(-9..=9), rng.gen_range(1..=4)),
        RingId::LaurentQ => {
            let terms = (0..rng.gen_range(0..3)).map(|_| {
                (
                    rng.gen_range(-2..=2),
                    num_rational::BigRational::from_integer(rng.gen_range(-4i64..=4).into()),
                )
            });
            Scalar::laurent(LaurentPoly::from_terms(terms))
        }
        RingId::PrimeField(p) => Scalar::from_i64(rng.gen_range(0..p.get() as i64), ring),
        RingId::IntegerZ => Scalar::from_i64(rng.gen_range(-9..=9), ring),
    }
}

pub fn random_nonzero_scalar(rng: &mut StdRng, ring: RingId) -> Scalar {
    loop {
        let s = random_scalar(rng, ring);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_monomial(rng: &mut StdRng, num_vars: usize, max_exponent: u32) -> Monomial {
    Monomial::from_pairs((0..num_vars).filter_map(|v| {
        let e = rng.gen_range(0..=max_exponent);
        (e > 0).then_some((v as u32, e))
    }))
}

pub fn random_word(
    rng: &mut StdRng,
    num_vars: usize,
    max_tensor_degree: usize,
    max_exponent: u32,
) -> TensorWord {
    let len = rng.gen_range(1..=max_tensor_degree + 1);
    TensorWord::new(
        (0..len)
            .map(|_| random_monomial(rng, num_vars, max_exponent))
            .collect(),
    )
}

pub fn random_element(
    rng: &mut StdRng,
    ctx: &AlgebraCtx,
    max_terms: usize,
    max_tensor_degree: usize,
    max_exponent: u32,
) -> ShuffleElement {
    let terms = (0..rng.gen_range(1..=max_terms))
        .map(|_| {
            (
                random_word(rng, ctx.num_vars(), max_tensor_degree, max_exponent),
                random_scalar(rng, ctx.ring()),
            )
        })
        .collect::<Vec<_>>();
    ShuffleElement::from_terms(ctx.clone(), terms).expect("scalars drawn from the ring")
}

/// Brute-force mixable shuffles of shape (m, n): scan all permutations of
/// m+n slots, keep the block-monotone ones, and attach every subset of the
/// adjacent first-block/second-block pairs. Returns the canonical encoding
/// (first-block slots, merged left slots) as a set.
pub fn brute_force_mixable(m: usize, n: usize) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let total = m + n;
    let mut out = BTreeSet::new();
    if m == 0 || n == 0 {
        out.insert(((1..=m).collect(), Vec::new()));
        return out;
    }
    // sigma as a function slot -> value; monotone iff the slots of values
    // 1..m appear in increasing value order, likewise for m+1..m+n
    for perm in (1..=total).permutations(total) {
        // perm[slot-1] = sigma(slot)
        let first_slots: Vec<usize> = (1..=total).filter(|&s| perm[s - 1] <= m).collect();
        let first_vals: Vec<usize> = first_slots.iter().map(|&s| perm[s - 1]).collect();
        if !first_vals.windows(2).all(|w| w[0] < w[1]) {
            continue;
        }
        let second_vals: Vec<usize> = (1..=total)
            .filter(|&s| perm[s - 1] > m)
            .map(|s| perm[s - 1])
            .collect();
        if !second_vals.windows(2).all(|w| w[0] < w[1]) {
            continue;
        }
        let admissible: Vec<usize> = (1..total)
            .filter(|&k| perm[k - 1] <= m && perm[k] > m)
            .collect();
        for mask in 0u64..(1 << admissible.len()) {
            let merges: Vec<usize> = admissible
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &k)| k)
                .collect();
            out.insert((first_slots.clone(), merges));
        }
    }
    out
}
