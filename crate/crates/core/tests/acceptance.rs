//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Everything here is exact — no tolerances anywhere.

mod common;

use common::*;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use baxter_core::{
    annihilator_b, binomial, char_p_closure_check, enumerate_mixable_shuffles,
    filtration_chain_check, module_chain_check, power_chain_check, specialize_b,
    submodule_span_check, AlgebraCtx, baxter_ideal_saturate, baxter_reduce,
    CharPIdealSpec, CoefficientSumOutcome, LaurentPoly, Monomial, Prime, RingId, Scalar,
    ShuffleElement, TensorWord, TruncatedBaxterSeries,
};

fn pass(number: usize, name: &str) {
    println!("acceptance {number:02} ({name}): PASS");
}

#[test]
fn acceptance_01_baxter_identity() {
    let p5 = Prime::new(5).unwrap();
    let configs: Vec<AlgebraCtx> = vec![
        AlgebraCtx::rational(&["x", "y"], 0, 1),
        AlgebraCtx::rational(&["x", "y"], 1, 1),
        AlgebraCtx::rational(&["x", "y"], -2, 1),
        AlgebraCtx::symbolic_weight(),
        AlgebraCtx::new(
            RingId::PrimeField(p5),
            vec!["x".to_string(), "y".to_string()],
            Scalar::mod_p(3, p5),
        )
        .unwrap(),
    ];
    let mut r = rng(101);
    for ctx in &configs {
        for _ in 0..200 {
            let a = random_element(&mut r, ctx, 3, 3, 2);
            let b = random_element(&mut r, ctx, 3, 3, 2);
            assert!(
                a.verify_baxter_identity(&b).unwrap(),
                "identity failed over {} with weight {}",
                ctx.ring(),
                ctx.weight()
            );
        }
    }
    pass(1, "Baxter identity, 200 random pairs x 5 configurations");
}

#[test]
fn acceptance_02_oracle_equivalence() {
    // every single-word pair with factors having exponent 0 or 1 in one
    // variable, all shapes m + n <= 6, both weights
    for lam in [0i64, 1] {
        let ctx = AlgebraCtx::rational(&["x"], lam, 1);
        for m in 0..=6usize {
            for n in 0..=(6 - m) {
                for mask_a in 0u32..(1 << (m + 1)) {
                    for mask_b in 0u32..(1 << (n + 1)) {
                        let mk = |len: usize, mask: u32| {
                            TensorWord::new(
                                (0..len)
                                    .map(|i| if mask >> i & 1 == 1 {
                                        Monomial::var(0)
                                    } else {
                                        Monomial::one()
                                    })
                                    .collect(),
                            )
                        };
                        let a = ShuffleElement::from_word(ctx.clone(), mk(m + 1, mask_a));
                        let b = ShuffleElement::from_word(ctx.clone(), mk(n + 1, mask_b));
                        assert_eq!(
                            a.product(&b).unwrap(),
                            a.product_oracle(&b).unwrap(),
                            "lambda={lam}, shape ({m},{n}), masks {mask_a:b}/{mask_b:b}"
                        );
                    }
                }
            }
        }
    }
    pass(2, "enumeration product == recursive oracle, all pairs m+n <= 6");
}

#[test]
fn acceptance_03_closed_form_vs_combinatorics() {
    let ctx = AlgebraCtx::symbolic_weight();
    let x = Scalar::laurent(LaurentPoly::variable());
    for m in 0..=8usize {
        for n in 0..=8usize {
            let a = ShuffleElement::from_word(ctx.clone(), TensorWord::unit_power(m));
            let b = ShuffleElement::from_word(ctx.clone(), TensorWord::unit_power(n));
            let combinatorial = a.product(&b).unwrap();
            let closed = baxter_core::unit_power_product(m, n, &x).unwrap();
            let expected = ShuffleElement::from_terms(
                ctx.clone(),
                closed
                    .iter()
                    .map(|(d, c)| (TensorWord::unit_power(*d), c.clone())),
            )
            .unwrap();
            assert_eq!(combinatorial, expected, "unit powers ({m},{n})");
        }
    }
    pass(3, "closed-form unit-power product == enumeration, m,n <= 8, symbolic weight");
}

#[test]
fn acceptance_04_counting() {
    for m in 0..=6usize {
        for n in 0..=(6 - m) {
            let all = enumerate_mixable_shuffles(m, n).unwrap();
            let plain = all.iter().filter(|s| s.merges().is_empty()).count();
            let expected = binomial((m + n) as i64, n as i64, RingId::IntegerZ).unwrap();
            assert_eq!(
                Scalar::from_i64(plain as i64, RingId::IntegerZ),
                expected,
                "plain shuffle count at ({m},{n})"
            );
            let ours: std::collections::BTreeSet<(Vec<usize>, Vec<usize>)> = all
                .iter()
                .map(|s| (s.positions().to_vec(), s.merges().to_vec()))
                .collect();
            assert_eq!(ours.len(), all.len(), "duplicates at ({m},{n})");
            assert_eq!(ours, brute_force_mixable(m, n), "brute force at ({m},{n})");
        }
    }
    pass(4, "shuffle counts binomial + full enumeration matches permutation scan");
}

/// Independent exact rank via Gaussian elimination over the rationals.
fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let mut rank = 0;
    let ncols = rows.first().map_or(0, Vec::len);
    let mut col = 0;
    while col < ncols && rank < rows.len() {
        if let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) {
            rows.swap(rank, pivot);
            let lead = rows[rank][col].clone();
            for j in col..ncols {
                let v = rows[rank][j].clone() / lead.clone();
                rows[rank][j] = v;
            }
            for i in 0..rows.len() {
                if i != rank && !rows[i][col].is_zero() {
                    let factor = rows[i][col].clone();
                    for j in col..ncols {
                        let v = rows[i][j].clone() - factor.clone() * rows[rank][j].clone();
                        rows[i][j] = v;
                    }
                }
            }
            rank += 1;
        }
        col += 1;
    }
    rank
}

#[test]
fn acceptance_05_embedding_homomorphism_and_injectivity() {
    // homomorphism on 100 random pairs at precision 20
    let mut r = rng(105);
    let n = 20usize;
    for lam in [1i64, 2] {
        let weight = Scalar::rational(lam, 1);
        for _ in 0..50 {
            let mk = |r: &mut rand::rngs::StdRng| {
                let coeffs: Vec<Scalar> = (0..=n)
                    .map(|_| random_scalar(r, RingId::RationalQ))
                    .collect();
                TruncatedBaxterSeries::new(RingId::RationalQ, weight.clone(), n, coeffs).unwrap()
            };
            let a = mk(&mut r);
            let b = mk(&mut r);
            let lhs = a.series_product(&b).unwrap().phi().unwrap();
            let rhs = a.phi().unwrap().pointwise_mul(&b.phi().unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
    // unitriangular injectivity: the coefficient-to-component matrix has
    // full rank N+1 for every N <= 12 (independent elimination oracle)
    for (num, den) in [(1i64, 1i64), (2, 1), (1, 2)] {
        let lam = BigRational::new(num.into(), den.into());
        for n in 0..=12usize {
            let rows: Vec<Vec<BigRational>> = (1..=n + 1)
                .map(|row| {
                    (0..=n)
                        .map(|i| {
                            let b = num_integer::binomial(
                                num_bigint::BigInt::from(row as i64 - 1),
                                num_bigint::BigInt::from(i as i64),
                            );
                            let mut p = BigRational::from_integer(1.into());
                            for _ in 0..i {
                                p *= lam.clone();
                            }
                            BigRational::from_integer(b) * p
                        })
                        .collect()
                })
                .collect();
            assert_eq!(rational_rank(rows), n + 1, "rank at N={n}, lambda={lam}");
        }
    }
    pass(5, "embedding is a ring homomorphism at N=20; full rank for N <= 12");
}

#[test]
fn acceptance_06_annihilator_reproduction() {
    let one = Scalar::rational(1, 1);
    let precision = 40usize;
    // (iii): the symbolic coefficients are integral: x^n b_n is polynomial
    for k in 1..=5usize {
        let sym = annihilator_b(k, precision).unwrap();
        for (n, b) in sym.coeffs().iter().enumerate() {
            let xn = Scalar::laurent(LaurentPoly::monomial(
                BigRational::from_integer(1.into()),
                n as i64,
            ));
            assert!(
                xn.checked_mul(b).unwrap().is_polynomial().unwrap(),
                "k={k}, n={n}"
            );
        }
    }
    for (num, den) in [(1i64, 1i64), (2, 1), (1, 2)] {
        let lambda = Scalar::rational(num, den);
        // (i), (ii): product annihilation and the embedding profile
        for k in 1..=5usize {
            let d = specialize_b(k, &lambda, &one, precision).unwrap();
            let report = baxter_core::check_annihilation(&d, k).unwrap();
            assert_eq!(report.c, one);
            assert!(!report.lower_filtration_value.is_zero());
        }
        // (iv): chain strictness for n <= 4
        let chain = filtration_chain_check(4, &lambda, &one, precision).unwrap();
        assert_eq!(chain.strictness_witnesses.len(), 4);
        assert!(chain.strictness_witnesses.iter().all(|w| !w.is_zero()));
    }
    pass(6, "annihilators at k <= 5, N = 40, lambda in {1, 2, 1/2}: all four properties");
}

#[test]
fn acceptance_07_letter_power_chain() {
    for n in 1..=4usize {
        for lam in [0i64, 1, 2] {
            let lambda = Scalar::rational(lam, 1);
            // multiplier words of tensor length <= n+2, i.e. tensor degree <= n+1
            let report = power_chain_check(n, &lambda, n + 1).unwrap();
            assert!(!report.membership.is_member(), "n={n}, lambda={lam}");
            assert!(
                matches!(
                    report.sums_outcome,
                    CoefficientSumOutcome::Inconsistent { .. }
                ),
                "n={n}, lambda={lam}"
            );
            assert!(report.membership.verify().unwrap());
        }
    }
    pass(7, "next letter power independent of lower powers; both arguments agree, n <= 4");
}

#[test]
fn acceptance_08_char_p_ideals() {
    for p in [2u64, 3] {
        for k in [1u32, 2] {
            let spec = CharPIdealSpec::new(p, k).unwrap();
            for l in 0..p {
                let lambda = Scalar::mod_p(l as i64, spec.prime());
                let report = char_p_closure_check(&spec, 20, &lambda).unwrap();
                assert!(!report.strict_inclusion_degrees.is_empty());
                // strict inclusion at every prime power within the bound
                let mut expected = Vec::new();
                let mut pw = p as usize;
                while pw <= 20 {
                    expected.push(pw);
                    pw *= p as usize;
                }
                assert_eq!(report.strict_inclusion_degrees, expected);
            }
        }
    }
    pass(8, "characteristic-p spans closed under products, strict at prime powers, D = 20");
}

#[test]
fn acceptance_09_baxter_reduction_of_constructed_combinations() {
    let mut r = rng(109);
    for run in 0..50 {
        let lam = [0i64, 1, 2][run % 3];
        let ctx = AlgebraCtx::rational(&[], lam, 1);
        let gens: Vec<ShuffleElement> = (0..r.gen_range(1..=3))
            .map(|_| {
                ShuffleElement::unit_power(
                    ctx.clone(),
                    r.gen_range(1..=4),
                    random_nonzero_scalar(&mut r, RingId::RationalQ),
                )
                .unwrap()
            })
            .collect();
        let mut f = ShuffleElement::zero(ctx.clone());
        for _ in 0..r.gen_range(1..=5) {
            let g = &gens[r.gen_range(0..gens.len())];
            let shifted = g.baxter_p_iter(r.gen_range(0..=3));
            let word = ShuffleElement::unit_power(
                ctx.clone(),
                r.gen_range(0..=3),
                random_scalar(&mut r, RingId::RationalQ),
            )
            .unwrap();
            f = f.add(&word.product(&shifted).unwrap()).unwrap();
        }
        let trace = baxter_reduce(&f, &gens).unwrap();
        assert!(
            trace.remainder.is_zero(),
            "run {run}: constructed combination must reduce to zero"
        );
        assert!(trace.reconstructs(&f, &gens).unwrap(), "run {run}");
    }
    pass(9, "Baxter reduction clears 50 random bounded combinations; traces exact");
}

#[test]
fn acceptance_10_submodule_span_equivalence() {
    // weight 0 with a non-ideal submodule
    let basis = vec![Monomial::var(0)];
    let report = submodule_span_check(&basis, &Scalar::rational(0, 1), false, 3, 4).unwrap();
    assert!(report.span_dimension > 0);
    // nonzero weight with the degree-truncated maximal ideal
    let ideal: Vec<Monomial> = (1..=4).map(|e| Monomial::var_pow(0, e)).collect();
    let report = submodule_span_check(&ideal, &Scalar::rational(1, 1), true, 3, 4).unwrap();
    assert!(report.span_dimension > 0);
    pass(10, "marked-factor span == Baxter ideal slice, both hypothesis branches");
}

#[test]
fn acceptance_11_module_chain_strictness() {
    let report = module_chain_check(4, &Scalar::rational(0, 1), 2, 5).unwrap();
    assert_eq!(report.projection_ranks.len(), 4);
    for w in report.projection_ranks.windows(2) {
        assert!(w[0] < w[1], "projection ranks must strictly increase");
    }
    pass(11, "module chain strictly increasing through the pair projection, n <= 4");
}

#[test]
fn acceptance_09b_reduction_soundness_spotcheck() {
    // remainder zero implies bounded-slice membership (soundness companion
    // to criterion 9, randomized)
    let mut r = rng(209);
    let ctx = AlgebraCtx::rational(&[], 1, 1);
    for _ in 0..10 {
        let gens = vec![ShuffleElement::unit_power(
            ctx.clone(),
            r.gen_range(1..=3),
            random_nonzero_scalar(&mut r, RingId::RationalQ),
        )
        .unwrap()];
        let f = gens[0]
            .baxter_p_iter(r.gen_range(0..=2))
            .scale(&random_nonzero_scalar(&mut r, RingId::RationalQ))
            .unwrap();
        let trace = baxter_reduce(&f, &gens).unwrap();
        if trace.remainder.is_zero() {
            let l = f.max_tensor_degree().unwrap();
            let sat = baxter_ideal_saturate(&ctx, &gens, l, 0).unwrap();
            assert!(sat.contains(&f));
        }
    }
}
