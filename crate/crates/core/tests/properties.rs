use algebroid::arith::{int, Rational};
use algebroid::character::integrate_characters;
use algebroid::groebner::Ideal;
use algebroid::hilbert::{equivariant_series_monomial, gamma_restriction, graded_piece_dims, ModuleSpec, SemigroupSpec};
use algebroid::matrix::Matrix;
use algebroid::poly::{Monomial, Polynomial, Ring};
use algebroid::repmod::{
    cayley_sylvester, covariant_dimension, decompose_sl2, invariants_of_indices, recognition_sl_blocks, symmetric_power,
};
use algebroid::series::{expand_series, reconstruct_rational, DenomFactor, SeriesPrefix};
use num_traits::One;
use proptest::prelude::*;

fn unit(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m.set(i, j, Rational::one());
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cayley_sylvester_matches_decomposition(n in 0usize..=5, d in 0usize..=5) {
        let dec = decompose_sl2(&symmetric_power(n, d)).unwrap();
        for e in 0..=(n * d) as u32 {
            prop_assert_eq!(cayley_sylvester(n as u32, d as u32, e), dec.get(&e).copied().unwrap_or(0).into());
        }
    }

    #[test]
    fn covariants_are_highest_vectors(n in 0usize..=6, d in 0usize..=4) {
        // kernel of X on S^n(S^d V)
        let (k, _) = invariants_of_indices(&symmetric_power(n, d), &[1]);
        prop_assert_eq!(covariant_dimension(n as u32, d as u32), k.into());
    }

    #[test]
    fn reconstruction_round_trips(num in prop::collection::vec(-5i64..=5, 1..5), l in 1u32..=3, m in 0u32..=2) {
        let denom = vec![DenomFactor::new(1, l), DenomFactor::new(2, m)];
        let rs = algebroid::series::RationalSeries::new(num.iter().map(|&c| c.into()).collect(), denom.clone()).unwrap();
        let prefix = expand_series(&rs, 24);
        let back = reconstruct_rational(&prefix, &denom).unwrap();
        prop_assert_eq!(back, rs);
    }

    #[test]
    fn recognition_ignores_basis_order(seed in 0usize..720) {
        // gl_2 + upper triangular 1x1 part embedded block-diagonally in 3x3
        let mut mats = vec![unit(3, 0, 0), unit(3, 0, 1), unit(3, 1, 0), unit(3, 1, 1), unit(3, 2, 2), unit(3, 0, 2)];
        let base = recognition_sl_blocks(&mats).unwrap();
        let mut s = seed;
        for i in (1..mats.len()).rev() {
            mats.swap(i, s % (i + 1));
            s /= i + 1;
        }
        let r = recognition_sl_blocks(&mats).unwrap();
        let mut a = base.factor_dims.clone();
        let mut b = r.factor_dims.clone();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
        prop_assert_eq!(base.hypothesis, r.hypothesis);
        prop_assert_eq!(base.sl_blocks.len(), r.sl_blocks.len());
    }

    #[test]
    fn gamma_restriction_is_idempotent(exps in prop::collection::vec((0u16..3, 0u16..3), 1..4)) {
        let ring = Ring::standard(2);
        let gens: Vec<Polynomial> = exps
            .iter()
            .map(|&(a, b)| Monomial::from_exponents(&[a, b]))
            .filter(|m| !m.is_one())
            .map(|m| Polynomial::monomial(2, m, Rational::one()))
            .collect();
        let cs = equivariant_series_monomial(&Ideal::new(ring, gens), 8).unwrap();
        for gamma in [SemigroupSpec::diagonal(2), SemigroupSpec::orthant(2), SemigroupSpec::trivial(2)] {
            let (once, _) = gamma_restriction(&cs, &gamma);
            let (twice, rep) = gamma_restriction(&once, &gamma);
            prop_assert_eq!(integrate_characters(&once).prefix, integrate_characters(&twice).prefix);
            prop_assert!(rep.holds_to_bound);
        }
    }

    /// Graded pieces of a primary monomial ideal agree with those of the same
    /// ideal presented by mixed generators (generic Groebner route).
    #[test]
    fn power_consistency(a in 1u16..=3, b in 1u16..=3, extra in prop::option::of((1u16..3, 1u16..3)), c in -2i64..=2) {
        let ring = Ring::standard(2);
        let mut ms = vec![Monomial::from_exponents(&[a, 0]), Monomial::from_exponents(&[0, b])];
        if let Some((p, q)) = extra {
            ms.push(Monomial::from_exponents(&[p, q]));
        }
        let mono: Vec<Polynomial> = ms.iter().map(|m| Polynomial::monomial(2, *m, Rational::one())).collect();
        let mut mixed = mono.clone();
        for k in 1..mixed.len() {
            mixed[k] = &mixed[k] + &Polynomial::monomial(2, ms[k - 1], int(c));
        }
        let i1 = Ideal::new(ring.clone(), mono);
        let i2 = Ideal::new(ring, mixed);
        prop_assert_eq!(graded_piece_dims(&i1, &ModuleSpec::Ring, 4).unwrap(), graded_piece_dims(&i2, &ModuleSpec::Ring, 4).unwrap());
    }
}

#[test]
fn integrated_prefix_of_plane_is_counting_monomials() {
    let cs = equivariant_series_monomial(&Ideal::new(Ring::standard(2), vec![]), 10).unwrap();
    let want = SeriesPrefix::from_ints((0..=10).map(|n| n as i64 + 1));
    assert_eq!(integrate_characters(&cs).prefix, want);
}
