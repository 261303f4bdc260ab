use std::collections::BTreeSet;

use gkz_core::{bareiss_determinant, cofactor_determinant, Exponent, PolyMatrix, SparsePoly};
use num_bigint::BigInt;
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn vars() -> Vec<String> {
    VARS.iter().map(|s| s.to_string()).collect()
}

fn poly_in(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, nvars), -6i64..=6),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        SparsePoly::from_terms(
            vars()[..nvars].to_vec(),
            terms.into_iter().map(|(e, c)| (e, BigInt::from(c))),
        )
    })
}

fn poly() -> impl Strategy<Value = SparsePoly> {
    poly_in(3, 3, 5)
}

/// Entries of total degree at most one in `x, y`.
fn linear_entry() -> impl Strategy<Value = SparsePoly> {
    (-3i64..=3, -3i64..=3, -3i64..=3).prop_map(|(c, a, b)| {
        &(&SparsePoly::constant(c) + &SparsePoly::var("x").scale(&a.into()))
            + &SparsePoly::var("y").scale(&b.into())
    })
}

fn linear_matrix() -> impl Strategy<Value = PolyMatrix> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(linear_entry(), n), n)
    })
}

/// Vertices of the convex hull of 2D exponents: points that uniquely
/// maximize some integer direction.
fn brute_force_vertices(points: &[Exponent]) -> BTreeSet<Exponent> {
    let mut out = BTreeSet::new();
    for u in -8i64..=8 {
        for v in -8i64..=8 {
            let score = |p: &Exponent| u * p[0] as i64 + v * p[1] as i64;
            let best = points.iter().map(score).max().unwrap();
            let winners: Vec<_> = points.iter().filter(|p| score(p) == best).collect();
            if winners.len() == 1 {
                out.insert(winners[0].clone());
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &SparsePoly::zero(), a.clone());
        prop_assert_eq!(&a * &SparsePoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a * &SparsePoly::zero()).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly(), b in poly(), x in -4i64..=4, y in -4i64..=4, z in -4i64..=4) {
        let at = [("x", x), ("y", y), ("z", z)];
        let ev = |p: &SparsePoly| p.eval_integers(&at).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
    }

    #[test]
    fn display_parse_round_trip(a in poly()) {
        let back: SparsePoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let q = (&a * &b).div_exact(&b);
        prop_assert_eq!(q, Some(a));
    }

    #[test]
    fn bareiss_agrees_with_cofactor_expansion(m in linear_matrix()) {
        prop_assert_eq!(bareiss_determinant(&m).unwrap(), cofactor_determinant(&m).unwrap());
    }

    #[test]
    fn extremal_terms_match_brute_force_hull(p in poly_in(2, 4, 7)) {
        prop_assume!(!p.is_zero());
        let support: Vec<Exponent> = p.terms().map(|(e, _)| e.clone()).collect();
        let got: BTreeSet<Exponent> =
            p.extremal_terms().unwrap().into_iter().map(|(e, _)| e).collect();
        prop_assert_eq!(got, brute_force_vertices(&support));
    }

    #[test]
    fn extremal_terms_shift_with_monomial_factors(p in poly(), shift in prop::collection::vec(0u32..=2, 3)) {
        prop_assume!(!p.is_zero());
        let m = SparsePoly::monomial(vars(), shift.clone(), 1);
        let shifted: Vec<(Exponent, BigInt)> = p
            .extremal_terms()
            .unwrap()
            .into_iter()
            .map(|(e, c)| (e.iter().zip(&shift).map(|(a, b)| a + b).collect(), c))
            .collect();
        prop_assert_eq!((&p * &m).with_vars(&vars()).unwrap().extremal_terms().unwrap(), shifted);
    }

    #[test]
    fn extremal_support_is_scaling_invariant(p in poly(), k in prop::sample::select(vec![-3i64, -1, 2, 5])) {
        prop_assume!(!p.is_zero());
        let scaled = p.scale(&BigInt::from(k)).extremal_terms().unwrap();
        let expected: Vec<(Exponent, BigInt)> = p
            .extremal_terms()
            .unwrap()
            .into_iter()
            .map(|(e, c)| (e, c * k))
            .collect();
        prop_assert_eq!(scaled, expected);
    }
}

#[test]
fn generic_determinants_agree() {
    for n in 1..=4 {
        let m: PolyMatrix = (0..n)
            .map(|i| (0..n).map(|j| SparsePoly::var(&format!("m{i}{j}"))).collect())
            .collect();
        let d = bareiss_determinant(&m).unwrap();
        assert_eq!(d, cofactor_determinant(&m).unwrap());
        let factorial: usize = (1..=n).product();
        assert_eq!(d.num_terms(), factorial);
    }
}
