mod common;

use gkz_core::resultant::{plucker_specialization_in_basis, symbolic_resultant};
use gkz_core::{
    discriminant_univariate, plucker_specialization, resultant, Error, LogDerivativeBasis,
    Simplex, SparsePoly, UnivariatePoly, UnivariateSymbolic,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn numeric_poly(max_degree: usize) -> impl Strategy<Value = UnivariatePoly> {
    (1..=max_degree)
        .prop_flat_map(|d| (prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), prop::collection::vec(-4i64..=4, d)))
        .prop_map(|(lead, rest)| {
            let mut coeffs = vec![lead];
            coeffs.extend(rest);
            UnivariatePoly::from_integers(&coeffs)
        })
}

fn value(p: &SparsePoly) -> BigInt {
    p.eval_integers(&[]).unwrap()
}

/// Multisets of one or two roots in `-3..=3`.
fn root_sets() -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = (-3..=3).map(|r| vec![r]).collect();
    for r in -3..=3 {
        for s in r..=3 {
            out.push(vec![r, s]);
        }
    }
    out
}

#[test]
fn symbolic_resultant_swap_sign() {
    for df in 1..=3 {
        for dg in 1..=3 {
            let f = UnivariateSymbolic::generic(df, "1").unwrap();
            let g = UnivariateSymbolic::generic(dg, "2").unwrap();
            let fg = symbolic_resultant(&f, &g);
            let gf = symbolic_resultant(&g, &f);
            let expected = if (df * dg) % 2 == 0 { gf } else { -gf };
            assert_eq!(fg, expected, "degrees {df}, {dg}");
        }
    }
}

#[test]
fn root_detection_is_exhaustive() {
    let sets = root_sets();
    for a in &sets {
        let f = UnivariatePoly::from_roots(a);
        for b in &sets {
            let g = UnivariatePoly::from_roots(b);
            let common = a.iter().any(|r| b.contains(r));
            assert_eq!(value(&resultant(&f, &g)).is_zero(), common, "{a:?} vs {b:?}");
        }
    }
}

#[test]
fn resultant_of_root_products() {
    // Res(f, g) = prod (r_i - s_j) for monic f, g.
    for a in root_sets() {
        for b in root_sets() {
            let expected: i64 = a.iter().flat_map(|r| b.iter().map(move |s| r - s)).product();
            let got = value(&resultant(&UnivariatePoly::from_roots(&a), &UnivariatePoly::from_roots(&b)));
            assert_eq!(got, BigInt::from(expected));
        }
    }
}

proptest! {
    #[test]
    fn multiplicativity(f in numeric_poly(3), g in numeric_poly(3), h in numeric_poly(3)) {
        let lhs = value(&resultant(&f, &g.mul(&h)));
        let rhs = value(&resultant(&f, &g)) * value(&resultant(&f, &h));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn discriminant_vanishes_on_double_roots(r in -3i64..=3, cofactor in numeric_poly(2)) {
        let f = UnivariatePoly::from_roots(&[r, r]).mul(&cofactor);
        let d = f.degree();
        let disc = discriminant_univariate(d).unwrap();
        let names: Vec<String> = disc.vars().to_vec();
        let at: Vec<(&str, i64)> = names
            .iter()
            .zip(f.coeffs())
            .map(|(n, c)| (n.as_str(), i64::try_from(value(c)).unwrap()))
            .collect();
        prop_assert!(disc.eval_integers(&at).unwrap().is_zero());
    }

    #[test]
    fn discriminant_detects_distinct_roots(roots in prop::collection::btree_set(-3i64..=3, 2..=4)) {
        let roots: Vec<i64> = roots.into_iter().collect();
        let f = UnivariatePoly::from_roots(&roots);
        let disc = discriminant_univariate(f.degree()).unwrap();
        let at: Vec<(String, i64)> = disc
            .vars()
            .iter()
            .cloned()
            .zip(f.coeffs().iter().map(|c| i64::try_from(value(c)).unwrap()))
            .collect();
        let at: Vec<(&str, i64)> = at.iter().map(|(n, v)| (n.as_str(), *v)).collect();
        prop_assert!(!disc.eval_integers(&at).unwrap().is_zero());
    }
}

#[test]
fn plucker_coefficients_are_volumes() {
    for (name, c) in common::small_examples() {
        for s in c.all_simplices() {
            match c.normalized_volume(&s) {
                Ok(vol) => {
                    let image = plucker_specialization(&c, &s).unwrap();
                    assert_eq!(image.coefficient.abs(), BigInt::from(vol), "{name} {s:?}");
                    let expected: Vec<u32> = (0..c.len()).map(|i| s.contains(i) as u32).collect();
                    assert_eq!(image.monomial, expected);
                }
                Err(_) => assert!(matches!(
                    plucker_specialization(&c, &s),
                    Err(Error::DegenerateSimplex(_))
                )),
            }
        }
    }
}

#[test]
fn basis_change_is_a_global_sign() {
    let pentagon = common::example("pentagon");
    let other = LogDerivativeBasis::new(vec![vec![1, 0, 0], vec![1, 1, 0], vec![2, -1, -1]]).unwrap();
    let mut ratio = None;
    for s in pentagon.all_simplices() {
        if pentagon.normalized_volume(&s).is_err() {
            continue;
        }
        let a = plucker_specialization(&pentagon, &s).unwrap();
        let b = plucker_specialization_in_basis(&pentagon, &s, &other).unwrap();
        assert_eq!(a.monomial, b.monomial);
        assert_eq!(a.coefficient.abs(), b.coefficient.abs());
        let sign = a.coefficient.signum() * b.coefficient.signum();
        assert_eq!(*ratio.get_or_insert(sign.clone()), sign);
    }
    assert_eq!(ratio, Some(BigInt::from(-1)));
    let s = Simplex::new(vec![0, 2, 3]);
    assert_eq!(plucker_specialization(&pentagon, &s).unwrap().coefficient.abs(), BigInt::from(2));
}
