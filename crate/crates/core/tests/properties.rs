use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use resultant_core::combinat::DegreeSystem;
use resultant_core::linalg::{bareiss_det, berkowitz_charpoly, rank_over_fractions, Matrix};
use resultant_core::ring::{MPoly, Param, ParamMonomial, ParamPoly, Scalar};

fn mpoly() -> impl Strategy<Value = MPoly<BigInt>> {
    prop::collection::vec(((0u32..4, 0u32..4), -20i64..20), 0..6).prop_map(|terms| {
        MPoly::from_terms(2, terms.into_iter().map(|((a, b), c)| (vec![a, b], BigInt::from(c))).collect()).unwrap()
    })
}

fn param_poly() -> impl Strategy<Value = ParamPoly> {
    let factor = (1u32..3, 1u32..4, 1u32..3).prop_map(|(i, k, e)| (Param::new(i, k), e));
    prop::collection::vec((prop::collection::vec(factor, 0..3), -9i64..9), 0..5).prop_map(|terms| {
        ParamPoly::from_terms(terms.into_iter().map(|(f, c)| (ParamMonomial::from_factors(f), BigInt::from(c))).collect())
    })
}

fn int_matrix(n: usize) -> impl Strategy<Value = Matrix<BigInt>> {
    prop::collection::vec(-6i64..6, n * n).prop_map(move |v| Matrix::new(n, n, v.into_iter().map(BigInt::from).collect()).unwrap())
}

fn laplace(m: &[Vec<BigInt>]) -> BigInt {
    if m.is_empty() {
        return BigInt::from(1);
    }
    let mut total = BigInt::from(0);
    for (c, v) in m[0].iter().enumerate() {
        let minor: Vec<Vec<BigInt>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect()).collect();
        let term = v * laplace(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(a in mpoly(), b in mpoly(), c in mpoly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in mpoly(), b in mpoly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).exact_div(&b), Some(a));
    }

    #[test]
    fn param_poly_text_round_trips(p in param_poly()) {
        let back: ParamPoly = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn specialization_is_a_ring_map(p in param_poly(), q in param_poly(), values in prop::collection::vec(-5i64..5, 6)) {
        let mut a = HashMap::new();
        for i in 1..3 {
            for k in 1..4 {
                a.insert(Param::new(i, k), BigInt::from(values[((i - 1) * 3 + k - 1) as usize]));
            }
        }
        let sp = |x: &ParamPoly| x.specialize(&a).unwrap();
        prop_assert_eq!(sp(&p.mul(&q)), sp(&p) * sp(&q));
        prop_assert_eq!(sp(&p.add(&q)), sp(&p) + sp(&q));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(m in (1usize..5).prop_flat_map(int_matrix)) {
        prop_assert_eq!(bareiss_det(&m).unwrap(), laplace(&m.to_rows()));
    }

    #[test]
    fn charpoly_constant_term_is_signed_determinant(m in (1usize..5).prop_flat_map(int_matrix)) {
        let cp = berkowitz_charpoly(&m).unwrap();
        let det = bareiss_det(&m).unwrap();
        let expected = if m.rows() % 2 == 0 { det } else { -det };
        prop_assert_eq!(cp.coeff(0), expected);
        prop_assert_eq!(cp.degree(), Some(m.rows()));
    }

    #[test]
    fn rank_ignores_repeated_rows(m in (1usize..5).prop_flat_map(int_matrix)) {
        let q = m.map(|x| BigRational::from_integer(x.clone()));
        let mut rows = q.to_rows();
        rows.extend(q.to_rows());
        let stacked = Matrix::from_rows(rows).unwrap();
        prop_assert_eq!(rank_over_fractions(&stacked).unwrap(), rank_over_fractions(&q).unwrap());
        prop_assert_eq!(rank_over_fractions(&q).unwrap() == q.rows(), !bareiss_det(&q).unwrap().is_zero());
    }

    #[test]
    fn hilbert_function_is_symmetric(degrees in prop::collection::vec(1u32..6, 1..6)) {
        let ds = DegreeSystem::new(degrees).unwrap();
        let tn = i64::from(ds.critical_degree());
        let total: u64 = (0..=tn).map(|t| ds.hilbert_function(t)).sum();
        prop_assert_eq!(total, ds.degrees().iter().map(|&d| u64::from(d)).product::<u64>());
        for t in 0..=tn {
            prop_assert_eq!(ds.hilbert_function(t), ds.hilbert_function(tn - t));
            prop_assert!(ds.rho_size(t).unwrap() >= ds.rho_size(i64::from(ds.minimal_t())).unwrap());
        }
        prop_assert_eq!(ds.hilbert_function(tn + 1), 0);
    }
}
