//! Maximal minors of the full map for generic forms of degrees (1, 1, 2).

use resultant_core::bezoutian::{bezoutian, PolySystem};
use resultant_core::linalg::{bareiss_det, Matrix};
use resultant_core::macaulay::{full_map, resultant_generic, ResultantOptions};
use resultant_core::ring::{ParamPoly, Scalar};

fn maximal_minors(m: &Matrix<ParamPoly>) -> Vec<ParamPoly> {
    assert!(m.rows() <= m.cols());
    let rows: Vec<usize> = (0..m.rows()).collect();
    // Every choice of rows() columns; the matrices here are at most one column wide of square.
    assert!(m.cols() - m.rows() <= 1);
    if m.cols() == m.rows() {
        return vec![bareiss_det(m).unwrap()];
    }
    (0..m.cols())
        .map(|skip| {
            let cols: Vec<usize> = (0..m.cols()).filter(|&c| c != skip).collect();
            bareiss_det(&m.select(&rows, &cols)).unwrap()
        })
        .collect()
}

/// Two linear forms are coprime unless one is a rational multiple of the other.
fn proportional(a: &ParamPoly, b: &ParamPoly) -> bool {
    let (ta, tb) = (a.terms(), b.terms());
    if ta.len() != tb.len() {
        return false;
    }
    let (ca, cb) = (&ta[0].1, &tb[0].1);
    ta.iter().zip(tb).all(|((ma, xa), (mb, xb))| ma == mb && xa * cb == xb * ca)
}

#[test]
fn psi_zero_is_square_with_determinant_res() {
    let sys = PolySystem::generic(vec![1, 1, 2]).unwrap();
    let res = resultant_generic(&sys, 0, &ResultantOptions::default()).unwrap().value;
    let bez = bezoutian(&sys).unwrap();
    let psi = full_map(&sys, Some(&bez), 0).unwrap();
    let minors = maximal_minors(&psi.matrix);
    assert_eq!(minors.len(), 1);
    assert!(minors[0] == res || minors[0] == res.neg());
}

#[test]
fn psi_two_minors_have_gcd_res() {
    let sys = PolySystem::generic(vec![1, 1, 2]).unwrap();
    let res = resultant_generic(&sys, 0, &ResultantOptions::default()).unwrap().value;
    let psi = full_map(&sys, None, 2).unwrap();
    assert_eq!((psi.rows(), psi.cols()), (6, 7));
    let cofactors: Vec<ParamPoly> = maximal_minors(&psi.matrix)
        .into_iter()
        .filter(|m| !m.is_zero())
        .map(|m| m.exact_div(&res).expect("every maximal minor is a multiple of Res"))
        .collect();
    assert!(cofactors.len() >= 2);
    for c in &cofactors {
        assert_eq!(c.total_degree(), Some(1));
    }
    let first = &cofactors[0];
    assert!(cofactors.iter().any(|c| !proportional(first, c)), "cofactors share a common factor");
}
