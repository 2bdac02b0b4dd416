//! Reference computations that avoid the Macaulay machinery entirely.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bezoutian::PolySystem;
use crate::ring::{Exponent, ParamPoly, Scalar, UniPoly};

use super::Oracles;

pub fn default_oracles() -> Oracles {
    Oracles {
        elimination_112,
        binary_resultant,
        linear_resultant,
        interpolate,
        hilbert,
    }
}

/// `f_3` evaluated at the cross product of the coefficient vectors of `f_1` and `f_2`.
pub fn elimination_112(sys: &PolySystem<ParamPoly>) -> ParamPoly {
    let coeff = |i: usize, v: usize| sys.coefficient(i, &Exponent::unit(3, v, 1));
    let (a, b): (Vec<ParamPoly>, Vec<ParamPoly>) = ((0..3).map(|v| coeff(1, v)).collect(), (0..3).map(|v| coeff(2, v)).collect());
    let point = [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ];
    sys.poly(3).eval(&point)
}

fn rational_det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= m[k][k].clone();
        for r in k + 1..n {
            let factor = m[r][k].clone() / m[k][k].clone();
            for c in k..n {
                let v = m[k][c].clone() * factor.clone();
                m[r][c] -= v;
            }
        }
    }
    det
}

/// Resultant of `sum a_j X_1^j X_2^{d_1-j}` and `sum b_j X_1^j X_2^{d_2-j}` from
/// the Sylvester matrix, scaled so that `(X_1^{d_1}, X_2^{d_2})` gives 1.
pub fn binary_resultant(a: &[BigRational], b: &[BigRational]) -> BigRational {
    let sylvester = |a: &[BigRational], b: &[BigRational]| {
        let (d1, d2) = (a.len() - 1, b.len() - 1);
        let mut m = vec![vec![BigRational::zero(); d1 + d2]; d1 + d2];
        for i in 0..d2 {
            for (j, v) in a.iter().enumerate() {
                m[i][i + j] = v.clone();
            }
        }
        for i in 0..d1 {
            for (j, v) in b.iter().enumerate() {
                m[d2 + i][i + j] = v.clone();
            }
        }
        rational_det(m)
    };
    let mut ea = vec![BigRational::zero(); a.len()];
    *ea.last_mut().expect("positive degree") = BigRational::one();
    let mut eb = vec![BigRational::zero(); b.len()];
    eb[0] = BigRational::one();
    sylvester(a, b) / sylvester(&ea, &eb)
}

/// Determinant of the coefficient matrix of three linear forms.
pub fn linear_resultant(sys: &PolySystem<BigInt>) -> BigInt {
    let m: Vec<Vec<BigRational>> = (1..=3)
        .map(|i| (0..3).map(|v| BigRational::from_integer(sys.coefficient(i, &Exponent::unit(3, v, 1)))).collect())
        .collect();
    rational_det(m).to_integer()
}

/// Lagrange interpolation through the given points.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> UniPoly<BigRational> {
    let mut total = vec![BigRational::zero(); points.len()];
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c.clone();
                next[k] -= c.clone() * xj.clone();
            }
            basis = next;
            denom *= xi.clone() - xj.clone();
        }
        let w = yi.clone() / denom;
        for (k, c) in basis.into_iter().enumerate() {
            total[k] += c * w.clone();
        }
    }
    UniPoly::new(total)
}

/// Number of exponent vectors of total degree `t` with `0 <= g_i < d_i`.
pub fn hilbert(degrees: &[u32], t: i64) -> u64 {
    fn go(d: &[u32], left: i64) -> u64 {
        match d.split_first() {
            None => u64::from(left == 0),
            Some((&first, rest)) => (0..i64::from(first)).take_while(|&g| g <= left).map(|g| go(rest, left - g)).sum(),
        }
    }
    if t < 0 {
        0
    } else {
        go(degrees, t)
    }
}
