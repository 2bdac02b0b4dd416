//! Polynomial systems and their Bezoutians.
//!
//! For `f_1..f_n` homogeneous in `X_1..X_n`, the incremental quotients
//! `Delta_ij(X, Y)` satisfy `f_i(X) - f_i(Y) = sum_j Delta_ij (X_j - Y_j)` and the
//! Bezoutian is `Delta(X, Y) = det(Delta_ij)`, a form of degree `t_n` in the
//! `2n` variables `X_1..X_n, Y_1..Y_n`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use thiserror::Error;

use crate::combinat::{CombinatError, DegreeSystem};
use crate::linalg::{bareiss_det, BlockLayout, Label, LabeledMatrix, LinalgError, Matrix};
use crate::ring::{monomials_of_degree, Exponent, MPoly, Param, ParamPoly, RingError, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BezoutianError {
    #[error("expected {expected} polynomials, got {got}")]
    PolyCount { expected: usize, got: usize },
    #[error("polynomial {poly} is not homogeneous of degree {degree}")]
    NotHomogeneous { poly: usize, degree: u32 },
    #[error("polynomial {poly} has {found} variables, expected {expected}")]
    VariableCount { poly: usize, found: usize, expected: usize },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("degree {t} outside 0..={tn}")]
    DegreeOutOfRange { t: i64, tn: u32 },
    #[error(transparent)]
    Degrees(#[from] CombinatError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `n` forms in `X_1..X_n`, the `i`-th homogeneous of degree `d_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolySystem<R: Scalar> {
    ds: DegreeSystem,
    polys: Vec<MPoly<R>>,
}

impl<R: Scalar> PolySystem<R> {
    pub fn new(degrees: Vec<u32>, polys: Vec<MPoly<R>>) -> Result<Self, BezoutianError> {
        let ds = DegreeSystem::new(degrees)?;
        let n = ds.n();
        if polys.len() != n {
            return Err(BezoutianError::PolyCount { expected: n, got: polys.len() });
        }
        let mut lifted = Vec::with_capacity(n);
        for (i, p) in polys.into_iter().enumerate() {
            let d = ds.degree(i + 1);
            if p.nvars() != n && !(p.nvars() == 0 && p.is_zero()) {
                return Err(BezoutianError::VariableCount { poly: i + 1, found: p.nvars(), expected: n });
            }
            if !p.is_homogeneous_of(d) {
                return Err(BezoutianError::NotHomogeneous { poly: i + 1, degree: d });
            }
            lifted.push(if p.nvars() == n { p } else { MPoly::zero_in(n) });
        }
        Ok(Self { ds, polys: lifted })
    }

    /// The system `X_1^{d_1}, ..., X_n^{d_n}`.
    pub fn monomial(degrees: Vec<u32>) -> Result<Self, BezoutianError> {
        let n = degrees.len();
        let polys = degrees.iter().enumerate().map(|(i, &d)| MPoly::monomial(Exponent::unit(n, i, d), R::one())).collect();
        Self::new(degrees, polys)
    }

    pub fn degree_system(&self) -> &DegreeSystem {
        &self.ds
    }

    pub fn n(&self) -> usize {
        self.ds.n()
    }

    pub fn degrees(&self) -> &[u32] {
        self.ds.degrees()
    }

    pub fn polys(&self) -> &[MPoly<R>] {
        &self.polys
    }

    /// `f_i`, 1-based.
    pub fn poly(&self, i: usize) -> &MPoly<R> {
        &self.polys[i - 1]
    }

    pub fn map_coeffs<S: Scalar>(&self, f: impl Fn(&R) -> S) -> PolySystem<S> {
        PolySystem { ds: self.ds.clone(), polys: self.polys.iter().map(|p| p.map_coeffs(&f)).collect() }
    }

    pub fn try_map_coeffs<S: Scalar, E>(&self, f: impl Fn(&R) -> Result<S, E>) -> Result<PolySystem<S>, E> {
        let polys = self.polys.iter().map(|p| p.try_map_coeffs(&f)).collect::<Result<Vec<_>, E>>()?;
        Ok(PolySystem { ds: self.ds.clone(), polys })
    }

    /// Applies a permutation to both the polynomials and the variables:
    /// the new `i`-th polynomial is `f_{perm[i]}` with `X_{perm[k]}` renamed `X_k`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.n();
        let degrees = perm.iter().map(|&p| self.ds.degree(p + 1)).collect();
        let polys = perm
            .iter()
            .map(|&p| {
                self.polys[p].map_exponents(n, |e| Exponent::new(perm.iter().map(|&q| e.get(q)).collect()))
            })
            .collect();
        PolySystem { ds: DegreeSystem::new(degrees).expect("permutation keeps degrees valid"), polys }
    }

    /// Renames `X_{sigma[k]}` to `X_k` in every polynomial, keeping their order.
    pub fn with_variables_permuted(&self, sigma: &[usize]) -> Self {
        let n = self.n();
        let polys = self
            .polys
            .iter()
            .map(|f| f.map_exponents(n, |e| Exponent::new(sigma.iter().map(|&q| e.get(q)).collect())))
            .collect();
        PolySystem { ds: self.ds.clone(), polys }
    }

    fn check_index(&self, i: usize) -> Result<(), BezoutianError> {
        if i == 0 || i > self.n() {
            Err(BezoutianError::IndexOutOfRange { index: i, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Coefficient of `X^e` in `f_j`.
    pub fn coefficient(&self, j: usize, e: &Exponent) -> R {
        self.polys[j - 1].coeff(e)
    }
}

impl PolySystem<ParamPoly> {
    /// The generic system: `f_i = sum_k a_i_k X^{alpha_k}` over the degree-`d_i`
    /// monomials in canonical order.
    pub fn generic(degrees: Vec<u32>) -> Result<Self, BezoutianError> {
        let n = degrees.len();
        let polys = degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let terms = monomials_of_degree(n, i64::from(d))
                    .into_iter()
                    .enumerate()
                    .map(|(k, e)| (e, ParamPoly::var(Param::new(i as u32 + 1, k as u32 + 1))))
                    .collect();
                MPoly::from_exponent_terms(n, terms)
            })
            .collect();
        Self::new(degrees, polys)
    }

    pub fn specialize(&self, assignment: &HashMap<Param, BigInt>) -> Result<PolySystem<BigInt>, BezoutianError> {
        Ok(self.try_map_coeffs(|c| c.specialize(assignment))?)
    }
}

/// Assignment of the generic parameters that turns the generic system into
/// the given integer one.
pub fn parameter_assignment(sys: &PolySystem<BigInt>) -> HashMap<Param, BigInt> {
    let n = sys.n();
    let mut out = HashMap::new();
    for (i, &d) in sys.degrees().iter().enumerate() {
        for (k, e) in monomials_of_degree(n, i64::from(d)).into_iter().enumerate() {
            out.insert(Param::new(i as u32 + 1, k as u32 + 1), sys.polys[i].coeff(&e));
        }
    }
    out
}

/// `Delta_ij(X, Y)`, with `i` and `j` 1-based.
///
/// Each term `c X^a` of `f_i` contributes
/// `c Y_1^{a_1}..Y_{j-1}^{a_{j-1}} X_{j+1}^{a_{j+1}}..X_n^{a_n} sum_{k<a_j} X_j^{a_j-1-k} Y_j^k`.
pub fn incremental_quotient<R: Scalar>(sys: &PolySystem<R>, i: usize, j: usize) -> Result<MPoly<R>, BezoutianError> {
    sys.check_index(i)?;
    sys.check_index(j)?;
    let n = sys.n();
    let jj = j - 1;
    let mut terms = Vec::new();
    for (e, c) in sys.polys[i - 1].terms() {
        let aj = e.get(jj);
        if aj == 0 {
            continue;
        }
        let mut base = vec![0u32; 2 * n];
        for v in 0..jj {
            base[n + v] = e.get(v);
        }
        for v in jj + 1..n {
            base[v] = e.get(v);
        }
        for k in 0..aj {
            let mut exps = base.clone();
            exps[jj] = aj - 1 - k;
            exps[n + jj] = k;
            terms.push((Exponent::new(exps), c.clone()));
        }
    }
    Ok(MPoly::from_exponent_terms(2 * n, terms))
}

/// The matrix `(Delta_ij)` with rows `i` and columns `j`.
pub fn quotient_matrix<R: Scalar>(sys: &PolySystem<R>) -> Result<Matrix<MPoly<R>>, BezoutianError> {
    let n = sys.n();
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        rows.push((1..=n).map(|j| incremental_quotient(sys, i, j)).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(Matrix::from_rows(rows)?)
}

/// `Delta(X, Y)` together with the system it came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bezoutian<R: Scalar> {
    poly: MPoly<R>,
    n: usize,
    critical_degree: u32,
}

/// `det(Delta_ij)` by fraction-free elimination over the polynomial ring.
pub fn bezoutian<R: Scalar>(sys: &PolySystem<R>) -> Result<Bezoutian<R>, BezoutianError> {
    let n = sys.n();
    let det = bareiss_det(&quotient_matrix(sys)?)?;
    let poly = if det.nvars() == 2 * n { det } else { det.try_add(&MPoly::zero_in(2 * n))? };
    Ok(Bezoutian { poly, n, critical_degree: sys.degree_system().critical_degree() })
}

impl<R: Scalar> Bezoutian<R> {
    pub fn poly(&self) -> &MPoly<R> {
        &self.poly
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_t(&self, t: i64) -> Result<(), BezoutianError> {
        if t < 0 || t > i64::from(self.critical_degree) {
            Err(BezoutianError::DegreeOutOfRange { t, tn: self.critical_degree })
        } else {
            Ok(())
        }
    }

    /// The coefficients `Delta_g(X)` of `Y^g` for `|g| = t_n - t`, each a form of
    /// degree `t` in `X`, listed for every such `g` in canonical order.
    pub fn slices(&self, t: i64) -> Result<Vec<(Exponent, MPoly<R>)>, BezoutianError> {
        self.check_t(t)?;
        let u = i64::from(self.critical_degree) - t;
        let mut by_y: BTreeMap<Exponent, Vec<(Exponent, R)>> =
            monomials_of_degree(self.n, u).into_iter().map(|g| (g, Vec::new())).collect();
        for (e, c) in self.poly.terms() {
            let (x, y) = e.split_half();
            if i64::from(y.total_degree()) == u {
                by_y.get_mut(&y).expect("homogeneous Bezoutian").push((x, c.clone()));
            }
        }
        Ok(by_y.into_iter().map(|(g, terms)| (g, MPoly::from_exponent_terms(self.n, terms))).collect())
    }

    /// The block `Delta_t`: rows `X^l` with `|l| = t`, columns `T_g` with
    /// `|g| = t_n - t`, entry the coefficient of `X^l` in `Delta_g`.
    pub fn delta_matrix(&self, t: i64) -> Result<LabeledMatrix<R>, BezoutianError> {
        let slices = self.slices(t)?;
        let rows = monomials_of_degree(self.n, t);
        let mut data = Vec::with_capacity(rows.len() * slices.len());
        for l in &rows {
            for (_, s) in &slices {
                data.push(s.coeff(l));
            }
        }
        let m = Matrix::new(rows.len(), slices.len(), data)?;
        let blocks = BlockLayout { top_rows: rows.len(), left_cols: slices.len() };
        Ok(LabeledMatrix::new(
            m,
            rows.into_iter().map(Label::Monomial).collect(),
            slices.into_iter().map(|(g, _)| Label::Dual(g)).collect(),
            blocks,
        )?)
    }

    /// `Delta(X, 0)` as a form in `X` alone.
    pub fn delta_zero(&self) -> MPoly<R> {
        let n = self.n;
        self.poly.set_to_zero(n..2 * n).map_exponents(n, |e| e.split_half().0)
    }
}

/// `Delta(X, 0)` of the system.
pub fn delta_zero<R: Scalar>(sys: &PolySystem<R>) -> Result<MPoly<R>, BezoutianError> {
    Ok(bezoutian(sys)?.delta_zero())
}

/// Determinant of the Jacobian matrix `(d f_i / d X_j)`.
pub fn jacobian<R: Scalar>(sys: &PolySystem<R>) -> Result<MPoly<R>, BezoutianError> {
    let n = sys.n();
    let rows = sys.polys.iter().map(|f| (0..n).map(|j| f.derivative(j)).collect()).collect();
    let det = bareiss_det(&Matrix::from_rows(rows)?)?;
    Ok(if det.nvars() == n { det } else { det.try_add(&MPoly::zero_in(n))? })
}

/// Cofactor expansion of `det(Delta_ij)`, used to cross-check small cases.
pub fn bezoutian_by_cofactors<R: Scalar>(sys: &PolySystem<R>) -> Result<MPoly<R>, BezoutianError> {
    fn expand<R: Scalar>(m: &[Vec<MPoly<R>>], cols: &[usize]) -> MPoly<R> {
        let Some((first, rest)) = m.split_first() else {
            return MPoly::one();
        };
        let mut total = MPoly::zero();
        for (k, &c) in cols.iter().enumerate() {
            let others: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = first[c].mul(&expand(rest, &others));
            total = if k % 2 == 0 { total.add(&term) } else { total.sub(&term) };
        }
        total
    }
    let n = sys.n();
    let m = quotient_matrix(sys)?.to_rows();
    let cols: Vec<usize> = (0..n).collect();
    Ok(expand(&m, &cols).try_add(&MPoly::zero_in(2 * n))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_system(rng: &mut ChaCha8Rng, degrees: &[u32]) -> PolySystem<BigInt> {
        let g = PolySystem::generic(degrees.to_vec()).unwrap();
        let mut a = HashMap::new();
        for f in g.polys() {
            for (_, c) in f.terms() {
                for p in c.params() {
                    a.insert(p, BigInt::from(rng.gen_range(-5i64..=5)));
                }
            }
        }
        g.specialize(&a).unwrap()
    }

    fn xy_poly(n: usize, terms: &[(&[u32], i64)]) -> MPoly<BigInt> {
        MPoly::from_terms(2 * n, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))).collect()).unwrap()
    }

    #[test]
    fn validation() {
        let x: MPoly<BigInt> = MPoly::var(2, 0);
        let sq = x.mul(&x);
        assert!(PolySystem::new(vec![1, 2], vec![x.clone(), sq.clone()]).is_ok());
        assert!(matches!(
            PolySystem::new(vec![1, 1], vec![x.clone(), sq.clone()]),
            Err(BezoutianError::NotHomogeneous { poly: 2, degree: 1 })
        ));
        assert!(matches!(PolySystem::new(vec![1], vec![x.clone(), sq]), Err(BezoutianError::PolyCount { .. })));
        assert!(PolySystem::new(vec![1, 1], vec![x, MPoly::zero()]).is_ok());
    }

    #[test]
    fn single_power() {
        let sys = PolySystem::<BigInt>::monomial(vec![4]).unwrap();
        let q = incremental_quotient(&sys, 1, 1).unwrap();
        assert_eq!(q, xy_poly(1, &[(&[3, 0], 1), (&[2, 1], 1), (&[1, 2], 1), (&[0, 3], 1)]));
        let x: MPoly<BigInt> = MPoly::var(2, 0);
        let y: MPoly<BigInt> = MPoly::var(2, 1);
        let num = x.pow(4).sub(&y.pow(4));
        assert_eq!(num.try_div(&x.sub(&y)).unwrap(), q);
    }

    #[test]
    fn linear_forms_give_constants() {
        let sys = PolySystem::generic(vec![1, 1, 1]).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                let q = incremental_quotient(&sys, i, j).unwrap();
                assert_eq!(q.num_terms(), 1);
                assert_eq!(q.terms()[0].0.total_degree(), 0);
                assert_eq!(q.terms()[0].1, ParamPoly::var(Param::new(i as u32, j as u32)));
            }
        }
        assert!(incremental_quotient(&sys, 0, 1).is_err());
        assert!(incremental_quotient(&sys, 1, 4).is_err());
    }

    #[test]
    fn telescoping_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for degrees in [vec![2, 3], vec![1, 2, 2], vec![3, 1, 2]] {
            let sys = random_system(&mut rng, &degrees);
            let n = sys.n();
            for i in 1..=n {
                let lift_x = sys.poly(i).map_exponents(2 * n, |e| e.concat(&Exponent::zero(n)));
                let lift_y = sys.poly(i).map_exponents(2 * n, |e| Exponent::zero(n).concat(e));
                let mut sum = MPoly::zero_in(2 * n);
                for j in 1..=n {
                    let diff = MPoly::var(2 * n, j - 1).sub(&MPoly::var(2 * n, n + j - 1));
                    sum = sum.add(&incremental_quotient(&sys, i, j).unwrap().mul(&diff));
                    // Division oracle for the closed form.
                    let sub = |k: usize| -> MPoly<BigInt> {
                        sys.poly(i).map_exponents(2 * n, |e| {
                            let mut v = vec![0u32; 2 * n];
                            for var in 0..n {
                                if var < k {
                                    v[n + var] = e.get(var);
                                } else {
                                    v[var] = e.get(var);
                                }
                            }
                            Exponent::new(v)
                        })
                    };
                    let quotient = sub(j - 1).sub(&sub(j)).try_div(&diff).unwrap();
                    assert_eq!(quotient, incremental_quotient(&sys, i, j).unwrap());
                }
                assert_eq!(sum, lift_x.sub(&lift_y));
            }
        }
    }

    #[test]
    fn monomial_system_product_formula() {
        let degrees = vec![2, 3, 1];
        let sys = PolySystem::<BigInt>::monomial(degrees.clone()).unwrap();
        let b = bezoutian(&sys).unwrap();
        let n = 3;
        let mut expected = MPoly::constant(2 * n, BigInt::from(1));
        for (i, &d) in degrees.iter().enumerate() {
            let terms: Vec<(Exponent, BigInt)> = (0..d)
                .map(|k| {
                    let mut v = vec![0u32; 2 * n];
                    v[i] = d - 1 - k;
                    v[n + i] = k;
                    (Exponent::new(v), BigInt::from(1))
                })
                .collect();
            expected = expected.mul(&MPoly::from_exponent_terms(2 * n, terms));
        }
        assert_eq!(b.poly(), &expected);
        for t in 0..=3 {
            for (g, s) in b.slices(t).unwrap() {
                let reduced = g.as_slice().iter().zip(&degrees).all(|(a, d)| a < d);
                assert_eq!(s.num_terms(), usize::from(reduced));
                if reduced {
                    assert_eq!(s.terms()[0].1, BigInt::from(1));
                }
            }
            let m = b.delta_matrix(t).unwrap().matrix;
            for i in 0..m.rows() {
                let ones = m.row(i).iter().filter(|v| **v == BigInt::from(1)).count();
                let zeros = m.row(i).iter().filter(|v| **v == BigInt::from(0)).count();
                assert!(ones <= 1 && ones + zeros == m.cols());
            }
        }
        let d0 = b.delta_zero();
        assert_eq!(d0, MPoly::from_terms(3, vec![(vec![1, 2, 0], BigInt::from(1))]).unwrap());
        let j = jacobian(&sys).unwrap();
        assert_eq!(j, d0.scale(&BigInt::from(6)));
    }

    #[test]
    fn generic_112_slices() {
        let sys = PolySystem::generic(vec![1, 1, 2]).unwrap();
        let b = bezoutian(&sys).unwrap();
        assert_eq!(b.poly().homogeneous_degree(), Some(1));
        let slices = b.slices(0).unwrap();
        assert_eq!(slices.len(), 3);
        let v = |i: u32, k: u32| ParamPoly::var(Param::new(i, k));
        let ab = |i: u32, j: u32| v(1, i).mul(&v(2, j)).sub(&v(1, j).mul(&v(2, i)));
        // With c1 = a_3_1, c4 = a_3_2, c5 = a_3_3, c2 = a_3_4, c6 = a_3_5, c3 = a_3_6.
        let d100 = v(3, 1).mul(&ab(2, 3)).sub(&v(3, 2).mul(&ab(1, 3))).add(&v(3, 3).mul(&ab(1, 2)));
        let d010 = v(3, 5).mul(&ab(1, 2)).sub(&v(3, 4).mul(&ab(1, 3)));
        let d001 = v(3, 6).mul(&ab(1, 2));
        assert_eq!(slices[0].1.coeff(&Exponent::zero(3)), d100);
        assert_eq!(slices[1].1.coeff(&Exponent::zero(3)), d010);
        assert_eq!(slices[2].1.coeff(&Exponent::zero(3)), d001);
        assert!(b.slices(2).is_err());
        assert!(b.slices(-1).is_err());
    }

    /// Whether a form of degree `t_n` in `(X, Y)` lies in the ideal generated by
    /// all `f_i(X)` and `f_i(Y)`, checked one bidegree at a time by a rank test.
    fn symmetric_modulo_ideal(sys: &PolySystem<BigInt>, diff: &MPoly<BigInt>) -> bool {
        let n = sys.n();
        let tn = i64::from(sys.degree_system().critical_degree());
        (0..=tn).all(|p| {
            let q = tn - p;
            let cols: Vec<Exponent> = monomials_of_degree(n, p)
                .iter()
                .flat_map(|x| monomials_of_degree(n, q).into_iter().map(move |y| x.concat(&y)))
                .collect();
            let row_of = |f: &MPoly<BigInt>| -> Vec<BigInt> { cols.iter().map(|c| f.coeff(c)).collect() };
            let mut gens = Vec::new();
            for (i, &d) in sys.degrees().iter().enumerate() {
                let d = i64::from(d);
                let fx = sys.polys()[i].map_exponents(2 * n, |e| e.concat(&Exponent::zero(n)));
                let fy = sys.polys()[i].map_exponents(2 * n, |e| Exponent::zero(n).concat(e));
                for (f, a, bdeg) in [(&fx, p - d, q), (&fy, p, q - d)] {
                    for x in monomials_of_degree(n, a) {
                        for y in monomials_of_degree(n, bdeg) {
                            gens.push(row_of(&f.mul(&MPoly::monomial(x.concat(&y), BigInt::from(1)))));
                        }
                    }
                }
            }
            let part: Vec<(Exponent, BigInt)> = diff
                .terms()
                .iter()
                .filter(|(e, _)| i64::from(e.split_half().0.total_degree()) == p)
                .cloned()
                .collect();
            let target = row_of(&MPoly::from_exponent_terms(2 * n, part));
            if gens.is_empty() {
                return target.iter().all(|v| v == &BigInt::from(0));
            }
            let base = Matrix::from_rows(gens.clone()).unwrap();
            gens.push(target);
            let extended = Matrix::from_rows(gens).unwrap();
            crate::linalg::rank_over_fractions(&base).unwrap() == crate::linalg::rank_over_fractions(&extended).unwrap()
        })
    }

    #[test]
    fn symmetry_reassembly_and_cofactors() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for degrees in [vec![2, 2], vec![1, 2, 2], vec![2, 1, 3]] {
            let sys = random_system(&mut rng, &degrees);
            let n = sys.n();
            let b = bezoutian(&sys).unwrap();
            let tn = sys.degree_system().critical_degree();
            assert!(b.poly().is_homogeneous_of(tn));
            let swapped = b.poly().map_exponents(2 * n, |e| {
                let (x, y) = e.split_half();
                y.concat(&x)
            });
            assert!(symmetric_modulo_ideal(&sys, &b.poly().sub(&swapped)));
            assert_eq!(&bezoutian_by_cofactors(&sys).unwrap(), b.poly());
            let mut re = MPoly::zero_in(2 * n);
            for t in 0..=i64::from(tn) {
                for (g, s) in b.slices(t).unwrap() {
                    re = re.add(&s.map_exponents(2 * n, |x| x.concat(&g)));
                }
            }
            assert_eq!(&re, b.poly());
        }
    }

    #[test]
    fn permuted_system() {
        let sys = PolySystem::<BigInt>::monomial(vec![1, 2, 3]).unwrap();
        let p = sys.permuted(&[2, 0, 1]);
        assert_eq!(p, PolySystem::monomial(vec![3, 1, 2]).unwrap());
    }
}
