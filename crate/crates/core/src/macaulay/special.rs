//! Formulas for special degree patterns: Dixon, univariate Sylvester and
//! Bezout, ternary quadrics, and the Jacobian variant.

use crate::bezoutian::{jacobian, PolySystem};
use crate::linalg::{bareiss_det, BlockLayout, Label, LabeledMatrix, Matrix};
use crate::ring::{monomials_of_degree, Exponent, MPoly, Scalar};

use super::{build_assembly, resultant_specialized, MacaulayError, Result, ResultantOptions, ResultantValue};

fn affine_monomials(max_degree: i64) -> Vec<Exponent> {
    (0..=max_degree).flat_map(|k| monomials_of_degree(2, k)).collect()
}

fn homogenize(e: &Exponent, degree: u32) -> Exponent {
    Exponent::new(vec![e.get(0), e.get(1), degree - e.total_degree()])
}

/// The Dixon matrix of three affine polynomials in two variables, all of
/// degree at most `d`.
///
/// Rows are `m f_k` for monomials `m` of degree at most `d - 2`, followed by the
/// coefficients `B_b(x)` of `y^b` in
/// `det[f(x1, x2); f(y1, x2); f(y1, y2)] / ((x1 - y1)(x2 - y2))`.
/// Columns are the monomials of degree at most `2d - 2`. Labels use the
/// homogenized monomials so that the matrix can be compared with `tM_{2d-2}`.
pub fn dixon_matrix_affine<R: Scalar>(polys: &[MPoly<R>], d: u32) -> Result<LabeledMatrix<R>> {
    if polys.len() != 3 || d == 0 {
        return Err(MacaulayError::NotApplicable("Dixon needs three polynomials of positive degree".into()));
    }
    for f in polys {
        if f.num_terms() > 0 && f.nvars() != 2 || f.total_degree().is_some_and(|k| k > d) {
            return Err(MacaulayError::NotApplicable(format!("polynomial is not affine of degree <= {}", d)));
        }
    }
    // Variables x1, x2, y1, y2.
    let place = |f: &MPoly<R>, v1: usize, v2: usize| {
        f.map_exponents(4, |e| {
            let mut v = vec![0; 4];
            v[v1] = e.get(0);
            v[v2] += e.get(1);
            Exponent::new(v)
        })
    };
    let rows: Vec<Vec<MPoly<R>>> = polys.iter().map(|f| vec![place(f, 0, 1), place(f, 2, 1), place(f, 2, 3)]).collect();
    let det = bareiss_det(&Matrix::from_rows(rows)?.transpose())?;
    let lin = |a: usize, b: usize| MPoly::var(4, a).try_sub(&MPoly::var(4, b));
    let bez = det.try_add(&MPoly::zero_in(4))?.try_div(&lin(0, 2)?)?.try_div(&lin(1, 3)?)?;

    let col_monos = affine_monomials(2 * i64::from(d) - 2);
    let col_labels: Vec<Label> = col_monos.iter().map(|a| Label::Dual(homogenize(a, 2 * d - 2))).collect();
    let col_index: std::collections::HashMap<&Exponent, usize> = col_monos.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let mut row_labels = Vec::new();
    let mut data = Vec::new();
    let mut push_row = |label: Label, poly: &[(Exponent, R)], data: &mut Vec<Vec<R>>| -> Result<()> {
        let mut row = vec![R::zero(); col_monos.len()];
        for (a, c) in poly {
            let k = col_index
                .get(a)
                .ok_or_else(|| MacaulayError::Invariant(format!("Dixon monomial {:?} out of range", a)))?;
            row[*k] = c.clone();
        }
        row_labels.push(label);
        data.push(row);
        Ok(())
    };
    if d >= 2 {
        for (k, f) in polys.iter().enumerate() {
            for m in affine_monomials(i64::from(d) - 2) {
                let terms: Vec<(Exponent, R)> = f.terms().iter().map(|(a, c)| (a.mul(&m), c.clone())).collect();
                push_row(Label::DualMultiple(k + 1, homogenize(&m, d - 2)), &terms, &mut data)?;
            }
        }
    }
    for b in affine_monomials(i64::from(d) - 1) {
        let terms: Vec<(Exponent, R)> = bez
            .terms()
            .iter()
            .filter(|(e, _)| e.get(2) == b.get(0) && e.get(3) == b.get(1))
            .map(|(e, c)| (Exponent::new(vec![e.get(0), e.get(1)]), c.clone()))
            .collect();
        push_row(Label::Monomial(homogenize(&b, d - 1)), &terms, &mut data)?;
    }
    let top_rows = row_labels.iter().filter(|l| matches!(l, Label::Monomial(_))).count();
    let cols = col_labels.len();
    Ok(LabeledMatrix::new(Matrix::from_rows(data)?, row_labels, col_labels, BlockLayout { top_rows, left_cols: cols })?)
}

/// The Dixon matrix of three ternary forms of equal degree, after setting `X_3 = 1`.
pub fn dixon_matrix<R: Scalar>(sys: &PolySystem<R>) -> Result<LabeledMatrix<R>> {
    let d = equal_ternary_degree(sys)?;
    let affine: Vec<MPoly<R>> =
        sys.polys().iter().map(|f| f.map_exponents(2, |e| Exponent::new(vec![e.get(0), e.get(1)]))).collect();
    dixon_matrix_affine(&affine, d)
}

fn equal_ternary_degree<R: Scalar>(sys: &PolySystem<R>) -> Result<u32> {
    let ds = sys.degrees();
    if ds.len() != 3 || ds[1] != ds[0] || ds[2] != ds[0] {
        return Err(MacaulayError::NotApplicable("Dixon needs three forms of equal degree".into()));
    }
    Ok(ds[0])
}

/// `det` of the Dixon matrix, normalized so that `(X_1^d, X_2^d, X_3^d)` gives 1.
pub fn dixon_resultant<R: Scalar>(sys: &PolySystem<R>) -> Result<R> {
    let d = equal_ternary_degree(sys)?;
    let det = bareiss_det(&dixon_matrix(sys)?.matrix)?;
    let e = PolySystem::<R>::monomial(vec![d; 3])?;
    let reference = bareiss_det(&dixon_matrix(&e)?.matrix)?;
    unit_normalize(det, &reference)
}

fn unit_normalize<R: Scalar>(value: R, reference: &R) -> Result<R> {
    if reference.is_one() {
        Ok(value)
    } else if reference.neg().is_one() {
        Ok(value.neg())
    } else {
        Err(MacaulayError::Invariant(format!("reference value {} is not a unit", reference)))
    }
}

/// The homogenized pair `sum a_j X_1^j X_2^{d_1 - j}`, `sum b_j X_1^j X_2^{d_2 - j}`;
/// coefficients run from the constant term upward.
pub fn univariate_system<R: Scalar>(a: &[R], b: &[R]) -> Result<PolySystem<R>> {
    if a.len() < 2 || b.len() < 2 {
        return Err(MacaulayError::NotApplicable("univariate polynomials need positive degree".into()));
    }
    let form = |c: &[R]| {
        let d = (c.len() - 1) as u32;
        MPoly::from_terms(2, c.iter().enumerate().map(|(j, v)| (vec![j as u32, d - j as u32], v.clone())).collect())
    };
    Ok(PolySystem::new(vec![(a.len() - 1) as u32, (b.len() - 1) as u32], vec![form(a)?, form(b)?])?)
}

/// The classical Sylvester matrix of two univariate polynomials, rows
/// `x^i f_1` for `i < d_2` then `x^i f_2` for `i < d_1`, columns `1, x, x^2, ...`.
pub fn sylvester_matrix<R: Scalar>(a: &[R], b: &[R]) -> Matrix<R> {
    let (d1, d2) = (a.len() - 1, b.len() - 1);
    let size = d1 + d2;
    let mut m = Matrix::zeros(size, size);
    for i in 0..d2 {
        for (j, v) in a.iter().enumerate() {
            m.set(i, i + j, v.clone());
        }
    }
    for i in 0..d1 {
        for (j, v) in b.iter().enumerate() {
            m.set(d2 + i, i + j, v.clone());
        }
    }
    m
}

/// The Bezout matrix `(c_ij)` of two univariate polynomials of equal degree `d`:
/// `(f_1(x) f_2(y) - f_1(y) f_2(x)) / (x - y) = sum c_ij x^i y^j`.
pub fn bezout_matrix<R: Scalar>(a: &[R], b: &[R]) -> Matrix<R> {
    assert_eq!(a.len(), b.len(), "Bezout matrix needs equal degrees");
    let d = a.len() - 1;
    // Coefficient of x^i y^j in (x^p y^q - x^q y^p) / (x - y) for p > q is 1
    // when q <= j < p and i + j = p + q - 1.
    let mut m: Matrix<R> = Matrix::zeros(d, d);
    for p in 0..=d {
        for q in 0..p {
            let w = a[p].mul(&b[q]).sub(&a[q].mul(&b[p]));
            if w.is_zero() {
                continue;
            }
            for j in q..p {
                let i = p + q - 1 - j;
                let cur = m.get(i, j).add(&w);
                m.set(i, j, cur);
            }
        }
    }
    m
}

/// `Res(f_1, f_2)` of two univariate polynomials through `M_t` on their
/// homogenizations; every `0 <= t <= d_1 + d_2 - 1` is determinantal.
pub fn univariate_formulas<R: Scalar>(a: &[R], b: &[R], t: u32, opts: &ResultantOptions) -> Result<ResultantValue<R>> {
    let sys = univariate_system(a, b)?;
    let top = sys.degree_system().critical_degree() + 1;
    if t > top {
        return Err(MacaulayError::NotApplicable(format!("t = {} exceeds d_1 + d_2 - 1 = {}", t, top)));
    }
    resultant_specialized(&sys, Some(t), opts)
}

/// The 6x6 matrix of three ternary quadrics and the partial derivatives of
/// their Jacobian, on the monomials of degree 2.
pub fn ternary_quadric_matrix<R: Scalar>(sys: &PolySystem<R>) -> Result<LabeledMatrix<R>> {
    if sys.degrees() != [2, 2, 2] {
        return Err(MacaulayError::NotApplicable("needs three ternary quadrics".into()));
    }
    let j = jacobian(sys)?;
    let mut rows: Vec<MPoly<R>> = sys.polys().to_vec();
    rows.extend((0..3).map(|v| j.derivative(v)));
    let cols = monomials_of_degree(3, 2);
    let data: Vec<Vec<R>> = rows.iter().map(|f| cols.iter().map(|m| f.coeff(m)).collect()).collect();
    let row_labels = (1..=3)
        .map(|k| Label::Named(format!("f{}", k)))
        .chain((1..=3).map(|k| Label::Named(format!("dJ/dX{}", k))))
        .collect();
    let col_labels = cols.into_iter().map(Label::Monomial).collect();
    Ok(LabeledMatrix::new(Matrix::from_rows(data)?, row_labels, col_labels, BlockLayout { top_rows: 6, left_cols: 0 })?)
}

/// `det / 512` of [`ternary_quadric_matrix`], normalized so that
/// `(X_1^2, X_2^2, X_3^2)` gives 1.
pub fn ternary_quadric_sylvester<R: Scalar>(sys: &PolySystem<R>) -> Result<R> {
    let det = bareiss_det(&ternary_quadric_matrix(sys)?.matrix)?;
    let e = PolySystem::<R>::monomial(vec![2, 2, 2])?;
    let reference = bareiss_det(&ternary_quadric_matrix(&e)?.matrix)?;
    let r512 = R::from_i64(512);
    let unit = reference.exact_div(&r512).ok_or_else(|| MacaulayError::Invariant("reference is not 512".into()))?;
    let value = det.exact_div(&r512).ok_or(MacaulayError::InexactQuotient)?;
    unit_normalize(value, &unit)
}

/// Result of the Jacobian variant of the quotient formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianValue<R> {
    /// `det(M~_{t_n}) / det(E_{t_n})`, normalized; equals `d_1 ... d_n Res`.
    pub quotient: R,
    /// `quotient / (d_1 ... d_n)`.
    pub resultant: R,
}

/// `M_{t_n}` with its single Bezoutian column replaced by the coefficients of
/// the Jacobian determinant.
pub fn jacobian_matrix<R: Scalar>(sys: &PolySystem<R>) -> Result<(LabeledMatrix<R>, Vec<Label>, Vec<Label>)> {
    let n = sys.n();
    let tn = sys.degree_system().critical_degree();
    let asm = build_assembly(sys, tn)?;
    let j = jacobian(sys)?;
    let mut m = asm.matrix.clone();
    let col = m
        .col_index(&Label::Dual(Exponent::zero(n)))
        .ok_or_else(|| MacaulayError::Invariant("M_{t_n} has no dual column".into()))?;
    for r in 0..m.rows() {
        let v = match &m.row_labels[r] {
            Label::Monomial(l) => j.coeff(l),
            _ => R::zero(),
        };
        m.matrix.set(r, col, v);
    }
    Ok((m, asm.e_rows, asm.e_cols))
}

pub fn jacobian_variant<R: Scalar>(sys: &PolySystem<R>) -> Result<JacobianValue<R>> {
    let raw = |s: &PolySystem<R>| -> Result<R> {
        let (m, er, ec) = jacobian_matrix(s)?;
        let det_m = bareiss_det(&m.matrix)?;
        let det_e = bareiss_det(&m.submatrix(&er, &ec)?.matrix)?;
        if det_e.is_zero() {
            return Err(MacaulayError::Degenerate);
        }
        det_m.exact_div(&det_e).ok_or(MacaulayError::InexactQuotient)
    };
    let q = raw(sys)?;
    let e = PolySystem::<R>::monomial(sys.degrees().to_vec())?;
    let qe = raw(&e)?;
    let prod = sys.degrees().iter().fold(R::one(), |acc, &d| acc.mul(&R::from_i64(i64::from(d))));
    let sign = qe.exact_div(&prod).ok_or(MacaulayError::InexactQuotient)?;
    let quotient = unit_normalize(q, &sign)?;
    let resultant = quotient.exact_div(&prod).ok_or(MacaulayError::InexactQuotient)?;
    Ok(JacobianValue { quotient, resultant })
}
