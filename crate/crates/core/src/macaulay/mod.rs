//! Macaulay-type matrices `M_t` and the resultant as `det(M_t) / det(E_t)`.
//!
//! `M_t` has the block shape `[Delta_t D_t; tD_{t_n-t} 0]`. Its rows are the
//! monomials of degree `t` followed by the dual rows `(j, X^g)` with
//! `g in S^{t_n-t,j}`. Its columns are the dual monomials `T_g` with
//! `|g| = t_n - t` followed by the Sylvester columns `(j, X^g)` with
//! `g in S^{t,j}`. The extraneous matrix is the square submatrix
//! `[* E_t; tE_{t_n-t} 0]`.

mod complex;
mod gcp;
mod special;

pub use complex::{complex_profile, exactness_check, ComplexProfile, ExactnessReport};
pub use gcp::{gcp, GcpValue};
pub use special::{
    bezout_matrix, dixon_matrix, dixon_matrix_affine, dixon_resultant, jacobian_matrix, jacobian_variant,
    sylvester_matrix, ternary_quadric_matrix, ternary_quadric_sylvester, univariate_formulas, univariate_system,
    JacobianValue,
};

use std::collections::HashMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::bezoutian::{bezoutian, Bezoutian, BezoutianError, PolySystem};
use crate::combinat::{CombinatError, DegreeSystem};
use crate::linalg::{bareiss_det, BlockLayout, Label, LabeledMatrix, LinalgError, Matrix};
use crate::ring::{monomials_of_degree, Exponent, Param, ParamPoly, RingError, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacaulayError {
    #[error("every extraneous factor vanishes for this specialization")]
    Degenerate,
    #[error("symbolic matrix of size {size} exceeds the limit {limit}")]
    SymbolicTooLarge { size: u64, limit: u64 },
    #[error("det(M_t) is not divisible by the extraneous factor")]
    InexactQuotient,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error(transparent)]
    Bezoutian(#[from] BezoutianError),
    #[error(transparent)]
    Degrees(#[from] CombinatError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

pub type Result<T> = std::result::Result<T, MacaulayError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResultantOptions {
    /// Scale results so that `Res(X_1^{d_1}, ..., X_n^{d_n}) = 1`.
    pub normalize_sign: bool,
    /// Largest `rho(t)` for which parameter-ring determinants are attempted.
    pub max_symbolic_size: u64,
}

impl Default for ResultantOptions {
    fn default() -> Self {
        Self { normalize_sign: true, max_symbolic_size: 16 }
    }
}

/// `M_t` together with the labels that cut out `E_t` and `E_{t_n-t}`.
#[derive(Clone, Debug)]
pub struct MacaulayAssembly<R: Scalar> {
    pub t: u32,
    pub matrix: LabeledMatrix<R>,
    /// Rows and columns of `E_t`, a submatrix of `D_t`.
    pub e_rows: Vec<Label>,
    pub e_cols: Vec<Label>,
    /// Rows and columns of `tE_{t_n-t}` inside the lower-left block.
    pub dual_e_rows: Vec<Label>,
    pub dual_e_cols: Vec<Label>,
}

impl<R: Scalar> MacaulayAssembly<R> {
    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    pub fn extraneous_size(&self) -> usize {
        self.e_rows.len() + self.dual_e_rows.len()
    }

    pub fn e_t(&self) -> Result<LabeledMatrix<R>> {
        Ok(self.matrix.submatrix(&self.e_rows, &self.e_cols)?)
    }

    /// The block `tE_{t_n-t}` as it sits in `M_t`.
    pub fn e_dual(&self) -> Result<LabeledMatrix<R>> {
        Ok(self.matrix.submatrix(&self.dual_e_rows, &self.dual_e_cols)?)
    }

    /// The square submatrix `[* E_t; tE_{t_n-t} 0]`.
    pub fn extraneous(&self) -> Result<LabeledMatrix<R>> {
        let rows: Vec<Label> = self.e_rows.iter().chain(&self.dual_e_rows).cloned().collect();
        let cols: Vec<Label> = self.dual_e_cols.iter().chain(&self.e_cols).cloned().collect();
        Ok(self.matrix.submatrix(&rows, &cols)?)
    }

    /// Determinants of `M_t`, `E_t` and `tE_{t_n-t}`; the extraneous factor is
    /// `(-1)^(k m) det(E_t) det(E_{t_n-t})` with `k`, `m` the two block sizes.
    pub fn determinants(&self) -> Result<Determinants<R>> {
        let det_m = bareiss_det(&self.matrix.matrix)?;
        let det_e_t = bareiss_det(&self.e_t()?.matrix)?;
        let det_e_dual = bareiss_det(&self.e_dual()?.matrix)?;
        let k = self.e_rows.len();
        let m = self.dual_e_rows.len();
        let prod = det_e_t.mul(&det_e_dual);
        let det_ext = if (k * m) % 2 == 1 { prod.neg() } else { prod };
        Ok(Determinants { det_m, det_ext, det_e_t, det_e_dual })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Determinants<R> {
    pub det_m: R,
    pub det_ext: R,
    pub det_e_t: R,
    pub det_e_dual: R,
}

fn index_of(labels: &[Label]) -> HashMap<&Label, usize> {
    labels.iter().enumerate().map(|(i, l)| (l, i)).collect()
}

/// Entries of the unrestricted map `tilde Psi_t` for the given row and column
/// labels. `bez` must be present whenever `t <= t_n`.
fn fill<R: Scalar>(sys: &PolySystem<R>, bez: Option<&Bezoutian<R>>, t: u32, rows: &[Label], cols: &[Label]) -> Result<Matrix<R>> {
    let tn = sys.degree_system().critical_degree();
    let mut m = Matrix::zeros(rows.len(), cols.len());
    let row_idx = index_of(rows);
    let col_idx = index_of(cols);
    let needs_slices = cols.iter().any(|l| matches!(l, Label::Dual(_)));
    let slices = if needs_slices && t <= tn {
        let b = bez.ok_or_else(|| MacaulayError::Invariant("Bezoutian required for t <= t_n".into()))?;
        b.slices(i64::from(t))?
    } else {
        Vec::new()
    };
    for (j, (g, slice)) in slices.iter().enumerate() {
        let Some(&c) = col_idx.get(&Label::Dual(g.clone())) else { continue };
        debug_assert!(j < cols.len());
        for (l, v) in slice.terms() {
            if let Some(&r) = row_idx.get(&Label::Monomial(l.clone())) {
                m.set(r, c, v.clone());
            }
        }
    }
    for (c, label) in cols.iter().enumerate() {
        if let Label::Multiple(j, g) = label {
            for (a, v) in sys.poly(*j).terms() {
                if let Some(&r) = row_idx.get(&Label::Monomial(g.mul(a))) {
                    m.set(r, c, v.clone());
                }
            }
        }
    }
    for (r, label) in rows.iter().enumerate() {
        if let Label::DualMultiple(j, g) = label {
            for (a, v) in sys.poly(*j).terms() {
                if let Some(&c) = col_idx.get(&Label::Dual(g.mul(a))) {
                    m.set(r, c, v.clone());
                }
            }
        }
    }
    Ok(m)
}

fn labeled<R: Scalar>(
    sys: &PolySystem<R>,
    bez: Option<&Bezoutian<R>>,
    t: u32,
    rows: Vec<Label>,
    cols: Vec<Label>,
) -> Result<LabeledMatrix<R>> {
    let m = fill(sys, bez, t, &rows, &cols)?;
    let top_rows = rows.iter().filter(|l| matches!(l, Label::Monomial(_))).count();
    let left_cols = cols.iter().filter(|l| matches!(l, Label::Dual(_))).count();
    Ok(LabeledMatrix::new(m, rows, cols, BlockLayout { top_rows, left_cols })?)
}

fn bezoutian_if_needed<R: Scalar>(sys: &PolySystem<R>, t: u32) -> Result<Option<Bezoutian<R>>> {
    if t <= sys.degree_system().critical_degree() {
        Ok(Some(bezoutian(sys)?))
    } else {
        Ok(None)
    }
}

/// The matrix `D_t` of `(g_1, ..., g_n) -> sum g_j f_j` on `S^{t,1} + ... + S^{t,n}`.
pub fn sylvester_block<R: Scalar>(sys: &PolySystem<R>, t: u32) -> Result<LabeledMatrix<R>> {
    let ds = sys.degree_system();
    let rows: Vec<Label> = monomials_of_degree(ds.n(), i64::from(t)).into_iter().map(Label::Monomial).collect();
    let mut cols = Vec::new();
    for j in 1..=ds.n() {
        cols.extend(ds.stj_basis(i64::from(t), j)?.members.into_iter().map(|g| Label::Multiple(j, g)));
    }
    labeled(sys, None, t, rows, cols)
}

/// The full rectangular matrix of `tilde Psi_t`, whose Sylvester parts run over
/// all of `S_{t-d_j}` and `S_{t_n-t-d_j}`.
pub fn full_map<R: Scalar>(sys: &PolySystem<R>, bez: Option<&Bezoutian<R>>, t: u32) -> Result<LabeledMatrix<R>> {
    let ds = sys.degree_system();
    let n = ds.n();
    let u = i64::from(ds.critical_degree()) - i64::from(t);
    let mut rows: Vec<Label> = monomials_of_degree(n, i64::from(t)).into_iter().map(Label::Monomial).collect();
    let mut cols: Vec<Label> = monomials_of_degree(n, u).into_iter().map(Label::Dual).collect();
    for j in 1..=n {
        let d = i64::from(ds.degree(j));
        rows.extend(monomials_of_degree(n, u - d).into_iter().map(|g| Label::DualMultiple(j, g)));
        cols.extend(monomials_of_degree(n, i64::from(t) - d).into_iter().map(|g| Label::Multiple(j, g)));
    }
    let owned;
    let bez = match bez {
        Some(b) => Some(b),
        None if u >= 0 => {
            owned = bezoutian(sys)?;
            Some(&owned)
        }
        None => None,
    };
    labeled(sys, bez, t, rows, cols)
}

fn standard_labels(ds: &DegreeSystem, t: u32) -> Result<(Vec<Label>, Vec<Label>)> {
    let n = ds.n();
    let t = i64::from(t);
    let u = i64::from(ds.critical_degree()) - t;
    let mut rows: Vec<Label> = monomials_of_degree(n, t).into_iter().map(Label::Monomial).collect();
    let mut cols: Vec<Label> = monomials_of_degree(n, u).into_iter().map(Label::Dual).collect();
    for j in 1..=n {
        rows.extend(ds.stj_basis(u, j)?.members.into_iter().map(|g| Label::DualMultiple(j, g)));
        cols.extend(ds.stj_basis(t, j)?.members.into_iter().map(|g| Label::Multiple(j, g)));
    }
    Ok((rows, cols))
}

fn extraneous_labels(ds: &DegreeSystem, t: u32) -> Result<[Vec<Label>; 4]> {
    let n = ds.n();
    let t = i64::from(t);
    let u = i64::from(ds.critical_degree()) - t;
    let e_rows = ds.et_rows(t).members.into_iter().map(Label::Monomial).collect();
    let dual_e_cols = ds.et_rows(u).members.into_iter().map(Label::Dual).collect();
    let mut e_cols = Vec::new();
    let mut dual_e_rows = Vec::new();
    for j in 1..n {
        e_cols.extend(ds.etj_basis(t, j)?.members.into_iter().map(|g| Label::Multiple(j, g)));
        dual_e_rows.extend(ds.etj_basis(u, j)?.members.into_iter().map(|g| Label::DualMultiple(j, g)));
    }
    Ok([e_rows, e_cols, dual_e_rows, dual_e_cols])
}

/// Builds `M_t` and the labels of its extraneous blocks.
pub fn build_assembly<R: Scalar>(sys: &PolySystem<R>, t: u32) -> Result<MacaulayAssembly<R>> {
    let bez = bezoutian_if_needed(sys, t)?;
    build_assembly_with(sys, bez.as_ref(), t)
}

/// As [`build_assembly`], reusing a Bezoutian computed beforehand.
pub fn build_assembly_with<R: Scalar>(sys: &PolySystem<R>, bez: Option<&Bezoutian<R>>, t: u32) -> Result<MacaulayAssembly<R>> {
    let ds = sys.degree_system();
    let (rows, cols) = standard_labels(ds, t)?;
    if rows.len() != cols.len() || rows.len() as u64 != ds.rho_size(i64::from(t))? {
        return Err(MacaulayError::Invariant(format!("M_{} is {}x{}", t, rows.len(), cols.len())));
    }
    let matrix = labeled(sys, bez, t, rows, cols)?;
    let [e_rows, e_cols, dual_e_rows, dual_e_cols] = extraneous_labels(ds, t)?;
    if e_rows.len() != e_cols.len() || dual_e_rows.len() != dual_e_cols.len() {
        return Err(MacaulayError::Invariant(format!("extraneous blocks of M_{} are not square", t)));
    }
    Ok(MacaulayAssembly { t, matrix, e_rows, e_cols, dual_e_rows, dual_e_cols })
}

/// Builds `M'_t` from explicit Sylvester column choices: `cols_t` are pairs
/// `(j, X^g)` with `|g| = t - d_j` and `cols_dual` pairs with
/// `|g| = t_n - t - d_j` that become the dual rows.
///
/// A column `(j, X^g)` with `g_i < d_i` for every `i != j` is shared with `D_t`;
/// the extraneous block keeps the other columns and drops the rows `X^g X_j^{d_j}`
/// of shared columns together with the monomials of `Lambda_t`.
pub fn build_assembly_with_columns<R: Scalar>(
    sys: &PolySystem<R>,
    t: u32,
    cols_t: &[(usize, Exponent)],
    cols_dual: &[(usize, Exponent)],
) -> Result<MacaulayAssembly<R>> {
    let ds = sys.degree_system();
    let n = ds.n();
    let u = i64::from(ds.critical_degree()) - i64::from(t);
    for &(j, ref g) in cols_t.iter() {
        if j == 0 || j > n || i64::from(g.total_degree()) != i64::from(t) - i64::from(ds.degree(j)) || g.nvars() != n {
            return Err(MacaulayError::NotApplicable(format!("column (f{}, {:?}) is not in degree {}", j, g, t)));
        }
    }
    for &(j, ref g) in cols_dual.iter() {
        if j == 0 || j > n || i64::from(g.total_degree()) != u - i64::from(ds.degree(j)) || g.nvars() != n {
            return Err(MacaulayError::NotApplicable(format!("dual column (f{}, {:?}) is not in degree {}", j, g, u)));
        }
    }
    let mut rows: Vec<Label> = monomials_of_degree(n, i64::from(t)).into_iter().map(Label::Monomial).collect();
    let mut cols: Vec<Label> = monomials_of_degree(n, u).into_iter().map(Label::Dual).collect();
    rows.extend(cols_dual.iter().map(|(j, g)| Label::DualMultiple(*j, g.clone())));
    cols.extend(cols_t.iter().map(|(j, g)| Label::Multiple(*j, g.clone())));
    if rows.len() != cols.len() {
        return Err(MacaulayError::NotApplicable(format!("column choice gives a {}x{} matrix", rows.len(), cols.len())));
    }
    let bez = bezoutian_if_needed(sys, t)?;
    let matrix = labeled(sys, bez.as_ref(), t, rows, cols)?;

    let d = ds.degrees();
    let shared = |j: usize, g: &Exponent| (0..n).all(|i| i == j - 1 || g.get(i) < d[i]);
    let reduced = |g: &Exponent| (0..n).all(|i| g.get(i) < d[i]);
    let split = |choice: &[(usize, Exponent)], degree: i64| {
        let mut dropped = Vec::new();
        let mut kept = Vec::new();
        for (j, g) in choice {
            if shared(*j, g) {
                dropped.push(g.mul(&Exponent::unit(n, j - 1, d[j - 1])));
            } else {
                kept.push((*j, g.clone()));
            }
        }
        let rows: Vec<Exponent> =
            monomials_of_degree(n, degree).into_iter().filter(|m| !reduced(m) && !dropped.contains(m)).collect();
        (rows, kept)
    };
    let (rows_t, kept_t) = split(cols_t, i64::from(t));
    let (rows_u, kept_u) = split(cols_dual, u);
    let e_rows: Vec<Label> = rows_t.into_iter().map(Label::Monomial).collect();
    let e_cols: Vec<Label> = kept_t.into_iter().map(|(j, g)| Label::Multiple(j, g)).collect();
    let dual_e_cols: Vec<Label> = rows_u.into_iter().map(Label::Dual).collect();
    let dual_e_rows: Vec<Label> = kept_u.into_iter().map(|(j, g)| Label::DualMultiple(j, g)).collect();
    if e_rows.len() != e_cols.len() || dual_e_rows.len() != dual_e_cols.len() {
        return Err(MacaulayError::NotApplicable("column choice gives non-square extraneous blocks".into()));
    }
    Ok(MacaulayAssembly { t, matrix, e_rows, e_cols, dual_e_rows, dual_e_cols })
}

/// Parameter values that specialize the generic system of these degrees to
/// `X_1^{d_1}, ..., X_n^{d_n}`.
pub fn monomial_assignment(degrees: &[u32]) -> HashMap<Param, BigInt> {
    let n = degrees.len();
    let mut out = HashMap::new();
    for (i, &d) in degrees.iter().enumerate() {
        let unit = Exponent::unit(n, i, d);
        for (k, e) in monomials_of_degree(n, i64::from(d)).into_iter().enumerate() {
            out.insert(Param::new(i as u32 + 1, k as u32 + 1), BigInt::from(i64::from(e == unit)));
        }
    }
    out
}

/// A resultant computed by a quotient formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantValue<R> {
    pub value: R,
    /// The degree `t` of the matrix used.
    pub t: u32,
    /// Factor (`1` or `-1`) applied to `det(M_t) / det(E_t)`.
    pub sign: i32,
    pub normalized: bool,
    /// Polynomial order used: the `i`-th polynomial of the system solved was
    /// `f_{permutation[i]+1}` with variables renamed accordingly.
    pub permutation: Vec<usize>,
    /// Variable renaming applied on its own before `permutation`; it changes the
    /// resultant by `sign(sigma)^(d_1 ... d_n)`, which is compensated in `value`.
    pub variable_permutation: Vec<usize>,
    pub det_e_t: R,
    pub det_e_dual: R,
    pub matrix_size: usize,
    pub extraneous_size: usize,
}

/// `det(M_t) / det(E_t)` for the monomial system: `1` or `-1`.
pub fn reference_sign(degrees: &[u32], t: u32) -> Result<i32> {
    let e = PolySystem::<BigInt>::monomial(degrees.to_vec())?;
    let d = build_assembly(&e, t)?.determinants()?;
    let q = d.det_m.exact_div(&d.det_ext).ok_or(MacaulayError::InexactQuotient)?;
    match i64::try_from(&q) {
        Ok(1) => Ok(1),
        Ok(-1) => Ok(-1),
        _ => Err(MacaulayError::Invariant("monomial system does not give a unit".into())),
    }
}

fn quotient<R: Scalar>(
    sys: &PolySystem<R>,
    bez: Option<&Bezoutian<R>>,
    t: u32,
    opts: &ResultantOptions,
    permutation: Vec<usize>,
    variable_permutation: Vec<usize>,
) -> Result<Option<ResultantValue<R>>> {
    let asm = build_assembly_with(sys, bez, t)?;
    let d = asm.determinants()?;
    if d.det_ext.is_zero() {
        return Ok(None);
    }
    let q = d.det_m.exact_div(&d.det_ext).ok_or(MacaulayError::InexactQuotient)?;
    let mut sign = if opts.normalize_sign { reference_sign(sys.degrees(), t)? } else { 1 };
    let product_odd = sys.degrees().iter().all(|d| d % 2 == 1);
    if product_odd && permutation_sign(&variable_permutation) < 0 {
        sign = -sign;
    }
    let value = if sign < 0 { q.neg() } else { q };
    Ok(Some(ResultantValue {
        value,
        t,
        sign,
        normalized: opts.normalize_sign,
        permutation,
        variable_permutation,
        det_e_t: d.det_e_t,
        det_e_dual: d.det_e_dual,
        matrix_size: asm.size(),
        extraneous_size: asm.extraneous_size(),
    }))
}

/// The resultant of a system with parameter coefficients by the quotient
/// formula in degree `t`.
pub fn resultant_generic(sys: &PolySystem<ParamPoly>, t: u32, opts: &ResultantOptions) -> Result<ResultantValue<ParamPoly>> {
    let size = sys.degree_system().rho_size(i64::from(t))?;
    if size > opts.max_symbolic_size {
        return Err(MacaulayError::SymbolicTooLarge { size, limit: opts.max_symbolic_size });
    }
    let bez = bezoutian_if_needed(sys, t)?;
    let identity: Vec<usize> = (0..sys.n()).collect();
    quotient(sys, bez.as_ref(), t, opts, identity.clone(), identity)?
        .ok_or_else(|| MacaulayError::Invariant("generic extraneous factor vanishes".into()))
}

/// Degrees tried by [`resultant_specialized`] when no `t` is given.
pub fn fallback_degrees(ds: &DegreeSystem) -> Result<Vec<u32>> {
    let tn = ds.critical_degree();
    let first = ds.minimal_t();
    let mut out = vec![first];
    if tn + 1 != first {
        out.push(tn + 1);
    }
    let mut rest: Vec<(u64, u32)> = Vec::new();
    for t in 0..=tn {
        if t != first {
            rest.push((ds.rho_size(i64::from(t))?, t));
        }
    }
    rest.sort_unstable();
    out.extend(rest.into_iter().map(|(_, t)| t));
    Ok(out)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Permutations tried after the identity: every permutation for up to five
/// polynomials, cyclic shifts beyond that.
fn fallback_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n <= 5 {
        let mut p: Vec<usize> = (0..n).collect();
        while next_permutation(&mut p) {
            out.push(p.clone());
        }
    } else {
        for s in 1..n {
            out.push((0..n).map(|i| (i + s) % n).collect());
        }
    }
    out
}

/// The resultant of a system with integer or rational coefficients.
///
/// Tries the given `t` (or the fallback degrees), then reorders polynomials and
/// variables together, which leaves the normalized resultant unchanged, then
/// also renames variables on their own.
pub fn resultant_specialized<R: Scalar>(sys: &PolySystem<R>, t: Option<u32>, opts: &ResultantOptions) -> Result<ResultantValue<R>> {
    let ds = sys.degree_system();
    let degrees = match t {
        Some(t) => vec![t],
        None => fallback_degrees(ds)?,
    };
    let n = sys.n();
    let identity: Vec<usize> = (0..n).collect();
    let mut perms = vec![identity.clone()];
    perms.extend(fallback_permutations(n));
    let mut candidates: Vec<(Vec<usize>, Vec<usize>)> = perms.iter().map(|p| (p.clone(), identity.clone())).collect();
    for sigma in &perms[1..] {
        candidates.push((identity.clone(), sigma.clone()));
    }
    if n <= 3 {
        for sigma in &perms[1..] {
            for p in &perms[1..] {
                candidates.push((p.clone(), sigma.clone()));
            }
        }
    }
    for (perm, sigma) in candidates {
        let renamed = if sigma == identity { sys.clone() } else { sys.with_variables_permuted(&sigma) };
        let psys = if perm == identity { renamed } else { renamed.permuted(&perm) };
        let tn = psys.degree_system().critical_degree();
        let bez = if degrees.iter().any(|&t| t <= tn) { Some(bezoutian(&psys)?) } else { None };
        for &t in &degrees {
            if let Some(v) = quotient(&psys, bez.as_ref(), t, opts, perm.clone(), sigma.clone())? {
                return Ok(v);
            }
        }
    }
    Err(MacaulayError::Degenerate)
}

/// Macaulay's classical formula, `t = t_n + 1`.
pub fn classical_macaulay<R: Scalar>(sys: &PolySystem<R>, opts: &ResultantOptions) -> Result<ResultantValue<R>> {
    let t = sys.degree_system().critical_degree() + 1;
    resultant_specialized(sys, Some(t), opts)
}
