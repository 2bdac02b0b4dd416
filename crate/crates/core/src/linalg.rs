//! Dense exact linear algebra over integral domains.
//!
//! Determinants use fraction-free (Bareiss) elimination and characteristic
//! polynomials use Berkowitz's division-free algorithm, so both work over the
//! parameter ring as well as over the integers and rationals.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::ring::{Exponent, Scalar, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("fraction-free elimination hit an inexact division")]
    InexactDivision,
    #[error("label {0} not found")]
    UnknownLabel(String),
    #[error("grid has {got} entries, expected {expected}")]
    Shape { got: usize, expected: usize },
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Scalar> Matrix<R> {
    pub fn new(rows: usize, cols: usize, data: Vec<R>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape { got: data.len(), expected: rows * cols });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data: Vec<R> = rows.into_iter().flatten().collect();
        Self::new(r, c, data)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let conv = rows.iter().map(|r| r.iter().map(|&v| R::from_i64(v)).collect()).collect();
        Self::from_rows(conv).expect("ragged rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<S: Scalar, E>(&self, f: impl Fn(&R) -> Result<S, E>) -> Result<Matrix<S>, E> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// The submatrix on the given row and column indices, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Self { rows: rows.len(), cols: cols.len(), data }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx].add_assign(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// `self + s * I`.
    pub fn add_scalar_identity(&self, s: &R) -> Self {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = out.get(i, i).add(s);
            out.set(i, i, v);
        }
        out
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let rows = (0..self.rows).map(|i| [self.row(i), other.row(i)].concat()).collect();
        Self::from_rows(rows).expect("consistent widths")
    }
}

impl<R: Scalar> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Row or column label of a Macaulay-type matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Label {
    /// A monomial `X^g`: a row of the degree-`t` target space.
    Monomial(Exponent),
    /// A dual monomial `T_g`: a column fed by a Bezoutian slice.
    Dual(Exponent),
    /// The product `X^g * f_j`: a Sylvester column, `j` 1-based.
    Multiple(usize, Exponent),
    /// The dual row indexed by `X^g * f_j` in the transposed Sylvester block.
    DualMultiple(usize, Exponent),
    /// Free-form label for matrices outside the main construction.
    Named(String),
}

impl Label {
    /// Exchanges row and column roles: monomials with dual monomials and
    /// Sylvester columns with dual Sylvester rows.
    pub fn dual(&self) -> Label {
        match self {
            Label::Monomial(e) => Label::Dual(e.clone()),
            Label::Dual(e) => Label::Monomial(e.clone()),
            Label::Multiple(j, e) => Label::DualMultiple(*j, e.clone()),
            Label::DualMultiple(j, e) => Label::Multiple(*j, e.clone()),
            Label::Named(s) => Label::Named(s.clone()),
        }
    }

    pub fn exponent(&self) -> Option<&Exponent> {
        match self {
            Label::Monomial(e) | Label::Dual(e) | Label::Multiple(_, e) | Label::DualMultiple(_, e) => Some(e),
            Label::Named(_) => None,
        }
    }
}

fn fmt_exp(e: &Exponent) -> String {
    let parts: Vec<String> = e.as_slice().iter().map(u32::to_string).collect();
    parts.join(",")
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Monomial(e) => write!(f, "X[{}]", fmt_exp(e)),
            Label::Dual(e) => write!(f, "T[{}]", fmt_exp(e)),
            Label::Multiple(j, e) => write!(f, "f{}*X[{}]", j, fmt_exp(e)),
            Label::DualMultiple(j, e) => write!(f, "f{}*T[{}]", j, fmt_exp(e)),
            Label::Named(s) => f.write_str(s),
        }
    }
}

/// Offsets of the four blocks `[Delta D; tD 0]`. Rows `0..top_rows` form the
/// upper band and columns `0..left_cols` the left band.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct BlockLayout {
    pub top_rows: usize,
    pub left_cols: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledMatrix<R: Scalar> {
    pub matrix: Matrix<R>,
    pub row_labels: Vec<Label>,
    pub col_labels: Vec<Label>,
    pub blocks: BlockLayout,
}

impl<R: Scalar> LabeledMatrix<R> {
    pub fn new(matrix: Matrix<R>, row_labels: Vec<Label>, col_labels: Vec<Label>, blocks: BlockLayout) -> Result<Self, LinalgError> {
        if matrix.rows() != row_labels.len() {
            return Err(LinalgError::Shape { got: row_labels.len(), expected: matrix.rows() });
        }
        if matrix.cols() != col_labels.len() {
            return Err(LinalgError::Shape { got: col_labels.len(), expected: matrix.cols() });
        }
        Ok(Self { matrix, row_labels, col_labels, blocks })
    }

    pub fn unlabeled(matrix: Matrix<R>) -> Self {
        let row_labels = (0..matrix.rows()).map(|i| Label::Named(format!("r{}", i))).collect();
        let col_labels = (0..matrix.cols()).map(|j| Label::Named(format!("c{}", j))).collect();
        let blocks = BlockLayout { top_rows: matrix.rows(), left_cols: 0 };
        Self { matrix, row_labels, col_labels, blocks }
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn row_index(&self, l: &Label) -> Option<usize> {
        self.row_labels.iter().position(|x| x == l)
    }

    pub fn col_index(&self, l: &Label) -> Option<usize> {
        self.col_labels.iter().position(|x| x == l)
    }

    /// The entry at the given labels.
    pub fn entry(&self, row: &Label, col: &Label) -> Result<&R, LinalgError> {
        let i = self.row_index(row).ok_or_else(|| LinalgError::UnknownLabel(row.to_string()))?;
        let j = self.col_index(col).ok_or_else(|| LinalgError::UnknownLabel(col.to_string()))?;
        Ok(self.matrix.get(i, j))
    }

    /// Submatrix on the given labels, kept in this matrix's order.
    pub fn submatrix(&self, rows: &[Label], cols: &[Label]) -> Result<Self, LinalgError> {
        let mut ri = rows
            .iter()
            .map(|l| self.row_index(l).ok_or_else(|| LinalgError::UnknownLabel(l.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let mut ci = cols
            .iter()
            .map(|l| self.col_index(l).ok_or_else(|| LinalgError::UnknownLabel(l.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        ri.sort_unstable();
        ci.sort_unstable();
        let top_rows = ri.iter().filter(|&&i| i < self.blocks.top_rows).count();
        let left_cols = ci.iter().filter(|&&j| j < self.blocks.left_cols).count();
        Ok(Self {
            matrix: self.matrix.select(&ri, &ci),
            row_labels: ri.iter().map(|&i| self.row_labels[i].clone()).collect(),
            col_labels: ci.iter().map(|&j| self.col_labels[j].clone()).collect(),
            blocks: BlockLayout { top_rows, left_cols },
        })
    }

    /// Transpose with each label replaced by its dual.
    pub fn transpose(&self) -> Self {
        Self {
            matrix: self.matrix.transpose(),
            row_labels: self.col_labels.iter().map(Label::dual).collect(),
            col_labels: self.row_labels.iter().map(Label::dual).collect(),
            blocks: BlockLayout { top_rows: self.blocks.left_cols, left_cols: self.blocks.top_rows },
        }
    }

    /// Reorders rows and columns so that they follow the given label lists.
    pub fn reorder(&self, rows: &[Label], cols: &[Label]) -> Result<Self, LinalgError> {
        let ri = rows
            .iter()
            .map(|l| self.row_index(l).ok_or_else(|| LinalgError::UnknownLabel(l.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let ci = cols
            .iter()
            .map(|l| self.col_index(l).ok_or_else(|| LinalgError::UnknownLabel(l.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            matrix: self.matrix.select(&ri, &ci),
            row_labels: rows.to_vec(),
            col_labels: cols.to_vec(),
            blocks: self.blocks,
        })
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&R) -> S) -> LabeledMatrix<S> {
        LabeledMatrix {
            matrix: self.matrix.map(f),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            blocks: self.blocks,
        }
    }
}

/// Rows below this count are eliminated sequentially; above it the row updates
/// of each step run on the thread pool.
const PARALLEL_ROWS: usize = 24;

fn bareiss_step<R: Scalar>(pivot_row: &[R], row: &mut [R], k: usize, prev: &R) -> Result<(), LinalgError> {
    let pivot = &pivot_row[k];
    let lead = row[k].clone();
    for j in k + 1..row.len() {
        let a = pivot.mul(&row[j]);
        let v = if lead.is_zero() || pivot_row[j].is_zero() { a } else { a.sub(&lead.mul(&pivot_row[j])) };
        row[j] = if prev.is_one() { v } else { v.exact_div(prev).ok_or(LinalgError::InexactDivision)? };
    }
    row[k] = R::zero();
    Ok(())
}

fn eliminate_below<R: Scalar>(rows: &mut [Vec<R>], k: usize, prev: &R) -> Result<(), LinalgError> {
    let (head, tail) = rows.split_at_mut(k + 1);
    let pivot_row = &head[k];
    if tail.len() >= PARALLEL_ROWS {
        tail.par_iter_mut().try_for_each(|row| bareiss_step(pivot_row, row, k, prev))
    } else {
        tail.iter_mut().try_for_each(|row| bareiss_step(pivot_row, row, k, prev))
    }
}

/// Picks the cheapest nonzero entry in column `col` among rows `from..`.
fn choose_pivot<R: Scalar>(rows: &[Vec<R>], from: usize, col: usize) -> Option<usize> {
    (from..rows.len())
        .filter(|&i| !rows[i].get(col).is_none_or(Scalar::is_zero))
        .min_by_key(|&i| rows[i][col].weight())
}

/// Determinant by fraction-free Gaussian elimination. The empty matrix has
/// determinant one.
pub fn bareiss_det<R: Scalar>(m: &Matrix<R>) -> Result<R, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(R::one());
    }
    let mut rows = m.to_rows();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n {
        let Some(p) = choose_pivot(&rows, k, k) else {
            return Ok(R::zero());
        };
        if p != k {
            rows.swap(p, k);
            negate = !negate;
        }
        if k + 1 == n {
            break;
        }
        eliminate_below(&mut rows, k, &prev)?;
        prev = rows[k][k].clone();
    }
    let det = rows[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Rank over the fraction field, by fraction-free row echelon reduction.
pub fn rank_over_fractions<R: Scalar>(m: &Matrix<R>) -> Result<usize, LinalgError> {
    let mut rows = m.to_rows();
    let mut prev = R::one();
    let mut rank = 0;
    for col in 0..m.cols() {
        if rank == rows.len() {
            break;
        }
        let Some(p) = choose_pivot(&rows, rank, col) else {
            continue;
        };
        rows.swap(p, rank);
        {
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            let step = |row: &mut Vec<R>| -> Result<(), LinalgError> {
                let lead = row[col].clone();
                for j in col + 1..row.len() {
                    let a = pivot_row[col].mul(&row[j]);
                    let v = if lead.is_zero() { a } else { a.sub(&lead.mul(&pivot_row[j])) };
                    row[j] = v.exact_div(&prev).ok_or(LinalgError::InexactDivision)?;
                }
                row[col] = R::zero();
                Ok(())
            };
            if tail.len() >= PARALLEL_ROWS {
                tail.par_iter_mut().try_for_each(step)?;
            } else {
                tail.iter_mut().try_for_each(step)?;
            }
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }
    Ok(rank)
}

/// `det(sI - M)` by Berkowitz's algorithm, without divisions.
pub fn berkowitz_charpoly<R: Scalar>(m: &Matrix<R>) -> Result<UniPoly<R>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    // Coefficients from the leading one down to the constant term.
    let mut c: Vec<R> = vec![R::one()];
    for r in 0..n {
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(R::one());
        toeplitz.push(m.get(r, r).neg());
        // v runs through A_r^k * column, with A_r the leading r x r block.
        let mut v: Vec<R> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for k in 0..r {
            let dot = (0..r).fold(R::zero(), |acc, i| {
                let a = m.get(r, i);
                if a.is_zero() || v[i].is_zero() {
                    acc
                } else {
                    acc.add(&a.mul(&v[i]))
                }
            });
            toeplitz.push(dot.neg());
            if k + 1 < r {
                v = (0..r)
                    .map(|i| {
                        (0..r).fold(R::zero(), |acc, l| {
                            let a = m.get(i, l);
                            if a.is_zero() || v[l].is_zero() {
                                acc
                            } else {
                                acc.add(&a.mul(&v[l]))
                            }
                        })
                    })
                    .collect();
            }
        }
        let next: Vec<R> = (0..r + 2)
            .map(|i| {
                (0..c.len().min(i + 1)).fold(R::zero(), |acc, j| {
                    let t = &toeplitz[i - j];
                    if t.is_zero() || c[j].is_zero() {
                        acc
                    } else {
                        acc.add(&t.mul(&c[j]))
                    }
                })
            })
            .collect();
        c = next;
    }
    c.reverse();
    Ok(UniPoly::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use crate::ring::ParamPoly;

    fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::from(1);
        }
        let mut total = BigInt::from(0);
        for j in 0..n {
            let minor: Vec<Vec<BigInt>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect()).collect();
            let term = &m[0][j] * cofactor_det(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    fn modular_det(m: &[Vec<BigInt>], p: i64) -> i64 {
        let n = m.len();
        let mut a: Vec<Vec<i64>> =
            m.iter().map(|r| r.iter().map(|v| (v % p + p) .to_string().parse::<i64>().unwrap() % p).collect()).collect();
        let mut det = 1i64;
        let inv = |x: i64| -> i64 {
            let (mut base, mut e, mut acc) = (x, p - 2, 1i64);
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc * base % p;
                }
                base = base * base % p;
                e >>= 1;
            }
            acc
        };
        for k in 0..n {
            let Some(piv) = (k..n).find(|&i| a[i][k] != 0) else { return 0 };
            if piv != k {
                a.swap(piv, k);
                det = (p - det) % p;
            }
            det = det * a[k][k] % p;
            let iv = inv(a[k][k]);
            for i in k + 1..n {
                let f = a[i][k] * iv % p;
                for j in k..n {
                    a[i][j] = ((a[i][j] - f * a[k][j]) % p + p) % p;
                }
            }
        }
        det
    }

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Matrix<BigInt> {
        let data = (0..n * m).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
        Matrix::new(n, m, data).unwrap()
    }

    #[test]
    fn identity_and_empty() {
        assert_eq!(bareiss_det(&Matrix::<BigInt>::identity(5)).unwrap(), BigInt::from(1));
        assert_eq!(bareiss_det(&Matrix::<BigInt>::zeros(0, 0)).unwrap(), BigInt::from(1));
        assert!(matches!(bareiss_det(&Matrix::<BigInt>::zeros(2, 3)), Err(LinalgError::NonSquare { .. })));
    }

    #[test]
    fn symbolic_two_by_two() {
        let [a, b, c, d] = ["a_1_1", "a_1_2", "a_1_3", "a_1_4"].map(|s| s.parse::<ParamPoly>().unwrap());
        let m = Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]).unwrap();
        let expected = a.mul(&d).sub(&b.mul(&c));
        assert_eq!(bareiss_det(&m).unwrap(), expected);
        let cp = berkowitz_charpoly(&m).unwrap();
        assert_eq!(cp.coeffs(), &[expected, a.add(&d).neg(), ParamPoly::one()]);
    }

    #[test]
    fn random_against_cofactor_and_modular() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=6 {
            for _ in 0..5 {
                let m = random_matrix(&mut rng, n, n);
                let det = bareiss_det(&m).unwrap();
                assert_eq!(det, cofactor_det(&m.to_rows()));
                for p in [1_000_003i64, 998_244_353] {
                    let r = ((&det % p + p) % p).to_string().parse::<i64>().unwrap();
                    assert_eq!(r, modular_det(&m.to_rows(), p));
                }
                let mut swapped = m.to_rows();
                if n > 1 {
                    swapped.swap(0, n - 1);
                    assert_eq!(bareiss_det(&Matrix::from_rows(swapped).unwrap()).unwrap(), -det.clone());
                }
                assert_eq!(bareiss_det(&m.transpose()).unwrap(), det);
            }
        }
    }

    #[test]
    fn singular_matrices() {
        let m = Matrix::<BigInt>::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 5]]);
        assert_eq!(bareiss_det(&m).unwrap(), BigInt::from(0));
        assert_eq!(rank_over_fractions(&m).unwrap(), 2);
        assert_eq!(rank_over_fractions(&Matrix::<BigInt>::zeros(3, 4)).unwrap(), 0);
    }

    fn rational_rank(m: &Matrix<BigInt>) -> usize {
        let mut a: Vec<Vec<BigRational>> =
            m.to_rows().into_iter().map(|r| r.into_iter().map(BigRational::from_integer).collect()).collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            let Some(p) = (rank..a.len()).find(|&i| a[i][col] != BigRational::from_integer(0.into())) else { continue };
            a.swap(p, rank);
            for i in 0..a.len() {
                if i != rank {
                    let f = &a[i][col] / &a[rank][col];
                    for j in 0..m.cols() {
                        let v = &a[rank][j] * &f;
                        a[i][j] -= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn rank_matches_rational_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let (r, c) = (rng.gen_range(1..7), rng.gen_range(1..7));
            let k = rng.gen_range(1..4);
            let a = random_matrix(&mut rng, r, k);
            let b = random_matrix(&mut rng, k, c);
            let m = a.mul(&b);
            assert_eq!(rank_over_fractions(&m).unwrap(), rational_rank(&m));
        }
    }

    #[test]
    fn charpoly_properties() {
        let id = Matrix::<BigInt>::identity(4);
        let cp = berkowitz_charpoly(&id).unwrap();
        let expected: Vec<BigInt> = [1, -4, 6, -4, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(cp.coeffs(), &expected[..]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..6 {
            let m = random_matrix(&mut rng, n, n);
            let cp = berkowitz_charpoly(&m).unwrap();
            assert_eq!(cp.degree(), Some(n));
            assert_eq!(cp.coeff(n), BigInt::from(1));
            let det = bareiss_det(&m).unwrap();
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(cp.coeff(0), det * sign);
            assert_eq!(berkowitz_charpoly(&m.transpose()).unwrap(), cp);
            // Evaluating det(sI - M) at a few integers.
            for s in -2i64..=2 {
                let shifted = m.map(|v| -v).add_scalar_identity(&BigInt::from(s));
                assert_eq!(cp.eval(&BigInt::from(s)), bareiss_det(&shifted).unwrap());
            }
        }
    }

    #[test]
    fn labels_and_submatrix() {
        let m = Matrix::<BigInt>::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let e = |v: Vec<u32>| Exponent::new(v);
        let rows = vec![Label::Monomial(e(vec![1, 0])), Label::Monomial(e(vec![0, 1]))];
        let cols = vec![Label::Dual(e(vec![0, 0])), Label::Multiple(1, e(vec![0, 0]))];
        let lm = LabeledMatrix::new(m, rows.clone(), cols.clone(), BlockLayout { top_rows: 2, left_cols: 1 }).unwrap();
        assert_eq!(lm.entry(&rows[1], &cols[1]).unwrap(), &BigInt::from(4));
        let sub = lm.submatrix(&rows[1..], &cols[..1]).unwrap();
        assert_eq!(sub.matrix, Matrix::from_i64_rows(&[&[3]]));
        assert!(lm.submatrix(&[Label::Named("x".into())], &cols).is_err());
        let t = lm.transpose();
        assert_eq!(t.row_labels[1], Label::DualMultiple(1, e(vec![0, 0])));
        assert_eq!(t.transpose(), lm);
        assert_eq!(rows[0].to_string(), "X[1,0]");
        assert_eq!(cols[1].to_string(), "f1*X[0,0]");
    }
}
