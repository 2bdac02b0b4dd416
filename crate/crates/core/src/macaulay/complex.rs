//! The coupled complex whose middle map is `tilde Psi_t`.
//!
//! Terms, for `u = t_n - t`:
//! `C^{-j} = K(t)^{-j}` for `j >= 2`, `C^{-1} = S*_u + K(t)^{-1}`,
//! `C^0 = S_t + K(u)^1` and `C^j = K(u)^{j+1}` for `j >= 1`, where
//! `K(t)^{-j}` is the sum of `S_{t - d_{i_1} - ... - d_{i_j}}` over `i_1 < ... < i_j`.

use crate::bezoutian::PolySystem;
use crate::combinat::DegreeSystem;
use crate::linalg::{rank_over_fractions, Matrix};
use crate::ring::{monomial_count, monomials_of_degree, Exponent, Scalar};

use super::{full_map, MacaulayError, Result};

/// Ranks of the terms `C^{-n}, ..., C^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexProfile {
    pub t: u32,
    /// `(level, rank)` pairs from `-n` up to `n - 1`.
    pub terms: Vec<(i32, u64)>,
}

impl ComplexProfile {
    pub fn rank_at(&self, level: i32) -> u64 {
        self.terms.iter().find(|(l, _)| *l == level).map_or(0, |(_, r)| *r)
    }

    pub fn euler_characteristic(&self) -> i128 {
        self.terms.iter().map(|&(l, r)| if l % 2 == 0 { i128::from(r) } else { -i128::from(r) }).sum()
    }

    /// Only `C^{-1}` and `C^0` are nonzero.
    pub fn is_determinantal_shape(&self) -> bool {
        self.terms.iter().all(|&(l, r)| l == -1 || l == 0 || r == 0)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn koszul_rank(ds: &DegreeSystem, degree: i64, j: usize) -> u64 {
    let d = ds.degrees();
    subsets(ds.n(), j)
        .iter()
        .map(|s| monomial_count(ds.n(), degree - s.iter().map(|&i| i64::from(d[i])).sum::<i64>()))
        .sum()
}

/// Term ranks of the complex in degree `0 <= t <= t_n`.
pub fn complex_profile(ds: &DegreeSystem, t: u32) -> Result<ComplexProfile> {
    let tn = ds.critical_degree();
    if t > tn {
        return Err(MacaulayError::NotApplicable(format!("the coupled complex needs t <= t_n = {}", tn)));
    }
    let n = ds.n() as i32;
    let (t, u) = (i64::from(t), i64::from(tn) - i64::from(t));
    let count = |k: i64| monomial_count(ds.n(), k);
    let terms = (-n..n)
        .map(|level| {
            let r = match level {
                l if l <= -2 => koszul_rank(ds, t, (-l) as usize),
                -1 => count(u) + koszul_rank(ds, t, 1),
                0 => count(t) + koszul_rank(ds, u, 1),
                l => koszul_rank(ds, u, (l + 1) as usize),
            };
            (level, r)
        })
        .collect();
    Ok(ComplexProfile { t: t as u32, terms })
}

/// Matrix of the Koszul map `K(degree)^{-j} -> K(degree)^{-(j-1)}`; bases run
/// over subsets in lexicographic order, then monomials in canonical order.
fn koszul_matrix<R: Scalar>(sys: &PolySystem<R>, degree: i64, j: usize) -> Matrix<R> {
    let n = sys.n();
    let d = sys.degrees();
    let basis = |k: usize| -> Vec<(Vec<usize>, Exponent)> {
        let mut out = Vec::new();
        for s in subsets(n, k) {
            let rest = degree - s.iter().map(|&i| i64::from(d[i])).sum::<i64>();
            for g in monomials_of_degree(n, rest) {
                out.push((s.clone(), g));
            }
        }
        out
    };
    let source = basis(j);
    let target = basis(j - 1);
    let index: std::collections::HashMap<&(Vec<usize>, Exponent), usize> =
        target.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut m: Matrix<R> = Matrix::zeros(target.len(), source.len());
    for (c, (s, g)) in source.iter().enumerate() {
        for (p, &i) in s.iter().enumerate() {
            let mut rest = s.clone();
            rest.remove(p);
            for (a, v) in sys.poly(i + 1).terms() {
                let key = (rest, g.mul(a));
                let r = index[&key];
                let v = if p % 2 == 0 { v.clone() } else { v.neg() };
                let cur = m.get(r, c).add(&v);
                m.set(r, c, cur);
                rest = key.0;
            }
        }
    }
    m
}

fn zero_rows<R: Scalar>(m: Matrix<R>, above: usize) -> Matrix<R> {
    let mut out = Matrix::zeros(m.rows() + above, m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out.set(r + above, c, m.get(r, c).clone());
        }
    }
    out
}

/// The differentials `d_l : C^{l-1} -> C^l` for `l = -n+1, ..., n-1`.
pub fn differentials<R: Scalar>(sys: &PolySystem<R>, t: u32) -> Result<Vec<(i32, Matrix<R>)>> {
    let ds = sys.degree_system();
    let tn = ds.critical_degree();
    if t > tn {
        return Err(MacaulayError::NotApplicable(format!("the coupled complex needs t <= t_n = {}", tn)));
    }
    let n = sys.n() as i32;
    let (ti, u) = (i64::from(t), i64::from(tn) - i64::from(t));
    let mut out = Vec::new();
    for level in (-n + 1)..n {
        let m = match level {
            l if l <= -2 => koszul_matrix(sys, ti, (1 - l) as usize),
            -1 => zero_rows(koszul_matrix(sys, ti, 2), monomial_count(ds.n(), u) as usize),
            0 => full_map(sys, None, t)?.matrix,
            1 => zero_rows(koszul_matrix(sys, u, 2), monomial_count(ds.n(), ti) as usize).transpose(),
            l => koszul_matrix(sys, u, (l + 1) as usize).transpose(),
        };
        out.push((level, m));
    }
    Ok(out)
}

/// Rank computations on the complex of a specialized system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub profile: ComplexProfile,
    /// `(l, rank of d_l : C^{l-1} -> C^l)`.
    pub differential_ranks: Vec<(i32, usize)>,
    /// Levels where the kernel of the outgoing map is larger than the image.
    pub inexact_levels: Vec<i32>,
    /// Whether every composition `d_{l+1} d_l` vanishes.
    pub is_complex: bool,
}

impl ExactnessReport {
    pub fn is_exact(&self) -> bool {
        self.inexact_levels.is_empty()
    }
}

pub fn exactness_check<R: Scalar>(sys: &PolySystem<R>, t: u32) -> Result<ExactnessReport> {
    let profile = complex_profile(sys.degree_system(), t)?;
    let diffs = differentials(sys, t)?;
    for (level, m) in &diffs {
        let expected = (profile.rank_at(*level) as usize, profile.rank_at(level - 1) as usize);
        if (m.rows(), m.cols()) != expected {
            return Err(MacaulayError::Invariant(format!("differential {} has shape {}x{}", level, m.rows(), m.cols())));
        }
    }
    let is_complex = diffs.windows(2).all(|w| w[1].1.cols() == 0 || w[0].1.rows() == 0 || w[1].1.mul(&w[0].1).is_zero());
    let mut differential_ranks = Vec::new();
    for (level, m) in &diffs {
        differential_ranks.push((*level, rank_over_fractions(m)?));
    }
    let rank_of = |l: i32| differential_ranks.iter().find(|(k, _)| *k == l).map_or(0, |(_, r)| *r);
    let inexact_levels = profile
        .terms
        .iter()
        .filter(|&&(l, dim)| dim as usize - rank_of(l + 1) != rank_of(l))
        .map(|&(l, _)| l)
        .collect();
    Ok(ExactnessReport { profile, differential_ranks, inexact_levels, is_complex })
}
