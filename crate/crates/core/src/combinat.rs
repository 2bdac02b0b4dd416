//! Degree bookkeeping for a system of `n` forms of degrees `d_1..d_n`: the
//! critical degree, the Hilbert function of a complete intersection, matrix
//! sizes, and the monomial index sets that select rows and columns of the
//! Macaulay-type matrices.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::ring::{monomials_of_degree, Exponent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error("a degree system needs at least one form and every degree must be positive")]
    InvalidSystem,
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("degree must be nonnegative, got {0}")]
    NegativeDegree(i64),
    #[error("all degrees equal one: the size-ratio bound does not apply")]
    LinearSystem,
    #[error("integer overflow computing {0}")]
    Overflow(&'static str),
}

/// `C(n, k)`, panicking on overflow of `u64`.
pub fn binomial(n: u64, k: u64) -> u64 {
    checked_binomial(n, k).expect("binomial coefficient overflows u64")
}

pub fn checked_binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is exact at every step.
        acc = acc.checked_mul(u128::from(n - i))? / u128::from(i + 1);
    }
    u64::try_from(acc).ok()
}

/// Number of monomials of degree `t` in `n` variables, zero for negative `t`.
fn rank_s(n: usize, t: i64) -> u64 {
    if t < 0 {
        0
    } else {
        binomial(t as u64 + n as u64 - 1, n as u64 - 1)
    }
}

/// The degrees `(d_1, ..., d_n)` of a square homogeneous system.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DegreeSystem {
    degrees: Vec<u32>,
    hilbert: Vec<u64>,
}

impl DegreeSystem {
    pub fn new(degrees: Vec<u32>) -> Result<Self, CombinatError> {
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(CombinatError::InvalidSystem);
        }
        let hilbert = hilbert_series(&degrees);
        Ok(Self { degrees, hilbert })
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// `d_j` for 1-based `j`.
    pub fn degree(&self, j: usize) -> u32 {
        self.degrees[j - 1]
    }

    fn check_index(&self, j: usize) -> Result<(), CombinatError> {
        if j == 0 || j > self.n() {
            Err(CombinatError::IndexOutOfRange { index: j, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// `t_n = sum (d_i - 1)`.
    pub fn critical_degree(&self) -> u32 {
        self.degrees.iter().map(|d| d - 1).sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.degrees.iter().sum()
    }

    /// Dimension of the degree-`t` part of the quotient by a regular sequence
    /// of these degrees.
    pub fn hilbert_function(&self, t: i64) -> u64 {
        if t < 0 {
            0
        } else {
            self.hilbert.get(t as usize).copied().unwrap_or(0)
        }
    }

    /// Dimension of the degree-`t` part of the ideal of a regular sequence.
    pub fn ideal_dim(&self, t: i64) -> u64 {
        if t < 0 {
            0
        } else {
            rank_s(self.n(), t) - self.hilbert_function(t)
        }
    }

    /// Size of `M_t`: `C(t+n-1, n-1) + i(t_n - t)`.
    pub fn rho_size(&self, t: i64) -> Result<u64, CombinatError> {
        if t < 0 {
            return Err(CombinatError::NegativeDegree(t));
        }
        let tn = i64::from(self.critical_degree());
        let top = checked_rank_s(self.n(), t).ok_or(CombinatError::Overflow("rho"))?;
        let dual = if tn - t >= 0 {
            checked_rank_s(self.n(), tn - t).ok_or(CombinatError::Overflow("rho"))? - self.hilbert_function(tn - t)
        } else {
            0
        };
        top.checked_add(dual).ok_or(CombinatError::Overflow("rho"))
    }

    /// Size of the classical Macaulay matrix, `rho(t_n + 1)`.
    pub fn classical_size(&self) -> Result<u64, CombinatError> {
        self.rho_size(i64::from(self.critical_degree()) + 1)
    }

    /// The smallest size `rho(t)` over all `t >= 0` with the classical size.
    /// The minimum is searched over `0..=t_n`, beyond which `rho` only grows.
    pub fn size_summary(&self) -> Result<SizeSummary, CombinatError> {
        let mut best = (self.rho_size(0)?, 0);
        for t in 1..=self.critical_degree() {
            let r = self.rho_size(i64::from(t))?;
            if r < best.0 {
                best = (r, t);
            }
        }
        Ok(SizeSummary { minimal_t: best.1, min_size: best.0, classical_size: self.classical_size()? })
    }

    /// The degree `[t_n / 2]` at which `rho` is smallest.
    pub fn minimal_t(&self) -> u32 {
        self.critical_degree() / 2
    }

    /// Range of `t` for which the quotient formula has no extraneous factor, or
    /// `None` when no such `t` exists.
    pub fn determinantal_range(&self) -> Option<DeterminantalRange> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        if d.len() == 1 {
            // A single form is its own resultant in every degree.
            return Some(DeterminantalRange { min: 0, max: self.critical_degree() + 1 });
        }
        let n = d.len() as i64;
        let lower: i64 = d[2..].iter().map(|&x| i64::from(x)).sum::<i64>() - n;
        let upper = i64::from(d[0]) + i64::from(d[1]);
        if lower >= upper - 1 {
            return None;
        }
        Some(DeterminantalRange { min: (lower + 1).max(0) as u32, max: (upper - 1) as u32 })
    }

    /// `2 q^(n-1)` with `p` the average degree and `q = (p + 1) / (2p)`.
    pub fn size_ratio_bound(&self) -> Result<BigRational, CombinatError> {
        let n = BigInt::from(self.n());
        let total = BigInt::from(self.total_degree());
        if total == n {
            return Err(CombinatError::LinearSystem);
        }
        let p = BigRational::new(total, n);
        let one = BigRational::from_integer(BigInt::from(1));
        let two = BigRational::from_integer(BigInt::from(2));
        let q = (&p + &one) / (&two * &p);
        Ok(two * num_traits::pow(q, self.n() - 1))
    }

    /// `rho([t_n/2]) / rho(t_n + 1)`.
    pub fn size_ratio(&self) -> Result<BigRational, CombinatError> {
        let small = self.rho_size(i64::from(self.minimal_t()))?;
        let big = self.classical_size()?;
        Ok(BigRational::new(BigInt::from(small), BigInt::from(big)))
    }

    fn members(&self, u: i64, pred: impl Fn(&[u32]) -> bool) -> Vec<Exponent> {
        monomials_of_degree(self.n(), u).into_iter().filter(|e| pred(e.as_slice())).collect()
    }

    /// All monomials of degree `u`.
    pub fn monomial_basis(&self, u: i64) -> MonomialSet {
        MonomialSet { degree: u, tag: SetTag::Full, members: monomials_of_degree(self.n(), u) }
    }

    /// `S^{t,j}`: `X^g`, `|g| = t - d_j`, with `g_i < d_i` for every `i < j`.
    pub fn stj_basis(&self, t: i64, j: usize) -> Result<MonomialSet, CombinatError> {
        self.check_index(j)?;
        let u = t - i64::from(self.degree(j));
        let d = &self.degrees;
        let members = self.members(u, |g| (0..j - 1).all(|i| g[i] < d[i]));
        Ok(MonomialSet { degree: u, tag: SetTag::Stj(j), members })
    }

    /// `E^{t,j}`: members of `S^{t,j}` with `g_i >= d_i` for some `i != j`.
    pub fn etj_basis(&self, t: i64, j: usize) -> Result<MonomialSet, CombinatError> {
        self.check_index(j)?;
        let d = &self.degrees;
        let s = self.stj_basis(t, j)?;
        let members = s
            .members
            .into_iter()
            .filter(|g| (0..d.len()).any(|i| i != j - 1 && g.get(i) >= d[i]))
            .collect();
        Ok(MonomialSet { degree: s.degree, tag: SetTag::Etj(j), members })
    }

    /// `Lambda_t`: degree-`t` monomials with `g_j < d_j` for all `j`.
    pub fn reduced_basis(&self, t: i64) -> MonomialSet {
        let d = &self.degrees;
        let members = self.members(t, |g| g.iter().zip(d).all(|(a, b)| a < b));
        MonomialSet { degree: t, tag: SetTag::Reduced, members }
    }

    /// Rows of `E_t`: degree-`t` monomials with `g_i >= d_i` and `g_j >= d_j` for
    /// two different indices.
    pub fn et_rows(&self, t: i64) -> MonomialSet {
        let d = &self.degrees;
        let members = self.members(t, |g| g.iter().zip(d).filter(|(a, b)| a >= b).count() >= 2);
        MonomialSet { degree: t, tag: SetTag::ExtraneousRows, members }
    }

    /// `J_u(i)`: degree-`u` monomials with `g_i >= d_i` and `g_j < d_j` otherwise.
    pub fn j_set(&self, u: i64, i: usize) -> Result<MonomialSet, CombinatError> {
        self.check_index(i)?;
        let d = &self.degrees;
        let members = self.members(u, |g| {
            g.iter().zip(d).enumerate().all(|(k, (a, b))| if k == i - 1 { a >= b } else { a < b })
        });
        Ok(MonomialSet { degree: u, tag: SetTag::SingleOverflow(i), members })
    }

    /// `Gamma_i`: monomials free of `X_i` with `g_j < d_j` for all `j != i`, of any
    /// degree. Returned as full exponent vectors with a zero in position `i`.
    pub fn gamma_set(&self, i: usize) -> Result<Vec<Exponent>, CombinatError> {
        self.check_index(i)?;
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.n()];
        fn rec(d: &[u32], skip: usize, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Exponent>) {
            if pos == d.len() {
                out.push(Exponent::new(cur.clone()));
                return;
            }
            if pos == skip {
                cur[pos] = 0;
                return rec(d, skip, pos + 1, cur, out);
            }
            for e in 0..d[pos] {
                cur[pos] = e;
                rec(d, skip, pos + 1, cur, out);
            }
            cur[pos] = 0;
        }
        rec(&self.degrees, i - 1, 0, &mut cur, &mut out);
        out.sort();
        Ok(out)
    }
}

fn checked_rank_s(n: usize, t: i64) -> Option<u64> {
    if t < 0 {
        Some(0)
    } else {
        checked_binomial(t as u64 + n as u64 - 1, n as u64 - 1)
    }
}

/// Coefficients of `prod (1 - Y^{d_i}) / (1 - Y)^n` up to the critical degree.
fn hilbert_series(degrees: &[u32]) -> Vec<u64> {
    let tn: usize = degrees.iter().map(|d| (d - 1) as usize).sum();
    let len = tn + 1;
    let mut series = vec![0i128; len];
    series[0] = 1;
    for &d in degrees {
        let d = d as usize;
        for k in (d..len).rev() {
            series[k] -= series[k - d];
        }
    }
    for _ in degrees {
        for k in 1..len {
            series[k] += series[k - 1];
        }
    }
    series
        .into_iter()
        .map(|v| u64::try_from(v).expect("Hilbert function values are nonnegative"))
        .collect()
}

impl fmt::Debug for DegreeSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DegreeSystem{:?}", self.degrees)
    }
}

impl fmt::Display for DegreeSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeSummary {
    pub minimal_t: u32,
    pub min_size: u64,
    pub classical_size: u64,
}

/// Inclusive range of degrees `t` giving a determinantal formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeterminantalRange {
    pub min: u32,
    pub max: u32,
}

impl DeterminantalRange {
    pub fn contains(&self, t: u32) -> bool {
        self.min <= t && t <= self.max
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetTag {
    Full,
    Stj(usize),
    Etj(usize),
    Reduced,
    ExtraneousRows,
    SingleOverflow(usize),
}

/// A sorted, duplicate-free set of monomials of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSet {
    pub degree: i64,
    pub tag: SetTag,
    pub members: Vec<Exponent>,
}

impl MonomialSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        self.members.binary_search(e).is_ok()
    }

    pub fn raw(&self) -> Vec<Vec<u32>> {
        self.members.iter().map(|e| e.as_slice().to_vec()).collect()
    }
}
