use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::sparse::MonomialKey;
use super::RingError;

/// Exponent vector of a monomial in a fixed number of variables.
///
/// Ordered by [`monomial_cmp`]: total degree ascending, then lexicographically
/// descending, so `X1` precedes `X2` precedes `X3` and `X1^2` precedes `X1*X2`.
#[derive(Clone, PartialEq, Eq)]
pub struct Exponent {
    degree: u32,
    exps: Vec<u32>,
}

impl Exponent {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Self { degree, exps }
    }

    pub fn zero(nvars: usize) -> Self {
        Self { degree: 0, exps: vec![0; nvars] }
    }

    /// The exponent of a single variable `X_var` raised to `power`.
    pub fn unit(nvars: usize, var: usize, power: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = power;
        Self { degree: power, exps }
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn get(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.exps
    }

    pub fn mul(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Exponent {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Splits a `2k`-variable exponent into its first and second halves.
    pub fn split_half(&self) -> (Exponent, Exponent) {
        let k = self.exps.len() / 2;
        (Exponent::new(self.exps[..k].to_vec()), Exponent::new(self.exps[k..].to_vec()))
    }

    pub fn concat(&self, other: &Exponent) -> Exponent {
        let mut exps = self.exps.clone();
        exps.extend_from_slice(&other.exps);
        Exponent { degree: self.degree + other.degree, exps }
    }
}

impl Hash for Exponent {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

impl MonomialKey for Exponent {
    fn mul(&self, other: &Self) -> Self {
        Exponent::mul(self, other)
    }

    fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(Exponent {
            degree: self.degree - other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    fn degree(&self) -> u32 {
        self.degree
    }
}

/// The canonical monomial order on raw exponent vectors.
pub fn monomial_cmp(e1: &[u32], e2: &[u32]) -> Result<Ordering, RingError> {
    if e1.len() != e2.len() {
        return Err(RingError::VariableCountMismatch(e1.len(), e2.len()));
    }
    let d1: u32 = e1.iter().sum();
    let d2: u32 = e2.iter().sum();
    Ok(d1.cmp(&d2).then_with(|| e2.cmp(e1)))
}

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// canonical order. Negative degrees give the empty list.
pub fn monomials_of_degree(nvars: usize, degree: i64) -> Vec<Exponent> {
    let mut out = Vec::new();
    if degree < 0 {
        return out;
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Exponent::zero(0));
        }
        return out;
    }
    let mut cur = vec![0u32; nvars];
    fill(&mut cur, 0, degree as u32, &mut out);
    out
}

fn fill(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Exponent>) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(Exponent::new(cur.clone()));
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        fill(cur, pos + 1, left - e, out);
    }
}

/// Number of monomials of degree `degree` in `nvars` variables.
pub fn monomial_count(nvars: usize, degree: i64) -> u64 {
    if degree < 0 || nvars == 0 {
        return u64::from(degree == 0 && nvars == 0);
    }
    crate::combinat::binomial(degree as u64 + nvars as u64 - 1, nvars as u64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_tie_break_and_degree_first() {
        assert_eq!(monomial_cmp(&[1, 0, 0], &[0, 1, 0]).unwrap(), Ordering::Less);
        assert_eq!(monomial_cmp(&[0, 0, 2], &[1, 0, 0]).unwrap(), Ordering::Greater);
        assert!(monomial_cmp(&[1, 0], &[1, 0, 0]).is_err());
    }

    #[test]
    fn degree_two_in_three_variables() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        let raw: Vec<Vec<u32>> = ms.iter().map(|m| m.as_slice().to_vec()).collect();
        assert_eq!(
            raw,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(monomial_count(3, 2), 6);
        assert!(monomials_of_degree(3, -1).is_empty());
    }

    #[test]
    fn strict_total_order_exhaustive() {
        let mut all = Vec::new();
        for d in 0..4 {
            all.extend(monomials_of_degree(3, d));
        }
        for a in &all {
            for b in &all {
                let ab = monomial_cmp(a.as_slice(), b.as_slice()).unwrap();
                let ba = monomial_cmp(b.as_slice(), a.as_slice()).unwrap();
                assert_eq!(ab, ba.reverse());
                assert_eq!(ab == Ordering::Equal, a == b);
                assert_eq!(ab, a.cmp(b));
                for c in &all {
                    if a < b && b < c {
                        assert!(a < c);
                    }
                }
            }
        }
    }
}
