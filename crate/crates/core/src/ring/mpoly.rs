use std::borrow::Cow;
use std::fmt;

use num_bigint::BigInt;

use super::monomial::Exponent;
use super::param::{Param, ParamPoly};
use super::scalar::Scalar;
use super::sparse;
use super::RingError;

/// Sparse polynomial in `nvars` geometric variables with coefficients in `R`.
///
/// Terms are kept in canonical monomial order with no zero coefficients.
/// A polynomial with `nvars == 0` is a context-free constant and combines with
/// polynomials in any number of variables; any other variable-count mismatch is
/// an error.
#[derive(Clone)]
pub struct MPoly<R> {
    nvars: usize,
    terms: Vec<(Exponent, R)>,
}

impl<R: Scalar> MPoly<R> {
    pub fn zero_in(nvars: usize) -> Self {
        Self { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: R) -> Self {
        Self::monomial(Exponent::zero(nvars), c)
    }

    pub fn monomial(exp: Exponent, c: R) -> Self {
        let nvars = exp.nvars();
        if c.is_zero() {
            Self::zero_in(nvars)
        } else {
            Self { nvars, terms: vec![(exp, c)] }
        }
    }

    pub fn var(nvars: usize, var: usize) -> Self {
        Self::monomial(Exponent::unit(nvars, var, 1), R::one())
    }

    pub fn from_terms(nvars: usize, terms: Vec<(Vec<u32>, R)>) -> Result<Self, RingError> {
        let mut out = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(RingError::VariableCountMismatch(nvars, e.len()));
            }
            out.push((Exponent::new(e), c));
        }
        Ok(Self { nvars, terms: sparse::normalize(out) })
    }

    pub(crate) fn from_exponent_terms(nvars: usize, terms: Vec<(Exponent, R)>) -> Self {
        debug_assert!(terms.iter().all(|(e, _)| e.nvars() == nvars));
        Self { nvars, terms: sparse::normalize(terms) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> &[(Exponent, R)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &Exponent) -> R {
        self.terms
            .binary_search_by(|(e, _)| e.cmp(exp))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| R::zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.last().map(|(e, _)| e.total_degree())
    }

    /// `Some(d)` if every term has total degree `d`; the zero polynomial is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.total_degree();
        self.terms.iter().all(|(e, _)| e.total_degree() == d).then_some(d)
    }

    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.terms.iter().all(|(e, _)| e.total_degree() == degree)
    }

    fn lifted(&self, nvars: usize) -> Cow<'_, Self> {
        if self.nvars == nvars {
            Cow::Borrowed(self)
        } else {
            debug_assert_eq!(self.nvars, 0);
            Cow::Owned(Self {
                nvars,
                terms: self.terms.iter().map(|(_, c)| (Exponent::zero(nvars), c.clone())).collect(),
            })
        }
    }

    fn common_nvars(&self, other: &Self) -> Result<usize, RingError> {
        match (self.nvars, other.nvars) {
            (a, b) if a == b => Ok(a),
            (0, b) => Ok(b),
            (a, 0) => Ok(a),
            (a, b) => Err(RingError::VariableCountMismatch(a, b)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        let n = self.common_nvars(other)?;
        Ok(Self { nvars: n, terms: sparse::add(&self.lifted(n).terms, &other.lifted(n).terms, false) })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        let n = self.common_nvars(other)?;
        Ok(Self { nvars: n, terms: sparse::add(&self.lifted(n).terms, &other.lifted(n).terms, true) })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        let n = self.common_nvars(other)?;
        Ok(Self { nvars: n, terms: sparse::mul(&self.lifted(n).terms, &other.lifted(n).terms) })
    }

    /// Exact division; inexact division is reported, never truncated.
    pub fn try_div(&self, other: &Self) -> Result<Self, RingError> {
        let n = self.common_nvars(other)?;
        if other.terms.is_empty() {
            return Err(RingError::DivisionByZero);
        }
        sparse::div(&self.lifted(n).terms, &other.lifted(n).terms)
            .map(|terms| Self { nvars: n, terms })
            .ok_or(RingError::InexactDivision)
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero_in(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter_map(|(e, v)| {
                    let w = v.mul(c);
                    (!w.is_zero()).then(|| (e.clone(), w))
                })
                .collect(),
        }
    }

    pub fn map_coeffs<S: Scalar>(&self, mut f: impl FnMut(&R) -> S) -> MPoly<S> {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter_map(|(e, c)| {
                    let v = f(c);
                    (!v.is_zero()).then(|| (e.clone(), v))
                })
                .collect(),
        }
    }

    pub fn try_map_coeffs<S: Scalar, E>(&self, mut f: impl FnMut(&R) -> Result<S, E>) -> Result<MPoly<S>, E> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                terms.push((e.clone(), v));
            }
        }
        Ok(MPoly { nvars: self.nvars, terms })
    }

    /// Maps every exponent through `f`; the result is re-sorted and merged.
    pub fn map_exponents(&self, nvars: usize, mut f: impl FnMut(&Exponent) -> Exponent) -> Self {
        Self::from_exponent_terms(nvars, self.terms.iter().map(|(e, c)| (f(e), c.clone())).collect())
    }

    pub fn derivative(&self, var: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.get(var) > 0)
            .map(|(e, c)| {
                let mut v = e.as_slice().to_vec();
                let k = v[var];
                v[var] -= 1;
                (Exponent::new(v), c.mul(&R::from_i64(i64::from(k))))
            })
            .collect();
        Self::from_exponent_terms(self.nvars, terms)
    }

    /// Keeps only the terms whose exponent vanishes on the variables `vars`,
    /// i.e. substitutes zero for those variables.
    pub fn set_to_zero(&self, vars: std::ops::Range<usize>) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| vars.clone().all(|v| e.get(v) == 0))
                .cloned()
                .collect(),
        }
    }

    /// Evaluates at a point, one value per variable.
    pub fn eval(&self, point: &[R]) -> R {
        let mut total = R::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, k) in point.iter().zip(e.as_slice()) {
                if *k > 0 {
                    v = v.mul(&x.pow(*k));
                }
            }
            total.add_assign(&v);
        }
        total
    }

    pub fn fmt_with(&self, names: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest terms first, as is customary for display.
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .as_slice()
                .iter()
                .enumerate()
                .filter(|(_, k)| **k > 0)
                .map(|(v, k)| if *k == 1 { names[v].clone() } else { format!("{}^{}", names[v], k) })
                .collect();
            let cs = c.to_string();
            let compound = cs.trim_start_matches('-').contains([' ', '+', '-']);
            let (neg, body) = if !compound && cs.starts_with('-') { (true, &cs[1..]) } else { (false, cs.as_str()) };
            if i > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            if mono.is_empty() {
                if compound {
                    write!(f, "({})", body)?;
                } else {
                    f.write_str(body)?;
                }
            } else {
                if compound {
                    write!(f, "({})*", body)?;
                } else if body != "1" {
                    write!(f, "{}*", body)?;
                }
                f.write_str(&mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl MPoly<ParamPoly> {
    pub fn specialize(&self, assignment: &std::collections::HashMap<Param, BigInt>) -> Result<MPoly<BigInt>, RingError> {
        self.try_map_coeffs(|c| c.specialize(assignment))
    }
}

/// Default variable names `X1..Xn`.
pub fn x_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("X{}", i)).collect()
}

/// Variable names `X1..Xn, Y1..Yn` for polynomials in two variable blocks.
pub fn xy_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("X{}", i)).chain((1..=n).map(|i| format!("Y{}", i))).collect()
}

impl<R: Scalar> PartialEq for MPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        match self.common_nvars(other) {
            Ok(n) => self.lifted(n).terms == other.lifted(n).terms,
            Err(_) => false,
        }
    }
}

impl<R: Scalar> Eq for MPoly<R> {}

impl<R: Scalar> fmt::Display for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(&x_names(self.nvars), f)
    }
}

impl<R: Scalar> fmt::Debug for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<R: Scalar> Scalar for MPoly<R> {
    fn zero() -> Self {
        Self::zero_in(0)
    }
    fn one() -> Self {
        Self::constant(0, R::one())
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(0, R::from_i64(v))
    }
    fn from_bigint(v: &BigInt) -> Self {
        Self::constant(0, R::from_bigint(v))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.total_degree() == 0 && self.terms[0].1.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("variable count mismatch")
    }
    fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("variable count mismatch")
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("variable count mismatch")
    }
    fn neg(&self) -> Self {
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.try_div(other).ok()
    }
    fn weight(&self) -> usize {
        self.terms.iter().map(|(_, c)| c.weight()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(k: usize) -> MPoly<BigInt> {
        MPoly::var(2, k)
    }

    #[test]
    fn cancellation_and_difference_of_squares() {
        let x1: MPoly<BigInt> = MPoly::var(2, 0);
        let x2: MPoly<BigInt> = MPoly::var(2, 1);
        let s = x1.try_add(&x2).unwrap().try_add(&x1.try_sub(&x2).unwrap()).unwrap();
        assert_eq!(s, x1.scale(&BigInt::from(2)));

        let (x, y) = (xy(0), xy(1));
        let p = x.try_add(&y).unwrap().try_mul(&x.try_sub(&y).unwrap()).unwrap();
        let expected = x.try_mul(&x).unwrap().try_sub(&y.try_mul(&y).unwrap()).unwrap();
        assert_eq!(p, expected);
        assert_eq!(p.try_div(&x.try_sub(&y).unwrap()).unwrap(), x.try_add(&y).unwrap());
    }

    #[test]
    fn cube_difference_quotient() {
        let (x, y) = (xy(0), xy(1));
        let num = x.pow(3).sub(&y.pow(3));
        let q = num.try_div(&x.sub(&y)).unwrap();
        let expected = x.pow(2).add(&x.mul(&y)).add(&y.pow(2));
        assert_eq!(q, expected);
        assert_eq!(q.mul(&x.sub(&y)), num);
    }

    #[test]
    fn errors_are_distinct() {
        let a: MPoly<BigInt> = MPoly::var(2, 0);
        let b: MPoly<BigInt> = MPoly::var(3, 0);
        assert!(matches!(a.try_add(&b), Err(RingError::VariableCountMismatch(2, 3))));
        assert!(matches!(a.try_div(&MPoly::var(2, 1)), Err(RingError::InexactDivision)));
        assert!(matches!(a.try_div(&MPoly::zero_in(2)), Err(RingError::DivisionByZero)));
        // Context-free constants combine with anything.
        assert_eq!(a.try_div(&MPoly::one()).unwrap(), a);
    }

    #[test]
    fn display_groups_compound_coefficients() {
        let p: MPoly<BigInt> = MPoly::from_terms(2, vec![(vec![2, 0], BigInt::from(3)), (vec![0, 1], BigInt::from(-1))]).unwrap();
        assert_eq!(p.to_string(), "3*X1^2 - X2");
        let q: MPoly<ParamPoly> = MPoly::monomial(
            Exponent::new(vec![1, 0]),
            ParamPoly::var(Param::new(1, 1)).sub(&ParamPoly::var(Param::new(1, 2))),
        );
        assert_eq!(q.to_string(), "(a_1_1 - a_1_2)*X1");
    }
}
