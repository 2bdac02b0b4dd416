use std::fmt;

use super::scalar::Scalar;
use super::RingError;

/// Dense univariate polynomial, coefficients from the constant term upward,
/// with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Scalar> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Index and value of the lowest nonzero coefficient.
    pub fn lowest_nonzero(&self) -> Option<(usize, &R)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.mul(x).add(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_assign(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    /// Exact division; the divisor's leading coefficient must divide each step.
    pub fn exact_div(&self, other: &Self) -> Result<Self, RingError> {
        let dl = other.coeffs.last().ok_or(RingError::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < other.coeffs.len() {
            return Err(RingError::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - other.coeffs.len() + 1;
        let mut q = vec![R::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + other.coeffs.len() - 1];
            if top.is_zero() {
                continue;
            }
            let c = top.exact_div(dl).ok_or(RingError::InexactDivision)?;
            for (j, d) in other.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(d));
            }
            q[k] = c;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return Err(RingError::InexactDivision);
        }
        Ok(Self::new(q))
    }
}

impl<R: Scalar> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})*s", c)?,
                _ => write!(f, "({})*s^{}", c, k)?,
            }
        }
        Ok(())
    }
}

impl<R: Scalar> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(v: &[i64]) -> UniPoly<BigInt> {
        UniPoly::new(v.iter().map(|x| BigInt::from(*x)).collect())
    }

    #[test]
    fn division_roundtrip() {
        let a = p(&[1, -2, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(a.exact_div(&b).unwrap(), b);
        assert!(p(&[1, 0, 1]).exact_div(&b).is_err());
        assert_eq!(a.mul(&b).exact_div(&a).unwrap(), b);
        assert_eq!(p(&[0, 0, 3]).lowest_nonzero().map(|(k, _)| k), Some(2));
    }
}
