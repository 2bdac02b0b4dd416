use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use super::scalar::Scalar;
use super::sparse::{self, MonomialKey};
use super::RingError;

/// A generic coefficient `a_i_k`: the coefficient in the `i`-th input polynomial
/// (1-based) of its `k`-th monomial (1-based, canonical monomial order).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Param(u32);

const INDEX_BITS: u32 = 20;

impl Param {
    pub fn new(poly: u32, index: u32) -> Self {
        assert!((1..(1 << (32 - INDEX_BITS))).contains(&poly), "polynomial index out of range");
        assert!((1..(1 << INDEX_BITS)).contains(&index), "monomial index out of range");
        Param((poly << INDEX_BITS) | index)
    }

    pub fn poly(self) -> u32 {
        self.0 >> INDEX_BITS
    }

    pub fn index(self) -> u32 {
        self.0 & ((1 << INDEX_BITS) - 1)
    }

    pub fn name(self) -> String {
        format!("a_{}_{}", self.poly(), self.index())
    }

    pub fn parse(name: &str) -> Option<Param> {
        let rest = name.strip_prefix("a_")?;
        let (i, k) = rest.split_once('_')?;
        let i: u32 = i.parse().ok()?;
        let k: u32 = k.parse().ok()?;
        (i >= 1 && k >= 1 && i < (1 << (32 - INDEX_BITS)) && k < (1 << INDEX_BITS)).then(|| Param::new(i, k))
    }
}

impl fmt::Debug for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Monomial in the parameters, stored sparsely as `(param, exponent)` pairs sorted
/// by parameter.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamMonomial {
    degree: u32,
    factors: Vec<(Param, u32)>,
}

impl ParamMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(p: Param) -> Self {
        Self { degree: 1, factors: vec![(p, 1)] }
    }

    pub fn from_factors(mut factors: Vec<(Param, u32)>) -> Self {
        factors.retain(|(_, e)| *e > 0);
        factors.sort_by_key(|(p, _)| *p);
        let mut merged: Vec<(Param, u32)> = Vec::with_capacity(factors.len());
        for (p, e) in factors {
            match merged.last_mut() {
                Some((q, f)) if *q == p => *f += e,
                _ => merged.push((p, e)),
            }
        }
        let degree = merged.iter().map(|(_, e)| e).sum();
        Self { degree, factors: merged }
    }

    pub fn factors(&self) -> &[(Param, u32)] {
        &self.factors
    }

    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent_of(&self, p: Param) -> u32 {
        self.factors
            .binary_search_by_key(&p, |(q, _)| *q)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }
}

impl Ord for ParamMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            // Lexicographically descending on the dense exponent vector.
            for (a, b) in self.factors.iter().zip(&other.factors) {
                if a.0 != b.0 {
                    return if a.0 < b.0 { Ordering::Less } else { Ordering::Greater };
                }
                if a.1 != b.1 {
                    return b.1.cmp(&a.1);
                }
            }
            other.factors.len().cmp(&self.factors.len())
        })
    }
}

impl PartialOrd for ParamMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl MonomialKey for ParamMonomial {
    fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        ParamMonomial { degree: self.degree + other.degree, factors: out }
    }

    fn div(&self, other: &Self) -> Option<Self> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut j = 0;
        let b = &other.factors;
        for &(p, e) in &self.factors {
            if j < b.len() && b[j].0 < p {
                return None;
            }
            if j < b.len() && b[j].0 == p {
                if b[j].1 > e {
                    return None;
                }
                if e > b[j].1 {
                    out.push((p, e - b[j].1));
                }
                j += 1;
            } else {
                out.push((p, e));
            }
        }
        if j < b.len() {
            return None;
        }
        Some(ParamMonomial { degree: self.degree - other.degree, factors: out })
    }

    fn degree(&self) -> u32 {
        self.degree
    }
}

impl fmt::Debug for ParamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_monomial(self, f)
    }
}

fn fmt_monomial(m: &ParamMonomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, (p, e)) in m.factors.iter().enumerate() {
        if i > 0 {
            f.write_str("*")?;
        }
        if *e == 1 {
            write!(f, "{}", p.name())?;
        } else {
            write!(f, "{}^{}", p.name(), e)?;
        }
    }
    Ok(())
}

/// Polynomial over the integers in the generic coefficients `a_i_k`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ParamPoly {
    terms: Vec<(ParamMonomial, BigInt)>,
}

impl ParamPoly {
    pub fn var(p: Param) -> Self {
        Self { terms: vec![(ParamMonomial::var(p), BigInt::one())] }
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Self::default()
        } else {
            Self { terms: vec![(ParamMonomial::one(), c)] }
        }
    }

    pub fn from_terms(terms: Vec<(ParamMonomial, BigInt)>) -> Self {
        Self { terms: sparse::normalize(terms) }
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> &[(ParamMonomial, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.total_degree())
    }

    /// Parameters occurring in the polynomial, sorted.
    pub fn params(&self) -> Vec<Param> {
        let mut ps: Vec<Param> = self
            .terms
            .iter()
            .flat_map(|(m, _)| m.factors.iter().map(|(p, _)| *p))
            .collect();
        ps.sort();
        ps.dedup();
        ps
    }

    /// Degree in the set of parameters belonging to input polynomial `poly`, or
    /// `None` for the zero polynomial.
    pub fn degree_in_poly(&self, poly: u32) -> Option<u32> {
        self.terms
            .iter()
            .map(|(m, _)| m.factors.iter().filter(|(p, _)| p.poly() == poly).map(|(_, e)| e).sum())
            .max()
    }

    /// `(min, max)` degree over terms in the parameters of input polynomial `poly`.
    pub fn degree_range_in_poly(&self, poly: u32) -> Option<(u32, u32)> {
        let degs = self
            .terms
            .iter()
            .map(|(m, _)| m.factors.iter().filter(|(p, _)| p.poly() == poly).map(|(_, e)| *e).sum::<u32>());
        degs.fold(None, |acc, d| match acc {
            None => Some((d, d)),
            Some((lo, hi)) => Some((lo.min(d), hi.max(d))),
        })
    }

    /// Substitutes integers for parameters. Every parameter occurring must be
    /// assigned.
    pub fn specialize(&self, assignment: &HashMap<Param, BigInt>) -> Result<BigInt, RingError> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (p, e) in &m.factors {
                let a = assignment.get(p).ok_or_else(|| RingError::MissingParameter(p.name()))?;
                if a.is_zero() {
                    v = BigInt::zero();
                    break;
                }
                v *= Scalar::pow(a, *e);
            }
            total += v;
        }
        Ok(total)
    }

    /// Substitutes polynomials for some parameters, leaving the others symbolic.
    pub fn substitute(&self, assignment: &HashMap<Param, ParamPoly>) -> ParamPoly {
        let mut total = ParamPoly::default();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut v = ParamPoly::constant(c.clone());
            for &(p, e) in &m.factors {
                match assignment.get(&p) {
                    Some(q) => v = Scalar::mul(&v, &Scalar::pow(q, e)),
                    None => kept.push((p, e)),
                }
            }
            let rest = ParamPoly { terms: vec![(ParamMonomial::from_factors(kept), BigInt::one())] };
            total = Scalar::add(&total, &Scalar::mul(&v, &rest));
        }
        total
    }

    /// Content-free part: divides out the gcd of the integer coefficients and
    /// makes the leading coefficient positive.
    pub fn primitive_part(&self) -> ParamPoly {
        use num_integer::Integer;
        let g = self
            .terms
            .iter()
            .fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        if g.is_zero() {
            return self.clone();
        }
        let sign = self.terms.last().map(|(_, c)| c.is_negative()).unwrap_or(false);
        let g = if sign { -g } else { g };
        ParamPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c / &g)).collect() }
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.total_degree() == 0 => Some(c.clone()),
            _ => None,
        }
    }
}

impl Scalar for ParamPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(BigInt::one())
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(BigInt::from(v))
    }
    fn from_bigint(v: &BigInt) -> Self {
        Self::constant(v.clone())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.total_degree() == 0 && self.terms[0].1.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        Self { terms: sparse::add(&self.terms, &other.terms, false) }
    }
    fn sub(&self, other: &Self) -> Self {
        Self { terms: sparse::add(&self.terms, &other.terms, true) }
    }
    fn mul(&self, other: &Self) -> Self {
        Self { terms: sparse::mul(&self.terms, &other.terms) }
    }
    fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        sparse::div(&self.terms, &other.terms).map(|terms| Self { terms })
    }
    fn weight(&self) -> usize {
        self.terms.len()
    }
}

impl fmt::Display for ParamPoly {
    /// Terms in canonical order, e.g. `a_1_1*a_2_2 - a_1_2*a_2_1 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.total_degree() == 0 {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ParamPoly {
    type Err = RingError;

    /// Parses the text form written by `Display`: a sum of terms, each an
    /// optional integer times `*`-separated factors `a_i_k` or `a_i_k^e`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RingError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let bytes = compact.as_bytes();
        let mut start = 0;
        let mut pieces = Vec::new();
        for i in 1..=bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^') {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        for piece in pieces {
            let (neg, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let mut coeff = BigInt::one();
            let mut factors = Vec::new();
            for factor in body.split('*') {
                if factor.starts_with("a_") {
                    let (name, e) = match factor.split_once('^') {
                        Some((n, e)) => (n, e.parse::<u32>().map_err(|_| bad())?),
                        None => (factor, 1),
                    };
                    factors.push((Param::parse(name).ok_or_else(bad)?, e));
                } else {
                    coeff *= factor.parse::<BigInt>().map_err(|_| bad())?;
                }
            }
            if neg {
                coeff = -coeff;
            }
            terms.push((ParamMonomial::from_factors(factors), coeff));
        }
        Ok(ParamPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: u32, k: u32) -> ParamPoly {
        ParamPoly::var(Param::new(i, k))
    }

    #[test]
    fn generic_monomial_product() {
        let p = Scalar::mul(&a(1, 1), &a(2, 2));
        assert_eq!(p.to_string(), "a_1_1*a_2_2");
    }

    #[test]
    fn display_parse_roundtrip() {
        let p = Scalar::sub(
            &Scalar::mul(&a(1, 1), &a(2, 2)),
            &Scalar::mul(&ParamPoly::from_i64(3), &Scalar::pow(&a(1, 2), 2)),
        );
        let p = Scalar::add(&p, &ParamPoly::from_i64(-7));
        let s = p.to_string();
        assert_eq!(s.parse::<ParamPoly>().unwrap(), p);
        assert!("a_0_1".parse::<ParamPoly>().is_err());
        assert!("".parse::<ParamPoly>().is_err());
    }

    #[test]
    fn exact_division_and_failure() {
        let x = a(1, 1);
        let y = a(1, 2);
        let num = Scalar::sub(&Scalar::mul(&x, &x), &Scalar::mul(&y, &y));
        let den = Scalar::sub(&x, &y);
        assert_eq!(num.exact_div(&den).unwrap(), Scalar::add(&x, &y));
        assert!(Scalar::add(&num, &ParamPoly::one()).exact_div(&den).is_none());
        assert!(num.exact_div(&ParamPoly::zero()).is_none());
    }

    #[test]
    fn specialize_cross_term() {
        // (a1 b2 - a2 b1) with a = (1, 0), b = (0, 1) gives 1.
        let p = Scalar::sub(&Scalar::mul(&a(1, 1), &a(2, 2)), &Scalar::mul(&a(1, 2), &a(2, 1)));
        let asg: HashMap<Param, BigInt> = [
            (Param::new(1, 1), BigInt::from(1)),
            (Param::new(1, 2), BigInt::from(0)),
            (Param::new(2, 1), BigInt::from(0)),
            (Param::new(2, 2), BigInt::from(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(p.specialize(&asg).unwrap(), BigInt::from(1));
        let partial: HashMap<Param, BigInt> = [(Param::new(1, 1), BigInt::from(1))].into_iter().collect();
        assert!(matches!(p.specialize(&partial), Err(RingError::MissingParameter(_))));
    }
}
