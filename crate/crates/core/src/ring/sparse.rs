//! Term-list kernels shared by the parameter and geometric polynomial types.
//!
//! A term list is a `Vec<(M, R)>` sorted strictly ascending by `M`'s order with no
//! zero coefficients. `M`'s order must be a monomial order (compatible with
//! multiplication, with the unit monomial smallest) for `div` to be correct.

use std::collections::BTreeMap;
use std::hash::Hash;

use rustc_hash::FxHashMap;

use super::scalar::Scalar;

pub(crate) trait MonomialKey: Clone + Eq + Ord + Hash + Send + Sync {
    fn mul(&self, other: &Self) -> Self;
    /// `self / other` when `other` divides `self`.
    fn div(&self, other: &Self) -> Option<Self>;
    fn degree(&self) -> u32;
}

pub(crate) fn normalize<M: MonomialKey, R: Scalar>(terms: Vec<(M, R)>) -> Vec<(M, R)> {
    let mut acc: BTreeMap<M, R> = BTreeMap::new();
    for (m, c) in terms {
        match acc.get_mut(&m) {
            Some(v) => v.add_assign(&c),
            None => {
                acc.insert(m, c);
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub(crate) fn add<M: MonomialKey, R: Scalar>(a: &[(M, R)], b: &[(M, R)], negate_b: bool) -> Vec<(M, R)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                let c = if negate_b { b[j].1.neg() } else { b[j].1.clone() };
                out.push((b[j].0.clone(), c));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (m, c) in &b[j..] {
        out.push((m.clone(), if negate_b { c.neg() } else { c.clone() }));
    }
    out
}

pub(crate) fn mul<M: MonomialKey, R: Scalar>(a: &[(M, R)], b: &[(M, R)]) -> Vec<(M, R)> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.len() == 1 {
        let (m, c) = &small[0];
        // Multiplying by a single term preserves the order of `large`.
        return large
            .iter()
            .filter_map(|(lm, lc)| {
                let v = lc.mul(c);
                (!v.is_zero()).then(|| (lm.mul(m), v))
            })
            .collect();
    }
    let mut acc: FxHashMap<M, R> = FxHashMap::default();
    acc.reserve(a.len() * b.len() / 2 + 1);
    for (ma, ca) in small {
        for (mb, cb) in large {
            let m = ma.mul(mb);
            let c = ca.mul(cb);
            match acc.get_mut(&m) {
                Some(v) => v.add_assign(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
    }
    let mut out: Vec<(M, R)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_unstable_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Exact division; `None` when `d` is zero or does not divide `p`.
pub(crate) fn div<M: MonomialKey, R: Scalar>(p: &[(M, R)], d: &[(M, R)]) -> Option<Vec<(M, R)>> {
    let (dm, dc) = d.last()?;
    if p.is_empty() {
        return Some(Vec::new());
    }
    if d.len() == 1 {
        return p
            .iter()
            .map(|(m, c)| Some((m.div(dm)?, c.exact_div(dc)?)))
            .collect();
    }
    let d_low = &d[..d.len() - 1];
    let d_min_deg = d[0].0.degree();
    let mut rem: BTreeMap<M, R> = p.iter().cloned().collect();
    let mut quot: Vec<(M, R)> = Vec::new();
    while let Some((lm, lc)) = rem.pop_last() {
        let qm = lm.div(dm)?;
        let qc = lc.exact_div(dc)?;
        // Every remaining term must still be reachable by multiples of `d`.
        if let Some((first, _)) = rem.first_key_value() {
            if first.degree() < d_min_deg {
                return None;
            }
        }
        for (m, c) in d_low {
            let key = m.mul(&qm);
            let delta = c.mul(&qc);
            match rem.get_mut(&key) {
                Some(v) => {
                    *v = v.sub(&delta);
                    if v.is_zero() {
                        rem.remove(&key);
                    }
                }
                None => {
                    rem.insert(key, delta.neg());
                }
            }
        }
        quot.push((qm, qc));
    }
    quot.reverse();
    Some(quot)
}
