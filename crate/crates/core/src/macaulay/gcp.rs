use std::collections::HashMap;

use crate::bezoutian::PolySystem;
use crate::linalg::{berkowitz_charpoly, Label};
use crate::ring::{Scalar, UniPoly};

use super::{build_assembly, MacaulayError, Result};

/// The generalized characteristic polynomial `C_t(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcpValue<R: Scalar> {
    pub t: u32,
    /// `Charpoly(M_t)(s) / Charpoly(E_t)(s)` with `Charpoly(A)(s) = det(s I - A)`,
    /// columns ordered so that the monomial system gives the identity.
    pub raw: UniPoly<R>,
    /// `raw` scaled so that the monomial system gives `(1 - s)^k`; its constant
    /// term is the normalized resultant.
    pub normalized: UniPoly<R>,
}

impl<R: Scalar> GcpValue<R> {
    /// Lowest nonvanishing coefficient of the normalized polynomial and its degree.
    pub fn lowest(&self) -> Option<(usize, R)> {
        self.normalized.lowest_nonzero().map(|(k, c)| (k, c.clone()))
    }
}

/// Column labels of `M_t` reordered so that `M_t(X_1^{d_1}, ..., X_n^{d_n})` is
/// the identity.
fn identity_order(degrees: &[u32], t: u32) -> Result<Vec<Label>> {
    let e = PolySystem::<num_bigint::BigInt>::monomial(degrees.to_vec())?;
    let asm = build_assembly(&e, t)?;
    let m = &asm.matrix;
    let mut order = Vec::with_capacity(m.rows());
    let mut used = vec![false; m.cols()];
    for r in 0..m.rows() {
        let nonzero: Vec<usize> = (0..m.cols()).filter(|&c| !m.matrix.get(r, c).is_zero()).collect();
        match nonzero.as_slice() {
            [c] if !used[*c] && m.matrix.get(r, *c).is_one() => {
                used[*c] = true;
                order.push(m.col_labels[*c].clone());
            }
            _ => return Err(MacaulayError::Invariant(format!("M_{}(e) is not a permutation matrix", t))),
        }
    }
    Ok(order)
}

/// `C_t(s)` for a system with integer or rational coefficients.
pub fn gcp<R: Scalar>(sys: &PolySystem<R>, t: u32) -> Result<GcpValue<R>> {
    let order = identity_order(sys.degrees(), t)?;
    let raw = charpoly_quotient(sys, t, &order)?;
    let e = PolySystem::<R>::monomial(sys.degrees().to_vec())?;
    let reference = charpoly_quotient(&e, t, &order)?;
    let c0 = reference.coeff(0);
    let normalized = if c0.is_one() {
        raw.clone()
    } else if c0.neg().is_one() {
        raw.scale(&R::from_i64(-1))
    } else {
        return Err(MacaulayError::Invariant("reference GCP does not have a unit constant term".into()));
    };
    Ok(GcpValue { t, raw, normalized })
}

fn charpoly_quotient<R: Scalar>(sys: &PolySystem<R>, t: u32, order: &[Label]) -> Result<UniPoly<R>> {
    let asm = build_assembly(sys, t)?;
    let rows = asm.matrix.row_labels.clone();
    let m = asm.matrix.reorder(&rows, order)?;
    // Row k of the reordered matrix is paired with column k, so the extraneous
    // block must sit on the same positions for rows and columns.
    let position: HashMap<&Label, usize> = rows.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let ext_rows: Vec<Label> = asm.e_rows.iter().chain(&asm.dual_e_rows).cloned().collect();
    let mut ext_cols: Vec<Label> = Vec::with_capacity(ext_rows.len());
    for l in &ext_rows {
        ext_cols.push(order[position[l]].clone());
    }
    let mut expected: Vec<&Label> = asm.e_cols.iter().chain(&asm.dual_e_cols).collect();
    let mut got: Vec<&Label> = ext_cols.iter().collect();
    expected.sort_by_key(|l| l.to_string());
    got.sort_by_key(|l| l.to_string());
    if expected != got {
        return Err(MacaulayError::Invariant("extraneous block is not principal after reordering".into()));
    }
    let ext = m.submatrix(&ext_rows, &ext_cols)?;
    let num = berkowitz_charpoly(&m.matrix)?;
    let den = berkowitz_charpoly(&ext.matrix)?;
    Ok(num.exact_div(&den)?)
}
