use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use resultant_core::linalg::{Label, LabeledMatrix};
use resultant_core::ring::{Exponent, MPoly, Scalar};

use crate::input::{Mode, Term};
use crate::CliError;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct OutputDocument {
    pub command: String,
    pub degrees: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    /// The degree `t` actually used.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign_note: Option<String>,
    pub result: Payload,
    /// Wall-clock time, only present when requested so that output stays reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SizeRow {
    pub degrees: Vec<u32>,
    pub critical_degree: u32,
    pub minimal_t: u32,
    pub min_size: u64,
    pub classical_size: u64,
    /// Range of `t` with a pure determinantal formula, if any.
    pub determinantal: Option<[u32; 2]>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Slice {
    pub label: String,
    pub terms: Vec<Term>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CriterionLine {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Payload {
    Resultant {
        value: String,
        sign: i32,
        normalized: bool,
        permutation: Vec<usize>,
        variable_permutation: Vec<usize>,
        matrix_size: usize,
        extraneous_size: usize,
        det_extraneous: String,
    },
    Matrix {
        rows: Vec<String>,
        cols: Vec<String>,
        entries: Vec<Vec<String>>,
        top_rows: usize,
        left_cols: usize,
        extraneous_rows: Vec<String>,
        extraneous_cols: Vec<String>,
    },
    Bezoutian {
        /// `Delta(X, Y)` over the variables `X_1..X_n, Y_1..Y_n`.
        delta: Vec<Term>,
        slice_degree: u32,
        slices: Vec<Slice>,
    },
    Gcp {
        /// Coefficients from `s^0` upwards.
        raw: Vec<String>,
        normalized: Vec<String>,
        lowest_degree: Option<usize>,
        lowest: Option<String>,
    },
    Sizes {
        rows: Vec<SizeRow>,
    },
    Verify {
        suite: String,
        passed: bool,
        criteria: Vec<CriterionLine>,
    },
}

pub fn terms_of<R: Scalar>(p: &MPoly<R>) -> Vec<Term> {
    p.terms().iter().map(|(e, c)| Term { c: c.to_string(), e: e.as_slice().to_vec() }).collect()
}

pub fn matrix_payload<R: Scalar>(m: &LabeledMatrix<R>, ext_rows: &[Label], ext_cols: &[Label]) -> Payload {
    let labels = |ls: &[Label]| ls.iter().map(Label::to_string).collect::<Vec<_>>();
    Payload::Matrix {
        rows: labels(&m.row_labels),
        cols: labels(&m.col_labels),
        entries: (0..m.rows()).map(|r| m.matrix.row(r).iter().map(R::to_string).collect()).collect(),
        top_rows: m.blocks.top_rows,
        left_cols: m.blocks.left_cols,
        extraneous_rows: labels(ext_rows),
        extraneous_cols: labels(ext_cols),
    }
}

/// Reads back a label written by `Label`'s `Display`.
pub fn parse_label(s: &str) -> Option<Label> {
    let exponent = |body: &str| -> Option<Exponent> {
        let inner = body.strip_prefix('[')?.strip_suffix(']')?;
        let exps: Option<Vec<u32>> = inner.split(',').map(|x| x.trim().parse().ok()).collect();
        Some(Exponent::new(exps?))
    };
    if let Some(rest) = s.strip_prefix('f') {
        let (j, tail) = rest.split_once('*')?;
        let j: usize = j.parse().ok()?;
        if let Some(body) = tail.strip_prefix('X') {
            return Some(Label::Multiple(j, exponent(body)?));
        }
        return Some(Label::DualMultiple(j, exponent(tail.strip_prefix('T')?)?));
    }
    if let Some(body) = s.strip_prefix('X') {
        return Some(Label::Monomial(exponent(body)?));
    }
    if let Some(body) = s.strip_prefix('T') {
        return Some(Label::Dual(exponent(body)?));
    }
    None
}

pub fn parse_output(text: &str) -> Result<OutputDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn poly_text(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms.iter().map(|t| format!("({})*[{}]", t.c, join(&t.e, ","))).collect::<Vec<_>>().join(" + ")
}

impl OutputDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("output documents always serialize")
    }

    /// Line-oriented rendering: `key: value` header lines, then the payload.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if !self.degrees.is_empty() {
            let _ = writeln!(out, "degrees: {}", join(&self.degrees, " "));
        }
        if let Some(m) = self.mode {
            let _ = writeln!(out, "mode: {}", m.as_str());
        }
        if let Some(t) = self.t {
            let _ = writeln!(out, "t: {}", t);
        }
        if let Some(note) = &self.sign_note {
            let _ = writeln!(out, "sign: {}", note);
        }
        match &self.result {
            Payload::Resultant { value, sign, normalized, permutation, variable_permutation, matrix_size, extraneous_size, det_extraneous } => {
                let _ = writeln!(out, "matrix size: {}", matrix_size);
                let _ = writeln!(out, "extraneous size: {}", extraneous_size);
                let _ = writeln!(out, "det extraneous: {}", det_extraneous);
                let _ = writeln!(out, "polynomial order: {}", join(permutation, " "));
                let _ = writeln!(out, "variable order: {}", join(variable_permutation, " "));
                let _ = writeln!(out, "applied sign: {}{}", sign, if *normalized { "" } else { " (not normalized)" });
                let _ = writeln!(out, "value: {}", value);
            }
            Payload::Matrix { rows, cols, entries, top_rows, left_cols, extraneous_rows, extraneous_cols } => {
                let _ = writeln!(out, "shape: {}x{}", rows.len(), cols.len());
                let _ = writeln!(out, "blocks: top {} rows, left {} columns", top_rows, left_cols);
                let _ = writeln!(out, "extraneous rows: {}", join(extraneous_rows, " "));
                let _ = writeln!(out, "extraneous cols: {}", join(extraneous_cols, " "));
                let _ = writeln!(out, "columns: {}", join(cols, " | "));
                for (label, row) in rows.iter().zip(entries) {
                    let _ = writeln!(out, "{}: {}", label, join(row, " | "));
                }
            }
            Payload::Bezoutian { delta, slice_degree, slices } => {
                let _ = writeln!(out, "delta: {}", poly_text(delta));
                let _ = writeln!(out, "slices of degree {}:", slice_degree);
                for s in slices {
                    let _ = writeln!(out, "{}: {}", s.label, poly_text(&s.terms));
                }
            }
            Payload::Gcp { raw, normalized, lowest_degree, lowest } => {
                let _ = writeln!(out, "raw: {}", join(raw, " "));
                let _ = writeln!(out, "normalized: {}", join(normalized, " "));
                match (lowest_degree, lowest) {
                    (Some(k), Some(c)) => {
                        let _ = writeln!(out, "lowest: {} s^{}", c, k);
                    }
                    _ => {
                        let _ = writeln!(out, "lowest: none");
                    }
                }
            }
            Payload::Sizes { rows } => {
                for r in rows {
                    let det = r.determinantal.map_or("none".to_string(), |[a, b]| format!("{}..{}", a, b));
                    let _ = writeln!(
                        out,
                        "({}) t_n {} minimal t {} min size {} classical size {} determinantal {}",
                        join(&r.degrees, ","),
                        r.critical_degree,
                        r.minimal_t,
                        r.min_size,
                        r.classical_size,
                        det
                    );
                }
            }
            Payload::Verify { suite, passed, criteria } => {
                for c in criteria {
                    let _ = writeln!(out, "criterion {:>2} [{}] {}: {}", c.id, if c.passed { "PASS" } else { "FAIL" }, c.title, c.detail);
                }
                let n_pass = criteria.iter().filter(|c| c.passed).count();
                let _ = writeln!(out, "suite {}: {}/{} passed{}", suite, n_pass, criteria.len(), if *passed { "" } else { ", FAILED" });
            }
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "time: {} ms", ms);
        }
        out
    }
}
