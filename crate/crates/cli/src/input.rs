use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use resultant_core::bezoutian::PolySystem;
use resultant_core::combinat::DegreeSystem;
use resultant_core::ring::{parse_rational, MPoly, ParamPoly, Scalar};

use crate::CliError;

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Generic,
    Integer,
    Rational,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Generic => "generic",
            Mode::Integer => "integer",
            Mode::Rational => "rational",
        }
    }
}

/// One term: a coefficient string and an exponent vector.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub c: String,
    pub e: Vec<u32>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq, Default)]
#[serde(deny_unknown_fields)]
pub struct CommandOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalize_sign: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_symbolic_size: Option<u64>,
}

/// A polynomial system as read from JSON.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub degrees: Vec<u32>,
    #[serde(default)]
    pub mode: Mode,
    /// Ignored in generic mode, where every coefficient is a fresh parameter.
    #[serde(default)]
    pub polys: Vec<Vec<Term>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    #[serde(default)]
    pub options: CommandOptions,
}

/// A validated system in one of the three coefficient modes.
#[derive(Clone, Debug)]
pub enum System {
    Generic(PolySystem<ParamPoly>),
    Integer(PolySystem<BigInt>),
    Rational(PolySystem<BigRational>),
}

impl System {
    pub fn degree_system(&self) -> &DegreeSystem {
        match self {
            System::Generic(s) => s.degree_system(),
            System::Integer(s) => s.degree_system(),
            System::Rational(s) => s.degree_system(),
        }
    }
}

pub fn parse_input(bytes: &[u8]) -> Result<InputDocument, CliError> {
    let text = std::str::from_utf8(bytes).map_err(|e| CliError::Parse(format!("input is not UTF-8: {}", e)))?;
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    doc.validate()?;
    Ok(doc)
}

impl InputDocument {
    pub fn degrees_only(degrees: Vec<u32>) -> Self {
        InputDocument {
            n: None,
            degrees,
            mode: Mode::Generic,
            polys: Vec::new(),
            t: None,
            options: CommandOptions::default(),
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        let field = |path: String, msg: String| CliError::Parse(format!("{}: {}", path, msg));
        DegreeSystem::new(self.degrees.clone()).map_err(|e| field("degrees".into(), e.to_string()))?;
        let n = self.degrees.len();
        if let Some(m) = self.n {
            if m != n {
                return Err(field("n".into(), format!("{} does not match {} degrees", m, n)));
            }
        }
        if self.mode == Mode::Generic {
            return Ok(());
        }
        if self.polys.len() != n {
            return Err(field("polys".into(), format!("expected {} polynomials, got {}", n, self.polys.len())));
        }
        for (i, poly) in self.polys.iter().enumerate() {
            for (k, term) in poly.iter().enumerate() {
                let path = format!("polys[{}][{}]", i, k);
                if term.e.len() != n {
                    return Err(field(format!("{}.e", path), format!("expected {} exponents, got {}", n, term.e.len())));
                }
                let degree: u32 = term.e.iter().sum();
                if degree != self.degrees[i] {
                    return Err(field(
                        format!("{}.e", path),
                        format!("total degree {} does not match declared degree {}", degree, self.degrees[i]),
                    ));
                }
                let ok = match self.mode {
                    Mode::Integer => term.c.trim().parse::<BigInt>().is_ok(),
                    _ => parse_rational(&term.c).is_some(),
                };
                if !ok {
                    return Err(field(format!("{}.c", path), format!("`{}` is not a valid {} coefficient", term.c, self.mode.as_str())));
                }
            }
        }
        Ok(())
    }

    pub fn system(&self) -> Result<System, CliError> {
        let parse_err = |e: resultant_core::bezoutian::BezoutianError| CliError::Parse(e.to_string());
        Ok(match self.mode {
            Mode::Generic => System::Generic(PolySystem::generic(self.degrees.clone()).map_err(parse_err)?),
            Mode::Integer => System::Integer(self.build(|c| c.trim().parse::<BigInt>().ok())?),
            Mode::Rational => System::Rational(self.build(parse_rational)?),
        })
    }

    fn build<R: Scalar>(&self, parse: impl Fn(&str) -> Option<R>) -> Result<PolySystem<R>, CliError> {
        let n = self.degrees.len();
        let mut polys = Vec::with_capacity(n);
        for (i, poly) in self.polys.iter().enumerate() {
            let mut terms = Vec::with_capacity(poly.len());
            for (k, term) in poly.iter().enumerate() {
                let c = parse(&term.c).ok_or_else(|| CliError::Parse(format!("polys[{}][{}].c: cannot parse `{}`", i, k, term.c)))?;
                terms.push((term.e.clone(), c));
            }
            polys.push(MPoly::from_terms(n, terms).map_err(|e| CliError::Parse(format!("polys[{}]: {}", i, e)))?);
        }
        PolySystem::new(self.degrees.clone(), polys).map_err(|e| CliError::Parse(e.to_string()))
    }
}
