//! JSON problem documents.
//!
//! A document is one object whose `"form"` field is one of `lp`, `standard`,
//! `game`, `cheb` or `l1`, followed by the form's fields and an optional
//! `"certificate"`. Rationals are strings (`"-3"`, `"1/3"`), always emitted in
//! lowest terms. Emission is canonical: fixed key order, two-space
//! indentation and a trailing newline.
//!
//! ```json
//! {
//!   "form": "game",
//!   "matrix": [["0", "1"], ["-1", "0"]]
//! }
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{ChebyshevProblem, L1Problem, LinearProgram, MatrixGame, StandardLP};
use crate::reductions::ReductionCertificate;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum Problem {
    Lp(LinearProgram),
    Standard(StandardLP),
    Game(MatrixGame),
    Cheb(ChebyshevProblem),
    L1(L1Problem),
}

impl Problem {
    pub fn form(&self) -> &'static str {
        match self {
            Self::Lp(_) => "lp",
            Self::Standard(_) => "standard",
            Self::Game(_) => "game",
            Self::Cheb(_) => "cheb",
            Self::L1(_) => "l1",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let r = match self {
            Self::Lp(p) => p.validate(),
            Self::Standard(p) => p.validate(),
            Self::Game(g) => g.validate(),
            Self::Cheb(p) => p.validate(),
            Self::L1(p) => p.validate(),
        };
        r.map_err(|e| match e {
            Error::InvariantViolation(_) => e,
            other => Error::InvariantViolation(other.to_string()),
        })
    }

    /// `(variables, functions-or-constraints)`.
    pub fn dims(&self) -> (usize, usize) {
        match self {
            Self::Lp(p) => (p.num_vars(), p.constraints.len()),
            Self::Standard(p) => (p.num_vars(), p.num_constraints()),
            Self::Game(g) => (g.size(), g.size()),
            Self::Cheb(p) => (p.arity(), p.len()),
            Self::L1(p) => (p.arity(), p.len()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    #[serde(flatten)]
    pub problem: Problem,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<ReductionCertificate>,
}

impl Document {
    pub fn new(problem: Problem) -> Self {
        Self {
            problem,
            certificate: None,
        }
    }

    pub fn with_certificate(problem: Problem, certificate: ReductionCertificate) -> Self {
        Self {
            problem,
            certificate: Some(certificate),
        }
    }
}

/// Parses and validates a document.
pub fn parse_problem(bytes: &[u8]) -> Result<Document> {
    let doc: Document = serde_json::from_slice(bytes).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.problem.validate()?;
    Ok(doc)
}

pub fn emit_problem(problem: &Problem, certificate: Option<&ReductionCertificate>) -> String {
    emit_document(&Document {
        problem: problem.clone(),
        certificate: certificate.cloned(),
    })
}

pub fn emit_document(doc: &Document) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents always serialize");
    out.push('\n');
    out
}
