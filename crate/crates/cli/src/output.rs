//! Structured JSON records. Coefficients are strings so that rationals stay
//! exact.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Number, Value};

use qsymq::{ExponentVector, Polynomial, Rational, ReductionResult};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: String,
    pub exps: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub coeff: String,
    pub eps: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: usize,
    pub operation: String,
    pub terms: Vec<TermRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<CertificateRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<Vec<Number>>,
    /// Operation-specific fields.
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
}

fn bad_record(msg: String) -> CliError {
    CliError::Record(msg)
}

fn vector(exps: &[u32], n: usize) -> Result<ExponentVector, CliError> {
    if exps.len() != n {
        return Err(bad_record(format!("vector {exps:?} does not have {n} entries")));
    }
    Ok(ExponentVector::new(exps.to_vec())?)
}

fn coefficient(text: &str) -> Result<Rational, CliError> {
    Rational::from_str(text).map_err(|_| bad_record(format!("bad coefficient {text:?}")))
}

impl OutputRecord {
    pub fn new(n: usize, operation: &str) -> Self {
        OutputRecord {
            n,
            operation: operation.to_string(),
            terms: Vec::new(),
            certificate: None,
            series: None,
            details: Map::new(),
        }
    }

    pub fn with_polynomial(mut self, p: &Polynomial) -> Self {
        self.terms = p
            .terms()
            .map(|(nu, c)| TermRecord {
                coeff: c.to_string(),
                exps: nu.entries().to_vec(),
            })
            .collect();
        self
    }

    pub fn with_certificate(mut self, r: &ReductionResult) -> Self {
        self.certificate = Some(
            r.certificate
                .iter()
                .map(|(c, eps)| CertificateRecord {
                    coeff: c.to_string(),
                    eps: eps.entries().to_vec(),
                })
                .collect(),
        );
        self
    }

    pub fn with_series<T: ToString>(mut self, coefficients: &[T]) -> Self {
        self.series = Some(
            coefficients
                .iter()
                .map(|c| Number::from_str(&c.to_string()).expect("integers are valid numbers"))
                .collect(),
        );
        self
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    pub fn to_polynomial(&self) -> Result<Polynomial, CliError> {
        if self.n == 0 {
            return Err(bad_record("n must be positive".to_string()));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push((vector(&t.exps, self.n)?, coefficient(&t.coeff)?));
        }
        Ok(Polynomial::from_terms(self.n, terms)?)
    }

    pub fn certificate_terms(&self) -> Result<Vec<(Rational, ExponentVector)>, CliError> {
        self.certificate
            .iter()
            .flatten()
            .map(|c| Ok((coefficient(&c.coeff)?, vector(&c.eps, self.n)?)))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| bad_record(e.to_string()))
    }
}
