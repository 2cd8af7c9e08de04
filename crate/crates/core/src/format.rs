//! The JSON exchange format for algebras.
//!
//! ```json
//! {"size": 2, "meet": [[0,0],[0,1]], "top": 1, "bottom": 0,
//!  "imp": [[1,1],[0,1]], "labels": ["0","1"]}
//! ```
//!
//! `bottom`, `imp` and `labels` may be `null` or absent. A document without
//! `imp` describes a bare semilattice.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{HemiAlgebra, HemiError};
use crate::semilattice::{validate_semilattice, Elem, FiniteSemilattice, SemilatticeError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub size: usize,
    pub meet: Vec<Vec<Elem>>,
    pub top: Elem,
    #[serde(default)]
    pub bottom: Option<Elem>,
    #[serde(default)]
    pub imp: Option<Vec<Vec<Elem>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed algebra JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{field}` has {found} rows or entries, but `size` is {expected}")]
    SizeMismatch { field: &'static str, expected: usize, found: usize },
    #[error("field `imp` is required here")]
    MissingImplication,
    #[error("invalid semilattice: {0}")]
    Semilattice(#[from] SemilatticeError),
    #[error("invalid hemiimplicative semilattice: {0}")]
    Hemi(#[from] HemiError),
}

impl FormatError {
    /// Law violations, as opposed to malformed or incomplete input.
    pub fn is_validation(&self) -> bool {
        match self {
            FormatError::Semilattice(e) => e.witness().is_some(),
            FormatError::Hemi(e) => e.witness().is_some(),
            _ => false,
        }
    }

    pub fn witness(&self) -> Option<Vec<Elem>> {
        match self {
            FormatError::Semilattice(e) => e.witness(),
            FormatError::Hemi(e) => e.witness(),
            _ => None,
        }
    }
}

/// A parsed document: a bare semilattice or a full algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Semilattice(FiniteSemilattice),
    Algebra(HemiAlgebra),
}

impl Parsed {
    pub fn semilattice(&self) -> &FiniteSemilattice {
        match self {
            Parsed::Semilattice(s) => s,
            Parsed::Algebra(a) => a.base(),
        }
    }

    pub fn into_algebra(self) -> Result<HemiAlgebra, FormatError> {
        match self {
            Parsed::Algebra(a) => Ok(a),
            Parsed::Semilattice(_) => Err(FormatError::MissingImplication),
        }
    }
}

impl AlgebraJson {
    pub fn from_semilattice(s: &FiniteSemilattice) -> Self {
        AlgebraJson {
            size: s.size(),
            meet: s.meet_rows(),
            top: s.top(),
            bottom: s.bottom(),
            imp: None,
            labels: s.labels().map(<[String]>::to_vec),
        }
    }

    pub fn from_algebra(a: &HemiAlgebra) -> Self {
        AlgebraJson { imp: Some(a.imp_rows()), ..AlgebraJson::from_semilattice(a.base()) }
    }

    fn check_rows(&self, field: &'static str, rows: &[Vec<Elem>]) -> Result<(), FormatError> {
        if rows.len() != self.size {
            return Err(FormatError::SizeMismatch { field, expected: self.size, found: rows.len() });
        }
        if let Some(r) = rows.iter().find(|r| r.len() != self.size) {
            return Err(FormatError::SizeMismatch { field, expected: self.size, found: r.len() });
        }
        Ok(())
    }

    /// Validates the document.
    pub fn validate(&self) -> Result<Parsed, FormatError> {
        self.check_rows("meet", &self.meet)?;
        if let Some(imp) = &self.imp {
            self.check_rows("imp", imp)?;
        }
        let mut s = validate_semilattice(&self.meet, self.top, self.bottom)?;
        if let Some(labels) = &self.labels {
            if labels.len() != self.size {
                return Err(FormatError::SizeMismatch { field: "labels", expected: self.size, found: labels.len() });
            }
            s = s.with_labels(labels.clone())?;
        }
        match &self.imp {
            None => Ok(Parsed::Semilattice(s)),
            Some(imp) => Ok(Parsed::Algebra(crate::algebra::validate_hemi(s, imp)?)),
        }
    }
}

pub fn parse(text: &str) -> Result<Parsed, FormatError> {
    let doc: AlgebraJson = serde_json::from_str(text)?;
    doc.validate()
}

pub fn parse_algebra(text: &str) -> Result<HemiAlgebra, FormatError> {
    parse(text)?.into_algebra()
}

pub fn to_json(a: &HemiAlgebra) -> serde_json::Value {
    serde_json::to_value(AlgebraJson::from_algebra(a)).expect("algebra JSON serializes")
}

pub fn semilattice_to_json(s: &FiniteSemilattice) -> serde_json::Value {
    serde_json::to_value(AlgebraJson::from_semilattice(s)).expect("semilattice JSON serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn roundtrip_corpus() {
        for (name, a) in fixtures::corpus() {
            let text = to_json(&a).to_string();
            assert_eq!(parse_algebra(&text).unwrap(), a, "{name}");
        }
    }

    #[test]
    fn bare_semilattice() {
        let p = parse(r#"{"size":2,"meet":[[0,0],[0,1]],"top":1}"#).unwrap();
        assert!(matches!(p, Parsed::Semilattice(_)));
        assert_eq!(p.semilattice().bottom(), Some(0));
        assert!(matches!(p.into_algebra(), Err(FormatError::MissingImplication)));
    }

    #[test]
    fn errors_name_fields() {
        let e = parse(r#"{"size":3,"meet":[[0,0],[0,1]],"top":1}"#).unwrap_err();
        assert!(e.to_string().contains("`meet`"));
        let e = parse(r#"{"size":2,"meet":[[0,0],[0,1]],"top":1,"imp":[[1,1]]}"#).unwrap_err();
        assert!(e.to_string().contains("`imp`"));
        let e = parse(r#"{"size":2,"meet":[[0,0],[0,1]]}"#).unwrap_err();
        assert!(e.to_string().contains("top"));
        assert!(!e.is_validation());
        let e = parse(r#"{"size":2,"meet":[[0,0],[0,1]],"top":1,"imp":[[1,1],[0,0]]}"#).unwrap_err();
        assert!(e.is_validation());
        assert_eq!(e.witness(), Some(vec![1]));
    }
}
