//! JSON description of a piecewise polynomial:
//! `{ "left": [c0, c1, ...], "right": [d0, d1, ...], "breakpoint": x }`,
//! coefficients constant-first.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::PiecewiseFunction;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PiecewisePolyFile {
    pub left: Vec<f64>,
    pub right: Vec<f64>,
    pub breakpoint: f64,
}

impl PiecewisePolyFile {
    pub fn parse(text: &str) -> Result<Self> {
        let parsed: Self = serde_json::from_str(text)
            .map_err(|e| Error::MalformedFile(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        parsed.validate()?;
        Ok(parsed)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::MalformedFile(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            Error::MalformedFile(m) => Error::MalformedFile(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    fn validate(&self) -> Result<()> {
        for (field, coeffs) in [("left", &self.left), ("right", &self.right)] {
            if coeffs.is_empty() {
                return Err(Error::MalformedFile(format!("field '{field}': empty coefficient list")));
            }
            if let Some(i) = coeffs.iter().position(|c| !c.is_finite()) {
                return Err(Error::MalformedFile(format!("field '{field}[{i}]': not finite")));
            }
        }
        if !self.breakpoint.is_finite() {
            return Err(Error::MalformedFile("field 'breakpoint': not finite".into()));
        }
        Ok(())
    }

    pub fn function(&self) -> PiecewiseFunction {
        PiecewiseFunction::from_polynomials(
            Polynomial::new(self.left.clone()),
            Polynomial::new(self.right.clone()),
            self.breakpoint,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_builds() {
        let f = PiecewisePolyFile::parse(r#"{"left": [1, 2], "right": [0, 0, 1], "breakpoint": 0.5}"#)
            .unwrap()
            .function();
        assert_eq!(f.eval(0.25), 1.5);
        assert_eq!(f.eval(0.5), 0.25);
    }

    #[test]
    fn diagnostics_name_location_or_field() {
        let e = PiecewisePolyFile::parse("{\"left\": [1],\n \"right\": [1,, 2], \"breakpoint\": 0}").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");

        let e = PiecewisePolyFile::parse(r#"{"left": [], "right": [1], "breakpoint": 0}"#).unwrap_err();
        assert!(e.to_string().contains("'left'"), "{e}");

        let e = PiecewisePolyFile::parse(r#"{"left": [1], "right": [1]}"#).unwrap_err();
        assert!(e.to_string().contains("breakpoint"), "{e}");

        let e = PiecewisePolyFile::parse(r#"{"left": [1], "right": [1], "breakpoint": 0, "x": 1}"#).unwrap_err();
        assert!(matches!(e, Error::MalformedFile(_)));
    }
}
