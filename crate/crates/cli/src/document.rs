//! The decomposition file format: one JSON document with rationals as strings.
//!
//! ```json
//! {
//!   "variables": ["x0", "x1", "x2"],
//!   "line": ["0", "0", "1"],
//!   "terms": [{ "alpha": "2", "linear": ["1", "0", "0"] }]
//! }
//! ```

use serde::{Deserialize, Serialize};
use waring_core::{parse_scalar, Decomposition, Form, Rational, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionDocument {
    pub variables: Vec<String>,
    pub line: Vec<String>,
    pub terms: Vec<TermDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDocument {
    pub alpha: String,
    pub linear: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocumentError(pub String);

impl std::fmt::Display for DocumentError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for DocumentError {}

pub const DEFAULT_VARIABLES: [&str; 3] = ["x0", "x1", "x2"];

fn rational(field: &str, text: &str) -> Result<Rational, DocumentError> {
    parse_scalar(text).map_err(|e| DocumentError(format!("{field}: {e}")))
}

/// Parses a coefficient triple of rational strings.
pub fn triple(field: &str, values: &[String]) -> Result<Vec<Rational>, DocumentError> {
    if values.len() != 3 {
        return Err(DocumentError(format!("{field}: expected 3 coefficients, found {}", values.len())));
    }
    values.iter().enumerate().map(|(i, v)| rational(&format!("{field}[{i}]"), v)).collect()
}

/// Parses `c0,c1,c2` into a nonzero linear form.
pub fn parse_line(text: &str) -> Result<Form, DocumentError> {
    let parts: Vec<String> = text.split(',').map(|s| s.trim().to_string()).collect();
    line_form("line", &parts)
}

fn line_form(field: &str, values: &[String]) -> Result<Form, DocumentError> {
    let c = triple(field, values)?;
    if c.iter().all(Zero::is_zero) {
        return Err(DocumentError(format!("{field}: the zero form does not define a line")));
    }
    Form::linear(&c).map_err(|e| DocumentError(format!("{field}: {e}")))
}

/// Parses a comma-separated list of rationals.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>, DocumentError> {
    text.split(',').enumerate().map(|(i, s)| rational(&format!("value {i}"), s.trim())).collect()
}

impl DecompositionDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        let doc: Self = serde_json::from_str(text).map_err(|e| DocumentError(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn validate(&self) -> Result<(), DocumentError> {
        if self.variables.len() != 3 {
            return Err(DocumentError(format!(
                "variables: expected 3 names, found {}",
                self.variables.len()
            )));
        }
        for (i, v) in self.variables.iter().enumerate() {
            if v.is_empty() || self.variables[..i].contains(v) {
                return Err(DocumentError(format!("variables: invalid or repeated name {v:?}")));
            }
        }
        line_form("line", &self.line)?;
        if self.terms.is_empty() {
            return Err(DocumentError("terms: at least one term is required".into()));
        }
        for (i, t) in self.terms.iter().enumerate() {
            rational(&format!("terms[{i}].alpha"), &t.alpha)?;
            triple(&format!("terms[{i}].linear"), &t.linear)?;
        }
        Ok(())
    }

    pub fn line(&self) -> Result<Form, DocumentError> {
        line_form("line", &self.line)
    }

    pub fn decomposition(&self) -> Result<Decomposition, DocumentError> {
        let pairs = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let alpha = rational(&format!("terms[{i}].alpha"), &t.alpha)?;
                let l = Form::linear(&triple(&format!("terms[{i}].linear"), &t.linear)?)
                    .map_err(|e| DocumentError(e.to_string()))?;
                Ok((alpha, l))
            })
            .collect::<Result<Vec<_>, DocumentError>>()?;
        Decomposition::from_pairs(pairs).map_err(|e| DocumentError(e.to_string()))
    }

    /// Renders a decomposition with canonical rational strings.
    pub fn from_decomposition(dec: &Decomposition, line: &Form) -> Self {
        let render = |v: Vec<Rational>| v.iter().map(ToString::to_string).collect();
        DecompositionDocument {
            variables: DEFAULT_VARIABLES.iter().map(|s| s.to_string()).collect(),
            line: render(line.linear_coeffs().expect("linear form")),
            terms: dec
                .terms()
                .iter()
                .map(|t| TermDocument {
                    alpha: t.alpha.to_string(),
                    linear: render(t.linear.linear_coeffs().expect("linear form")),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = r#"{
        "variables": ["x0", "x1", "x2"],
        "line": ["0", "0", "1"],
        "terms": [
            {"alpha": "2", "linear": ["1", "0", "0"]},
            {"alpha": "-1/3", "linear": ["1", "0", "1"]}
        ]
    }"#;

    #[test]
    fn parses_and_round_trips() {
        let doc = DecompositionDocument::from_json(EXAMPLE).unwrap();
        assert_eq!(doc.terms[1].alpha, "-1/3");
        assert_eq!(DecompositionDocument::from_json(&doc.to_json()).unwrap(), doc);
        let dec = doc.decomposition().unwrap();
        assert_eq!(DecompositionDocument::from_decomposition(&dec, &doc.line().unwrap()), doc);
    }

    #[test]
    fn rejects_bad_documents() {
        for bad in [
            r#"{"variables": ["x0", "x1"], "line": ["0","0","1"], "terms": [{"alpha": "1", "linear": ["1","0","0"]}]}"#,
            r#"{"variables": ["x0", "x1", "x2"], "line": ["0","0","0"], "terms": [{"alpha": "1", "linear": ["1","0","0"]}]}"#,
            r#"{"variables": ["x0", "x1", "x2"], "line": ["0","0","1"], "terms": [{"alpha": "1.5", "linear": ["1","0","0"]}]}"#,
            r#"{"variables": ["x0", "x1", "x2"], "line": ["0","0","1"], "terms": [{"alpha": "1", "linear": ["1","0"]}]}"#,
            r#"{"variables": ["x0", "x1", "x2"], "line": ["0","0","1"], "terms": [{"alpha": 1, "linear": ["1","0","0"]}]}"#,
            r#"{"variables": ["x0", "x1", "x2"], "line": ["0","0","1"], "terms": []}"#,
            r#"{"variables": ["x0", "x1", "x2"], "line": ["0","0","1"], "terms": [{"alpha": "1/0", "linear": ["1","0","0"]}]}"#,
            r#"{"variables": ["x0", "x1", "x2"], "line": ["0","0","1"]"#,
        ] {
            assert!(DecompositionDocument::from_json(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn parses_lines_and_lists() {
        assert_eq!(parse_line("0, 0, 1").unwrap(), Form::var(3, 2));
        assert!(parse_line("0,0,0").is_err());
        assert!(parse_line("1,2").is_err());
        assert_eq!(parse_rational_list("0,-1/2, 3").unwrap().len(), 3);
        assert!(parse_rational_list("0,,1").is_err());
    }
}
