//! Custom sequence definitions in JSON.
//!
//! ```json
//! {
//!   "name": "R",
//!   "summand": {
//!     "factors": [
//!       { "binomial": "n_choose_k", "power": 1 },
//!       { "binomial": "n_plus_k_choose_k", "power": 1 }
//!     ],
//!     "denominator": { "k": 2, "constant": -1 }
//!   },
//!   "recurrence": [[-1, -1], [15, 7], [-13, -7], [3, 1]],
//!   "initial_terms": [-1, 1, 7]
//! }
//! ```
//!
//! `binomial` is one of `n_choose_k`, `n_plus_k_choose_k`, `central_k`.
//! `numerator` and `denominator` are optional linear factors `k·x + constant`.
//! Recurrence entry `j` holds the ascending coefficients of the polynomial
//! multiplying `z_{n+j}`. Integers may be written as JSON numbers or, when
//! too large, as decimal strings.

use std::fmt;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::Deserialize;

use sunseq_core::sequence::{BinomialKind, BinomialSummand, IntPoly, Recurrence};
use sunseq_core::SequenceDef;

#[derive(Debug, thiserror::Error)]
pub struct DefinitionError {
    pub path: PathBuf,
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub field: Option<String>,
    pub message: String,
}

impl fmt::Display for DefinitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.path.display())?;
        if let (Some(l), Some(c)) = (self.line, self.column) {
            write!(f, ":{l}:{c}")?;
        }
        if let Some(field) = &self.field {
            write!(f, ": field `{field}`")?;
        }
        write!(f, ": {}", self.message)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntLit {
    Num(i64),
    Text(String),
}

impl IntLit {
    fn to_big(&self) -> Result<BigInt, String> {
        match self {
            IntLit::Num(n) => Ok(BigInt::from(*n)),
            IntLit::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| format!("`{s}` is not an integer")),
        }
    }
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case")]
enum Binomial {
    NChooseK,
    NPlusKChooseK,
    CentralK,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Factor {
    binomial: Binomial,
    #[serde(default = "one")]
    power: u32,
}

fn one() -> u32 {
    1
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Linear {
    k: i64,
    constant: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Summand {
    factors: Vec<Factor>,
    numerator: Option<Linear>,
    denominator: Option<Linear>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DefinitionFile {
    name: String,
    summand: Option<Summand>,
    recurrence: Option<Vec<Vec<IntLit>>>,
    #[serde(default)]
    initial_terms: Vec<IntLit>,
}

fn field_error(path: &Path, field: &str, message: impl Into<String>) -> DefinitionError {
    DefinitionError {
        path: path.to_path_buf(),
        line: None,
        column: None,
        field: Some(field.into()),
        message: message.into(),
    }
}

/// Parse a definition from JSON text; `path` is only used in diagnostics.
pub fn parse_definition(text: &str, path: &Path) -> Result<SequenceDef, DefinitionError> {
    let file: DefinitionFile = serde_json::from_str(text).map_err(|e| DefinitionError {
        path: path.to_path_buf(),
        line: Some(e.line()),
        column: Some(e.column()),
        field: None,
        message: strip_position(&e.to_string()),
    })?;

    let summand = file.summand.map(|s| BinomialSummand {
        factors: s
            .factors
            .into_iter()
            .map(|f| {
                let kind = match f.binomial {
                    Binomial::NChooseK => BinomialKind::NChooseK,
                    Binomial::NPlusKChooseK => BinomialKind::NPlusKChooseK,
                    Binomial::CentralK => BinomialKind::CentralK,
                };
                (kind, f.power)
            })
            .collect(),
        numerator: s.numerator.map(|l| (l.k, l.constant)),
        denominator: s.denominator.map(|l| (l.k, l.constant)),
    });
    if let Some(s) = &summand {
        s.validate()
            .map_err(|e| field_error(path, "summand", e.to_string()))?;
    }

    let recurrence = match file.recurrence {
        None => None,
        Some(rows) => {
            let mut polys = Vec::with_capacity(rows.len());
            for (j, row) in rows.iter().enumerate() {
                let coeffs = row
                    .iter()
                    .map(IntLit::to_big)
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|m| field_error(path, &format!("recurrence[{j}]"), m))?;
                polys.push(IntPoly::new(coeffs));
            }
            Some(
                Recurrence::new(polys)
                    .map_err(|e| field_error(path, "recurrence", e.to_string()))?,
            )
        }
    };

    let seeds = file
        .initial_terms
        .iter()
        .enumerate()
        .map(|(i, t)| {
            t.to_big()
                .map_err(|m| field_error(path, &format!("initial_terms[{i}]"), m))
        })
        .collect::<Result<Vec<_>, _>>()?;

    SequenceDef::new(file.name, summand, recurrence, seeds).map_err(|e| {
        let msg = e.to_string();
        let field = if msg.contains("initial terms") {
            "initial_terms"
        } else if msg.contains("name") {
            "name"
        } else {
            "summand"
        };
        field_error(path, field, msg)
    })
}

/// Read and parse a definition file.
pub fn load_custom_definition(path: &Path) -> Result<SequenceDef, DefinitionError> {
    let text = std::fs::read_to_string(path).map_err(|e| DefinitionError {
        path: path.to_path_buf(),
        line: None,
        column: None,
        field: None,
        message: e.to_string(),
    })?;
    parse_definition(&text, path)
}

/// serde_json appends " at line L column C"; the position is reported separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sunseq_core::sequence::builtin;

    fn parse(text: &str) -> Result<SequenceDef, DefinitionError> {
        parse_definition(text, Path::new("test.json"))
    }

    #[test]
    fn shipped_files_match_builtins() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("definitions");
        let r = load_custom_definition(&dir.join("R.json")).unwrap();
        assert_eq!(r, builtin::r_sequence());
        let s = load_custom_definition(&dir.join("S.json")).unwrap();
        assert_eq!(s, builtin::s_sequence());
    }

    #[test]
    fn too_few_seeds() {
        let err = parse(r#"{"name":"x","recurrence":[[1],[2],[3],[4]],"initial_terms":[1,2]}"#)
            .unwrap_err();
        assert_eq!(err.field.as_deref(), Some("initial_terms"));
        assert!(err.to_string().contains("needs 3 initial terms"), "{err}");
    }

    #[test]
    fn unknown_field_has_position() {
        let err = parse("{\n  \"name\": \"x\",\n  \"recurence\": []\n}").unwrap_err();
        assert_eq!(err.line, Some(3));
        assert!(err.message.contains("unknown field `recurence`"), "{err}");
    }

    #[test]
    fn big_integers_as_strings() {
        let d = parse(r#"{"name":"big","recurrence":[["-1"],["1"]],"initial_terms":["123456789012345678901234567890"]}"#).unwrap();
        assert_eq!(
            d.initial_terms[0].to_string(),
            "123456789012345678901234567890"
        );
        let err =
            parse(r#"{"name":"bad","recurrence":[["x"],[1]],"initial_terms":[1]}"#).unwrap_err();
        assert_eq!(err.field.as_deref(), Some("recurrence[0]"));
    }
}
