//! Configuration files.
//!
//! ```json
//! {"field": "rational",
//!  "pairs": [[{"a": "-2", "b": 1, "c": 1}, {"a": 0, "b": 1, "c": 0}],
//!            [{"a": -3, "b": 1, "c": 1}, {"a": -1, "b": 1, "c": 0}]]}
//! ```
//!
//! Each line is `a x + b y = c`. Literals are JSON integers or strings in the
//! form `n` or `n/d`. The field is `"rational"` or `{"prime": p}`.

use std::fmt;
use std::path::Path;

use quadriline_core::{ConfigurationInput, Field, FieldTag, InputLine, ScalarError};
use serde::Deserialize;

use crate::error::CliError;

/// Where in the file a value came from, e.g. `pairs[1][0].c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Location {
    pub pair: usize,
    pub line: usize,
    pub coefficient: char,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pairs[{}][{}].{}", self.pair, self.line, self.coefficient)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigFileError {
    #[error("{0}")]
    Json(String),
    #[error("unknown field {0:?} (expected \"rational\" or {{\"prime\": p}})")]
    UnknownField(String),
    #[error("field: {0}")]
    Modulus(ScalarError),
    #[error("expected exactly two pairs, found {0}")]
    PairCount(usize),
    #[error("pairs[{pair}]: expected exactly two lines, found {found}")]
    LineCount { pair: usize, found: usize },
    #[error("{at}: {source}")]
    Literal { at: Location, source: ScalarError },
    #[error("{at}: literal must be an integer or a string")]
    LiteralType { at: Location },
    #[error("pairs[{pair}][{line}]: a and b are both zero")]
    NotALine { pair: usize, line: usize },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    field: RawField,
    pairs: Vec<Vec<RawLine>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawField {
    Name(String),
    Prime {
        prime: u64,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLine {
    a: serde_json::Value,
    b: serde_json::Value,
    c: serde_json::Value,
}

/// A syntactically valid configuration file, literals not yet interpreted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigFile {
    pub field: FieldTag,
    /// `lines[pair][line] = [a, b, c]`.
    pub lines: [[[String; 3]; 2]; 2],
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, ConfigFileError> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| ConfigFileError::Json(e.to_string()))?;
        let field = match raw.field {
            RawField::Name(name) if name == "rational" => FieldTag::Rational,
            RawField::Name(name) => return Err(ConfigFileError::UnknownField(name)),
            RawField::Prime { prime } => FieldTag::Prime(prime).validate().map_err(ConfigFileError::Modulus)?,
        };
        if raw.pairs.len() != 2 {
            return Err(ConfigFileError::PairCount(raw.pairs.len()));
        }
        let mut lines: [[[String; 3]; 2]; 2] = Default::default();
        for (i, pair) in raw.pairs.iter().enumerate() {
            if pair.len() != 2 {
                return Err(ConfigFileError::LineCount { pair: i, found: pair.len() });
            }
            for (j, line) in pair.iter().enumerate() {
                for (k, (name, value)) in [('a', &line.a), ('b', &line.b), ('c', &line.c)].into_iter().enumerate() {
                    let at = Location { pair: i, line: j, coefficient: name };
                    lines[i][j][k] = match value {
                        serde_json::Value::String(s) => s.clone(),
                        serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                        _ => return Err(ConfigFileError::LiteralType { at }),
                    };
                }
            }
        }
        Ok(ConfigFile { field, lines })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    /// Interprets the literals in `T`, which must match `self.field`.
    pub fn to_input<T: Field>(&self) -> Result<ConfigurationInput<T>, ConfigFileError> {
        let line = |i: usize, j: usize| -> Result<InputLine<T>, ConfigFileError> {
            let parse = |k: usize, coefficient: char| {
                T::parse_literal(&self.lines[i][j][k]).map_err(|source| ConfigFileError::Literal {
                    at: Location { pair: i, line: j, coefficient },
                    source,
                })
            };
            let (a, b, c) = (parse(0, 'a')?, parse(1, 'b')?, parse(2, 'c')?);
            InputLine::new(a, b, c).ok_or(ConfigFileError::NotALine { pair: i, line: j })
        };
        Ok(ConfigurationInput::new((line(0, 0)?, line(0, 1)?), (line(1, 0)?, line(1, 1)?)))
    }
}
