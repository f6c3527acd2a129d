//! JSON input format describing a matroid and its multiplicity function.
//!
//! ```json
//! {
//!   "matroid": {"type": "integer_matrix", "matrix": [["1", "2"], ["0", "2"]]},
//!   "multiplicity": {"type": "from_matrix"}
//! }
//! ```
//!
//! Tables are indexed by bitmask: element `e` contributes bit `2^e`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::constructors::{from_integer_matrix, graphic, uniform, IntegerMatrix, Multigraph};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::multiplicity::MultiplicityMatroid;
use crate::poly::parse_decimal;
use crate::subset::{MAX_ENUM, MAX_GROUND};

pub const DEFAULT_MAX_N: usize = 16;

/// Isolated vertices never change the rank, so larger graphs are refused outright.
pub const MAX_VERTICES: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidInput {
    pub matroid: MatroidDescription,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<MultiplicityInput>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MatroidDescription {
    RankTable {
        n: usize,
        rank: Vec<u32>,
    },
    Uniform {
        r: usize,
        n: usize,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    IntegerMatrix {
        matrix: Vec<Vec<MatrixEntry>>,
    },
}

/// A matrix entry: a decimal string, or a plain JSON integer for small values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixEntry {
    Int(i64),
    Text(String),
}

impl MatrixEntry {
    fn value(&self) -> Result<BigInt> {
        match self {
            MatrixEntry::Int(v) => Ok(BigInt::from(*v)),
            MatrixEntry::Text(s) => parse_decimal(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MultiplicityInput {
    Trivial,
    Table { values: Vec<String> },
    FromMatrix,
}

impl MatroidDescription {
    /// Ground-set size, read without building anything.
    pub fn ground_size(&self) -> usize {
        match self {
            MatroidDescription::RankTable { n, .. } | MatroidDescription::Uniform { n, .. } => *n,
            MatroidDescription::Graphic { edges, .. } => edges.len(),
            MatroidDescription::IntegerMatrix { matrix } => matrix.first().map_or(0, Vec::len),
        }
    }
}

impl MatroidInput {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Explicit rank and multiplicity tables for `mm`.
    pub fn from_tables(mm: &MultiplicityMatroid) -> Self {
        Self {
            matroid: MatroidDescription::RankTable {
                n: mm.n(),
                rank: mm.matroid().rank_table(),
            },
            multiplicity: Some(MultiplicityInput::Table {
                values: mm.table().iter().map(ToString::to_string).collect(),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    /// Builds the multiplicity matroid, refusing ground sets larger than `max_n`.
    pub fn build(&self, max_n: usize) -> Result<MultiplicityMatroid> {
        let n = self.matroid.ground_size();
        if n > max_n.min(MAX_GROUND) {
            return Err(Error::SizeGuard {
                op: "input file",
                n,
                max: max_n,
            });
        }
        let from_matrix = matches!(self.multiplicity, Some(MultiplicityInput::FromMatrix));
        let is_matrix = matches!(self.matroid, MatroidDescription::IntegerMatrix { .. });
        if from_matrix && !is_matrix {
            return Err(Error::InvalidArgument(
                "from_matrix multiplicity needs an integer_matrix description".into(),
            ));
        }
        let (matroid, realized) = match &self.matroid {
            MatroidDescription::RankTable { n, rank } => {
                (Matroid::from_rank_table(*n, rank)?, None)
            }
            MatroidDescription::Uniform { r, n } => (uniform(*r, *n)?, None),
            MatroidDescription::Graphic { vertices, edges } => {
                if *vertices > MAX_VERTICES {
                    return Err(Error::InvalidArgument(format!(
                        "graph has {vertices} vertices, at most {MAX_VERTICES} are accepted"
                    )));
                }
                (graphic(&Multigraph::new(*vertices, edges.clone())?)?, None)
            }
            MatroidDescription::IntegerMatrix { matrix } => {
                let rows = matrix
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(MatrixEntry::value)
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                let mm = from_integer_matrix(&IntegerMatrix::new(rows)?)?;
                (mm.matroid().clone(), Some(mm))
            }
        };
        match &self.multiplicity {
            None if realized.is_some() => Ok(realized.expect("checked")),
            Some(MultiplicityInput::FromMatrix) => Ok(realized.expect("checked")),
            None | Some(MultiplicityInput::Trivial) => Ok(MultiplicityMatroid::trivial(matroid)),
            Some(MultiplicityInput::Table { values }) => {
                let values = values
                    .iter()
                    .map(|v| parse_decimal(v))
                    .collect::<Result<Vec<_>>>()?;
                MultiplicityMatroid::new(matroid, values)
            }
        }
    }
}

/// Parses and builds in one step with the default guard.
pub fn load(text: &str) -> Result<MultiplicityMatroid> {
    MatroidInput::parse(text)?.build(DEFAULT_MAX_N)
}

/// Validates a `--max-n` override: at most the enumeration ceiling.
pub fn check_max_n(max_n: usize) -> Result<usize> {
    if max_n > MAX_ENUM {
        return Err(Error::InvalidArgument(format!(
            "--max-n may not exceed {MAX_ENUM}, got {max_n}"
        )));
    }
    Ok(max_n)
}
