use serde::{Deserialize, Serialize};

use crate::algebra::{BilinearSpace, Field, Matrix, Scalar, Vector};
use crate::error::{Error, Result};
use crate::group::{named_weyl, reflection, CoxeterType, Reflection};

/// Where the group comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupSource {
    /// A standard finite Coxeter type, e.g. `{"type": "B", "rank": 3}` or
    /// `{"type": "I2(5)", "rank": 2}`.
    Named {
        #[serde(rename = "type")]
        ty: String,
        rank: usize,
    },
    /// A Gram matrix and generating roots, entries in exact syntax such as
    /// `"-3/2"` or `"1/2+1/2r"` where `r = √d`.
    Explicit {
        field: Field,
        gram: Vec<Vec<String>>,
        generators: Vec<Vec<String>>,
    },
}

/// Optional limits.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct SpecOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expansion_degree: Option<usize>,
}

impl SpecOptions {
    fn is_empty(&self) -> bool {
        self.order_cap.is_none() && self.expansion_degree.is_none()
    }
}

/// A validated group definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    #[serde(flatten)]
    pub source: GroupSource,
    #[serde(default, skip_serializing_if = "SpecOptions::is_empty")]
    pub options: SpecOptions,
}

/// Parses and validates a JSON group definition.
///
/// Exact entries are rewritten in canonical form, so serializing the result
/// and parsing again gives an identical spec.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut spec: GroupSpec = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    if let GroupSource::Explicit {
        field,
        gram,
        generators,
    } = &mut spec.source
    {
        *gram = canonical_rows(gram, *field, "gram")?;
        *generators = canonical_rows(generators, *field, "generators")?;
    }
    spec.build()?;
    Ok(spec)
}

fn parse_rows(rows: &[Vec<String>], field: Field, name: &str) -> Result<Vec<Vec<Scalar>>> {
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, s)| {
                    Scalar::parse_in(s, field)
                        .map_err(|e| Error::Parse(format!("{name}[{i}][{j}]: {e}")))
                })
                .collect()
        })
        .collect()
}

fn canonical_rows(rows: &[Vec<String>], field: Field, name: &str) -> Result<Vec<Vec<String>>> {
    Ok(parse_rows(rows, field, name)?
        .into_iter()
        .map(|row| row.iter().map(Scalar::to_string).collect())
        .collect())
}

impl GroupSpec {
    pub fn named(ty: CoxeterType) -> Self {
        GroupSpec {
            source: GroupSource::Named {
                ty: ty.type_name(),
                rank: ty.rank(),
            },
            options: SpecOptions::default(),
        }
    }

    /// Display name: the Coxeter type, or `explicit`.
    pub fn name(&self) -> String {
        match &self.source {
            GroupSource::Named { ty, rank } => CoxeterType::from_parts(ty, *rank)
                .map(|t| t.to_string())
                .unwrap_or_else(|_| format!("{ty}{rank}")),
            GroupSource::Explicit { .. } => "explicit".into(),
        }
    }

    /// The bilinear space and generating reflections.
    pub fn build(&self) -> Result<(BilinearSpace, Vec<Reflection>)> {
        match &self.source {
            GroupSource::Named { ty, rank } => named_weyl(CoxeterType::from_parts(ty, *rank)?),
            GroupSource::Explicit {
                field,
                gram,
                generators,
            } => {
                let rows = parse_rows(gram, *field, "gram")?;
                let n = rows.len();
                if n == 0 || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::InvalidForm);
                }
                let space = BilinearSpace::new(*field, Matrix::from_rows(rows))?;
                if generators.is_empty() {
                    return Err(Error::NoGenerators);
                }
                parse_rows(generators, *field, "generators")?
                    .into_iter()
                    .map(|v| reflection(&space, &Vector(v)))
                    .collect::<Result<Vec<_>>>()
                    .map(|gens| (space, gens))
            }
        }
    }
}
