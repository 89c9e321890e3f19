//! On-disk JSON formats.

use std::fs;
use std::path::Path;

use serde::Deserialize;
use tiled_core::{ExponentMatrix, FinAbGroup, GlobalProblem, RelationKind, TPrime};

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderFile {
    pub n: usize,
    pub exponent_matrix: Vec<Vec<i64>>,
    /// Free-form name; carried for the reader, not used.
    #[serde(default)]
    #[allow(dead_code)]
    pub label: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub degree: usize,
    pub class_group: ClassGroup,
    #[serde(default)]
    pub omega: Vec<String>,
    #[serde(default)]
    pub t_primes: Vec<TPrimeEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassGroup {
    pub invariant_factors: Vec<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TPrimeEntry {
    pub label: String,
    pub d: usize,
    pub kind: Kind,
    pub vector: Vec<i64>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    PClass,
    QClass,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn load_order(path: &Path) -> Result<ExponentMatrix, CliError> {
    let file: OrderFile = read_json(path)?;
    Ok(ExponentMatrix::validate(file.n, &file.exponent_matrix)?)
}

/// Reads a problem file. Class vectors are given against the listed invariant
/// factors; coordinates belonging to factors equal to 1 are dropped to match
/// the reduced group.
pub fn load_problem(path: &Path) -> Result<GlobalProblem, CliError> {
    let file: ProblemFile = read_json(path)?;
    let factors = &file.class_group.invariant_factors;
    let class_group = FinAbGroup::new(factors.clone())?;
    let t_primes = file
        .t_primes
        .into_iter()
        .map(|t| {
            let vector = if t.vector.len() == factors.len() {
                t.vector.iter().zip(factors).filter(|&(_, &f)| f != 1).map(|(&x, _)| x).collect()
            } else {
                t.vector
            };
            TPrime {
                label: t.label,
                d: t.d,
                kind: match t.kind {
                    Kind::PClass => RelationKind::PClass,
                    Kind::QClass => RelationKind::QClass,
                },
                vector,
            }
        })
        .collect();
    Ok(GlobalProblem { degree: file.degree, class_group, omega: file.omega, t_primes })
}
