//! File formats: JSON instances, DIMACS CNF formulas and selection problems.

use crate::model::{validate_instance, Instance, ValidationReport};
use crate::reductions::{CnfFormula, SelectionInstance};

/// Parse failure for an instance file: either malformed JSON (with the line
/// and column from the parser) or a well-formed file violating an instance
/// invariant.
#[derive(Debug, thiserror::Error)]
pub enum InstanceParseError {
    #[error("line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] ValidationReport),
}

/// Parses and validates an instance from its JSON text form.
pub fn parse_instance(text: &str) -> Result<Instance, InstanceParseError> {
    let inst: Instance = serde_json::from_str(text).map_err(|e| InstanceParseError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    validate_instance(&inst)?;
    Ok(inst)
}

pub fn write_instance(inst: &Instance) -> String {
    serde_json::to_string_pretty(inst).expect("instance serialization cannot fail")
}

/// Parse failure for a DIMACS CNF file.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct CnfParseError {
    pub line: usize,
    pub message: String,
}

/// Parses a DIMACS-style CNF file: optional `c` comment lines, a
/// `p cnf <vars> <clauses>` header, then whitespace-separated literals with
/// each clause terminated by 0 (clauses may span lines).
pub fn parse_cnf(text: &str) -> Result<CnfFormula, CnfParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = 1;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(CnfParseError { line: lineno, message: "duplicate header".into() });
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["p", "cnf", v, m] => {
                    let vars = v.parse().map_err(|_| CnfParseError {
                        line: lineno,
                        message: format!("bad variable count `{v}`"),
                    })?;
                    let num_clauses = m.parse().map_err(|_| CnfParseError {
                        line: lineno,
                        message: format!("bad clause count `{m}`"),
                    })?;
                    header = Some((vars, num_clauses));
                }
                _ => {
                    return Err(CnfParseError {
                        line: lineno,
                        message: format!("malformed header `{line}`"),
                    })
                }
            }
            continue;
        }
        if header.is_none() {
            return Err(CnfParseError {
                line: lineno,
                message: "clause before `p cnf` header".into(),
            });
        }
        for token in line.split_whitespace() {
            let lit: i32 = token.parse().map_err(|_| CnfParseError {
                line: lineno,
                message: format!("bad literal `{token}`"),
            })?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    let Some((vars, expected)) = header else {
        return Err(CnfParseError { line: last_line, message: "missing `p cnf` header".into() });
    };
    if !current.is_empty() {
        return Err(CnfParseError {
            line: last_line,
            message: "last clause is not terminated by 0".into(),
        });
    }
    if clauses.len() != expected {
        return Err(CnfParseError {
            line: last_line,
            message: format!("header declares {expected} clauses, found {}", clauses.len()),
        });
    }
    CnfFormula::new(vars, clauses)
        .map_err(|e| CnfParseError { line: last_line, message: e.to_string() })
}

/// Parse failure for a selection-problem JSON file.
#[derive(Debug, thiserror::Error)]
pub enum SelectionParseError {
    #[error("line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] crate::error::Error),
}

#[derive(serde::Deserialize)]
struct SelectionFile {
    num_items: usize,
    q: usize,
    costs: Vec<Vec<u8>>,
}

/// Parses a selection instance from JSON:
/// `{"num_items": n, "q": q, "costs": [[0,1,...], ...]}`.
pub fn parse_selection(text: &str) -> Result<SelectionInstance, SelectionParseError> {
    let raw: SelectionFile =
        serde_json::from_str(text).map_err(|e| SelectionParseError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
    Ok(SelectionInstance::new(raw.num_items, raw.q, raw.costs)?)
}
