//! JSON documents read and written by the command line front end.
//!
//! Rationals are always strings (`"p"` or `"p/q"`), never floats. Object keys
//! serialize in sorted order, so identical inputs give identical bytes.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::findim::HighestWeight;
use crate::rational::{format_rational, parse_rational};
use crate::tableau::{shift_dim, Seed, Shift};

pub const SCHEMA_VERSION: u32 = 1;

/// `{"n": 3, "rows": [["0","1/3","2/3"], ["0","4/3"], ["0"]]}` with rows
/// listed from row `n` down to row 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedDocument {
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

impl SeedDocument {
    pub fn from_seed(seed: &Seed) -> Self {
        SeedDocument {
            n: seed.n(),
            rows: seed
                .rows_top_down()
                .map(|row| row.iter().map(format_rational).collect())
                .collect(),
        }
    }

    pub fn to_seed(&self) -> Result<Seed> {
        if self.rows.len() != self.n {
            return Err(Error::parse(format!(
                "seed declares n = {} but lists {} rows",
                self.n,
                self.rows.len()
            )));
        }
        let mut rows = Vec::with_capacity(self.n);
        for (idx, row) in self.rows.iter().enumerate() {
            let p = self.n - idx;
            if row.len() != p {
                return Err(Error::parse(format!(
                    "row {p} has {} entries, expected {p}",
                    row.len()
                )));
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(s, text)| {
                    parse_rational(text).map_err(|e| {
                        let reason = match e {
                            Error::Parse(msg) => msg,
                            other => other.to_string(),
                        };
                        Error::parse(format!("entry ({p},{}): {reason}", s + 1))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(parsed);
        }
        Seed::new(rows)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(format!("seed document: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// `{"lambda": [2, 1, 0]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightDocument {
    pub lambda: Vec<i64>,
}

impl WeightDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(format!("weight document: {e}")))
    }

    pub fn to_weight(&self) -> Result<HighestWeight> {
        HighestWeight::new(self.lambda.clone())
    }
}

/// Reads a seed from its canonical JSON.
pub fn parse_seed(text: &str) -> Result<Seed> {
    SeedDocument::parse(text)?.to_seed()
}

/// Hex SHA-256 of the canonical JSON of `seed`.
pub fn seed_digest(seed: &Seed) -> String {
    digest_hex(SeedDocument::from_seed(seed).to_json().as_bytes())
}

pub fn digest_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Parses `"1,0,-1"`, optionally wrapped in parentheses, into a shift for
/// `gl(n)`. An empty string (after trimming) is the zero shift.
pub fn parse_shift(n: usize, text: &str) -> Result<Shift> {
    let inner = text
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .trim();
    if inner.is_empty() {
        return Shift::new(n, vec![0; shift_dim(n)]).map_err(into_parse);
    }
    let coords = inner
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|_| Error::parse(format!("shift coordinate {c:?} is not an integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    Shift::new(n, coords)
}

fn into_parse(e: Error) -> Error {
    Error::parse(e.to_string())
}

/// Output envelope of every subcommand.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultDocument {
    pub schema_version: u32,
    pub command: Value,
    pub input_digest: String,
    pub payload: Value,
}

impl ResultDocument {
    pub fn new(command: Value, input_digest: String, payload: Value) -> Self {
        ResultDocument {
            schema_version: SCHEMA_VERSION,
            command,
            input_digest,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}
