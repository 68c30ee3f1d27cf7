//! Primal uniqueness census over all `1 <= d <= n <= n_max`.
//!
//! Results persist as a CSV table (`n,d,bound,unique`) next to a JSON
//! document that carries the same rows plus references to per-pair witness
//! files. Each witness file holds one quasicode as `{"n","d","A"}`.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::delsarte::{primal_uniqueness, ProblemParams};
use crate::exact::Rational;
use crate::quasicode::Quasicode;

pub const CSV_FILE: &str = "census.csv";
pub const JSON_FILE: &str = "census.json";
pub const WITNESS_DIR: &str = "witnesses";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("n_max must be at least 1")]
    EmptyRange,
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("row {row}: {message}")]
    Row { row: usize, message: String },
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CensusError + '_ {
    move |source| CensusError::Io {
        path: path.to_path_buf(),
        source,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub d: usize,
    pub bound: Rational,
    pub unique: bool,
    /// Lexicographically ordered optimal-face endpoints when not unique.
    pub witnesses: Option<(Quasicode, Quasicode)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Census {
    pub rows: Vec<CensusRow>,
}

fn census_row(n: usize, d: usize) -> CensusRow {
    let p = ProblemParams::new(n, d).expect("d in 1..=n");
    let report = primal_uniqueness(&p);
    let unique = report.is_unique();
    let witnesses = match (report.witness_a, report.witness_b) {
        (Some(a), Some(b)) => {
            let wrap = |a| Quasicode::new(n, d, a).expect("optimal points are quasicodes");
            Some((wrap(a), wrap(b)))
        }
        _ => None,
    };
    CensusRow {
        n,
        d,
        bound: report.optimum_value,
        unique,
        witnesses,
    }
}

fn pairs(n_max: usize) -> Vec<(usize, usize)> {
    (1..=n_max).flat_map(|n| (1..=n).map(move |d| (n, d))).collect()
}

/// Runs the census on the global rayon pool. Rows are ordered by `(n, d)`.
pub fn scan_uniqueness(n_max: usize) -> Result<Census, CensusError> {
    if n_max < 1 {
        return Err(CensusError::EmptyRange);
    }
    let rows = pairs(n_max)
        .into_par_iter()
        .map(|(n, d)| census_row(n, d))
        .collect();
    Ok(Census { rows })
}

/// As [`scan_uniqueness`], on a dedicated pool of `jobs` threads
/// (`0` lets rayon choose).
pub fn scan_uniqueness_with_jobs(n_max: usize, jobs: usize) -> Result<Census, CensusError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CensusError::ThreadPool(e.to_string()))?;
    pool.install(|| scan_uniqueness(n_max))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRecord {
    pub n: usize,
    pub d: usize,
    pub bound: Rational,
    pub unique: bool,
}

#[derive(Deserialize)]
struct RawCsvRecord {
    n: usize,
    d: usize,
    bound: String,
    unique: bool,
}

/// JSON form of one census row; witness references are paths relative to
/// the census directory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRow {
    pub n: usize,
    pub d: usize,
    pub bound: Rational,
    pub unique: bool,
    #[serde(default)]
    pub witnesses: Option<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusDocument {
    pub format_version: u32,
    pub n_max: usize,
    pub non_unique: Vec<(usize, usize)>,
    pub rows: Vec<JsonRow>,
}

/// Files written by [`Census::persist`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Persisted {
    pub csv: PathBuf,
    pub json: PathBuf,
    pub witnesses: Vec<PathBuf>,
}

pub fn witness_paths(n: usize, d: usize) -> [String; 2] {
    ["a", "b"].map(|tag| format!("{WITNESS_DIR}/n{n}_d{d}_{tag}.json"))
}

impl Census {
    pub fn n_max(&self) -> usize {
        self.rows.iter().map(|r| r.n).max().unwrap_or(0)
    }

    pub fn non_unique(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .filter(|r| !r.unique)
            .map(|r| (r.n, r.d))
            .collect()
    }

    pub fn row(&self, n: usize, d: usize) -> Option<&CensusRow> {
        self.rows.iter().find(|r| r.n == n && r.d == d)
    }

    /// `"{(17,5),(21,5)}"`, or `"none"`.
    pub fn summary(&self) -> String {
        let pairs = self.non_unique();
        if pairs.is_empty() {
            return "none".to_string();
        }
        let inner: Vec<String> = pairs.iter().map(|(n, d)| format!("({n},{d})")).collect();
        format!("{{{}}}", inner.join(","))
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), CensusError> {
        let mut out = csv::Writer::from_writer(w);
        for r in &self.rows {
            out.serialize(CsvRecord {
                n: r.n,
                d: r.d,
                bound: r.bound.clone(),
                unique: r.unique,
            })?;
        }
        out.flush().map_err(|e| CensusError::Csv(e.into()))?;
        Ok(())
    }

    pub fn document(&self) -> CensusDocument {
        let rows = self
            .rows
            .iter()
            .map(|r| JsonRow {
                n: r.n,
                d: r.d,
                bound: r.bound.clone(),
                unique: r.unique,
                witnesses: r.witnesses.as_ref().map(|_| witness_paths(r.n, r.d)),
            })
            .collect();
        CensusDocument {
            format_version: FORMAT_VERSION,
            n_max: self.n_max(),
            non_unique: self.non_unique(),
            rows,
        }
    }

    /// Writes `census.csv`, `census.json` and the witness files into `dir`,
    /// creating it if needed.
    pub fn persist(&self, dir: &Path) -> Result<Persisted, CensusError> {
        let wdir = dir.join(WITNESS_DIR);
        fs::create_dir_all(&wdir).map_err(io_err(&wdir))?;

        let csv_path = dir.join(CSV_FILE);
        let file = fs::File::create(&csv_path).map_err(io_err(&csv_path))?;
        self.write_csv(io::BufWriter::new(file))?;

        let json_path = dir.join(JSON_FILE);
        let text = serde_json::to_string_pretty(&self.document())?;
        fs::write(&json_path, text + "\n").map_err(io_err(&json_path))?;

        let mut witnesses = Vec::new();
        for r in &self.rows {
            let Some((a, b)) = &r.witnesses else { continue };
            for (rel, q) in witness_paths(r.n, r.d).iter().zip([a, b]) {
                let path = dir.join(rel);
                let text = serde_json::to_string(q)?;
                fs::write(&path, text + "\n").map_err(io_err(&path))?;
                witnesses.push(path);
            }
        }
        Ok(Persisted {
            csv: csv_path,
            json: json_path,
            witnesses,
        })
    }
}

/// Parses a census CSV with header `n,d,bound,unique`. Bounds must be in
/// `p/q` form and every `(n, d)` must satisfy `1 <= d <= n`.
pub fn read_csv<R: Read>(r: R) -> Result<Vec<CsvRecord>, CensusError> {
    let mut reader = csv::Reader::from_reader(r);
    let header = reader.headers()?.clone();
    if header.iter().collect::<Vec<_>>() != ["n", "d", "bound", "unique"] {
        return Err(CensusError::Row {
            row: 0,
            message: format!("unexpected header {header:?}"),
        });
    }
    let mut out = Vec::new();
    for (idx, rec) in reader.deserialize::<RawCsvRecord>().enumerate() {
        let row = idx + 1;
        let raw = rec?;
        let bound = raw.bound.parse::<Rational>().map_err(|e| CensusError::Row {
            row,
            message: e.to_string(),
        })?;
        if raw.d < 1 || raw.d > raw.n {
            return Err(CensusError::Row {
                row,
                message: format!("bad pair ({}, {})", raw.n, raw.d),
            });
        }
        out.push(CsvRecord {
            n: raw.n,
            d: raw.d,
            bound,
            unique: raw.unique,
        });
    }
    Ok(out)
}

pub fn read_document(text: &str) -> Result<CensusDocument, CensusError> {
    Ok(serde_json::from_str(text)?)
}
