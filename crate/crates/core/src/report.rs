//! Serializable verdict records, written as CSV or JSON. Rationals are
//! always exact strings (`"15/2"`), never decimals.

use std::io::Write;

use serde::Serialize;

use crate::dynamics::{HomomesyVerdict, Outcome, Witness};
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub representative: String,
    pub size: u64,
    pub average: String,
}

impl From<&Witness> for WitnessRecord {
    fn from(w: &Witness) -> Self {
        WitnessRecord {
            representative: w.representative.to_string(),
            size: w.size,
            average: w.average.to_string(),
        }
    }
}

/// One verdict at one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictRecord {
    pub map: String,
    pub stat: String,
    pub n: usize,
    pub outcome: String,
    pub constant: String,
    pub global_average: String,
    pub expected: String,
    pub witnesses: Vec<WitnessRecord>,
    pub status: String,
}

impl VerdictRecord {
    pub fn new(v: &HomomesyVerdict, expected: Option<Rational>, ok: bool) -> Self {
        let (outcome, constant) = match &v.outcome {
            Outcome::Homomesic(c) => ("homomesic", c.to_string()),
            Outcome::Violated { .. } => ("violated", String::new()),
        };
        VerdictRecord {
            map: v.map.to_string(),
            stat: v.stat.clone(),
            n: v.n,
            outcome: outcome.into(),
            constant,
            global_average: v.global_average.to_string(),
            expected: expected.map(|e| e.to_string()).unwrap_or_default(),
            witnesses: v.witnesses().iter().map(WitnessRecord::from).collect(),
            status: if ok { "ok" } else { "mismatch" }.into(),
        }
    }

    fn witness_field(&self) -> String {
        self.witnesses
            .iter()
            .map(|w| format!("{}:{}:{}", w.representative, w.size, w.average))
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// One (map, statistic) pair summarized over a degree range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub map: String,
    pub stat: String,
    pub outcome: String,
    /// Closed form from the table of known results, if the pair is listed.
    pub formula: String,
    pub n_range: String,
    /// Space-separated constants per degree; `-` where violated.
    pub constants: String,
    pub first_violation: String,
    pub matches_table: String,
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

pub fn write_verdicts(
    records: &[VerdictRecord],
    format: Format,
    out: &mut dyn Write,
) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, records)
                .map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "map",
                "stat",
                "n",
                "outcome",
                "constant",
                "global_average",
                "expected",
                "witnesses",
                "status",
            ])
            .map_err(csv_err)?;
            for r in records {
                w.write_record([
                    r.map.as_str(),
                    &r.stat,
                    &r.n.to_string(),
                    &r.outcome,
                    &r.constant,
                    &r.global_average,
                    &r.expected,
                    &r.witness_field(),
                    &r.status,
                ])
                .map_err(csv_err)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn write_scan(records: &[ScanRecord], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, records)
                .map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(r).map_err(csv_err)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so a failed run never leaves a partial file behind.
pub fn write_atomically(
    path: &std::path::Path,
    contents: impl FnOnce(&mut dyn Write) -> Result<()>,
) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => std::path::Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    {
        let mut buf = std::io::BufWriter::new(tmp.as_file_mut());
        contents(&mut buf)?;
        buf.flush()?;
    }
    tmp.persist(path).map_err(|e| Error::Io(e.to_string()))?;
    Ok(())
}
