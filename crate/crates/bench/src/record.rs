//! The benchmark CSV format.
//!
//! Columns, in order: `size_bits, algorithm, B, threads, rep, wall_seconds,
//! overhead_seconds, operand_seed`. One header row, UTF-8, LF line endings.
//! Appending to an existing non-empty file skips the header.

use std::fmt;
use std::fs::OpenOptions;
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "schoolbook")]
    Schoolbook,
    #[serde(rename = "toom-recursive")]
    ToomRecursive,
    #[serde(rename = "toom-wrapper")]
    ToomWrapper,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Schoolbook => "schoolbook",
            Algorithm::ToomRecursive => "toom-recursive",
            Algorithm::ToomWrapper => "toom-wrapper",
        })
    }
}

impl FromStr for Algorithm {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "schoolbook" => Ok(Algorithm::Schoolbook),
            "toom-recursive" | "recursive" => Ok(Algorithm::ToomRecursive),
            "toom-wrapper" | "wrapper" => Ok(Algorithm::ToomWrapper),
            other => Err(BenchError::Usage(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// One timed configuration at one operand size. `rep` is the number of
/// repetitions the median was taken over.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub size_bits: u64,
    pub algorithm: Algorithm,
    #[serde(rename = "B")]
    pub blocks: usize,
    pub threads: usize,
    pub rep: usize,
    pub wall_seconds: f64,
    pub overhead_seconds: f64,
    pub operand_seed: u64,
}

pub const HEADER: [&str; 8] = [
    "size_bits",
    "algorithm",
    "B",
    "threads",
    "rep",
    "wall_seconds",
    "overhead_seconds",
    "operand_seed",
];

pub fn write_records<W: Write>(out: W, records: &[BenchRecord], header: bool) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(header)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    if header && records.is_empty() {
        w.write_record(HEADER)?;
    }
    w.flush()?;
    Ok(())
}

/// Appends to `path`, writing the header only when the file is new or empty.
pub fn append_records(path: &Path, records: &[BenchRecord]) -> Result<()> {
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .read(true)
        .open(path)?;
    let empty = file.metadata()?.len() == 0;
    write_records(&mut file, records, empty)?;
    file.flush()?;
    Ok(())
}

pub fn read_records<R: Read>(input: R) -> Result<Vec<BenchRecord>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(input);
    let headers = rdr.headers()?.clone();
    if headers.iter().ne(HEADER.iter().copied()) {
        return Err(BenchError::Usage(format!(
            "unexpected CSV header {:?}",
            headers.iter().collect::<Vec<_>>()
        )));
    }
    rdr.deserialize()
        .map(|r| r.map_err(BenchError::from))
        .collect()
}

pub fn read_records_from(path: &Path) -> Result<Vec<BenchRecord>> {
    read_records(std::fs::File::open(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(size: u64) -> BenchRecord {
        BenchRecord {
            size_bits: size,
            algorithm: Algorithm::ToomRecursive,
            blocks: 16,
            threads: 1,
            rep: 3,
            wall_seconds: 0.25,
            overhead_seconds: 0.01,
            operand_seed: 42,
        }
    }

    #[test]
    fn header_and_order() {
        let mut buf = Vec::new();
        write_records(&mut buf, &[rec(65536)], true).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "size_bits,algorithm,B,threads,rep,wall_seconds,overhead_seconds,operand_seed\n\
             65536,toom-recursive,16,1,3,0.25,0.01,42\n"
        );
        assert_eq!(read_records(text.as_bytes()).unwrap(), vec![rec(65536)]);
    }

    #[test]
    fn wrong_header_rejected() {
        assert!(read_records("a,b\n1,2\n".as_bytes()).is_err());
    }

    #[test]
    fn algorithm_names() {
        for a in [
            Algorithm::Schoolbook,
            Algorithm::ToomRecursive,
            Algorithm::ToomWrapper,
        ] {
            assert_eq!(a.to_string().parse::<Algorithm>().unwrap(), a);
        }
    }
}
