//! OEIS b-file text format: one `n value` pair per line, ascending and
//! contiguous. Lines starting with `#` and blank lines are skipped on read.

use std::fs;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use num_bigint::BigInt;

use super::TermStore;
use crate::error::{Error, Result};

pub fn write_bfile<W: Write>(store: &TermStore, mut out: W) -> Result<()> {
    if store.is_empty() {
        return Err(Error::BFile {
            line: 0,
            reason: format!("refusing to write empty table `{}`", store.name()),
        });
    }
    for (n, z) in store.iter() {
        writeln!(out, "{n} {z}")?;
    }
    Ok(())
}

pub fn read_bfile<R: Read>(name: &str, input: R) -> Result<TermStore> {
    let mut first: Option<u64> = None;
    let mut terms = Vec::new();
    for (i, line) in BufReader::new(input).lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = |reason: String| Error::BFile {
            line: line_no,
            reason,
        };
        let mut fields = trimmed.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed(format!("expected `n value`, got `{trimmed}`")));
        };
        let idx: u64 = idx
            .parse()
            .map_err(|_| malformed(format!("bad index `{idx}`")))?;
        let val: BigInt = val
            .parse()
            .map_err(|_| malformed(format!("bad value `{val}`")))?;
        match first {
            None => first = Some(idx),
            Some(f) => {
                let expected = f + terms.len() as u64;
                if idx != expected {
                    return Err(malformed(format!(
                        "gap in indices: expected {expected}, found {idx}"
                    )));
                }
            }
        }
        terms.push(val);
    }
    let first = first.ok_or(Error::BFile {
        line: 0,
        reason: "no terms".into(),
    })?;
    Ok(TermStore::new(name, first, terms))
}

pub fn write_bfile_path(store: &TermStore, path: &Path) -> Result<()> {
    let mut buf = Vec::new();
    write_bfile(store, &mut buf)?;
    fs::write(path, buf)?;
    Ok(())
}

/// Read a b-file, naming the table after the file stem.
pub fn read_bfile_path(path: &Path) -> Result<TermStore> {
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "bfile".into());
    read_bfile(&name, fs::File::open(path)?)
}
