//! Sequence loading and environment plumbing.

use std::env::{self, VarError};
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clcs::{Sequence, DEFAULT_MEMORY_BUDGET};

/// Resolve one inline-or-file sequence source. clap's arg groups already
/// enforce that exactly one side is present.
pub fn load_source(name: &str, inline: Option<&str>, file: Option<&Path>) -> Result<Sequence> {
    match (inline, file) {
        (Some(text), None) => Ok(Sequence::from(text)),
        (None, Some(path)) => read_sequence_file(path)
            .with_context(|| format!("reading {name} from {}", path.display())),
        _ => bail!("{name}: provide the sequence inline or as a file, not both"),
    }
}

/// Read a sequence file: plain text with all whitespace stripped, or
/// FASTA-style where a single leading '>' header line is ignored.
/// Multi-record files (a second header, or a header after data) are
/// rejected.
fn read_sequence_file(path: &Path) -> Result<Sequence> {
    let raw = fs::read(path)?;
    let mut bytes = Vec::new();
    let mut seen_header = false;
    for line in raw.split(|&b| b == b'\n') {
        if line.first() == Some(&b'>') {
            if seen_header || !bytes.is_empty() {
                bail!("multi-record FASTA input is not supported");
            }
            seen_header = true;
            continue;
        }
        bytes.extend(line.iter().copied().filter(|b| !b.is_ascii_whitespace()));
    }
    Ok(Sequence::from(bytes))
}

/// The DP table budget in bytes: `CLCS_MEMORY_BUDGET` if set, else the
/// library default.
pub fn memory_budget() -> Result<usize> {
    match env::var("CLCS_MEMORY_BUDGET") {
        Ok(raw) => raw
            .trim()
            .parse()
            .with_context(|| format!("CLCS_MEMORY_BUDGET must be a byte count, got {raw:?}")),
        Err(VarError::NotPresent) => Ok(DEFAULT_MEMORY_BUDGET),
        Err(err) => Err(err).context("reading CLCS_MEMORY_BUDGET"),
    }
}

/// Parse an alphabet spec: a single size ("4") or an inclusive range
/// ("2-4") cycled per instance index.
pub fn parse_alphabet(spec: &str) -> Result<(u8, u8)> {
    let parsed = match spec.split_once('-') {
        Some((lo, hi)) => lo
            .trim()
            .parse()
            .and_then(|lo| hi.trim().parse().map(|hi| (lo, hi))),
        None => spec.trim().parse().map(|v| (v, v)),
    };
    match parsed {
        Ok((lo, hi)) if (2..=8).contains(&lo) && lo <= hi && hi <= 8 => Ok((lo, hi)),
        _ => bail!("alphabet must be N or LO-HI with 2 <= LO <= HI <= 8, got {spec:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn alphabet_specs() {
        assert_eq!(parse_alphabet("4").unwrap(), (4, 4));
        assert_eq!(parse_alphabet("2-4").unwrap(), (2, 4));
        assert_eq!(parse_alphabet(" 3 - 8 ").unwrap(), (3, 8));
        for bad in ["1", "9", "4-2", "2-9", "x", "", "2-4-6"] {
            assert!(parse_alphabet(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn plain_file_strips_whitespace() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, "ab c\n\tde \r\nf\n").unwrap();
        let seq = read_sequence_file(f.path()).unwrap();
        assert_eq!(seq.as_bytes(), b"abcdef");
    }

    #[test]
    fn fasta_header_is_ignored() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, ">record one\nabc\ndef\n").unwrap();
        let seq = read_sequence_file(f.path()).unwrap();
        assert_eq!(seq.as_bytes(), b"abcdef");
    }

    #[test]
    fn multi_record_fasta_is_rejected() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, ">one\nabc\n>two\ndef\n").unwrap();
        assert!(read_sequence_file(f.path()).is_err());

        let mut g = tempfile::NamedTempFile::new().unwrap();
        write!(g, "abc\n>late header\n").unwrap();
        assert!(read_sequence_file(g.path()).is_err());
    }
}
