//! Line-oriented golden file for census tables.
//!
//! One record per length, sorted by `n`:
//!
//! ```text
//! n fb_words fb_classes f_pairs k:count k:count ...
//! ```
//!
//! where the `k:count` items are the unbordered-conjugate histogram sorted by `k`.

use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use super::CensusRow;

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("golden file {0} does not exist; rerun with bless to create it")]
    Missing(String),
    #[error(
        "census drifted from golden file at line {line}: expected {expected:?}, got {actual:?}"
    )]
    Drift {
        line: usize,
        expected: String,
        actual: String,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoldenStatus {
    Blessed,
    Matched,
}

pub fn render_row(row: &CensusRow) -> String {
    let mut line = format!(
        "{} {} {} {}",
        row.n, row.fb_words, row.fb_classes, row.f_pairs
    );
    for (k, v) in &row.unbordered_histogram {
        line.push_str(&format!(" {k}:{v}"));
    }
    line
}

pub fn render(rows: &[CensusRow]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&render_row(row));
        out.push('\n');
    }
    out
}

/// Writes `rendered` to `path` when `bless` is set, otherwise compares it
/// byte for byte against the file.
pub fn check_or_bless(
    path: &Path,
    rendered: &str,
    bless: bool,
) -> Result<GoldenStatus, GoldenError> {
    if bless {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        fs::write(path, rendered)?;
        return Ok(GoldenStatus::Blessed);
    }
    let expected = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) if e.kind() == io::ErrorKind::NotFound => {
            return Err(GoldenError::Missing(path.display().to_string()))
        }
        Err(e) => return Err(e.into()),
    };
    if expected == rendered {
        return Ok(GoldenStatus::Matched);
    }
    let mut exp = expected.lines();
    let mut act = rendered.lines();
    let mut line = 1;
    loop {
        match (exp.next(), act.next()) {
            (Some(a), Some(b)) if a == b => line += 1,
            (a, b) => {
                return Err(GoldenError::Drift {
                    line,
                    expected: a.unwrap_or("<eof>").to_string(),
                    actual: b.unwrap_or("<eof>").to_string(),
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn row(n: usize) -> CensusRow {
        CensusRow {
            n,
            fb_words: 2,
            fb_classes: 1,
            f_pairs: 2,
            unbordered_histogram: BTreeMap::from([(0, 2), (2, 2)]),
        }
    }

    #[test]
    fn render_format() {
        assert_eq!(render(&[row(2)]), "2 2 1 2 0:2 2:2\n");
    }

    #[test]
    fn bless_then_match_then_drift() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sub/census.txt");
        assert!(matches!(
            check_or_bless(&path, "a\n", false),
            Err(GoldenError::Missing(_))
        ));
        assert_eq!(
            check_or_bless(&path, "a\nb\n", true).unwrap(),
            GoldenStatus::Blessed
        );
        assert_eq!(
            check_or_bless(&path, "a\nb\n", false).unwrap(),
            GoldenStatus::Matched
        );
        match check_or_bless(&path, "a\nc\n", false) {
            Err(GoldenError::Drift { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            check_or_bless(&path, "a\n", false),
            Err(GoldenError::Drift { line: 2, .. })
        ));
    }
}
