//! The classic Normaliz matrix input format.
//!
//! ```text
//! <rows>
//! <cols>
//! <row 1, space separated>
//! ...
//! integral_closure
//! ```
//!
//! Rows are written in lexicographic order with LF line endings and a
//! trailing newline.

use crate::error::{Error, Result};
use crate::polymatroid::{BaseSet, LatticePoint};

pub const MODE_KEYWORD: &str = "integral_closure";

pub fn emit(base: &BaseSet) -> String {
    let mut rows: Vec<&LatticePoint> = base.points.iter().collect();
    rows.sort();
    let mut out = format!("{}\n{}\n", rows.len(), base.n());
    for r in rows {
        let line: Vec<String> = r.coords().iter().map(i64::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out.push_str(MODE_KEYWORD);
    out.push('\n');
    out
}

/// Parses a file produced by [`emit`] back into its rows.
pub fn parse(text: &str) -> Result<Vec<LatticePoint>> {
    let mut lines = text.lines();
    let mut header = |what: &str| -> Result<usize> {
        lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing {what}")))?
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("bad {what}: {e}")))
    };
    let rows = header("row count")?;
    let cols = header("column count")?;
    let mut points = Vec::with_capacity(rows);
    for k in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {rows} rows, found {k}")))?;
        let coords = line
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if coords.len() != cols {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {cols}",
                k + 1,
                coords.len()
            )));
        }
        points.push(LatticePoint::new(coords)?);
    }
    match lines.next().map(str::trim) {
        Some(MODE_KEYWORD) => {}
        other => {
            return Err(Error::Parse(format!(
                "expected `{MODE_KEYWORD}`, found {other:?}"
            )))
        }
    }
    if lines.any(|l| !l.trim().is_empty()) {
        return Err(Error::Parse("trailing content after mode keyword".into()));
    }
    Ok(points)
}
