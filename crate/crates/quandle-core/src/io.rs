use crate::error::QuandleError;
use crate::table::QuandleTable;
use serde::{Deserialize, Serialize};

/// Text format: line 1 is n, lines 2..n+1 are the table rows
/// (row x lists x*y for y = 0..n-1, space separated).
pub fn parse_text(text: &str) -> Result<QuandleTable, QuandleError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, first) = lines.next().ok_or(QuandleError::Parse {
        line: 1,
        message: "empty input".into(),
    })?;
    let n: usize = first.parse().map_err(|_| QuandleError::Parse {
        line: line_no + 1,
        message: format!("expected element count, got {first:?}"),
    })?;
    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let (line_no, row) = lines.next().ok_or(QuandleError::Parse {
            line: line_no + 1,
            message: format!("expected {n} table rows"),
        })?;
        let parsed: Result<Vec<usize>, _> = row.split_whitespace().map(str::parse).collect();
        table.push(parsed.map_err(|_| QuandleError::Parse {
            line: line_no + 1,
            message: format!("bad row {row:?}"),
        })?);
    }
    QuandleTable::build(n, table)
}

pub fn to_text(q: &QuandleTable) -> String {
    let mut out = format!("{}\n", q.order());
    for row in q.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct QuandleJson {
    n: usize,
    op: Vec<Vec<usize>>,
}

pub fn parse_json(text: &str) -> Result<QuandleTable, QuandleError> {
    let parsed: QuandleJson = serde_json::from_str(text).map_err(|e| QuandleError::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    QuandleTable::build(parsed.n, parsed.op)
}

pub fn to_json(q: &QuandleTable) -> String {
    serde_json::to_string_pretty(&QuandleJson {
        n: q.order(),
        op: q.rows().to_vec(),
    })
    .expect("serializable")
}
