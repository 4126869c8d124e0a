//! Table rendering: CSV, JSON and markdown.

use blockfree_core::{TableKind, TableRow};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Markdown,
}

#[derive(Serialize)]
struct JsonRow {
    n: u64,
    exact: f64,
    approx: f64,
    rel_error: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    error_term: Option<f64>,
}

pub fn render(kind: TableKind, rows: &[TableRow], format: Format) -> String {
    match format {
        Format::Csv => csv(kind, rows),
        Format::Json => json(rows),
        Format::Markdown => markdown(kind, rows),
    }
}

fn csv(kind: TableKind, rows: &[TableRow]) -> String {
    let mut out = kind.headers().join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.cells(kind).join(","));
        out.push('\n');
    }
    out
}

fn json(rows: &[TableRow]) -> String {
    let rows: Vec<JsonRow> = rows
        .iter()
        .map(|r| JsonRow {
            n: r.n,
            exact: r.exact_ratio,
            approx: r.approximation,
            rel_error: r.relative_error,
            error_term: r.extra,
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
    s.push('\n');
    s
}

fn markdown(kind: TableKind, rows: &[TableRow]) -> String {
    let headers = kind.headers();
    let mut out = format!("{}\n\n| {} |\n", kind.title(), headers.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(headers.len())));
    for row in rows {
        out.push_str(&format!("| {} |\n", row.cells(kind).join(" | ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row() -> TableRow {
        TableRow {
            n: 4,
            exact_ratio: 1.0 / 15.0,
            approximation: 0.1459,
            relative_error: 1.18856,
            extra: Some(1.45751),
        }
    }

    #[test]
    fn csv_layout() {
        let s = render(TableKind::NoSmallBlocks, &[row()], Format::Csv);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(
            lines[0],
            "n,B_{n,2}/B_n,exp(-r-r^2/2),rel_error,(1+r)^2 e^{-r}"
        );
        assert_eq!(lines[1], "4,6.667e-2,1.459e-1,1.1886,1.4575");
    }

    #[test]
    fn json_keys() {
        let s = render(TableKind::NoSmallBlocks, &[row()], Format::Json);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        let obj = v[0].as_object().unwrap();
        for k in ["n", "exact", "approx", "rel_error", "error_term"] {
            assert!(obj.contains_key(k), "{k}");
        }
        let mut r = row();
        r.extra = None;
        let s = render(TableKind::NoSingletons, &[r], Format::Json);
        assert!(!s.contains("error_term"));
    }

    #[test]
    fn markdown_layout() {
        let s = render(TableKind::NoSingletons, &[row()], Format::Markdown);
        assert!(s.contains("| n | B_{n,1}/B_n | exp(-r) | rel_error |"));
        assert!(s.contains("|---|---|---|---|"));
    }
}
