use clap::ValueEnum;
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

fn render_err(e: impl std::fmt::Display) -> CliError {
    CliError::Render(e.to_string())
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(render_err)?;
    s.push('\n');
    Ok(s)
}

pub fn csv<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(render_err)?;
    }
    let bytes = w.into_inner().map_err(render_err)?;
    String::from_utf8(bytes).map_err(render_err)
}

/// Columns aligned on the CSV rendering, so both carry the same cells.
pub fn table<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    if rows.is_empty() {
        return Ok("(no rows)\n".into());
    }
    let text = csv(rows)?;
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(text.as_bytes());
    let mut cells: Vec<Vec<String>> = Vec::new();
    for rec in r.records() {
        cells.push(rec.map_err(render_err)?.iter().map(str::to_string).collect());
    }
    let cols = cells[0].len();
    let width: Vec<usize> = (0..cols)
        .map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
        .collect();
    let line = |row: &[String]| {
        let mut s = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 == cols {
                s.push_str(cell);
            } else {
                s.push_str(cell);
                s.push_str(&" ".repeat(width[c] - cell.chars().count() + 2));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(&cells[0]);
    let rule: Vec<String> = width.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&line(&rule));
    for row in &cells[1..] {
        out.push_str(&line(row));
    }
    Ok(out)
}

pub fn rows<T: Serialize>(rows: &[T], format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => json(rows),
        Format::Csv => csv(rows),
        Format::Table => table(rows),
    }
}
