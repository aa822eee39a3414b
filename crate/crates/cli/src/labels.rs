//! Reading label files: one label per line, or one column of a CSV file.

use std::fs::File;
use std::io::{self, Read};
use std::path::Path;

use pami_core::Labeling;

use crate::error::CliError;

/// Which field of each row holds the label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColumnSelector {
    Index(usize),
    Name(String),
}

impl ColumnSelector {
    pub fn parse(raw: &str) -> Self {
        match raw.parse() {
            Ok(index) => ColumnSelector::Index(index),
            Err(_) => ColumnSelector::Name(raw.to_string()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LabelFormat {
    pub column: ColumnSelector,
    pub header: bool,
}

impl Default for LabelFormat {
    fn default() -> Self {
        Self {
            column: ColumnSelector::Index(0),
            header: false,
        }
    }
}

/// Reads labels from `path` (`-` is stdin) and canonicalizes them.
pub fn read_labels(path: &Path, format: &LabelFormat) -> Result<Labeling, CliError> {
    let display = path.display().to_string();
    let mut text = String::new();
    let read = if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)
    } else {
        File::open(path).and_then(|mut f| f.read_to_string(&mut text))
    };
    read.map_err(|source| CliError::Io {
        path: display.clone(),
        source,
    })?;
    let raw = parse_labels(&text, format).map_err(|(line, message)| CliError::Parse {
        path: display.clone(),
        line,
        message,
    })?;
    Labeling::canonicalize(&raw).map_err(|_| CliError::Parse {
        path: display,
        line: 1,
        message: "file contains no labels".into(),
    })
}

fn split_fields(line: &str) -> Result<Vec<String>, String> {
    if !line.contains('"') {
        return Ok(line.split(',').map(str::to_string).collect());
    }
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(line.as_bytes());
    match reader.records().next() {
        Some(Ok(record)) => Ok(record.iter().map(str::to_string).collect()),
        Some(Err(e)) => Err(e.to_string()),
        None => Ok(Vec::new()),
    }
}

/// Parses label tokens, reporting failures as `(line, message)`. Every line
/// is a row; blank lines are missing labels.
pub fn parse_labels(text: &str, format: &LabelFormat) -> Result<Vec<String>, (u64, String)> {
    let needs_header = format.header || matches!(format.column, ColumnSelector::Name(_));
    let mut index = match format.column {
        ColumnSelector::Index(i) => Some(i),
        ColumnSelector::Name(_) => None,
    };
    let mut labels = Vec::new();
    for (row, raw_line) in text.lines().enumerate() {
        let line = (row + 1) as u64;
        let content = raw_line.trim_end_matches('\r');
        if content.trim().is_empty() {
            return Err((line, "missing label (blank line)".into()));
        }
        let fields = split_fields(content).map_err(|e| (line, e))?;
        if row == 0 && needs_header {
            if let ColumnSelector::Name(name) = &format.column {
                let pos = fields.iter().position(|field| field.trim() == name);
                index =
                    Some(pos.ok_or_else(|| (line, format!("no column named '{name}' in header")))?);
            }
            continue;
        }
        let column = index.expect("column resolved before data rows");
        let field = fields
            .get(column)
            .ok_or_else(|| (line, format!("row has no column {column}")))?
            .trim();
        if field.is_empty() {
            return Err((line, "missing label".into()));
        }
        labels.push(field.to_string());
    }
    if labels.is_empty() {
        return Err((1, "file contains no labels".into()));
    }
    Ok(labels)
}
