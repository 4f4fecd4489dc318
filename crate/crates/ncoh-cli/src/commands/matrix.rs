use ncoh::{d_matrix, pair_basis_graded, triple_basis_graded, FpMatrix, Prime};

use crate::args::{Format, MatrixArgs};
use crate::output::emit;
use crate::params::resolve_prime;
use crate::{Outcome, UsageError};

/// Row and column labels plus residue entries of one graded differential
/// matrix, optionally restricted to the rows with first index 1 or 2.
pub struct MatrixExport {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub entries: Vec<Vec<u32>>,
}

pub fn export(
    p: Prime,
    degree: u8,
    k: usize,
    rows_filter: Option<&str>,
) -> Result<MatrixExport, UsageError> {
    if degree != 1 && degree != 2 {
        return Err(UsageError(format!("--degree must be 1 or 2, got {degree}")));
    }
    let m = d_matrix(degree, p, Some(k));
    let (row_labels, keep): (Vec<String>, Vec<usize>) = match degree {
        1 => {
            let labels: Vec<String> = pair_basis_graded(p, k)
                .iter()
                .map(|(i, j)| format!("e^{{{i},{j}}}"))
                .collect();
            let keep = (0..labels.len()).collect();
            (labels, keep)
        }
        _ => {
            let triples = triple_basis_graded(p, k);
            let keep: Vec<usize> = match rows_filter {
                None => (0..triples.len()).collect(),
                Some("u1u2") => triples
                    .iter()
                    .enumerate()
                    .filter(|(_, &(u, _, _))| u == 1 || u == 2)
                    .map(|(idx, _)| idx)
                    .collect(),
                Some(other) => {
                    return Err(UsageError(format!(
                        "unknown --rows filter `{other}` (supported: u1u2)"
                    )))
                }
            };
            let labels = keep
                .iter()
                .map(|&idx| {
                    let (u, v, w) = triples[idx];
                    format!("e^{{{u},{v},{w}}}")
                })
                .collect();
            (labels, keep)
        }
    };
    let col_labels: Vec<String> = match degree {
        1 => vec![format!("e^{k}")],
        _ => pair_basis_graded(p, k)
            .iter()
            .map(|(i, j)| format!("e^{{{i},{j}}}"))
            .collect(),
    };
    let entries: Vec<Vec<u32>> = keep
        .iter()
        .map(|&r| (0..m.cols()).map(|c| m.get(r, c).value()).collect())
        .collect();
    Ok(MatrixExport {
        row_labels,
        col_labels,
        entries,
    })
}

pub fn to_csv(export: &MatrixExport) -> String {
    let mut writer = csv::WriterBuilder::new().from_writer(Vec::new());
    let mut header = vec![String::new()];
    header.extend(export.col_labels.iter().cloned());
    writer.write_record(&header).expect("in-memory write");
    for (label, row) in export.row_labels.iter().zip(&export.entries) {
        let mut record = vec![label.clone()];
        record.extend(row.iter().map(u32::to_string));
        writer.write_record(&record).expect("in-memory write");
    }
    let bytes = writer.into_inner().expect("in-memory flush");
    String::from_utf8(bytes).expect("csv is utf-8")
}

/// Parse a matrix CSV back into an export (used by round-trip tests).
pub fn from_csv(text: &str) -> Result<MatrixExport, UsageError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(text.as_bytes());
    let mut rows = reader.records();
    let header = rows
        .next()
        .ok_or_else(|| UsageError("empty CSV".into()))?
        .map_err(|e| UsageError(e.to_string()))?;
    let col_labels: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
    let mut row_labels = Vec::new();
    let mut entries = Vec::new();
    for record in rows {
        let record = record.map_err(|e| UsageError(e.to_string()))?;
        let mut fields = record.iter();
        row_labels.push(
            fields
                .next()
                .ok_or_else(|| UsageError("missing row label".into()))?
                .to_string(),
        );
        let row: Result<Vec<u32>, _> = fields.map(|f| f.parse::<u32>()).collect();
        entries.push(row.map_err(|e| UsageError(e.to_string()))?);
    }
    Ok(MatrixExport {
        row_labels,
        col_labels,
        entries,
    })
}

pub fn to_text(export: &MatrixExport) -> String {
    let label_width = export
        .row_labels
        .iter()
        .map(String::len)
        .max()
        .unwrap_or(0)
        .max(1);
    let col_width = export
        .col_labels
        .iter()
        .map(String::len)
        .max()
        .unwrap_or(1)
        .max(3);
    let mut out = String::new();
    out.push_str(&format!("{:label_width$}", ""));
    for c in &export.col_labels {
        out.push_str(&format!(" {c:>col_width$}"));
    }
    out.push('\n');
    for (label, row) in export.row_labels.iter().zip(&export.entries) {
        out.push_str(&format!("{label:label_width$}"));
        for e in row {
            out.push_str(&format!(" {e:>col_width$}"));
        }
        out.push('\n');
    }
    out.pop();
    out
}

/// Re-assemble the exported entries as a matrix for equality checks.
pub fn export_to_matrix(p: Prime, export: &MatrixExport) -> FpMatrix {
    let rows = export.entries.len();
    let cols = export.col_labels.len();
    let mut m = FpMatrix::zeros(p, rows, cols);
    for (r, row) in export.entries.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            m.set(r, c, ncoh::Fp::new(v as i64, p));
        }
    }
    m
}

pub fn run(args: &MatrixArgs) -> Result<Outcome, UsageError> {
    let p = resolve_prime(args.p)?;
    let export = export(p, args.degree, args.k, args.rows.as_deref())?;
    let rendered = match args.format {
        Format::Csv | Format::Json => to_csv(&export),
        Format::Text => to_text(&export),
    };
    emit(args.out.as_deref(), rendered.trim_end())?;
    Ok(Outcome::Ok)
}
