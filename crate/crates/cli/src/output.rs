use std::io::{self, Write};

use cayley_core::enumeration::prufer_encode;
use cayley_core::text::{format_edge_list, format_prufer};
use cayley_core::LabeledTree;
use serde::Serialize;

use crate::args::TreeFormat;

/// One tree as a JSON record.
#[derive(Debug, Serialize)]
pub struct TreeRecord<'a> {
    pub n: usize,
    pub prufer: Vec<usize>,
    pub edges: &'a [(usize, usize)],
}

#[derive(Debug, Serialize)]
struct CsvRow {
    n: usize,
    prufer: String,
    edges: String,
}

fn prufer_symbols(t: &LabeledTree) -> Vec<usize> {
    match prufer_encode(t) {
        Ok(s) => s.symbols().to_vec(),
        Err(_) => Vec::new(),
    }
}

fn prufer_text(t: &LabeledTree) -> String {
    prufer_encode(t)
        .map(|s| format_prufer(&s))
        .unwrap_or_default()
}

/// Writes a stream of trees in one of the tree formats. JSON is one record
/// per line.
pub enum TreeSink<W: Write> {
    Text {
        out: W,
        format: TreeFormat,
        written: u64,
    },
    Csv {
        out: Box<csv::Writer<W>>,
        written: u64,
    },
}

impl<W: Write> TreeSink<W> {
    pub fn new(out: W, format: TreeFormat) -> Self {
        match format {
            TreeFormat::Csv => TreeSink::Csv {
                out: Box::new(csv::Writer::from_writer(out)),
                written: 0,
            },
            _ => TreeSink::Text {
                out,
                format,
                written: 0,
            },
        }
    }

    pub fn write(&mut self, t: &LabeledTree) -> io::Result<()> {
        match self {
            TreeSink::Text {
                out,
                format,
                written,
            } => {
                *written += 1;
                match format {
                    TreeFormat::Edges => out.write_all(format_edge_list(t).as_bytes()),
                    TreeFormat::Prufer => writeln!(out, "{}", prufer_text(t)),
                    TreeFormat::Json => {
                        let rec = TreeRecord {
                            n: t.n(),
                            prufer: prufer_symbols(t),
                            edges: t.edges(),
                        };
                        serde_json::to_writer(&mut *out, &rec)?;
                        writeln!(out)
                    }
                    TreeFormat::Csv => unreachable!("csv uses its own writer"),
                }
            }
            TreeSink::Csv { out, written } => {
                *written += 1;
                let edges: Vec<String> =
                    t.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                let row = CsvRow {
                    n: t.n(),
                    prufer: prufer_text(t),
                    edges: edges.join(" "),
                };
                out.serialize(row).map_err(csv_to_io)
            }
        }
    }

    /// Flushes, optionally closing with the number of trees written.
    pub fn finish(self, with_count: bool) -> io::Result<()> {
        match self {
            TreeSink::Text {
                mut out,
                format,
                written,
            } => {
                if with_count {
                    match format {
                        TreeFormat::Json => writeln!(out, "{{\"count\":{written}}}")?,
                        _ => writeln!(out, "count {written}")?,
                    }
                }
                out.flush()
            }
            TreeSink::Csv { mut out, .. } => out.flush(),
        }
    }
}

fn csv_to_io(e: csv::Error) -> io::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => e,
        other => io::Error::other(format!("{other:?}")),
    }
}
