use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::{CliError, CliResult, Format, OutputArgs};

pub fn sink(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn write_json<T: Serialize>(w: &mut dyn Write, value: &T) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *w, value).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

pub fn write_csv(w: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> CliResult<()> {
    let io = |e: csv::Error| CliError::Io(e.to_string());
    let mut out = csv::Writer::from_writer(w);
    out.write_record(header).map_err(io)?;
    for r in rows {
        out.write_record(r).map_err(io)?;
    }
    out.flush()?;
    Ok(())
}

/// Writes either the CSV table or the JSON value, per `--format`.
pub fn emit<T: Serialize>(args: &OutputArgs, header: &[&str], rows: &[Vec<String>], json: &T) -> CliResult<()> {
    let mut w = sink(args.out.as_deref())?;
    match args.format {
        Format::Csv => write_csv(&mut *w, header, rows),
        Format::Json => write_json(&mut *w, json),
    }
}
