use std::fs::File;
use std::io::{self, BufWriter, Write};

use anyhow::Context;
use serde::Serialize;

use crate::{Common, Format};

fn writer(common: &Common) -> anyhow::Result<Box<dyn Write>> {
    Ok(match &common.out {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
            Box::new(BufWriter::new(file))
        }
        None => Box::new(io::stdout().lock()),
    })
}

/// A report with a JSON form and a fixed CSV table.
pub struct Report<'a, T: Serialize> {
    pub json: &'a T,
    pub header: &'a [&'a str],
    pub rows: Vec<Vec<String>>,
}

pub fn emit<T: Serialize>(common: &Common, report: Report<'_, T>) -> anyhow::Result<()> {
    let mut out = writer(common)?;
    match common.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, report.json)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(&mut out);
            csv.write_record(report.header)?;
            for row in &report.rows {
                csv.write_record(row)?;
            }
            csv.flush()?;
        }
    }
    out.flush()?;
    Ok(())
}
