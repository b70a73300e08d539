use super::SurfaceSample;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Csv,
    Json,
}

fn sci(v: f64) -> String {
    // 17 significant digits
    format!("{v:.16e}")
}

/// Writes `x1..xn,level_residual` rows or the JSON document.
pub fn export_sample(sample: &SurfaceSample, format: ExportFormat, path: &Path) -> Result<()> {
    let file = File::create(path)?;
    match format {
        ExportFormat::Csv => {
            let mut w = csv::Writer::from_writer(file);
            let n = sample.dim();
            let mut header: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
            header.push("level_residual".into());
            w.write_record(&header).map_err(csv_err)?;
            for (p, r) in sample.points.iter().zip(&sample.residuals) {
                let row: Vec<String> = p.iter().chain(std::iter::once(r)).map(|v| sci(*v)).collect();
                w.write_record(&row).map_err(csv_err)?;
            }
            w.flush()?;
        }
        ExportFormat::Json => {
            let mut w = BufWriter::new(file);
            serde_json::to_writer_pretty(&mut w, sample).map_err(|e| Error::Schema(e.to_string()))?;
            w.write_all(b"\n")?;
            w.flush()?;
        }
    }
    Ok(())
}

pub fn read_json_sample(path: &Path) -> Result<SurfaceSample> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Schema(e.to_string()))
}

fn csv_err(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Schema(format!("{other:?}")),
    }
}
