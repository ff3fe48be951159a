//! CSV point-cloud format: a header row naming the objectives (optionally
//! preceded by an `id` column), one sample per row, finite decimal values.
//!
//! Filtering commands re-emit the original field strings, so kept rows are
//! byte-identical to the input.

use std::io::Write;
use std::path::Path;

use neim_core::ObjectiveVector;

use crate::error::CliError;

pub struct Cloud {
    headers: Vec<String>,
    has_id: bool,
    rows: Vec<Vec<String>>,
    points: Vec<ObjectiveVector>,
}

impl Cloud {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_path(path)
            .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        let headers: Vec<String> = reader
            .headers()
            .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?
            .iter()
            .map(str::to_owned)
            .collect();
        if headers.is_empty() {
            return Err(CliError::Data(format!(
                "{}: missing header row",
                path.display()
            )));
        }
        let has_id = headers[0].eq_ignore_ascii_case("id");
        let first_value_column = usize::from(has_id);
        let dim = headers.len() - first_value_column;
        if dim < 2 {
            return Err(CliError::Data(format!(
                "{}: need at least two objective columns, found {dim}",
                path.display()
            )));
        }

        let mut rows = Vec::new();
        let mut points = Vec::new();
        for (line, record) in reader.records().enumerate() {
            let record = record.map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
            let fields: Vec<String> = record.iter().map(str::to_owned).collect();
            let mut values = Vec::with_capacity(dim);
            for field in &fields[first_value_column..] {
                let value: f64 = field.parse().map_err(|_| {
                    CliError::Data(format!(
                        "{}: row {}: cannot parse '{field}' as a number",
                        path.display(),
                        line + 2
                    ))
                })?;
                if !value.is_finite() {
                    return Err(CliError::Data(format!(
                        "{}: row {}: non-finite value '{field}'",
                        path.display(),
                        line + 2
                    )));
                }
                values.push(value);
            }
            points.push(ObjectiveVector::new(values)?);
            rows.push(fields);
        }

        Ok(Self {
            headers,
            has_id,
            rows,
            points,
        })
    }

    pub fn dim(&self) -> usize {
        self.headers.len() - usize::from(self.has_id)
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ObjectiveVector] {
        &self.points
    }

    pub fn ids(&self) -> Option<Vec<String>> {
        self.has_id
            .then(|| self.rows.iter().map(|r| r[0].clone()).collect())
    }

    /// Write the header and the selected rows, preserving field text.
    pub fn write_subset<W: Write>(&self, indices: &[usize], out: W) -> Result<(), CliError> {
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record(&self.headers)?;
        for &idx in indices {
            writer.write_record(&self.rows[idx])?;
        }
        writer.flush()?;
        Ok(())
    }
}
