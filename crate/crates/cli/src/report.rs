use serde_json::{Map, Value};

use crate::{CliError, Format, SCHEMA_VERSION};

/// Output of one command, rendered on demand into any format.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub manifold: String,
    pub ok: bool,
    /// Command-specific JSON fields, placed after the common header fields.
    pub data: Map<String, Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Lines printed under the table.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, manifold: String, columns: Vec<&'static str>) -> Self {
        Self {
            command,
            manifold,
            ok: true,
            data: Map::new(),
            columns,
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) {
        self.data.insert(key.to_string(), value.into());
    }

    pub fn json(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema".into(), SCHEMA_VERSION.into());
        m.insert("command".into(), self.command.into());
        m.insert("manifold".into(), self.manifold.clone().into());
        m.insert("ok".into(), self.ok.into());
        for (k, v) in &self.data {
            m.insert(k.clone(), v.clone());
        }
        Value::Object(m)
    }

    pub fn render(&self, format: Format) -> Result<Vec<u8>, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json()).map_err(|e| CliError::Usage(e.to_string()))?;
                s.push('\n');
                Ok(s.into_bytes())
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let header: Vec<&str> = std::iter::once("manifold").chain(self.columns.iter().copied()).collect();
                w.write_record(&header).map_err(csv_error)?;
                for row in &self.rows {
                    w.write_record(std::iter::once(self.manifold.as_str()).chain(row.iter().map(String::as_str)))
                        .map_err(csv_error)?;
                }
                w.into_inner().map_err(|e| CliError::Io(e.into_error()))
            }
            Format::Table => Ok(self.table().into_bytes()),
        }
    }

    fn table(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &mut dyn Iterator<Item = &str>| {
            let padded: Vec<String> = cells
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = format!("{} {}\n", self.command, self.manifold);
        if !self.rows.is_empty() {
            out += &line(&mut self.columns.iter().copied());
            out.push('\n');
            for row in &self.rows {
                out += &line(&mut row.iter().map(String::as_str));
                out.push('\n');
            }
        }
        for n in &self.notes {
            out += n;
            out.push('\n');
        }
        out += if self.ok { "PASS\n" } else { "FAIL\n" };
        out
    }
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Usage(format!("csv: {e}"))
}
