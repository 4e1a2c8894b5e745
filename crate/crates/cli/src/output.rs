use serde_json::{json, Value};

use crate::config::Format;

/// A command's result in every output format, plus its exit code.
pub struct Outcome {
    /// Effective configuration, echoed into every format.
    pub config: Value,
    pub result: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Text shown above the table in pretty mode.
    pub summary: String,
    pub code: u8,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let doc = json!({ "config": self.config, "result": self.result });
                let mut s = serde_json::to_string_pretty(&doc).expect("json value serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut out = format!("# config: {}\n", self.config);
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory write");
                for row in &self.rows {
                    w.write_record(row).expect("in-memory write");
                }
                out.push_str(&String::from_utf8(w.into_inner().expect("flush")).expect("utf-8 input"));
                out
            }
            Format::Pretty => {
                let mut out = format!("config: {}\n", self.config);
                if !self.summary.is_empty() {
                    out.push('\n');
                    out.push_str(&self.summary);
                    if !self.summary.ends_with('\n') {
                        out.push('\n');
                    }
                }
                if !self.rows.is_empty() {
                    out.push('\n');
                    out.push_str(&table(&self.header, &self.rows));
                }
                out
            }
        }
    }
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&line(rule.iter().map(String::as_str).collect()));
    for row in rows {
        out.push_str(&line(row.iter().map(|s| s.as_str()).collect()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Outcome {
        Outcome {
            config: json!({ "command": "x" }),
            result: json!({ "a": 1 }),
            header: vec!["id", "value"],
            rows: vec![vec!["one".into(), "1,5".into()]],
            summary: "done".into(),
            code: 0,
        }
    }

    #[test]
    fn formats() {
        let o = sample();
        let json: Value = serde_json::from_str(&o.render(Format::Json)).unwrap();
        assert_eq!(json["result"]["a"], 1);
        assert_eq!(json["config"]["command"], "x");
        let csv = o.render(Format::Csv);
        assert!(csv.starts_with("# config: "));
        assert!(csv.contains("one,\"1,5\""));
        let pretty = o.render(Format::Pretty);
        assert!(pretty.contains("id   value"));
        assert!(pretty.contains("done"));
    }
}
