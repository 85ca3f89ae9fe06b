use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use sl12_core::presentations::{RelationReport, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// One line of the CSV output.
#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub suite: String,
    pub case: String,
    pub params: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Row {
    pub fn compare(suite: &str, case: &str, what: &str, expected: impl ToString, computed: impl ToString) -> Row {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        Row { suite: suite.into(), case: case.into(), params: what.into(), pass: expected == computed, expected, computed }
    }

    pub fn from_relations(r: &RelationReport) -> Vec<Row> {
        r.entries
            .iter()
            .map(|e| {
                let params = if e.params.is_empty() { e.relation.clone() } else { format!("{} [{}]", e.relation, e.params) };
                let (expected, computed) = match &e.witness {
                    None => ("holds".to_string(), "holds".to_string()),
                    Some(Witness::Mismatch { expected, found }) => (expected.clone(), found.clone()),
                    Some(Witness::Vector(v)) => ("0".to_string(), format!("nonzero vector with {} terms", v.len())),
                };
                Row { suite: r.suite.clone(), case: r.case.clone(), params, expected, computed, pass: e.pass }
            })
            .collect()
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    /// Computed quantities: dimensions, characters, decompositions.
    pub data: BTreeMap<String, Value>,
    pub checks: Vec<Row>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report { command: command.into(), ..Report::default() }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.into(), value.to_string());
    }

    pub fn data(&mut self, key: &str, value: impl Serialize) {
        self.data.insert(key.into(), serde_json::to_value(value).expect("report data serializes"));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn summary(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.pass).count();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        format!("{status} {ok}/{}", self.checks.len())
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
            Format::Table => self.render_table(),
        }
    }

    fn render_json(&self) -> String {
        // Going through `Value` sorts every object's keys.
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["summary"] = Value::String(self.summary());
        let mut s = serde_json::to_string_pretty(&v).expect("json renders");
        s.push('\n');
        s
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        if self.checks.is_empty() {
            w.write_record(["suite", "case", "params", "expected", "computed", "pass"]).expect("csv writes to memory");
        }
        for row in &self.checks {
            w.serialize(row).expect("csv writes to memory");
        }
        String::from_utf8(w.into_inner().expect("csv flushes")).expect("csv is utf-8")
    }

    fn render_table(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for (k, v) in &self.params {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        for (k, v) in &self.data {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {shown}\n"));
        }
        let failures: Vec<&Row> = self.checks.iter().filter(|c| !c.pass).collect();
        for f in &failures {
            out.push_str(&format!(
                "FAILED {} | {} | {}: expected {}, computed {}\n",
                f.suite, f.case, f.params, f.expected, f.computed
            ));
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }
}

/// Writes through a temporary file in the target directory, so the target
/// either keeps its old contents or receives the complete new ones.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("weyl");
        r.param("lambda2", 2);
        r.param("lambda1", "1/2");
        r.data("dim", 16);
        r.checks.push(Row::compare("weyl", "W(1/2, 2)", "dim", 16, 16));
        r
    }

    #[test]
    fn json_keys_are_sorted() {
        let s = sample().render(Format::Json);
        let a = s.find("\"lambda1\"").unwrap();
        let b = s.find("\"lambda2\"").unwrap();
        assert!(a < b);
        assert!(s.find("\"checks\"").unwrap() < s.find("\"command\"").unwrap());
        assert!(s.contains("\"summary\": \"PASS 1/1\""));
    }

    #[test]
    fn csv_has_fixed_columns() {
        let s = sample().render(Format::Csv);
        let mut lines = s.lines();
        assert_eq!(lines.next(), Some("suite,case,params,expected,computed,pass"));
        assert_eq!(lines.next(), Some("weyl,\"W(1/2, 2)\",dim,16,16,true"));
    }

    #[test]
    fn failing_rows_show_in_table() {
        let mut r = sample();
        r.checks.push(Row::compare("weyl", "W(1/2, 2)", "rank", 16, 15));
        let t = r.render(Format::Table);
        assert!(t.contains("FAILED weyl"));
        assert!(t.ends_with("FAIL 1/2\n"));
    }

    #[test]
    fn atomic_write_replaces_file() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("out.json");
        write_atomic(&p, "first").unwrap();
        write_atomic(&p, "second").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "second");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
