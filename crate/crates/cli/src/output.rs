//! Rendering command results as JSON or CSV.

use serde_json::{Map, Value as Json};

use crate::entry::Catalog;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// What a subcommand produces.
#[derive(Debug, Clone)]
pub enum Output {
    Record(Map<String, Json>),
    List { key: &'static str, items: Vec<Map<String, Json>> },
    Catalog(Catalog),
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    fn to_json(&self) -> String {
        match self {
            Output::Record(map) => {
                let mut s = serde_json::to_string(map).expect("json");
                s.push('\n');
                s
            }
            Output::List { key, items } => {
                let mut wrapper = Map::new();
                wrapper.insert("count".into(), Json::String(items.len().to_string()));
                wrapper.insert((*key).into(), Json::Array(items.iter().cloned().map(Json::Object).collect()));
                let mut s = serde_json::to_string(&wrapper).expect("json");
                s.push('\n');
                s
            }
            Output::Catalog(c) => c.to_json(),
        }
    }

    fn to_csv(&self) -> String {
        let (header, rows): (Vec<String>, Vec<Vec<String>>) = match self {
            Output::Record(map) => (map.keys().cloned().collect(), vec![map.values().map(cell).collect()]),
            Output::List { items, .. } => {
                let mut header: Vec<String> = items.iter().flat_map(|m| m.keys().cloned()).collect();
                header.sort();
                header.dedup();
                let rows = items
                    .iter()
                    .map(|m| header.iter().map(|k| m.get(k).map(cell).unwrap_or_default()).collect())
                    .collect();
                (header, rows)
            }
            Output::Catalog(c) => {
                let mut inputs: Vec<&String> = c.entries.iter().flat_map(|e| e.inputs.keys()).collect();
                let mut outputs: Vec<&String> = c.entries.iter().flat_map(|e| e.outputs.keys()).collect();
                inputs.sort();
                inputs.dedup();
                outputs.sort();
                outputs.dedup();
                let mut header = vec!["kind".to_string(), "schema_version".to_string()];
                header.extend(inputs.iter().map(|k| format!("in.{k}")));
                header.extend(outputs.iter().map(|k| format!("out.{k}")));
                let rows = c
                    .entries
                    .iter()
                    .map(|e| {
                        let mut row = vec![e.kind.to_string(), e.schema_version.to_string()];
                        row.extend(inputs.iter().map(|k| e.inputs.get(*k).map(|v| v.to_cell()).unwrap_or_default()));
                        row.extend(outputs.iter().map(|k| e.outputs.get(*k).map(|v| v.to_cell()).unwrap_or_default()));
                        row
                    })
                    .collect();
                (header, rows)
            }
        };
        let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
        writer.write_record(&header).expect("in-memory csv");
        for row in rows {
            writer.write_record(&row).expect("in-memory csv");
        }
        String::from_utf8(writer.into_inner().expect("in-memory csv")).expect("utf-8")
    }
}

fn cell(v: &Json) -> String {
    match v {
        Json::String(s) => s.clone(),
        Json::Null => String::new(),
        other => other.to_string(),
    }
}
