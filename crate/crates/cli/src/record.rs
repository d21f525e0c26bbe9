use std::io::{self, Write};

use serde_json::{Map, Value};

/// One output line. Keys serialize in sorted order.
#[derive(Debug, Clone, PartialEq)]
pub struct Record(pub Map<String, Value>);

impl Record {
    pub fn new(command: &str) -> Self {
        let mut map = Map::new();
        map.insert("command".into(), Value::from(command));
        Record(map)
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.insert(key.into(), value.into());
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.0.insert(key.into(), value.into());
    }

    /// Top-level entries, with nested objects flattened to `outer.inner`.
    fn flatten(&self) -> Vec<(String, String)> {
        fn walk(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
            match value {
                Value::Object(map) => {
                    for (k, v) in map {
                        let key = if prefix.is_empty() {
                            k.clone()
                        } else {
                            format!("{prefix}.{k}")
                        };
                        walk(&key, v, out);
                    }
                }
                Value::String(s) => out.push((prefix.into(), s.clone())),
                other => out.push((prefix.into(), other.to_string())),
            }
        }
        let mut out = Vec::new();
        walk("", &Value::Object(self.0.clone()), &mut out);
        out
    }
}

pub fn write_json(out: &mut impl Write, records: &[Record]) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut *out, &r.0)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Aligned columns; the header is the union of keys in first-seen order.
pub fn write_table(out: &mut impl Write, records: &[Record]) -> io::Result<()> {
    let rows: Vec<Vec<(String, String)>> = records.iter().map(Record::flatten).collect();
    let mut columns: Vec<String> = Vec::new();
    for row in &rows {
        for (k, _) in row {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            columns
                .iter()
                .map(|c| {
                    row.iter()
                        .find(|(k, _)| k == c)
                        .map_or_else(|| "-".to_string(), |(_, v)| v.clone())
                })
                .collect()
        })
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            cells
                .iter()
                .map(|r| r[i].len())
                .chain([c.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |items: &[String]| -> String {
        items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    if !columns.is_empty() {
        writeln!(out, "{}", line(&columns))?;
    }
    for row in &cells {
        writeln!(out, "{}", line(row))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn keys_are_sorted() {
        let r = Record::new("x")
            .with("zeta", 1)
            .with("alpha", json!({"b": 2, "a": "3"}));
        let mut buf = Vec::new();
        write_json(&mut buf, &[r]).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"alpha\":{\"a\":\"3\",\"b\":2},\"command\":\"x\",\"zeta\":1}\n"
        );
    }

    #[test]
    fn table_layout() {
        let rows = [
            Record::new("c").with("v", json!({"n": 10})),
            Record::new("c").with("v", json!({"n": 7})).with("w", "x"),
        ];
        let mut buf = Vec::new();
        write_table(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "command  v.n  w\nc        10   -\nc        7    x\n");
    }
}
