//! JSON and text renderings of a report.
//!
//! Text output is derived from the JSON value: one `key: value` line per
//! top-level field, with scalars printed bare and everything else as compact
//! JSON. Both formats therefore carry the same values.

use serde::Serialize;
use serde_json::Value;

use crate::{CliError, Format};

pub fn emit<T: Serialize>(report: &T, format: Format) -> Result<String, CliError> {
    let value = serde_json::to_value(report).map_err(|e| CliError::Internal(format!("serializing report: {e}")))?;
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("a JSON value always serializes");
            s.push('\n');
            s
        }
        _ => to_text(&value),
    })
}

pub fn to_text(value: &Value) -> String {
    let Value::Object(map) = value else {
        return format!("{}\n", scalar(value));
    };
    map.iter().map(|(k, v)| format!("{k}: {}\n", scalar(v))).collect()
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Reads text output back into a JSON object. String fields come back as
/// strings only when they do not themselves parse as JSON.
pub fn parse_text(text: &str) -> serde_json::Map<String, Value> {
    text.lines()
        .filter_map(|line| line.split_once(": "))
        .map(|(k, v)| {
            let value = serde_json::from_str(v).unwrap_or_else(|_| Value::String(v.to_string()));
            (k.to_string(), value)
        })
        .collect()
}
