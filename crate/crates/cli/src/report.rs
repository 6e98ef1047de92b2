//! The report record shared by all commands and its table rendering.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Contextual,
    NonContextual,
    Convex,
    NonConvex,
    Pass,
    Fail,
}

/// One experiment. Rationals inside `inputs`, `outputs` and `witness` are
/// `{num, den}` records.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub model: Option<String>,
    pub inputs: Value,
    pub outputs: Value,
    pub verdict: Option<Verdict>,
    pub witness: Option<Value>,
    /// Present only when timing was requested, so default output is byte-stable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl ExperimentReport {
    pub fn new(experiment: &str, model: Option<&str>, inputs: Value, outputs: Value) -> Self {
        ExperimentReport {
            experiment: experiment.to_string(),
            model: model.map(str::to_string),
            inputs,
            outputs,
            verdict: None,
            witness: None,
            wall_time_ms: None,
        }
    }

    pub fn with_verdict(mut self, verdict: Verdict, witness: Option<Value>) -> Self {
        self.verdict = Some(verdict);
        self.witness = witness;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn as_rational(v: &Value) -> Option<String> {
    let obj = v.as_object()?;
    if obj.len() != 2 {
        return None;
    }
    let part = |k: &str| match obj.get(k)? {
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    };
    let (num, den) = (part("num")?, part("den")?);
    Some(if den == "1" { num } else { format!("{num}/{den}") })
}

fn scalar_text(v: &Value) -> Option<String> {
    if let Some(q) = as_rational(v) {
        return Some(q);
    }
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> =
                items.iter().map(|x| if x.is_array() || (x.is_object() && as_rational(x).is_none()) { None } else { scalar_text(x) }).collect();
            parts.map(|p| format!("({})", p.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    if let Some(text) = scalar_text(v) {
        rows.push((prefix.to_string(), text));
        return;
    }
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, rows);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, rows);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

/// Two-column view of a report with rationals written as `a/b`.
pub fn render_table(report: &ExperimentReport) -> String {
    let value = serde_json::to_value(report).expect("reports serialize");
    let mut rows = Vec::new();
    flatten("", &value, &mut rows);
    let width = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn table_renders_rationals() {
        let r = ExperimentReport::new(
            "measure",
            Some("grassmann"),
            json!({"state": "stab +z"}),
            json!({"plus": {"num": 1, "den": 2}, "tuple": [{"num": 0, "den": 1}, {"num": 3, "den": 4}]}),
        )
        .with_verdict(Verdict::NonContextual, None);
        let table = render_table(&r);
        assert!(table.contains("outputs.plus "), "{table}");
        assert!(table.contains("1/2\n"));
        assert!(table.contains("(0, 3/4)"));
        assert!(table.contains("non-contextual"));
        assert!(!table.contains("wall_time_ms"));
        let back: ExperimentReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
