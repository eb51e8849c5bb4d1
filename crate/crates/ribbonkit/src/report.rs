//! JSON report types emitted by the command-line tool.
//!
//! All numbers in reports are exact decimal strings; the only floats are
//! the diagnostic witness roots of stability reports, which are clearly
//! marked as approximate.

use serde::Serialize;

#[derive(Serialize)]
pub struct QuasiTreesReport {
    pub count: u64,
    pub quasi_trees: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct PseudoReportJson {
    pub pseudo: bool,
    pub certificate: Option<[usize; 2]>,
    /// `.bqt` payload of the adjusted presentation.
    pub adjusted: Option<String>,
}

#[derive(Serialize)]
pub struct StabilityReportJson {
    pub stable: bool,
    pub rhp_count: u32,
    /// Approximate right-half-plane root, diagnostics only.
    pub witness_root: Option<[f64; 2]>,
}

#[derive(Serialize)]
pub struct DetectionReportJson {
    pub detects: bool,
    pub det_plus_identity: String,
    pub quasi_tree_count: u64,
    pub witness_subset: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct SnfReportJson {
    pub diagonal: Vec<String>,
}

#[derive(Serialize)]
pub struct ConcavityReportJson {
    pub values: Vec<u64>,
    pub offset: i64,
    pub mode: String,
    pub passes: bool,
    pub internal_zeros: Vec<i64>,
    pub first_violation: Option<i64>,
}

#[derive(Serialize)]
pub struct PolyReportJson {
    pub coefficients: Vec<String>,
    pub rendered: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

#[derive(Serialize)]
pub struct CheckReportJson {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

#[derive(Serialize)]
pub struct ErrorJson {
    pub error: String,
}

/// Flattens a JSON object into tab-separated `key<TAB>value` lines.
pub fn to_tsv(value: &serde_json::Value) -> String {
    let mut out = String::new();
    flatten("", value, &mut out);
    out
}

fn flatten(prefix: &str, value: &serde_json::Value, out: &mut String) {
    match value {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        serde_json::Value::Array(items) => {
            let rendered: Vec<String> = items.iter().map(render_scalarish).collect();
            out.push_str(&format!("{prefix}\t{}\n", rendered.join(" ")));
        }
        other => {
            out.push_str(&format!("{prefix}\t{}\n", render_scalarish(other)));
        }
    }
}

fn render_scalarish(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(render_scalarish).collect();
            inner.join(",")
        }
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_flattening() {
        let v = serde_json::json!({"a": 1, "b": {"c": [1, 2]}, "d": "x"});
        let tsv = to_tsv(&v);
        assert!(tsv.contains("a\t1\n"));
        assert!(tsv.contains("b.c\t1 2\n"));
        assert!(tsv.contains("d\tx\n"));
    }
}
