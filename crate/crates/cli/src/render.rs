use serde_json::Value;

use prismlv::audit::{format_volume, PrismEntry, PrismReport};
use prismlv::orbifold::CaseAnalysis;

/// One-line rendering of a value: strings bare, `null` as `-`, arrays
/// space-separated with inner arrays comma-joined.
pub fn inline(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "-".into(),
        Value::Array(items) => items.iter().map(tuple).collect::<Vec<_>>().join(" "),
        Value::Object(_) => v.to_string(),
        _ => v.to_string(),
    }
}

fn tuple(v: &Value) -> String {
    match v {
        Value::Array(items) => items.iter().map(tuple).collect::<Vec<_>>().join(","),
        _ => inline(v),
    }
}

/// Aligned `key  value` lines; nested objects get dotted keys.
pub fn table(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}")).collect::<Vec<_>>().join("\n")
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, rows);
            }
        }
        _ => rows.push((prefix.to_string(), inline(v))),
    }
}

/// One row per drilled base.
pub fn case_table(a: &CaseAnalysis, indent: &str) -> String {
    let list = |d: &[u64]| {
        if d.is_empty() {
            "-".to_string()
        } else {
            d.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
        }
    };
    let mut out = vec![format!("{indent}{:<4}  {:<22}  {:<8}  {:<8}  {}", "case", "base", "chi_orb", "degrees", "chi_only")];
    for c in &a.cases {
        let o = &c.orbifold;
        let base = format!("{} g={} b={}", o, o.genus, o.boundary);
        out.push(format!(
            "{indent}{:<4}  {:<22}  {:<8}  {:<8}  {}",
            c.case,
            base,
            c.chi_orb.to_string(),
            list(&c.degrees),
            list(&c.chi_only_degrees)
        ));
    }
    out.join("\n")
}

fn entry_block(e: &PrismEntry) -> String {
    let mut out = vec![format!(
        "n={}  status={}  upper_bound={}={}  twist_knot_excluded={}  max_degree={}",
        e.n,
        e.status,
        e.upper_bound,
        format_volume(e.upper_bound_value),
        e.twist_knot_excluded,
        e.max_degree
    )];
    if let Some(a) = &e.case_analysis {
        out.push(case_table(a, "  "));
    }
    let demo: Vec<String> =
        e.slope_demo.pairs.iter().zip(&e.slope_demo.counts).map(|((f, c), k)| format!("({f})/({c}):{k}")).collect();
    out.push(format!("  slopes k1=1 k2=2  {}", demo.join("  ")));
    if !e.candidates.is_empty() {
        let c: Vec<String> = e.candidates.iter().map(|c| format!("case {} d={}", c.case, c.degree)).collect();
        out.push(format!("  candidates  {}", c.join(", ")));
    }
    for note in &e.notes {
        out.push(format!("  note  {note}"));
    }
    out.join("\n")
}

pub fn prism_report(r: &PrismReport) -> String {
    let mut blocks: Vec<String> = r.entries.iter().map(entry_block).collect();
    let list = |v: &[i64]| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
        }
    };
    blocks.push(format!("candidate-exceptional: {}", list(&r.candidate_exceptional)));
    blocks.push(format!("excluded parameters: {}", list(&r.excluded_parameters)));
    blocks.join("\n")
}
