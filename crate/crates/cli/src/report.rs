use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{json, Value as Json};
use wreathcov_core::interval::decimal;
use wreathcov_core::report::{Finding, Quantity, Summary, Value};

pub const SCHEMA_VERSION: u32 = 1;

fn quantity(q: &Quantity) -> Json {
    let mut v = json!({ "name": q.name, "provenance": q.provenance.as_str() });
    let o = v.as_object_mut().unwrap();
    match &q.value {
        Value::Integer(x) => {
            o.insert("kind".into(), json!("integer"));
            o.insert("value".into(), json!(x.to_string()));
        }
        Value::Rational(x) => {
            o.insert("kind".into(), json!("rational"));
            o.insert("value".into(), json!(x.to_string()));
            o.insert("approx".into(), json!(decimal(x, 15, false)));
        }
        Value::Interval(x) => {
            o.insert("kind".into(), json!("interval"));
            o.insert("lo".into(), json!(x.lo().to_string()));
            o.insert("hi".into(), json!(x.hi().to_string()));
            o.insert("approx".into(), json!(x.to_decimal_string(15)));
        }
        Value::Bool(b) => {
            o.insert("kind".into(), json!("bool"));
            o.insert("value".into(), json!(b));
        }
        Value::Text(t) => {
            o.insert("kind".into(), json!("text"));
            o.insert("value".into(), json!(t));
        }
    }
    v
}

fn finding(f: &Finding) -> Json {
    json!({ "check": f.check, "message": f.message, "witness": f.witness })
}

/// The structured report; holds nothing that varies between identical runs.
pub fn document(config: Json, summary: &Summary) -> Json {
    json!({
        "schema_version": SCHEMA_VERSION,
        "config": config,
        "passed": summary.passed(),
        "quantities": summary.quantities.iter().map(quantity).collect::<Vec<_>>(),
        "findings": summary.findings.iter().map(finding).collect::<Vec<_>>(),
        "notes": summary.notes,
    })
}

/// Write through a temporary file in the same directory, then rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().context("output path has no file name")?.to_string_lossy();
    let tmp = dir.join(format!(".{}.{}.tmp", name, std::process::id()));
    {
        let mut f = fs::File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

pub fn emit(doc: &Json, out: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    match out {
        Some(p) => write_atomic(p, text.as_bytes()),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// Human-readable log on stderr.
pub fn log(command: &str, summary: &Summary, secs: f64) {
    let status = if summary.passed() { "PASS" } else { "FINDING" };
    eprintln!("{}: {} ({} quantities, {:.2}s)", command, status, summary.quantities.len(), secs);
    for f in &summary.findings {
        eprintln!("  finding {}", f);
    }
    for n in &summary.notes {
        eprintln!("  note {}", n);
    }
}

pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| anyhow::anyhow!("csv: {}", e))?;
    write_atomic(path, &bytes)
}
