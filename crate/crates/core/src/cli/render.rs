use std::fmt::Write as _;

use serde::Serialize;

use super::Format;
use crate::catalogue::{Domain, Family, IdentityRecord};
use crate::engine::{DerivationReport, VerificationReport};
use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Debug, Serialize)]
struct ParamEntry {
    name: &'static str,
    domain: Domain,
}

#[derive(Debug, Serialize)]
struct ParentEntry {
    parent: &'static str,
    substitution: &'static str,
}

/// One row of the identity index.
#[derive(Debug, Serialize)]
struct IndexEntry {
    id: &'static str,
    family: Family,
    params: Vec<ParamEntry>,
    guards: Vec<&'static str>,
    summand: &'static str,
    anchor: &'static str,
    parents: Vec<ParentEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

impl IndexEntry {
    fn of(r: &IdentityRecord) -> Self {
        IndexEntry {
            id: r.id,
            family: r.family,
            params: r.params.iter().map(|p| ParamEntry { name: p.name, domain: p.domain }).collect(),
            guards: r.guards.iter().map(|g| g.reason).collect(),
            summand: r.summand_text,
            anchor: r.anchor,
            parents: r
                .parents
                .iter()
                .map(|l| ParentEntry { parent: l.parent, substitution: l.substitution })
                .collect(),
            note: r.note,
        }
    }

    fn params_text(&self) -> String {
        self.params.iter().map(|p| format!("{}: {}", p.name, domain_text(p.domain))).collect::<Vec<_>>().join(", ")
    }

    fn parents_text(&self) -> String {
        self.parents.iter().map(|l| format!("{} at {}", l.parent, l.substitution)).collect::<Vec<_>>().join("; ")
    }
}

fn domain_text(d: Domain) -> &'static str {
    match d {
        Domain::NonnegInt => "nonneg-int",
        Domain::Rational => "rational",
    }
}

pub(super) fn opt(r: &Option<Rational>) -> String {
    r.as_ref().map_or_else(|| "-".to_string(), Rational::to_string)
}

fn json<T: Serialize + ?Sized>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map(|s| s + "\n").map_err(|e| Error::Precondition(e.to_string()))
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Precondition(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Precondition(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Precondition(e.to_string()))
}

/// Pipes would split a markdown cell.
fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

pub(super) fn index(records: &[IdentityRecord], format: Format) -> Result<String> {
    let entries: Vec<IndexEntry> = records.iter().map(IndexEntry::of).collect();
    match format {
        Format::Json => json(&entries),
        Format::Csv => csv_text(
            &["id", "family", "params", "guards", "anchor"],
            entries
                .iter()
                .map(|e| vec![e.id.into(), e.family.to_string(), e.params_text(), e.guards.join("; "), e.anchor.into()])
                .collect(),
        ),
        Format::Markdown => {
            let mut s = String::from("| id | family | params | guards | anchor |\n|---|---|---|---|---|\n");
            for e in &entries {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} |",
                    e.id,
                    e.family,
                    e.params_text(),
                    cell(&e.guards.join("; ")),
                    cell(e.anchor)
                );
            }
            Ok(s)
        }
    }
}

pub(super) fn record(r: &IdentityRecord, format: Format) -> Result<String> {
    let e = IndexEntry::of(r);
    match format {
        Format::Json => json(&e),
        Format::Csv => index(std::slice::from_ref(r), Format::Csv),
        Format::Markdown => {
            let mut s = String::new();
            let _ = writeln!(s, "id:       {}", e.id);
            let _ = writeln!(s, "family:   {}", e.family);
            let _ = writeln!(s, "params:   {}", e.params_text());
            let _ = writeln!(s, "summand:  sum_{{k=1..n}} {}", e.summand);
            if e.guards.is_empty() {
                let _ = writeln!(s, "guards:   none");
            } else {
                let _ = writeln!(s, "guards:");
                for g in &e.guards {
                    let _ = writeln!(s, "  - {g}");
                }
            }
            let _ = writeln!(s, "anchor:   {}", e.anchor);
            if !e.parents.is_empty() {
                let _ = writeln!(s, "parents:  {}", e.parents_text());
            }
            if let Some(note) = e.note {
                let _ = writeln!(s, "note:     {note}");
            }
            Ok(s)
        }
    }
}

pub(super) fn reports(reps: &[VerificationReport], format: Format) -> Result<String> {
    match format {
        Format::Json => json(reps),
        Format::Csv => csv_text(
            &["id", "checked", "passed", "skipped", "failed", "elapsed_ms", "first_counterexample"],
            reps.iter()
                .map(|r| {
                    vec![
                        r.id.clone(),
                        r.checked.to_string(),
                        r.passed.to_string(),
                        r.skipped.len().to_string(),
                        r.failed.len().to_string(),
                        r.elapsed_ms.to_string(),
                        r.first_counterexample().map(|f| f.params.to_string()).unwrap_or_default(),
                    ]
                })
                .collect(),
        ),
        Format::Markdown => {
            let mut s = String::from("| id | checked | passed | skipped | failed | ms |\n|---|---|---|---|---|---|\n");
            for r in reps {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} |",
                    r.id,
                    r.checked,
                    r.passed,
                    r.skipped.len(),
                    r.failed.len(),
                    r.elapsed_ms
                );
            }
            let failed = reps.iter().filter(|r| !r.is_clean()).count();
            let checked: u64 = reps.iter().map(|r| r.checked).sum();
            let _ = writeln!(s, "\n{} identities, {} points checked, {} with failures", reps.len(), checked, failed);
            Ok(s)
        }
    }
}

pub(super) fn derivations(id: &str, reps: &[DerivationReport], format: Format) -> Result<String> {
    match format {
        Format::Json => json(reps),
        Format::Csv => csv_text(
            &["theorem", "params", "reconstruction", "catalogue_lhs", "catalogue_rhs", "matched"],
            reps.iter()
                .map(|r| {
                    vec![
                        r.theorem.clone(),
                        r.params.to_string(),
                        r.reconstruction.to_string(),
                        r.catalogue_lhs.to_string(),
                        r.catalogue_rhs.to_string(),
                        r.matched.to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Markdown => {
            let matched = reps.iter().filter(|r| r.matched).count();
            Ok(format!("{id}: {matched} of {} derivation points matched\n", reps.len()))
        }
    }
}
