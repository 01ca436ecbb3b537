//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::num::Num;
use crate::report::{ConjectureRow, Instance, Outcome, Report, Status};

fn join(values: &[Num]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

fn vector(v: &[u32]) -> String {
    format!("({})", v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
}

fn describe(instance: &Instance) -> String {
    match instance {
        Instance::Family { n, i, j, case, r } => format!("family n={n} i={i} j={j} ({case}, r={r})"),
        Instance::Presentation { n, .. } => format!("presentation n={n}: {}", instance.label()),
    }
}

fn outcome(row: &ConjectureRow) -> &'static str {
    match row.outcome {
        Outcome::Holds => "holds",
        Outcome::Violated => "VIOLATED",
        Outcome::Skipped => "skipped",
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

pub fn render(report: &Report) -> String {
    let mut s = String::new();
    if let Some(instance) = &report.instance {
        writeln!(s, "{}", describe(instance)).unwrap();
    }
    if let Some(cone) = &report.cone {
        writeln!(
            s,
            "cone: dimension {}, {} facet normals, {} extremal rays",
            cone.dimension,
            cone.normals.len(),
            cone.ray_count
        )
        .unwrap();
        for a in &cone.normals {
            let coords: Vec<String> = a.coords.iter().map(|c| c.to_string()).collect();
            writeln!(s, "  normal {:<20} ({})", a.label, coords.join(",")).unwrap();
        }
        for r in &cone.rays {
            writeln!(s, "  ray {}", vector(r)).unwrap();
        }
        if let Some(d) = &cone.det_certificate {
            writeln!(s, "  |det C| = {d}").unwrap();
        }
    }
    if let Some(t) = &report.type_value {
        writeln!(s, "type: {t}").unwrap();
    }
    if let Some(a) = report.a_invariant {
        writeln!(s, "a-invariant: {a}").unwrap();
    }
    if let Some(g) = report.gorenstein {
        writeln!(s, "gorenstein: {}", if g { "yes" } else { "no" }).unwrap();
    }
    if let Some(h) = &report.h_values {
        writeln!(s, "h(t), t = 0..{}: {}", h.len().saturating_sub(1), join(h)).unwrap();
    }
    if let Some(h) = &report.numerator {
        writeln!(s, "numerator: {}", join(h)).unwrap();
    }
    if let Some(series) = &report.hilbert_series {
        writeln!(s, "Hilbert series: {series}").unwrap();
    }
    if let Some(c) = &report.canonical {
        let degrees: Vec<String> = c.degrees.iter().map(|d| format!("{} in degree {}", d.count, d.degree)).collect();
        writeln!(s, "canonical module generators ({}): {} ({})", c.source, c.count, degrees.join(", ")).unwrap();
        for g in &c.generators {
            writeln!(s, "  {}", vector(g)).unwrap();
        }
        if c.truncated {
            writeln!(s, "  ... {} more (pass --full to list all)", c.count - c.generators.len()).unwrap();
        }
    }
    if let Some(row) = &report.conjecture {
        writeln!(
            s,
            "conjecture ({}): r = {}, type = {}, predicted = {}: {}",
            row.mode,
            opt(&row.r),
            opt(&row.type_value),
            opt(&row.predicted),
            outcome(row)
        )
        .unwrap();
        if let Some(reason) = &row.reason {
            writeln!(s, "  {reason}").unwrap();
        }
    }
    if let Some(rows) = &report.sweep {
        writeln!(s, "{:<28} {:<12} {:>3} {:>8} {:>9}  outcome", "instance", "mode", "r", "type", "predicted").unwrap();
        for row in rows {
            writeln!(
                s,
                "{:<28} {:<12} {:>3} {:>8} {:>9}  {}{}",
                row.instance.label(),
                row.mode,
                opt(&row.r),
                opt(&row.type_value),
                opt(&row.predicted),
                outcome(row),
                row.reason.as_ref().map_or(String::new(), |r| format!(" ({r})"))
            )
            .unwrap();
        }
        let holds = rows.iter().filter(|r| r.outcome == Outcome::Holds).count();
        let skipped = rows.iter().filter(|r| r.outcome == Outcome::Skipped).count();
        writeln!(s, "{} rows: {holds} hold, {} violated, {skipped} skipped", rows.len(), rows.len() - holds - skipped)
            .unwrap();
    }
    if let Some(found) = &report.counterexamples {
        for row in found {
            writeln!(
                s,
                "counterexample: {} ({}): type {} but predicted {}",
                row.instance.label(),
                row.mode,
                opt(&row.type_value),
                opt(&row.predicted)
            )
            .unwrap();
        }
    }
    if !report.oracle_checks.is_empty() {
        for c in &report.oracle_checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            writeln!(s, "[{status}] {}: {}", c.name, c.detail).unwrap();
        }
        let (pass, fail, skipped) = report.tally();
        writeln!(s, "checks: {pass} passed, {fail} failed, {skipped} skipped").unwrap();
    }
    s
}
