//! Markdown rendering. JSON is the machine contract; these reports are
//! derived views over the same values.

use std::fmt::Write;

use lyubgraph::{Check, InvariantReport, TableEntry};

use crate::ProjReport;

fn check_rows(out: &mut String, checks: &[Check]) {
    out.push_str("| check | result | values |\n| --- | --- | --- |\n");
    for check in checks {
        let values = check
            .values
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(
            out,
            "| {} | {} | {} |",
            check.name,
            if check.passed { "pass" } else { "FAIL" },
            values
        );
    }
}

pub fn report_markdown(report: &InvariantReport) -> String {
    let mut out = String::new();
    out.push_str("# Invariant report\n\n");
    out.push_str("| quantity | value |\n| --- | --- |\n");
    let _ = writeln!(out, "| dim A | {} |", report.d);
    let _ = writeln!(out, "| minimal primes | {} |", report.s);
    let _ = writeln!(out, "| c(A), graph | {} |", report.c_graph);
    if let Some(c) = report.c_oracle {
        let _ = writeln!(out, "| c(A), cover oracle | {c} |");
    }
    let _ = writeln!(out, "| λ_0,1 | {} |", report.lambda01);
    let _ = writeln!(out, "| λ_1,2 | {} |", report.lambda12);
    let _ = writeln!(
        out,
        "| λ_{d},{d} | {top} |",
        d = report.d,
        top = report.lambda_top
    );

    out.push_str("\n## γ-profile\n\n| t |");
    for t in 1..=report.gamma_profile.len() {
        let _ = write!(out, " {t} |");
    }
    out.push_str("\n| --- |");
    for _ in &report.gamma_profile {
        out.push_str(" --- |");
    }
    out.push_str("\n| #Γ_t |");
    for count in &report.gamma_profile {
        let _ = write!(out, " {count} |");
    }
    out.push('\n');

    out.push_str("\n## Superdiagonal λ_{i,i+1}\n\n");
    out.push_str("| i | value | status |\n| --- | --- | --- |\n");
    let _ = writeln!(out, "| 0 | {} | exact |", report.lambda01);
    let _ = writeln!(out, "| 1 | {} | exact |", report.lambda12);
    for (k, bound) in report.superdiag_lower_bounds.iter().enumerate().skip(1) {
        let _ = writeln!(out, "| {} | ≥ {} | lower bound |", k + 1, bound);
    }

    if let Some(table) = &report.dim3_table {
        out.push_str("\n## Lyubeznik table (d = 3)\n\n");
        out.push_str("| λ_{i,j} | j=0 | j=1 | j=2 | j=3 |\n| --- | --- | --- | --- | --- |\n");
        for (i, row) in table.rows.iter().enumerate() {
            let _ = write!(out, "| i={i} |");
            for entry in row {
                match entry {
                    TableEntry::Known(v) => {
                        let _ = write!(out, " {v} |");
                    }
                    TableEntry::Unknown => out.push_str(" u |"),
                }
            }
            out.push('\n');
        }
        out.push_str("\nu = λ_0,2 = λ_1,3 is not determined by the graphs.\n");
    }

    out.push_str("\n## Checks\n\n");
    check_rows(&mut out, &report.checks);
    out
}

pub fn proj_markdown(report: &ProjReport) -> String {
    let mut out = String::new();
    out.push_str("# Projective variety report\n\n");
    out.push_str("| quantity | value |\n| --- | --- |\n");
    let _ = writeln!(out, "| dim X | {} |", report.d);
    let _ = writeln!(out, "| components | {} |", report.s);
    if let Some(l12) = report.lambda12 {
        let _ = writeln!(out, "| λ_1,2 (any embedding) | {l12} |");
    }

    out.push_str("\n## γ-profile of X\n\n| t |");
    for t in 1..=report.gamma_profile.len() {
        let _ = write!(out, " {t} |");
    }
    out.push_str("\n| --- |");
    for _ in &report.gamma_profile {
        out.push_str(" --- |");
    }
    out.push_str("\n| #Γ_t |");
    for count in &report.gamma_profile {
        let _ = write!(out, " {count} |");
    }
    out.push('\n');

    if !report.superdiag_lower_bounds.is_empty() {
        out.push_str("\n## Superdiagonal bounds at the cone\n\n");
        out.push_str("| i | λ_{i,i+1} ≥ |\n| --- | --- |\n");
        for (k, bound) in report.superdiag_lower_bounds.iter().enumerate() {
            let _ = writeln!(out, "| {} | {} |", k + 2, bound);
        }
    }

    out.push_str("\n## Checks\n\n");
    check_rows(&mut out, &report.checks);
    out
}

pub fn low_dim_markdown(d: usize, s: usize, c: usize) -> String {
    let mut out = String::new();
    out.push_str("# Invariant report\n\n");
    out.push_str("| quantity | value |\n| --- | --- |\n");
    let _ = writeln!(out, "| dim A | {d} |");
    let _ = writeln!(out, "| minimal primes | {s} |");
    let _ = writeln!(out, "| c(A), cover oracle | {c} |");
    let _ = writeln!(out, "\n{}\n", crate::LOW_DIM_NOTE);
    out
}
