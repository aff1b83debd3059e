//! Text and JSON rendering of analysis results.
//!
//! JSON output is built from `serde_json::Value` maps, which keep keys
//! sorted; identical inputs therefore produce byte-identical documents.

use assr::classify::ClassificationReport;
use assr::minors::{BoundaryKind, MinorItem, MinorQuery};
use assr::qr::{BoundarySignReport, QRPair, TpVerification};
use assr::rational::format_rational;
use assr::staircase::{StaircaseType, ZeroPattern};
use assr::{RealMatrix, Signature};
use serde_json::{json, Value};

pub fn index_set(values: &[usize]) -> String {
    let parts: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn signature_json(sig: &Signature) -> Value {
    Value::Array(sig.signs().iter().map(|s| json!(s.as_i8())).collect())
}

pub fn query_json(q: &MinorQuery) -> (Value, Value) {
    (
        Value::Array(q.alpha().indices().iter().map(|&v| json!(v)).collect()),
        Value::Array(q.beta().indices().iter().map(|&v| json!(v)).collect()),
    )
}

pub fn pattern_text(kind: StaircaseType, pattern: &ZeroPattern, reversed: bool) -> String {
    let mut out = format!("staircase type: {kind}\n");
    if reversed {
        out.push_str("pattern computed on the row-reversed matrix\n");
    }
    out.push_str(&format!(
        "I = {}; J = {}; Î = {}; Ĵ = {}\n",
        index_set(pattern.i_list()),
        index_set(pattern.j_list()),
        index_set(pattern.i_hat()),
        index_set(pattern.j_hat()),
    ));
    out
}

pub fn pattern_json(kind: StaircaseType, pattern: &ZeroPattern, reversed: bool) -> Value {
    json!({
        "I": pattern.i_list(),
        "I_hat": pattern.i_hat(),
        "J": pattern.j_list(),
        "J_hat": pattern.j_hat(),
        "row_reversed": reversed,
        "staircase": kind.to_string(),
    })
}

pub fn classify_text(report: &ClassificationReport, min_dim: usize) -> String {
    let mut out = String::new();
    out.push_str(&format!("staircase: {}\n", report.staircase));
    out.push_str(&format!("rank: {} of {}\n", report.rank, min_dim));
    match (&report.signature, report.is_sr) {
        (Some(sig), true) => out.push_str(&format!("SR: yes (signature {sig})\n")),
        _ => out.push_str("SR: no\n"),
    }
    out.push_str(&format!("TP: {}\n", if report.is_tp { "yes" } else { "no" }));
    let mode = match report.assr_mode {
        assr::AssrMode::Full => "full scan",
        assr::AssrMode::Reduced => "reduced scan",
    };
    out.push_str(&format!(
        "ASSR: {} ({mode})\n",
        if report.is_assr { "yes" } else { "no" }
    ));
    match report.h {
        Some(h) => out.push_str(&format!("h: {h}\n")),
        None => out.push_str("h: none (no zero entries)\n"),
    }
    if report.sr_without_staircase {
        out.push_str("note: minors are weakly sign-consistent but the matrix is not staircase\n");
    }
    for w in &report.witnesses {
        out.push_str(&format!(
            "witness: {} = {} ({})\n",
            w.query,
            format_rational(&w.value),
            w.reason
        ));
    }
    out
}

pub fn classify_json(report: &ClassificationReport, min_dim: usize) -> Value {
    let witnesses: Vec<Value> = report
        .witnesses
        .iter()
        .map(|w| {
            let (alpha, beta) = query_json(&w.query);
            json!({
                "alpha": alpha,
                "beta": beta,
                "reason": w.reason.to_string(),
                "value": format_rational(&w.value),
            })
        })
        .collect();
    json!({
        "assr": report.is_assr,
        "assr_mode": match report.assr_mode {
            assr::AssrMode::Full => "full",
            assr::AssrMode::Reduced => "reduced",
        },
        "h": report.h,
        "rank": report.rank,
        "rank_full": report.rank == min_dim,
        "signature": report.signature.as_ref().map(signature_json),
        "sr": report.is_sr,
        "sr_without_staircase": report.sr_without_staircase,
        "staircase": report.staircase.to_string(),
        "tp": report.is_tp,
        "witnesses": witnesses,
    })
}

pub fn real_matrix_text(m: &RealMatrix) -> String {
    let mut out = String::new();
    for i in 1..=m.rows() {
        for j in 1..=m.cols() {
            out.push_str(&format!("{:>14.6}", m.at(i, j)));
        }
        out.push('\n');
    }
    out
}

pub fn real_matrix_json(m: &RealMatrix) -> Value {
    Value::Array(
        (1..=m.rows())
            .map(|i| Value::Array((1..=m.cols()).map(|j| json!(m.at(i, j))).collect()))
            .collect(),
    )
}

pub fn tp_json(check: &TpVerification) -> Value {
    let violations: Vec<Value> = check
        .violations
        .iter()
        .map(|v| {
            let (alpha, beta) = query_json(&v.query);
            json!({
                "alpha": alpha,
                "beta": beta,
                "threshold": v.threshold,
                "value": v.value,
            })
        })
        .collect();
    json!({
        "checked": check.checked,
        "ok": check.ok,
        "violations": violations,
    })
}

pub fn boundary_json(report: &BoundarySignReport) -> Value {
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            let (alpha, beta) = query_json(&v.query);
            json!({
                "alpha": alpha,
                "beta": beta,
                "expected_sign": v.expected.as_i8(),
                "value": v.value,
            })
        })
        .collect();
    let zero_failures: Vec<Value> = report
        .zero_block_failures
        .iter()
        .map(|q| {
            let (alpha, beta) = query_json(q);
            json!({"alpha": alpha, "beta": beta})
        })
        .collect();
    json!({
        "checked": report.checked,
        "ok": report.ok(),
        "violations": violations,
        "zero_block_failures": zero_failures,
    })
}

pub fn qr_text(
    qr: &QRPair,
    ortho: f64,
    reconstruction: f64,
    tp: Option<&TpVerification>,
    boundary: Option<&BoundarySignReport>,
) -> String {
    let mut out = String::from("Q:\n");
    out.push_str(&real_matrix_text(&qr.q));
    out.push_str("R:\n");
    out.push_str(&real_matrix_text(&qr.r));
    out.push_str(&format!("orthonormality residual: {ortho:.3e}\n"));
    out.push_str(&format!("reconstruction residual: {reconstruction:.3e}\n"));
    if let Some(check) = tp {
        out.push_str(&format!(
            "R totally positive: {} ({} minors checked, {} violations)\n",
            if check.ok { "pass" } else { "FAIL" },
            check.checked,
            check.violations.len()
        ));
    }
    if let Some(report) = boundary {
        out.push_str(&format!(
            "boundary transfer: {} ({} column boundary minors, {} sign violations, {} zero-block failures)\n",
            if report.ok() { "pass" } else { "FAIL" },
            report.checked,
            report.violations.len(),
            report.zero_block_failures.len()
        ));
    }
    out
}

pub fn minor_item_text(item: &MinorItem) -> String {
    let mut flags = Vec::new();
    if item.nontrivial {
        flags.push("nontrivial".to_string());
    }
    if let Some(b) = &item.boundary {
        if b.column_boundary {
            flags.push("column-boundary".into());
        }
        if b.row_boundary {
            flags.push("row-boundary".into());
        }
        if b.initial {
            flags.push("initial".into());
        }
        if b.column_generalized {
            flags.push("column-generalized".into());
        }
        if b.row_generalized {
            flags.push("row-generalized".into());
        }
    }
    let suffix = if flags.is_empty() {
        String::new()
    } else {
        format!("  [{}]", flags.join(" "))
    };
    format!(
        "{} = {}{suffix}\n",
        item.query,
        format_rational(&item.value)
    )
}

fn boundary_kind_json(b: &BoundaryKind) -> Value {
    json!({
        "column_boundary": b.column_boundary,
        "column_generalized": b.column_generalized,
        "initial": b.initial,
        "row_boundary": b.row_boundary,
        "row_generalized": b.row_generalized,
    })
}

pub fn minor_item_json(item: &MinorItem) -> Value {
    let (alpha, beta) = query_json(&item.query);
    json!({
        "alpha": alpha,
        "beta": beta,
        "boundary": item.boundary.as_ref().map(boundary_kind_json),
        "nontrivial": item.nontrivial,
        "value": format_rational(&item.value),
    })
}
