//! Report assembly: deterministic JSON and human-readable rendering.

use frobpush::{Decomposition, Depth, GradedModule, HilbertSeries};
use frobpush::vecpoly::VecPoly;
use serde_json::{json, Value};

/// Overall status of a run, ordered by severity for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    Undecided,
    Discrepancy,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Undecided => "undecided",
            Status::Discrepancy => "discrepancy",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Undecided => 2,
            Status::Discrepancy => 3,
        }
    }
}

pub fn hs_string(hs: &HilbertSeries) -> String {
    let mut numer = String::new();
    for (d, c) in &hs.numer {
        if !numer.is_empty() && *c > 0 {
            numer.push_str(" + ");
        } else if *c < 0 {
            numer.push_str(" - ");
        }
        let a = c.abs();
        if d.is_zero() {
            numer.push_str(&format!("{a}"));
        } else if a == 1 {
            numer.push_str(&format!("t^({d})"));
        } else {
            numer.push_str(&format!("{a}*t^({d})"));
        }
    }
    if numer.is_empty() {
        numer.push('0');
    }
    let den: Vec<String> = hs.weights.iter().map(|w| format!("(1-t^{w})")).collect();
    format!("({}) / ({})", numer, den.join(""))
}

pub fn module_json(m: &GradedModule) -> Value {
    let amb = m.ring().ambient();
    let rows: Vec<Vec<String>> = m
        .rows()
        .iter()
        .map(|r| {
            (0..m.ngens())
                .map(|j| amb.format(&r.component(j as u32)))
                .collect()
        })
        .collect();
    json!({
        "generator_degrees": m.gen_degs().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "matrix": rows,
        "hilbert_series": hs_string(m.hilbert_series()),
    })
}

pub fn rows_json(rows: &[VecPoly], ncols: usize, m: &GradedModule) -> Value {
    let amb = m.ring().ambient();
    let grid: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            (0..ncols)
                .map(|j| amb.format(&r.component(j as u32)))
                .collect()
        })
        .collect();
    json!(grid)
}

pub fn depth_json(d: Depth) -> Value {
    match d {
        Depth::Finite(n) => json!(n),
        Depth::Infinite => json!("infinity"),
    }
}

pub fn decomposition_json(dec: &Decomposition, m: &GradedModule) -> Value {
    let classes = dec.classes().expect("class grouping");
    let class_json: Vec<Value> = classes
        .iter()
        .map(|c| {
            json!({
                "module": module_json(&c.representative),
                "multiplicity": c.multiplicity,
                "shifts": c.shifts.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let pieces: Vec<Value> = dec
        .pieces
        .iter()
        .map(|p| {
            json!({
                "module": module_json(&p.module),
                "certified_indecomposable": p.certified,
                "inclusion": rows_json(&p.inclusion, m.ngens(), m),
                "projection": rows_json(&p.projection, p.module.ngens(), &p.module),
            })
        })
        .collect();
    json!({
        "verified": dec.verify(m),
        "free_rank": dec.free_rank(),
        "classes": class_json,
        "pieces": pieces,
        "undecided": dec.undecided,
    })
}

/// Render a JSON report as indented text for human consumption.
pub fn render_text(v: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            let mut out = String::new();
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n{}", render_text(val, indent + 1)));
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", render_scalar(val))),
                }
            }
            out
        }
        Value::Array(items) => {
            let mut out = String::new();
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n{}", render_text(item, indent + 1)));
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", render_scalar(item))),
                }
            }
            out
        }
        other => format!("{pad}{}\n", render_scalar(other)),
    }
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
