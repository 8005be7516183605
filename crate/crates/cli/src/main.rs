//! Command-line front end: parse a problem document, dispatch a computation,
//! emit a deterministic report (JSON or text).
//!
//! Exit codes: 0 ok, 1 error, 2 undecided, 3 discrepancy with the bundled
//! example targets.

mod document;
mod paper;
mod report;

use anyhow::{anyhow, Result};
use clap::{Parser, Subcommand};
use document::ProblemDocument;
use frobpush::{
    decompose, depth, fedder_check, is_direct_summand, is_fsplit, mcm_from_module,
    mcm_search_with_deadline, nabla_matrix, net_explore_with_deadline, para_canonical,
    pushforward, Depth, McmOutcome,
};
use report::{decomposition_json, depth_json, module_json, render_text, Status};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "frobpush",
    about = "Exact Frobenius pushforward calculus over weighted graded rings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit the report as JSON
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized searches (idempotent hunting)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for the bundled example suite
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Soft wall-clock budget for exploratory searches, in milliseconds
    #[arg(long, global = true)]
    budget_ms: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Blockwise Frobenius pushforward of a module's presentation
    Pushforward {
        doc: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long)]
        q: u64,
    },
    /// Krull-Schmidt decomposition with split certificates
    Decompose {
        doc: PathBuf,
        #[arg(long)]
        module: String,
        /// Push forward with this step before decomposing
        #[arg(long)]
        q: Option<u64>,
    },
    /// Is one module a direct summand of another?
    Summand {
        doc: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long = "in")]
        inside: String,
    },
    /// Is the module a direct summand of its own pushforward?
    Fsplit {
        doc: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long)]
        q: u64,
    },
    /// Fedder criterion for the document's hypersurface ring
    Fedder { doc: PathBuf },
    /// Higher para-canonical module of the given index
    Paracanonical {
        doc: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long)]
        index: usize,
    },
    /// Canonical-module MCM construction with a depth certificate
    Mcm {
        doc: PathBuf,
        #[arg(long)]
        module: String,
    },
    /// Explore the net generated by a module under pushforward + summands
    NetExplore {
        doc: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 16)]
        max_steps: usize,
    },
    /// Search for a maximal Cohen-Macaulay module over the document's ring
    McmSearch {
        doc: PathBuf,
        #[arg(long, default_value_t = 16)]
        max_steps: usize,
    },
    /// Run every bundled example target and the property sweeps
    PaperSuite,
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    let deadline = cli
        .budget_ms
        .map(|ms| started + std::time::Duration::from_millis(ms));
    let outcome = run(&cli, deadline);
    match outcome {
        Ok((task, parameters, status, results)) => {
            let report = json!({
                "task": task,
                "parameters": parameters,
                "seed": cli.seed,
                "status": status.as_str(),
                "results": results,
                "timing_ms": started.elapsed().as_millis() as u64,
            });
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                print!("{}", render_text(&report, 0));
            }
            std::process::exit(status.exit_code());
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

type RunOutput = (String, Value, Status, Value);

fn run(cli: &Cli, deadline: Option<Instant>) -> Result<RunOutput> {
    match &cli.cmd {
        Cmd::Pushforward { doc, module, q } => {
            let d = ProblemDocument::from_path(doc)?;
            let ring = d.build_ring()?;
            let m = d.build_module(&ring, module)?;
            let amb = ring.ambient();
            // dense presentation for the block matrix report
            let matrix: Vec<Vec<frobpush::Polynomial>> = m
                .rows()
                .iter()
                .map(|r| (0..m.ngens()).map(|j| r.component(j as u32)).collect())
                .collect();
            let pf = nabla_matrix(amb, &matrix, m.row_degs(), m.gen_degs(), *q)
                .map_err(|e| anyhow!("{e}"))?;
            let pushed = pushforward(&m, *q).map_err(|e| anyhow!("{e}"))?;
            let blocks: Vec<Vec<String>> = pf
                .rows
                .iter()
                .map(|r| {
                    (0..pf.col_degs.len())
                        .map(|j| amb.format(&r.component(j as u32)))
                        .collect()
                })
                .collect();
            let results = json!({
                "q": q,
                "block_size": pf.block,
                "block_matrix": blocks,
                "row_degrees": pf.row_degs.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                "column_degrees": pf.col_degs.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                "pushforward_module": module_json(&pushed),
                "minimal_generators": pushed.minimal_presentation().module.ngens(),
            });
            Ok((
                "pushforward".into(),
                json!({"document": d, "module": module, "q": q}),
                Status::Ok,
                results,
            ))
        }
        Cmd::Decompose { doc, module, q } => {
            let d = ProblemDocument::from_path(doc)?;
            let ring = d.build_ring()?;
            let base = d.build_module(&ring, module)?;
            let m = match q {
                Some(q) => pushforward(&base, *q).map_err(|e| anyhow!("{e}"))?,
                None => base,
            };
            let dec = decompose(&m, cli.seed).map_err(|e| anyhow!("{e}"))?;
            let status = if dec.undecided {
                Status::Undecided
            } else {
                Status::Ok
            };
            let results = decomposition_json(&dec, &m);
            Ok((
                "decompose".into(),
                json!({"document": d, "module": module, "q": q}),
                status,
                results,
            ))
        }
        Cmd::Summand { doc, module, inside } => {
            let d = ProblemDocument::from_path(doc)?;
            let ring = d.build_ring()?;
            let q = d.build_module(&ring, module)?;
            let m = d.build_module(&ring, inside)?;
            match is_direct_summand(&q, &m, cli.seed) {
                Ok(Some(cert)) => {
                    let results = json!({
                        "is_summand": true,
                        "shift": cert.shift.to_string(),
                        "injection": report::rows_json(&cert.injection, m.ngens(), &m),
                        "retraction": report::rows_json(&cert.retraction, q.ngens(), &q),
                    });
                    Ok((
                        "summand".into(),
                        json!({"document": d, "module": module, "in": inside}),
                        Status::Ok,
                        results,
                    ))
                }
                Ok(None) => Ok((
                    "summand".into(),
                    json!({"document": d, "module": module, "in": inside}),
                    Status::Ok,
                    json!({"is_summand": false}),
                )),
                Err(frobpush::Error::Undecided(msg)) => Ok((
                    "summand".into(),
                    json!({"document": d, "module": module, "in": inside}),
                    Status::Undecided,
                    json!({"is_summand": "undecided", "reason": msg}),
                )),
                Err(e) => Err(anyhow!("{e}")),
            }
        }
        Cmd::Fsplit { doc, module, q } => {
            let d = ProblemDocument::from_path(doc)?;
            let ring = d.build_ring()?;
            let m = d.build_module(&ring, module)?;
            match is_fsplit(&m, *q, cli.seed) {
                Ok(ans) => Ok((
                    "fsplit".into(),
                    json!({"document": d, "module": module, "q": q}),
                    Status::Ok,
                    json!({"is_fsplit": ans}),
                )),
                Err(frobpush::Error::Undecided(msg)) => Ok((
                    "fsplit".into(),
                    json!({"document": d, "module": module, "q": q}),
                    Status::Undecided,
                    json!({"is_fsplit": "undecided", "reason": msg}),
                )),
                Err(e) => Err(anyhow!("{e}")),
            }
        }
        Cmd::Fedder { doc } => {
            let d = ProblemDocument::from_path(doc)?;
            let ring = d.build_ring()?;
            let ans = fedder_check(&ring).map_err(|e| anyhow!("{e}"))?;
            Ok((
                "fedder".into(),
                json!({"document": d}),
                Status::Ok,
                json!({"f_pure": ans}),
            ))
        }
        Cmd::Paracanonical { doc, module, index } => {
            let d = ProblemDocument::from_path(doc)?;
            let ring = d.build_ring()?;
            let m = d.build_module(&ring, module)?;
            let w = para_canonical(&m, *index).map_err(|e| anyhow!("{e}"))?;
            let dep = depth(&w);
            let results = json!({
                "index": index,
                "module": module_json(&w),
                "depth": depth_json(dep),
                "dimension": w.dimension().ok(),
                "betti": frobpush::minimal_resolution(&w, true, ring.nvars() + 1)
                    .ranks(),
                "h_of_source": frobpush::h_invariant(&m).map_err(|e| anyhow!("{e}"))?,
            });
            Ok((
                "paracanonical".into(),
                json!({"document": d, "module": module, "index": index}),
                Status::Ok,
                results,
            ))
        }
        Cmd::Mcm { doc, module } => {
            let d = ProblemDocument::from_path(doc)?;
            let ring = d.build_ring()?;
            let m = d.build_module(&ring, module)?;
            let omega = mcm_from_module(&m).map_err(|e| anyhow!("{e}"))?;
            let dep = depth(&omega);
            let results = json!({
                "mcm": module_json(&omega),
                "depth": depth_json(dep),
                "certified": dep == Depth::Finite(ring.dimension()),
            });
            Ok((
                "mcm".into(),
                json!({"document": d, "module": module}),
                Status::Ok,
                results,
            ))
        }
        Cmd::NetExplore {
            doc,
            module,
            q,
            max_steps,
        } => {
            let d = ProblemDocument::from_path(doc)?;
            let ring = d.build_ring()?;
            let m = d.build_module(&ring, module)?;
            let net = net_explore_with_deadline(&m, *max_steps, *q, cli.seed, deadline)
                .map_err(|e| anyhow!("{e}"))?;
            let status = if net.undecided || !net.complete {
                Status::Undecided
            } else {
                Status::Ok
            };
            let classes: Vec<Value> = net
                .classes
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    json!({
                        "name": c.name,
                        "module": module_json(&c.module),
                        "pushforward_decomposes_as": net.transitions[i].as_ref().map(|row| {
                            row.iter()
                                .map(|(t, mult)| json!({"class": net.classes[*t].name, "multiplicity": mult}))
                                .collect::<Vec<_>>()
                        }),
                    })
                })
                .collect();
            let results = json!({
                "classes": classes,
                "complete": net.complete,
                "seed_unmixed": net.seed_unmixed,
                "undecided": net.undecided,
            });
            Ok((
                "net-explore".into(),
                json!({"document": d, "module": module, "q": q, "max_steps": max_steps}),
                status,
                results,
            ))
        }
        Cmd::McmSearch { doc, max_steps } => {
            let d = ProblemDocument::from_path(doc)?;
            let ring = d.build_ring()?;
            match mcm_search_with_deadline(&ring, *max_steps, cli.seed, deadline)
                .map_err(|e| anyhow!("{e}"))?
            {
                McmOutcome::Found {
                    mcm,
                    depth: dep,
                    source_class,
                    h_value,
                } => Ok((
                    "mcm-search".into(),
                    json!({"document": d, "max_steps": max_steps}),
                    Status::Ok,
                    json!({
                        "found": true,
                        "mcm": module_json(&mcm),
                        "depth": dep,
                        "source_class": source_class,
                        "h": h_value,
                    }),
                )),
                McmOutcome::Exhausted { net, min_h } => Ok((
                    "mcm-search".into(),
                    json!({"document": d, "max_steps": max_steps}),
                    Status::Undecided,
                    json!({
                        "found": false,
                        "min_h_seen": min_h,
                        "classes_explored": net.classes.len(),
                        "net_complete": net.complete,
                    }),
                )),
            }
        }
        Cmd::PaperSuite => {
            let (status, results) = paper::run_suite(cli.seed, cli.threads.max(1));
            Ok(("paper-suite".into(), json!({}), status, results))
        }
    }
}
