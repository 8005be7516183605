//! F-net exploration: breadth-first closure of a seed module under
//! Frobenius pushforward and direct summands, and the MCM search driver
//! built on it.

use crate::canonical::{h_invariant, mcm_from_module};
use crate::decompose::decompose;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::frobenius::pushforward;
use crate::hom::is_isomorphic;
use crate::module::GradedModule;
use crate::ring::GradedRing;
use std::sync::Arc;

/// One isomorphism class (up to shift) discovered during exploration.
#[derive(Debug, Clone)]
pub struct NetClass {
    /// Shift-normalized minimal presentation.
    pub module: GradedModule,
    pub name: String,
}

/// The explored portion of the net generated by a seed module.
#[derive(Debug, Clone)]
pub struct FNet {
    pub classes: Vec<NetClass>,
    /// `transitions[i]`: decomposition of the pushforward of class `i` as
    /// `(class index, multiplicity)` pairs; `None` if not yet expanded.
    pub transitions: Vec<Option<Vec<(usize, usize)>>>,
    /// All pushforwards of known classes decomposed into known classes.
    pub complete: bool,
    /// Some decomposition returned an uncertified piece.
    pub undecided: bool,
    /// Whether the seed was unmixed (the natural habitat for nets).
    pub seed_unmixed: bool,
}

impl FNet {
    pub fn census(&self) -> Vec<(String, usize, usize)> {
        self.classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.name.clone(), c.module.ngens(), i))
            .collect()
    }
}

fn normalize(m: &GradedModule) -> GradedModule {
    let mp = m.minimal_presentation().module;
    let min_deg = mp
        .gen_degs()
        .iter()
        .min()
        .copied()
        .unwrap_or(Degree::zero());
    mp.shifted(&min_deg.neg())
}

fn find_class(classes: &[NetClass], cand: &GradedModule) -> Result<Option<usize>> {
    for (i, c) in classes.iter().enumerate() {
        if c.module.ngens() != cand.ngens() {
            continue;
        }
        if c.module.gen_degs() != cand.gen_degs() {
            // degree multisets must agree after normalization
            let mut a = c.module.gen_degs().to_vec();
            let mut b = cand.gen_degs().to_vec();
            a.sort();
            b.sort();
            if a != b {
                continue;
            }
        }
        if c.module.hilbert_series() != cand.hilbert_series() {
            continue;
        }
        if is_isomorphic(cand, &c.module, true)?.is_some() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Breadth-first exploration: pushforward every known class with step `q`,
/// decompose, record new indecomposables and the transition table. Stops at
/// closure or after `max_steps` expansions.
pub fn net_explore(
    seed_module: &GradedModule,
    max_steps: usize,
    q: u64,
    seed: u64,
) -> Result<FNet> {
    net_explore_with_deadline(seed_module, max_steps, q, seed, None)
}

/// As `net_explore`, stopping early when a wall-clock deadline passes.
pub fn net_explore_with_deadline(
    seed_module: &GradedModule,
    max_steps: usize,
    q: u64,
    seed: u64,
    deadline: Option<std::time::Instant>,
) -> Result<FNet> {
    let seed_unmixed = {
        let (_, kernel) = seed_module.unmixed_quotient()?;
        kernel.is_zero()
    };
    let mut classes = vec![NetClass {
        module: normalize(seed_module),
        name: "C0".to_string(),
    }];
    let mut transitions: Vec<Option<Vec<(usize, usize)>>> = vec![None];
    let mut undecided = false;
    let mut frontier: std::collections::VecDeque<usize> = [0].into();
    let mut steps = 0usize;
    while let Some(idx) = frontier.pop_front() {
        let out_of_time = deadline.map(|d| std::time::Instant::now() >= d).unwrap_or(false);
        if steps >= max_steps || out_of_time {
            frontier.push_front(idx);
            break;
        }
        steps += 1;
        let pushed = pushforward(&classes[idx].module, q)?;
        let dec = decompose(&pushed, seed)?;
        if dec.undecided {
            undecided = true;
        }
        let mut row: Vec<(usize, usize)> = Vec::new();
        for class in dec.classes()? {
            let cand = class.representative;
            let found = find_class(&classes, &cand)?;
            let target = match found {
                Some(t) => t,
                None => {
                    let t = classes.len();
                    classes.push(NetClass {
                        module: cand,
                        name: format!("C{t}"),
                    });
                    transitions.push(None);
                    frontier.push_back(t);
                    t
                }
            };
            row.push((target, class.multiplicity));
        }
        transitions[idx] = Some(row);
    }
    let complete = frontier.is_empty() && transitions.iter().all(|t| t.is_some());
    Ok(FNet {
        classes,
        transitions,
        complete,
        undecided,
        seed_unmixed,
    })
}

/// Outcome of the MCM search.
#[derive(Debug, Clone)]
pub enum McmOutcome {
    /// A module with a verified full-depth certificate.
    Found {
        mcm: GradedModule,
        depth: usize,
        source_class: String,
        h_value: u64,
    },
    /// Budget exhausted: the partial net census and the smallest `h` seen.
    Exhausted { net: FNet, min_h: u64 },
}

/// Search for an MCM over `ring`. Dimension at most two goes through the
/// direct canonical-module construction; dimension three explores the net
/// from the ring itself, testing `h` on every class of full dimension.
pub fn mcm_search(ring: &Arc<GradedRing>, max_steps: usize, seed: u64) -> Result<McmOutcome> {
    mcm_search_with_deadline(ring, max_steps, seed, None)
}

/// As `mcm_search`, stopping early when a wall-clock deadline passes.
pub fn mcm_search_with_deadline(
    ring: &Arc<GradedRing>,
    max_steps: usize,
    seed: u64,
    deadline: Option<std::time::Instant>,
) -> Result<McmOutcome> {
    let d = ring.dimension();
    let r_mod = GradedModule::ring_module(ring.clone());
    if d <= 2 {
        let mcm = mcm_from_module(&r_mod)?;
        return Ok(McmOutcome::Found {
            mcm,
            depth: d,
            source_class: "ring".to_string(),
            h_value: 0,
        });
    }
    if d > 3 {
        return Err(Error::Unsupported(
            "MCM search supports dimension at most three".into(),
        ));
    }
    let p = ring.p();
    let mut classes = vec![NetClass {
        module: normalize(&r_mod),
        name: "C0".to_string(),
    }];
    let mut transitions: Vec<Option<Vec<(usize, usize)>>> = vec![None];
    let mut frontier: std::collections::VecDeque<usize> = [0].into();
    let mut undecided = false;
    let mut min_h = u64::MAX;
    let mut steps = 0usize;
    // test a class for h = 0 before expanding it further
    let mut test = |m: &GradedModule, name: &str| -> Result<Option<McmOutcome>> {
        if m.dimension().ok() != Some(d) {
            return Ok(None);
        }
        let h = h_invariant(m)?;
        min_h = min_h.min(h);
        if h == 0 {
            let mcm = mcm_from_module(m)?;
            return Ok(Some(McmOutcome::Found {
                mcm,
                depth: d,
                source_class: name.to_string(),
                h_value: 0,
            }));
        }
        Ok(None)
    };
    if let Some(found) = test(&classes[0].module.clone(), "C0")? {
        return Ok(found);
    }
    while let Some(idx) = frontier.pop_front() {
        let out_of_time = deadline.map(|d| std::time::Instant::now() >= d).unwrap_or(false);
        if steps >= max_steps || out_of_time {
            frontier.push_front(idx);
            break;
        }
        steps += 1;
        let pushed = pushforward(&classes[idx].module, p)?;
        let dec = decompose(&pushed, seed)?;
        if dec.undecided {
            undecided = true;
        }
        let mut row = Vec::new();
        for class in dec.classes()? {
            let cand = class.representative;
            let target = match find_class(&classes, &cand)? {
                Some(t) => t,
                None => {
                    let t = classes.len();
                    let name = format!("C{t}");
                    if let Some(found) = test(&cand, &name)? {
                        return Ok(found);
                    }
                    classes.push(NetClass { module: cand, name });
                    transitions.push(None);
                    frontier.push_back(t);
                    t
                }
            };
            row.push((target, class.multiplicity));
        }
        transitions[idx] = Some(row);
    }
    let complete = frontier.is_empty();
    Ok(McmOutcome::Exhausted {
        net: FNet {
            classes,
            transitions,
            complete,
            undecided,
            seed_unmixed: true,
        },
        min_h: if min_h == u64::MAX { 0 } else { min_h },
    })
}
