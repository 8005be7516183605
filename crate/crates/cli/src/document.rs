//! Problem documents: a ring plus named modules, parsed from JSON.

use anyhow::{anyhow, bail, Context, Result};
use frobpush::{Degree, GradedModule, GradedRing, PolyRing, Polynomial, PrimeField};
use frobpush::vecpoly::VecPoly;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VariableSpec {
    pub name: String,
    #[serde(default = "one")]
    pub weight: u32,
}

fn one() -> u32 {
    1
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct ModuleSpec {
    /// Ideal generators (module = that submodule of the ring).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
    /// Presentation rows: relations as rows over the generators.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    /// Generator degrees, `"n"` or `"n/d"`; defaults to all zero.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_degrees: Option<Vec<String>>,
    /// Define this module as the Frobenius pushforward of another one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pushforward_of: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemDocument {
    pub characteristic: u64,
    pub variables: Vec<VariableSpec>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleSpec>,
}

pub fn parse_degree(s: &str) -> Result<Degree> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let num: i64 = a.trim().parse().context("degree numerator")?;
        let den: u64 = b.trim().parse().context("degree denominator")?;
        Ok(Degree::new(num, den))
    } else {
        Ok(Degree::int(s.parse().context("integer degree")?))
    }
}

impl ProblemDocument {
    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn build_ring(&self) -> Result<Arc<GradedRing>> {
        let field = PrimeField::new(self.characteristic)
            .map_err(|e| anyhow!("bad characteristic: {e}"))?;
        let names: Vec<String> = self.variables.iter().map(|v| v.name.clone()).collect();
        let weights: Vec<u32> = self.variables.iter().map(|v| v.weight).collect();
        let amb = PolyRing::new(field, names, weights).map_err(|e| anyhow!("ring: {e}"))?;
        let mut rels = Vec::new();
        for (i, r) in self.relations.iter().enumerate() {
            let f = amb
                .parse(r)
                .map_err(|e| anyhow!("relation {}: {e}", i + 1))?;
            rels.push(f);
        }
        GradedRing::new(amb, rels).map_err(|e| anyhow!("ring: {e}"))
    }

    pub fn build_module(&self, ring: &Arc<GradedRing>, name: &str) -> Result<GradedModule> {
        let Some(spec) = self.modules.get(name) else {
            bail!("document defines no module named '{name}'");
        };
        if let Some(base) = &spec.pushforward_of {
            let q = spec
                .q
                .ok_or_else(|| anyhow!("module '{name}': pushforward_of requires q"))?;
            let inner = self.build_module(ring, base)?;
            return frobpush::pushforward(&inner, q)
                .map_err(|e| anyhow!("module '{name}': {e}"));
        }
        let amb = ring.ambient();
        match (&spec.ideal, &spec.matrix) {
            (Some(gens), None) => {
                let polys: Vec<Polynomial> = gens
                    .iter()
                    .enumerate()
                    .map(|(i, g)| {
                        amb.parse(g)
                            .map_err(|e| anyhow!("module '{name}' generator {}: {e}", i + 1))
                    })
                    .collect::<Result<_>>()?;
                GradedModule::from_ideal(ring.clone(), &polys)
                    .map_err(|e| anyhow!("module '{name}': {e}"))
            }
            (None, Some(matrix)) => {
                let ncols = matrix.iter().map(|r| r.len()).max().unwrap_or(0);
                let degs: Vec<Degree> = match &spec.generator_degrees {
                    Some(ds) => ds
                        .iter()
                        .map(|d| parse_degree(d))
                        .collect::<Result<_>>()?,
                    None => vec![Degree::zero(); ncols],
                };
                if degs.len() != ncols && !(matrix.is_empty() && !degs.is_empty()) {
                    bail!(
                        "module '{name}': {ncols} columns but {} generator degrees",
                        degs.len()
                    );
                }
                let mut rows = Vec::new();
                for (i, row) in matrix.iter().enumerate() {
                    let mut comps = Vec::new();
                    for (j, entry) in row.iter().enumerate() {
                        let p = amb.parse(entry).map_err(|e| {
                            anyhow!("module '{name}' entry ({},{}): {e}", i + 1, j + 1)
                        })?;
                        comps.push((j as u32, p));
                    }
                    rows.push(VecPoly::from_components(amb, &comps));
                }
                GradedModule::new(ring.clone(), degs, rows)
                    .map_err(|e| anyhow!("module '{name}': {e}"))
            }
            (None, None) if name == "R" => Ok(GradedModule::ring_module(ring.clone())),
            _ => bail!("module '{name}' must give exactly one of 'ideal' or 'matrix'"),
        }
    }
}
