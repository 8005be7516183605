//! Higher para-canonical modules, the `h` invariant, and the construction of
//! maximal Cohen-Macaulay modules from modules with `h = 0`.
//!
//! For a module `M` over `R = T/I` with `d = dim R` and `n = dim T`, the
//! `i`-th para-canonical module is realized by graded duality over the
//! ambient ring as `Ext^{n-d+i}_T(M, T(-w))`, `w` the sum of the variable
//! weights. Grothendieck vanishing bounds the nonzero range by the dimension
//! and depth of `M`.

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::module::{Depth, GradedModule};
use crate::resolution::{depth, ext_module, minimal_resolution};

/// `omega^i(M) = Ext^{n-d+i}_T(M, T(-w))`, zero outside `0..=d`.
pub fn para_canonical(module: &GradedModule, i: usize) -> Result<GradedModule> {
    let ring = module.ring().clone();
    let d = ring.dimension();
    if i > d {
        return Ok(GradedModule::zero_module(ring));
    }
    let n = ring.nvars();
    let w = ring.weight_sum() as i64;
    ext_module(n - d + i, module, &Degree::int(w))
}

/// `h(M)`: the length of the largest finite-length submodule of
/// `omega^1(M)`. Vanishes exactly when `omega^1(M)` is zero or has positive
/// depth.
pub fn h_invariant(module: &GradedModule) -> Result<u64> {
    Ok(para_canonical(module, 1)?.lambda0())
}

/// Build an MCM from a module of full dimension: returns `omega^0(M)`
/// together with a verified depth certificate.
///
/// In dimension three the precondition `h(M) = 0` is required (refused
/// otherwise); in dimension at most two no precondition is needed. A failed
/// depth assertion is reported as a hard error carrying a reproduction
/// bundle, since it would contradict the supporting theory.
pub fn mcm_from_module(module: &GradedModule) -> Result<GradedModule> {
    let ring = module.ring().clone();
    let d = ring.dimension();
    let dim_m = module.dimension()?;
    if dim_m != d {
        return Err(Error::Unsupported(format!(
            "module has dimension {dim_m}, ring has dimension {d}; need a full-dimensional module"
        )));
    }
    if d > 3 {
        return Err(Error::Unsupported(
            "MCM construction is supported up to dimension three".into(),
        ));
    }
    if d == 3 {
        let h = h_invariant(module)?;
        if h > 0 {
            return Err(Error::Unsupported(format!(
                "h(M) = {h} > 0: omega^1(M) has a finite-length submodule, refusing"
            )));
        }
    }
    let omega0 = para_canonical(module, 0)?;
    let dep = depth(&omega0);
    if dep != Depth::Finite(d) {
        return Err(Error::TheoremContradiction(reproduction_bundle(
            module, &omega0, dep, d,
        )));
    }
    Ok(omega0)
}

fn reproduction_bundle(
    module: &GradedModule,
    omega0: &GradedModule,
    got: Depth,
    want: usize,
) -> String {
    let ring = module.ring();
    let amb = ring.ambient();
    let mut s = String::new();
    s.push_str(&format!("expected depth {want}, computed {got}\n"));
    s.push_str(&format!(
        "ring: F_{}[{}], weights {:?}, relations [{}]\n",
        ring.p(),
        amb.var_names().join(", "),
        amb.weights(),
        ring.relations()
            .iter()
            .map(|f| amb.format(f))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    s.push_str(&format!(
        "module generators (degrees): {:?}\n",
        module.gen_degs().iter().map(|d| d.to_string()).collect::<Vec<_>>()
    ));
    for row in module.rows() {
        s.push_str(&format!("  row: {}\n", row.format(amb)));
    }
    let res = minimal_resolution(omega0, true, ring.nvars() + 1);
    s.push_str(&format!("omega^0 resolution ranks: {:?}\n", res.ranks()));
    s
}
