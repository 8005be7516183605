//! The bundled regression driver: every example target plus the structural
//! property sweeps, emitted as a pass/fail matrix. Items run independently
//! and are distributed over worker threads; output order is fixed.

use crate::report::{module_json, Status};
use frobpush::sample::{random_finite_length_module, random_poly, seeded_rng};
use frobpush::vecpoly::VecPoly;
use frobpush::{
    conjugation_check, decompose, depth, fedder_check, is_direct_summand, is_fsplit,
    is_isomorphic, iterate_pushforward, mult_matrix, net_explore, pushforward, tf_functor_fl,
    Degree, Depth, FiniteLengthModule, GradedModule, GradedRing, PolyRing, Polynomial,
    PrimeField,
};
use serde_json::{json, Value};
use std::sync::Arc;

type Item = (&'static str, fn(u64) -> (Status, Value));

fn poly_ring(p: u64, vars: &[&str]) -> Arc<GradedRing> {
    GradedRing::polynomial_ring(PolyRing::standard(PrimeField::new(p).unwrap(), vars).unwrap())
}

fn weighted_ring(p: u64, vars: &[(&str, u32)], rels: &[&str]) -> Arc<GradedRing> {
    let amb = PolyRing::new(
        PrimeField::new(p).unwrap(),
        vars.iter().map(|(n, _)| n.to_string()).collect(),
        vars.iter().map(|(_, w)| *w).collect(),
    )
    .unwrap();
    let relations: Vec<Polynomial> = rels.iter().map(|s| amb.parse(s).unwrap()).collect();
    GradedRing::new(amb, relations).unwrap()
}

fn ideal(ring: &Arc<GradedRing>, gens: &[&str]) -> GradedModule {
    let amb = ring.ambient().clone();
    let polys: Vec<Polynomial> = gens.iter().map(|s| amb.parse(s).unwrap()).collect();
    GradedModule::from_ideal(ring.clone(), &polys).unwrap()
}

fn kunz_ranks(_seed: u64) -> (Status, Value) {
    let mut checks = Vec::new();
    for (p, qs, vars) in [
        (3u64, vec![3u64, 9], vec!["x"]),
        (3, vec![3, 9], vec!["x", "y"]),
        (3, vec![3, 9], vec!["x", "y", "z"]),
        (5, vec![5], vec!["x", "y", "z"]),
    ] {
        let r = poly_ring(p, &vars);
        let s = GradedModule::ring_module(r);
        for q in qs {
            let pushed = pushforward(&s, q).unwrap();
            let expect = q.pow(vars.len() as u32);
            let ok = pushed.nrows() == 0 && pushed.ngens() as u64 == expect;
            checks.push(json!({
                "p": p, "d": vars.len(), "q": q,
                "rank": pushed.ngens(), "expected": expect, "pass": ok,
            }));
        }
    }
    let pass = checks.iter().all(|c| c["pass"] == json!(true));
    (
        if pass { Status::Ok } else { Status::Discrepancy },
        json!({"checks": checks}),
    )
}

fn persymmetry_sweep(seed: u64) -> (Status, Value) {
    let mut rng = seeded_rng(seed ^ 0x9e37);
    let mut total = 0usize;
    let mut pass = true;
    for (p, vars, q) in [
        (3u64, vec!["x"], 3u64),
        (3, vec!["x", "y"], 3),
        (3, vec!["x", "y", "z"], 3),
        (5, vec!["x", "y"], 5),
        (3, vec!["x", "y"], 9),
    ] {
        let r = poly_ring(p, &vars);
        let amb = r.ambient();
        for _ in 0..40 {
            let s = random_poly(&mut rng, amb, 4, 4);
            let d = mult_matrix(amb, &s, q).unwrap();
            total += 1;
            if !d.is_persymmetric() {
                pass = false;
            }
        }
        for _ in 0..10 {
            let s = random_poly(&mut rng, amb, 3, 3);
            let t = random_poly(&mut rng, amb, 3, 3);
            let ds = mult_matrix(amb, &s, q).unwrap();
            let dt = mult_matrix(amb, &t, q).unwrap();
            let prod_ok = ds.mul(amb, &dt) == mult_matrix(amb, &amb.mul(&s, &t), q).unwrap();
            let sum_ok = ds.add(amb, &dt) == mult_matrix(amb, &amb.add(&s, &t), q).unwrap();
            total += 1;
            if !(prod_ok && sum_ok) {
                pass = false;
            }
        }
    }
    (
        if pass { Status::Ok } else { Status::Discrepancy },
        json!({"matrices_checked": total, "pass": pass}),
    )
}

fn conjugation_sweep(seed: u64) -> (Status, Value) {
    let mut rng = seeded_rng(seed ^ 0xc0de);
    let mut total = 0usize;
    let mut pass = true;
    for (p, q, size) in [(3u64, 3u64, 2usize), (3, 3, 3), (5, 5, 2)] {
        let r = poly_ring(p, &["x", "y"]);
        let amb = r.ambient();
        for _ in 0..34 {
            let a: Vec<Vec<Polynomial>> = (0..size)
                .map(|_| (0..size).map(|_| random_poly(&mut rng, amb, 3, 2)).collect())
                .collect();
            total += 1;
            if !conjugation_check(amb, &a, q).unwrap() {
                pass = false;
            }
        }
    }
    (
        if pass { Status::Ok } else { Status::Discrepancy },
        json!({"matrices_checked": total, "pass": pass}),
    )
}

fn length_laws(seed: u64) -> (Status, Value) {
    let mut checked = 0usize;
    let mut pass = true;
    for p in [3u64, 5] {
        let ring = poly_ring(p, &["x", "y"]);
        let mut rng = seeded_rng(seed ^ p);
        for _ in 0..10 {
            let m = random_finite_length_module(&mut rng, &ring, 8);
            let l = m.length().unwrap();
            let pushed = pushforward(&m, p).unwrap();
            if pushed.length() != Some(l) {
                pass = false;
            }
            let steps = l as usize;
            let it = iterate_pushforward(&m, steps).unwrap();
            // k^l: l minimal generators and length l
            if !(it.length() == Some(l) && it.minimal_presentation().module.ngens() as u64 == l)
            {
                pass = false;
            }
            checked += 1;
        }
    }
    (
        if pass { Status::Ok } else { Status::Discrepancy },
        json!({"modules_checked": checked, "pass": pass}),
    )
}

fn tf_functor_agreement(seed: u64) -> (Status, Value) {
    let ring = poly_ring(3, &["x", "y"]);
    let mut rng = seeded_rng(seed ^ 0x7f);
    let mut pass = true;
    for _ in 0..10 {
        let m = random_finite_length_module(&mut rng, &ring, 8);
        let fl = FiniteLengthModule::from_module(&m).unwrap();
        let via_dual = tf_functor_fl(&fl, 3).unwrap();
        let direct = pushforward(&m, 3).unwrap();
        let a = via_dual.to_module();
        if is_isomorphic(&a, &direct, true).unwrap().is_none() {
            pass = false;
        }
    }
    (
        if pass { Status::Ok } else { Status::Discrepancy },
        json!({"modules_checked": 10, "pass": pass}),
    )
}

fn reg2_d2(seed: u64) -> (Status, Value) {
    let r = poly_ring(3, &["x", "y"]);
    let amb = r.ambient().clone();
    let power = |k: u32| -> GradedModule {
        let gens: Vec<String> = (0..=k)
            .map(|i| {
                let (a, b) = (k - i, i);
                match (a, b) {
                    (0, b) => format!("y^{b}"),
                    (a, 0) => format!("x^{a}"),
                    (a, b) => format!("x^{a}*y^{b}"),
                }
            })
            .collect();
        let polys: Vec<Polynomial> = gens.iter().map(|s| amb.parse(s).unwrap()).collect();
        GradedModule::from_ideal(r.clone(), &polys).unwrap()
    };
    let m1 = power(1);
    let mut items = Vec::new();
    let mut status = Status::Ok;
    // F_* S free of rank 9
    let fs = pushforward(&GradedModule::ring_module(r.clone()), 3).unwrap();
    items.push(json!({"target": "F_*S = S^9", "pass": fs.nrows() == 0 && fs.ngens() == 9}));
    for (k, m_mult, free) in [(1u32, 1usize, 8usize), (2, 3, 6), (3, 6, 3)] {
        let f = pushforward(&power(k), 3).unwrap();
        let dec = decompose(&f, seed).unwrap();
        let classes = dec.classes().unwrap();
        let mclass = classes
            .iter()
            .find(|c| c.representative.ngens() == 2)
            .map(|c| {
                c.multiplicity
                    * is_isomorphic(&c.representative, &m1, true)
                        .unwrap()
                        .is_some() as usize
            })
            .unwrap_or(0);
        let ok = dec.verify(&f) && dec.free_rank() == free && mclass == m_mult;
        if !ok {
            status = Status::Discrepancy;
        }
        items.push(json!({
            "target": format!("F_*m^{k} = m^{m_mult} + S^{free}"),
            "computed_free_rank": dec.free_rank(),
            "computed_m_multiplicity": mclass,
            "pass": ok,
        }));
    }
    // m^4: expected free rank >= 4; our computation is the audit
    let f4 = pushforward(&power(4), 3).unwrap();
    let dec4 = decompose(&f4, seed).unwrap();
    let classes4 = dec4.classes().unwrap();
    let recorded: Vec<Value> = classes4
        .iter()
        .map(|c| {
            json!({
                "module": module_json(&c.representative),
                "multiplicity": c.multiplicity,
                "shifts": c.shifts.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let free4 = dec4.free_rank();
    let matches_expectation = free4 >= 4;
    if !matches_expectation {
        status = Status::Discrepancy;
    }
    items.push(json!({
        "target": "F_*m^4 free rank >= 4 (stated without calculation)",
        "computed_free_rank": free4,
        "decomposition_verified": dec4.verify(&f4),
        "full_decomposition": recorded,
        "pass": matches_expectation,
        "note": if matches_expectation { "" } else {
            "audited: the verified decomposition has smaller free rank; \
             reporting as a discrepancy, computed decomposition recorded"
        },
    }));
    (status, json!({"items": items}))
}

fn reg2_d3(seed: u64) -> (Status, Value) {
    let r = poly_ring(3, &["x", "y", "z"]);
    let m = ideal(&r, &["x", "y", "z"]);
    let f = pushforward(&m, 3).unwrap();
    let dec = decompose(&f, seed).unwrap();
    let classes = dec.classes().unwrap();
    let m_ok = classes
        .iter()
        .any(|c| c.representative.ngens() == 3 && c.multiplicity == 1
            && is_isomorphic(&c.representative, &m, true).unwrap().is_some());
    let ok = dec.verify(&f) && dec.free_rank() == 26 && m_ok && classes.len() == 2;
    (
        if ok { Status::Ok } else { Status::Discrepancy },
        json!({"target": "F_*m = m + S^26 (three variables)", "free_rank": dec.free_rank(), "pass": ok}),
    )
}

fn cusp_p3(seed: u64) -> (Status, Value) {
    let r = weighted_ring(3, &[("x", 3), ("y", 2)], &["x^2 - y^3"]);
    let rr = GradedModule::ring_module(r.clone());
    let m = ideal(&r, &["x", "y"]);
    let mut pass = true;
    // both pushforwards decompose as three copies of m
    for module in [&rr, &m] {
        let f = pushforward(module, 3).unwrap();
        let dec = decompose(&f, seed).unwrap();
        let classes = dec.classes().unwrap();
        let ok = dec.verify(&f)
            && classes.len() == 1
            && classes[0].multiplicity == 3
            && is_isomorphic(&classes[0].representative, &m, true)
                .unwrap()
                .is_some();
        pass &= ok;
    }
    let net = net_explore(&rr, 8, 3, seed).unwrap();
    pass &= net.complete && net.classes.len() == 2;
    let fsplit_m = is_fsplit(&m, 3, seed).unwrap();
    let fsplit_r = is_fsplit(&rr, 3, seed).unwrap();
    pass &= fsplit_m && !fsplit_r;
    // not F-pure (dimension one and singular)
    pass &= !fedder_check(&r).unwrap();
    (
        if pass { Status::Ok } else { Status::Discrepancy },
        json!({
            "net_classes": net.classes.len(),
            "fsplit_maximal_ideal": fsplit_m,
            "fsplit_ring": fsplit_r,
            "pass": pass,
        }),
    )
}

fn curve_p5(seed: u64) -> (Status, Value) {
    let r = weighted_ring(5, &[("x", 4), ("y", 3)], &["x^3 - y^4"]);
    let rr = GradedModule::ring_module(r.clone());
    let q1 = ideal(&r, &["x", "y^2"]);
    let m2 = ideal(&r, &["x^2", "x*y", "y^2"]);
    let mut pass = true;
    // F_*R = (x, y^2) + (m^2)^4
    let f = pushforward(&rr, 5).unwrap();
    let dec = decompose(&f, seed).unwrap();
    let classes = dec.classes().unwrap();
    pass &= dec.verify(&f) && classes.len() == 2;
    for c in &classes {
        let is_q1 = is_isomorphic(&c.representative, &q1, true).unwrap().is_some();
        let is_m2 = is_isomorphic(&c.representative, &m2, true).unwrap().is_some();
        pass &= (is_q1 && c.multiplicity == 1) || (is_m2 && c.multiplicity == 4);
    }
    // F_*m^2 and F_*(x, y^2) are both (m^2)^5
    for module in [&m2, &q1] {
        let fm = pushforward(module, 5).unwrap();
        let decm = decompose(&fm, seed).unwrap();
        let cls = decm.classes().unwrap();
        pass &= cls.len() == 1
            && cls[0].multiplicity == 5
            && is_isomorphic(&cls[0].representative, &m2, true)
                .unwrap()
                .is_some();
    }
    // weakly F-split witnessed by m^2; three indecomposables in the net
    pass &= is_fsplit(&m2, 5, seed).unwrap();
    let net = net_explore(&rr, 10, 5, seed).unwrap();
    pass &= net.complete && net.classes.len() == 3;
    (
        if pass { Status::Ok } else { Status::Discrepancy },
        json!({"net_classes": net.classes.len(), "pass": pass}),
    )
}

fn surf_p3(seed: u64) -> (Status, Value) {
    let r = weighted_ring(3, &[("x", 1), ("y", 1), ("z", 1)], &["x^3 - y^2*z"]);
    let rr = GradedModule::ring_module(r.clone());
    let fpure = fedder_check(&r).unwrap();
    let f = pushforward(&rr, 3).unwrap();
    let dec = decompose(&f, seed).unwrap();
    let classes = dec.classes().unwrap();
    let targets = [
        ideal(&r, &["x^2", "x*y", "y^2"]),
        ideal(&r, &["x^2", "y"]),
        ideal(&r, &["x^2", "y*z"]),
    ];
    let mut matched = 0usize;
    for c in &classes {
        for t in &targets {
            if c.multiplicity == 3
                && is_isomorphic(&c.representative, t, true).unwrap().is_some()
            {
                matched += 1;
            }
        }
    }
    let pass = !fpure && dec.verify(&f) && classes.len() == 3 && matched == 3;
    (
        if pass { Status::Ok } else { Status::Discrepancy },
        json!({"f_pure": fpure, "classes": classes.len(), "matched_targets": matched, "pass": pass}),
    )
}

fn surf_p5(seed: u64) -> (Status, Value) {
    let r = weighted_ring(5, &[("x", 1), ("y", 1), ("z", 1)], &["x^3 - y^2*z"]);
    let rr = GradedModule::ring_module(r.clone());
    let q = ideal(&r, &["x^2", "y"]);
    let f = pushforward(&rr, 5).unwrap();
    let summand = is_direct_summand(&q, &f, seed).unwrap().is_some();
    let fsplit = is_fsplit(&q, 5, seed).unwrap();
    let pass = summand && fsplit;
    (
        if pass { Status::Ok } else { Status::Discrepancy },
        json!({"summand_of_FR": summand, "fsplit": fsplit, "pass": pass}),
    )
}

fn surf_p7(seed: u64) -> (Status, Value) {
    let r = weighted_ring(7, &[("x", 9), ("y", 2), ("z", 2)], &["x^2 - y^4*z^5"]);
    let rp = ideal(&r, &["y*z^2", "x"]);
    let dep = depth(&rp);
    let fsplit = is_fsplit(&rp, 7, seed).unwrap();
    let pass = dep == Depth::Finite(2) && fsplit;
    (
        if pass { Status::Ok } else { Status::Discrepancy },
        json!({"depth": 2, "fsplit": fsplit, "pass": pass}),
    )
}

fn pushforward_commutes_with_duality(seed: u64) -> (Status, Value) {
    // omega^i(F_* M) and F_*(omega^i M) agree up to iso on cusp modules
    let r = weighted_ring(3, &[("x", 3), ("y", 2)], &["x^2 - y^3"]);
    let mut rng = seeded_rng(seed ^ 0xabcd);
    let mut pass = true;
    for _ in 0..4 {
        let m = frobpush::sample::random_module(&mut rng, &r, 2, 2);
        for i in 0..=r.dimension() {
            let a = pushforward(&frobpush::para_canonical(&m, i).unwrap(), 3).unwrap();
            let b = frobpush::para_canonical(&pushforward(&m, 3).unwrap(), i).unwrap();
            if a.is_zero() != b.is_zero() {
                pass = false;
                continue;
            }
            if !a.is_zero() && is_isomorphic(&a, &b, true).unwrap().is_none() {
                pass = false;
            }
        }
        let h1 = frobpush::h_invariant(&m).unwrap();
        let h2 = frobpush::h_invariant(&pushforward(&m, 3).unwrap()).unwrap();
        if h1 != h2 {
            pass = false;
        }
    }
    (
        if pass { Status::Ok } else { Status::Discrepancy },
        json!({"modules_checked": 4, "pass": pass}),
    )
}

fn free_poly_sanity(_seed: u64) -> (Status, Value) {
    // pushforward of a free module keeps standard-basis degrees; quick sanity
    // for the block bookkeeping
    let r = poly_ring(3, &["x", "y"]);
    let s = GradedModule::free(r, vec![Degree::int(2)]);
    let f = pushforward(&s, 3).unwrap();
    let degs: Vec<String> = f.gen_degs().iter().map(|d| d.to_string()).collect();
    let ok = f.gen_degs()[0] == Degree::new(2, 3)
        && f.gen_degs().last() == Some(&Degree::int(2));
    let _ = VecPoly::zero();
    (
        if ok { Status::Ok } else { Status::Discrepancy },
        json!({"degrees": degs, "pass": ok}),
    )
}

pub fn run_suite(seed: u64, threads: usize) -> (Status, Value) {
    let items: Vec<Item> = vec![
        ("kunz-ranks", kunz_ranks),
        ("persymmetry-sweep", persymmetry_sweep),
        ("conjugation-identity", conjugation_sweep),
        ("length-laws", length_laws),
        ("dual-route-pushforward", tf_functor_agreement),
        ("regular-d2-powers", reg2_d2),
        ("regular-d3-maximal-ideal", reg2_d3),
        ("cusp-p3", cusp_p3),
        ("curve-p5", curve_p5),
        ("surface-p3", surf_p3),
        ("surface-p5", surf_p5),
        ("surface-p7-fractional-ideal", surf_p7),
        ("pushforward-duality-compat", pushforward_commutes_with_duality),
        ("pushforward-grading", free_poly_sanity),
    ];
    let n = items.len();
    let mut results: Vec<Option<(Status, Value)>> = vec![None; n];
    let chunks: Vec<Vec<usize>> = (0..threads)
        .map(|t| (0..n).filter(|i| i % threads == t).collect())
        .collect();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for chunk in &chunks {
            let items_ref = &items;
            handles.push(scope.spawn(move || {
                chunk
                    .iter()
                    .map(|&i| (i, (items_ref[i].1)(seed)))
                    .collect::<Vec<_>>()
            }));
        }
        for h in handles {
            for (i, r) in h.join().expect("suite worker") {
                results[i] = Some(r);
            }
        }
    });
    let mut status = Status::Ok;
    let mut matrix = Vec::new();
    for (i, item) in items.iter().enumerate() {
        let (s, detail) = results[i].take().expect("all items ran");
        status = status.max(s);
        matrix.push(json!({
            "item": item.0,
            "status": s.as_str(),
            "detail": detail,
        }));
    }
    (status, json!({"matrix": matrix}))
}
