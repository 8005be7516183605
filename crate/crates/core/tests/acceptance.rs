//! End-to-end acceptance suite: every bundled target and property sweep at
//! full scale, one pass/fail line per criterion.
//!
//! Criterion 6 contains one audited value (the fourth power of the maximal
//! ideal in two variables) where the computed, certificate-verified
//! decomposition disagrees with the stated expectation; that item is
//! reported as a discrepancy with the computation recorded, and the suite
//! treats surfacing the discrepancy as the required behavior.

use frobpush::sample::{
    random_finite_length_module, random_module, random_poly, random_submodule_gens, seeded_rng,
};
use frobpush::vecpoly::VecPoly;
use frobpush::*;
use std::sync::Arc;
use std::time::Instant;

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

fn report(criterion: &str, outcome: &str, t0: Instant) {
    println!(
        "[{criterion}] {outcome} ({:.2}s)",
        t0.elapsed().as_secs_f64()
    );
}

#[test]
fn criterion_01_kunz_ranks() {
    let t0 = Instant::now();
    for (p, qs, dims) in [(3u64, vec![3u64, 9], vec![1usize, 2, 3]), (5, vec![5], vec![1, 2, 3])]
    {
        for &d in &dims {
            let vars: Vec<String> = (0..d).map(|i| format!("x{i}")).collect();
            let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
            let r = poly_ring(p, &var_refs);
            let s = GradedModule::ring_module(r);
            for &q in &qs {
                let pushed = pushforward(&s, q).unwrap();
                assert_eq!(pushed.nrows(), 0, "pushforward of free stays free");
                assert_eq!(pushed.ngens() as u64, q.pow(d as u32), "rank q^d");
            }
        }
    }
    report("criterion 1", "PASS: pushforward of the ring is free of rank q^d", t0);
}

#[test]
fn criterion_02_persymmetry_and_ring_hom() {
    let t0 = Instant::now();
    let mut rng = seeded_rng(0x2222);
    let combos: Vec<(u64, usize, u64)> = vec![
        (3, 1, 3),
        (3, 2, 3),
        (3, 3, 3),
        (3, 1, 9),
        (3, 2, 9),
        (3, 3, 9),
        (5, 1, 5),
        (5, 2, 5),
        (5, 3, 5),
    ];
    let mut checked = 0usize;
    'outer: for round in 0.. {
        for &(p, d, q) in &combos {
            let vars: Vec<String> = (0..d).map(|i| format!("x{i}")).collect();
            let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
            let r = poly_ring(p, &var_refs);
            let amb = r.ambient();
            let s = random_poly(&mut rng, amb, 4, 4);
            let m = mult_matrix(amb, &s, q).unwrap();
            assert!(m.is_persymmetric(), "round {round}: D(s) persymmetric");
            checked += 1;
            if checked >= 1000 {
                break 'outer;
            }
        }
    }
    let mut pairs = 0usize;
    'outer2: loop {
        for &(p, d, q) in &combos {
            let vars: Vec<String> = (0..d).map(|i| format!("x{i}")).collect();
            let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
            let r = poly_ring(p, &var_refs);
            let amb = r.ambient();
            let s = random_poly(&mut rng, amb, 3, 3);
            let t = random_poly(&mut rng, amb, 3, 3);
            let ds = mult_matrix(amb, &s, q).unwrap();
            let dt = mult_matrix(amb, &t, q).unwrap();
            assert_eq!(
                ds.mul(amb, &dt),
                mult_matrix(amb, &amb.mul(&s, &t), q).unwrap(),
                "D(s)D(t) = D(st)"
            );
            assert_eq!(
                ds.add(amb, &dt),
                mult_matrix(amb, &amb.add(&s, &t), q).unwrap(),
                "D(s)+D(t) = D(s+t)"
            );
            pairs += 1;
            if pairs >= 200 {
                break 'outer2;
            }
        }
    }
    report(
        "criterion 2",
        "PASS: 1000 multiplication matrices persymmetric; 200 ring-homomorphism identities exact",
        t0,
    );
}

#[test]
fn criterion_03_conjugation_identity() {
    let t0 = Instant::now();
    let mut rng = seeded_rng(0x3333);
    let mut checked = 0usize;
    'outer: loop {
        for (p, q) in [(3u64, 3u64), (5, 5)] {
            for size in 1..=3usize {
                let r = poly_ring(p, &["x", "y"]);
                let amb = r.ambient();
                let a: Vec<Vec<Polynomial>> = (0..size)
                    .map(|_| {
                        (0..size)
                            .map(|_| random_poly(&mut rng, amb, 3, 2))
                            .collect()
                    })
                    .collect();
                assert!(
                    conjugation_check(amb, &a, q).unwrap(),
                    "conjugation identity on a random {size}x{size} matrix, q={q}"
                );
                checked += 1;
                if checked >= 500 {
                    break 'outer;
                }
            }
        }
    }
    report(
        "criterion 3",
        "PASS: exchange conjugation identity on 500 random square matrices",
        t0,
    );
}

#[test]
fn criterion_04_length_laws() {
    let t0 = Instant::now();
    let mut count = 0usize;
    for p in [3u64, 5] {
        let ring = poly_ring(p, &["x", "y"]);
        let mut rng = seeded_rng(0x4444 + p);
        for _ in 0..25 {
            let m = random_finite_length_module(&mut rng, &ring, 12);
            let l = m.length().unwrap();
            let pushed = pushforward(&m, p).unwrap();
            assert_eq!(pushed.length(), Some(l), "length preserved");
            let it = iterate_pushforward(&m, l as usize).unwrap();
            let mp = it.minimal_presentation().module;
            assert_eq!(it.length(), Some(l), "iterated length preserved");
            assert_eq!(mp.ngens() as u64, l, "F^n M is a vector space k^l");
            count += 1;
        }
    }
    report(
        "criterion 4",
        &format!("PASS: length laws exact on {count} random finite-length modules"),
        t0,
    );
}

#[test]
fn criterion_05_dual_route_agrees_with_pushforward() {
    let t0 = Instant::now();
    let mut count = 0usize;
    for p in [3u64, 5] {
        let ring = poly_ring(p, &["x", "y"]);
        let mut rng = seeded_rng(0x5555 + p);
        for _ in 0..25 {
            let m = random_finite_length_module(&mut rng, &ring, 10);
            let fl = FiniteLengthModule::from_module(&m).unwrap();
            let via_dual = tf_functor_fl(&fl, p).unwrap();
            let direct = pushforward(&m, p).unwrap();
            let iso = is_isomorphic(&via_dual.to_module(), &direct, true).unwrap();
            assert!(iso.is_some(), "dual route isomorphic to the pushforward");
            count += 1;
        }
    }
    report(
        "criterion 5",
        &format!("PASS: Matlis-dual route matches the pushforward on {count} modules (certified isos)"),
        t0,
    );
}

fn ideal_power(r: &Arc<GradedRing>, k: u32) -> GradedModule {
    let amb = r.ambient().clone();
    let gens: Vec<Polynomial> = (0..=k)
        .map(|i| {
            let x = amb.parse("x").unwrap();
            let y = amb.parse("y").unwrap();
            amb.mul(&amb.pow(&x, (k - i) as u64), &amb.pow(&y, i as u64))
        })
        .collect();
    GradedModule::from_ideal(r.clone(), &gens).unwrap()
}

#[test]
fn criterion_06_regular_ring_targets() {
    let t0 = Instant::now();
    let r = poly_ring(3, &["x", "y"]);
    let m1 = ideal_power(&r, 1);
    // F_* S is S^9
    let fs = pushforward(&GradedModule::ring_module(r.clone()), 3).unwrap();
    assert_eq!((fs.ngens(), fs.nrows()), (9, 0));
    for (k, m_mult, free) in [(1u32, 1usize, 8usize), (2, 3, 6), (3, 6, 3)] {
        let f = pushforward(&ideal_power(&r, k), 3).unwrap();
        let dec = decompose(&f, 6).unwrap();
        assert!(dec.verify(&f), "decomposition certificates verify");
        assert!(!dec.undecided);
        assert_eq!(dec.free_rank(), free, "free rank of F_*m^{k}");
        let classes = dec.classes().unwrap();
        let mclass = classes
            .iter()
            .find(|c| {
                is_isomorphic(&c.representative, &m1, true)
                    .unwrap()
                    .is_some()
            })
            .expect("a maximal-ideal class");
        assert_eq!(mclass.multiplicity, m_mult, "m-multiplicity in F_*m^{k}");
    }
    // the audited item: expected free rank >= 4, computed decomposition is
    // S + m^7 + m^2 with free rank 1 (verified); surfaced as a discrepancy
    let f4 = pushforward(&ideal_power(&r, 4), 3).unwrap();
    let dec4 = decompose(&f4, 6).unwrap();
    assert!(dec4.verify(&f4), "m^4 decomposition certificates verify");
    assert!(!dec4.undecided);
    assert!(
        dec4.pieces.iter().all(|p| p.certified),
        "every m^4 piece carries a local-endomorphism certificate"
    );
    let classes4 = dec4.classes().unwrap();
    let mut recorded = String::new();
    for c in &classes4 {
        recorded.push_str(&format!(
            " {}x(gens {}, rows {})",
            c.multiplicity,
            c.representative.ngens(),
            c.representative.nrows()
        ));
    }
    let expected_met = dec4.free_rank() >= 4;
    if expected_met {
        report("criterion 6", "PASS: all regular-ring targets including m^4", t0);
    } else {
        // cross-checks backing the audit: m-multiplicity 7 and an m^2 class
        let m2 = ideal_power(&r, 2);
        let m_mult: usize = classes4
            .iter()
            .filter(|c| is_isomorphic(&c.representative, &m1, true).unwrap().is_some())
            .map(|c| c.multiplicity)
            .sum();
        let m2_mult: usize = classes4
            .iter()
            .filter(|c| is_isomorphic(&c.representative, &m2, true).unwrap().is_some())
            .map(|c| c.multiplicity)
            .sum();
        assert_eq!((m_mult, m2_mult, dec4.free_rank()), (7, 1, 1));
        report(
            "criterion 6",
            &format!(
                "PASS with DISCREPANCY: stated free rank >= 4 for F_*m^4, computed verified \
                 decomposition is{recorded} (free rank 1 = S + m^7 + m^2); \
                 recorded as the audit"
            ),
            t0,
        );
    }
    // d = 3: F_* m = m + S^26
    let r3 = poly_ring(3, &["x", "y", "z"]);
    let m3 = ideal(&r3, &["x", "y", "z"]);
    let f3 = pushforward(&m3, 3).unwrap();
    let dec3 = decompose(&f3, 6).unwrap();
    assert!(dec3.verify(&f3));
    assert_eq!(dec3.free_rank(), 26);
    let classes3 = dec3.classes().unwrap();
    assert!(classes3.iter().any(|c| c.multiplicity == 1
        && is_isomorphic(&c.representative, &m3, true).unwrap().is_some()));
    report("criterion 6", "PASS: F_*m = m + S^26 in three variables", t0);
}

#[test]
fn criterion_07_curve_targets() {
    let t0 = Instant::now();
    // cusp at p = 3
    let r = weighted_ring(3, &[("x", 3), ("y", 2)], &["x^2 - y^3"]);
    let rr = GradedModule::ring_module(r.clone());
    let m = ideal(&r, &["x", "y"]);
    for module in [&rr, &m] {
        let f = pushforward(module, 3).unwrap();
        let dec = decompose(&f, 7).unwrap();
        assert!(dec.verify(&f));
        let classes = dec.classes().unwrap();
        assert_eq!(classes.len(), 1, "single class");
        assert_eq!(classes[0].multiplicity, 3, "three copies");
        assert!(is_isomorphic(&classes[0].representative, &m, true)
            .unwrap()
            .is_some());
    }
    let net = net_explore(&rr, 8, 3, 7).unwrap();
    assert!(net.complete && !net.undecided);
    assert_eq!(net.classes.len(), 2, "net of R and m");
    assert!(is_fsplit(&m, 3, 7).unwrap(), "m is F-split");
    assert!(!is_fsplit(&rr, 3, 7).unwrap(), "R is not F-split");
    // x^3 = y^4 at p = 5
    let r5 = weighted_ring(5, &[("x", 4), ("y", 3)], &["x^3 - y^4"]);
    let rr5 = GradedModule::ring_module(r5.clone());
    let q1 = ideal(&r5, &["x", "y^2"]);
    let m2 = ideal(&r5, &["x^2", "x*y", "y^2"]);
    let f = pushforward(&rr5, 5).unwrap();
    let dec = decompose(&f, 7).unwrap();
    assert!(dec.verify(&f));
    let classes = dec.classes().unwrap();
    assert_eq!(classes.len(), 2);
    for c in &classes {
        if is_isomorphic(&c.representative, &q1, true).unwrap().is_some() {
            assert_eq!(c.multiplicity, 1, "(x, y^2) once");
        } else {
            assert!(is_isomorphic(&c.representative, &m2, true).unwrap().is_some());
            assert_eq!(c.multiplicity, 4, "(m^2)^4");
        }
    }
    for module in [&m2, &q1] {
        let fm = pushforward(module, 5).unwrap();
        let decm = decompose(&fm, 7).unwrap();
        let cls = decm.classes().unwrap();
        assert_eq!(cls.len(), 1);
        assert_eq!(cls[0].multiplicity, 5, "(m^2)^5");
        assert!(is_isomorphic(&cls[0].representative, &m2, true)
            .unwrap()
            .is_some());
    }
    assert!(is_fsplit(&m2, 5, 7).unwrap(), "m^2 is F-split");
    let net5 = net_explore(&rr5, 10, 5, 7).unwrap();
    assert!(net5.complete);
    assert_eq!(net5.classes.len(), 3, "three indecomposables");
    report("criterion 7", "PASS: cusp (p=3) and x^3=y^4 (p=5) targets", t0);
}

#[test]
fn criterion_08_surface_targets() {
    let t0 = Instant::now();
    // x^3 = y^2 z at p = 3
    let r = weighted_ring(3, &[("x", 1), ("y", 1), ("z", 1)], &["x^3 - y^2*z"]);
    assert!(!fedder_check(&r).unwrap(), "not F-pure at p = 3");
    let rr = GradedModule::ring_module(r.clone());
    let f = pushforward(&rr, 3).unwrap();
    let dec = decompose(&f, 8).unwrap();
    assert!(dec.verify(&f));
    let classes = dec.classes().unwrap();
    assert_eq!(classes.len(), 3);
    let targets = [
        ideal(&r, &["x^2", "x*y", "y^2"]),
        ideal(&r, &["x^2", "y"]),
        ideal(&r, &["x^2", "y*z"]),
    ];
    for target in &targets {
        let found = classes.iter().find(|c| {
            is_isomorphic(&c.representative, target, true)
                .unwrap()
                .is_some()
        });
        let found = found.expect("stated summand appears");
        assert_eq!(found.multiplicity, 3, "each with multiplicity three");
    }
    report("criterion 8", "PASS: p=3 surface decomposition and Fedder", t0);
    // p = 5: (x^2, y) splits off F_*R and is F-split
    let r5 = weighted_ring(5, &[("x", 1), ("y", 1), ("z", 1)], &["x^3 - y^2*z"]);
    let rr5 = GradedModule::ring_module(r5.clone());
    let q5 = ideal(&r5, &["x^2", "y"]);
    let f5 = pushforward(&rr5, 5).unwrap();
    assert!(is_direct_summand(&q5, &f5, 8).unwrap().is_some());
    assert!(is_fsplit(&q5, 5, 8).unwrap());
    report("criterion 8", "PASS: p=5 surface summand and F-splitness", t0);
    // p = 7: x^2 = y^4 z^5, the fractional ideal (yz^2, x) is an F-split MCM
    let r7 = weighted_ring(7, &[("x", 9), ("y", 2), ("z", 2)], &["x^2 - y^4*z^5"]);
    let rp = ideal(&r7, &["y*z^2", "x"]);
    assert_eq!(depth(&rp), Depth::Finite(2), "depth two: an MCM");
    assert!(is_fsplit(&rp, 7, 8).unwrap(), "F-split");
    report("criterion 8", "PASS: p=7 fractional ideal is an F-split MCM", t0);
}

#[test]
fn criterion_09_para_canonical_properties() {
    let t0 = Instant::now();
    let rings: Vec<Arc<GradedRing>> = vec![
        poly_ring(3, &["x", "y"]),
        poly_ring(3, &["x", "y", "z"]),
        weighted_ring(3, &[("x", 1), ("y", 1), ("z", 1), ("u", 1)], &["x*z", "x*u", "y*z", "y*u"]),
        weighted_ring(3, &[("x", 1), ("y", 1), ("z", 1), ("u", 1)], &["x*u - y*z"]),
    ];
    let mut rng = seeded_rng(0x9999);
    let mut checked = 0usize;
    while checked < 30 {
        let ring = &rings[checked % rings.len()];
        let d = ring.dimension();
        let m = random_module(&mut rng, ring, 2, 3);
        eprintln!("[c9] {checked}: ring nvars={} gens={} rows={} t={:.2}s", ring.nvars(), m.ngens(), m.nrows(), t0.elapsed().as_secs_f64());
        let dim_m = m.dimension().unwrap();
        let dep = match depth(&m) {
            Depth::Finite(x) => x,
            Depth::Infinite => continue,
        };
        let omegas: Vec<GradedModule> = (0..=d)
            .map(|i| para_canonical(&m, i).unwrap())
            .collect();
        // vanishing window
        for (i, w) in omegas.iter().enumerate() {
            let inside = i + dim_m >= d && i + dep <= d;
            assert_eq!(
                !w.is_zero(),
                inside,
                "window at i={i}: dim={dim_m} depth={dep} d={d}"
            );
        }
        // dimension bound for i >= 1 and unmixedness of omega^0
        for (i, w) in omegas.iter().enumerate().skip(1) {
            if !w.is_zero() {
                assert!(w.dimension().unwrap() <= d - i, "dim bound at i={i}");
            }
        }
        if !omegas[0].is_zero() {
            let (_, kernel) = omegas[0].unmixed_quotient().unwrap();
            assert!(kernel.is_zero(), "omega^0 is unmixed");
            if dim_m == d && d >= 2 {
                assert!(depth(&omegas[0]).at_least(2), "omega^0 has depth >= 2");
            }
        }
        eprintln!("[c9] {checked}: windows done t={:.2}s", t0.elapsed().as_secs_f64());
        // Euler characteristic of the long exact sequence for N inside M
        let gens = random_submodule_gens(&mut rng, &m, 2);
        if !gens.is_empty() {
            eprintln!("[c9] {checked}: submodule start t={:.2}s", t0.elapsed().as_secs_f64());
            let (n, incl) = m.submodule(&gens).unwrap();
            let q = m.quotient(&incl).unwrap();
            eprintln!("[c9] {checked}: submodule n gens={} rows={} t={:.2}s", n.ngens(), n.nrows(), t0.elapsed().as_secs_f64());
            let weights = ring.ambient().weights().to_vec();
            let mut acc = HilbertSeries::zero(weights.clone());
            for i in 0..=d {
                let sign = if i % 2 == 0 { 1i64 } else { -1 };
                for (module, msign) in [(&n, 1i64), (&m, -1), (&q, 1)] {
                    eprintln!("[c9] {checked}: para i={i} sign={msign} t={:.2}s", t0.elapsed().as_secs_f64());
                    let w = para_canonical(module, i).unwrap();
                    let hs = w.hilbert_series();
                    acc = acc.add(&HilbertSeries::from_numer(
                        hs.numer.iter().map(|(k, c)| (*k, c * sign * msign)).collect(),
                        weights.clone(),
                    ));
                }
            }
            assert!(acc.is_zero(), "long-exact-sequence Euler characteristic");
        }
        checked += 1;
    }
    report(
        "criterion 9",
        "PASS: window, dimension bounds, unmixedness, depth, and LES Euler characteristic on 30 modules",
        t0,
    );
}

#[test]
fn criterion_10_mcm_theorems() {
    let t0 = Instant::now();
    // dimension two: the two-plane ring has depth one; omega^0 has depth two
    let r2 = weighted_ring(
        3,
        &[("x", 1), ("y", 1), ("z", 1), ("u", 1)],
        &["x*z", "x*u", "y*z", "y*u"],
    );
    let m2 = GradedModule::ring_module(r2.clone());
    assert_eq!(depth(&m2), Depth::Finite(1), "depth-one witness");
    let omega = mcm_from_module(&m2).unwrap();
    assert_eq!(depth(&omega), Depth::Finite(2));
    // dimension three: twenty random full-dimensional modules with h = 0
    let r3 = poly_ring(3, &["x", "y", "z"]);
    let mut rng = seeded_rng(0xaaaa);
    let mut found = 0usize;
    let mut tried = 0usize;
    while found < 20 {
        tried += 1;
        assert!(tried < 4000, "sampler must find full-dimensional h=0 modules");
        let m = random_module(&mut rng, &r3, 3, 3);
        if m.dimension().ok() != Some(3) {
            continue;
        }
        if h_invariant(&m).unwrap() != 0 {
            continue;
        }
        let omega = mcm_from_module(&m).unwrap();
        assert_eq!(depth(&omega), Depth::Finite(3), "a depth-three certificate");
        found += 1;
    }
    report(
        "criterion 10",
        &format!("PASS: canonical MCM construction certified on the depth-one witness and {found} random h=0 modules"),
        t0,
    );
}

#[test]
fn criterion_11_pushforward_duality_compatibility() {
    let t0 = Instant::now();
    let rings = vec![
        weighted_ring(3, &[("x", 3), ("y", 2)], &["x^2 - y^3"]),
        weighted_ring(3, &[("x", 1), ("y", 1), ("z", 1)], &["x^3 - y^2*z"]),
    ];
    let mut rng = seeded_rng(0xbbbb);
    let mut checked = 0usize;
    while checked < 20 {
        let ring = &rings[checked % rings.len()];
        let p = ring.p();
        let d = ring.dimension();
        let m = random_module(&mut rng, ring, 2, 2);
        let pushed = pushforward(&m, p).unwrap();
        for i in 0..=d {
            let a = pushforward(&para_canonical(&m, i).unwrap(), p).unwrap();
            let b = para_canonical(&pushed, i).unwrap();
            assert_eq!(a.is_zero(), b.is_zero(), "vanishing agrees at i={i}");
            if !a.is_zero() {
                let iso = is_isomorphic(&a, &b, true).unwrap();
                assert!(iso.is_some(), "pushforward commutes with duality at i={i}");
            }
        }
        assert_eq!(
            h_invariant(&m).unwrap(),
            h_invariant(&pushed).unwrap(),
            "h is a Frobenius invariant"
        );
        checked += 1;
    }
    report(
        "criterion 11",
        "PASS: pushforward commutes with para-canonical modules (certified isos) and preserves h on 20 modules",
        t0,
    );
}

#[test]
fn criterion_12_depth_preservation() {
    let t0 = Instant::now();
    // the acceptance module pool: rings and modules from the other criteria
    let cusp = weighted_ring(3, &[("x", 3), ("y", 2)], &["x^2 - y^3"]);
    let surf = weighted_ring(3, &[("x", 1), ("y", 1), ("z", 1)], &["x^3 - y^2*z"]);
    let surf7 = weighted_ring(7, &[("x", 9), ("y", 2), ("z", 2)], &["x^2 - y^4*z^5"]);
    let t2 = poly_ring(3, &["x", "y"]);
    let t3 = poly_ring(3, &["x", "y", "z"]);
    let pool: Vec<GradedModule> = vec![
        GradedModule::ring_module(t2.clone()),
        GradedModule::residue_field(t2.clone()),
        ideal(&t2, &["x", "y"]),
        ideal(&t3, &["x", "y", "z"]),
        GradedModule::ring_module(cusp.clone()),
        ideal(&cusp, &["x", "y"]),
        GradedModule::ring_module(surf.clone()),
        ideal(&surf, &["x^2", "y"]),
        ideal(&surf, &["x^2", "y*z"]),
        ideal(&surf7, &["y*z^2", "x"]),
    ];
    let mut mcm_seen = 0usize;
    for m in &pool {
        let p = m.ring().p();
        let before = depth(m);
        let after = depth(&pushforward(m, p).unwrap());
        assert_eq!(before, after, "depth preserved under pushforward");
        let ring_dim = m.ring().dimension();
        if before == Depth::Finite(ring_dim) {
            mcm_seen += 1;
            assert_eq!(after, Depth::Finite(ring_dim), "MCM stays MCM");
        }
    }
    report(
        "criterion 12",
        &format!("PASS: depth preserved on {} modules ({mcm_seen} MCM witnesses)", pool.len()),
        t0,
    );
}

#[test]
fn mcm_search_certificates_and_census() {
    // not numbered: the search driver's contract — any returned module has a
    // verified full-depth certificate; exhaustion yields a replayable census
    let t0 = Instant::now();
    let r2 = weighted_ring(
        3,
        &[("x", 1), ("y", 1), ("z", 1), ("u", 1)],
        &["x*z", "x*u", "y*z", "y*u"],
    );
    match mcm_search(&r2, 8, 12).unwrap() {
        McmOutcome::Found { mcm, depth: d, .. } => {
            assert_eq!(d, 2);
            assert_eq!(depth(&mcm), Depth::Finite(2));
        }
        other => panic!("expected a certified find, got {other:?}"),
    }
    let r3 = poly_ring(3, &["x", "y", "z"]);
    match mcm_search(&r3, 8, 12).unwrap() {
        McmOutcome::Found { mcm, depth: d, h_value, .. } => {
            assert_eq!((d, h_value), (3, 0));
            assert_eq!(depth(&mcm), Depth::Finite(3));
        }
        other => panic!("expected a certified find, got {other:?}"),
    }
    report("mcm-search", "PASS: returned modules carry verified depth certificates", t0);
}

#[test]
fn lambda0_matches_top_ext_duality() {
    // dual-route oracle: the saturation-torsion length equals the length of
    // the top Ext into the twisted ambient ring (graded local duality)
    let t0 = Instant::now();
    let rings = vec![poly_ring(3, &["x", "y"]), weighted_ring(3, &[("x", 3), ("y", 2)], &["x^2 - y^3"])];
    let mut rng = seeded_rng(0xcccc);
    for round in 0..12 {
        let ring = &rings[round % rings.len()];
        let m = random_module(&mut rng, ring, 2, 3);
        let n = ring.nvars();
        let via_colon = m.lambda0();
        let top = ext_module(n, &m, &Degree::int(ring.weight_sum() as i64)).unwrap();
        let via_duality = top.length().expect("top Ext has finite length");
        assert_eq!(via_colon, via_duality, "two routes to lambda_0 agree");
        // the depth criterion: positive depth exactly when lambda_0 = 0
        assert_eq!(depth(&m).at_least(1), via_colon == 0);
    }
    report("lambda0-oracle", "PASS: iterated colon agrees with top-Ext duality", t0);
}

#[test]
fn pushforward_structural_invariants() {
    let t0 = Instant::now();
    let cusp = weighted_ring(3, &[("x", 3), ("y", 2)], &["x^2 - y^3"]);
    let mut rng = seeded_rng(0xdddd);
    for _ in 0..8 {
        let a = random_module(&mut rng, &cusp, 2, 2);
        let b = random_module(&mut rng, &cusp, 2, 2);
        // lambda_0 is a Frobenius invariant (perfect residue field)
        assert_eq!(pushforward(&a, 3).unwrap().lambda0(), a.lambda0());
        // pushforward commutes with direct sums up to isomorphism
        let sum = a.direct_sum(&b).unwrap();
        let lhs = pushforward(&sum, 3).unwrap();
        let rhs = pushforward(&a, 3)
            .unwrap()
            .direct_sum(&pushforward(&b, 3).unwrap())
            .unwrap();
        assert!(is_isomorphic(&lhs, &rhs, true).unwrap().is_some());
    }
    report(
        "pushforward-invariants",
        "PASS: lambda_0 preserved and direct sums respected",
        t0,
    );
}

#[test]
fn free_resolution_truncates_over_quotients() {
    let t0 = Instant::now();
    // k over the cusp has an eventually periodic resolution: truncation flag
    let cusp = weighted_ring(3, &[("x", 3), ("y", 2)], &["x^2 - y^3"]);
    let k = GradedModule::residue_field(cusp.clone());
    let res = free_resolution(&k, 4);
    assert!(res.truncated, "resolution over the quotient does not terminate");
    assert_eq!(res.diffs.len(), 4);
    assert!(res.is_complex(&cusp));
    // over the ambient ring the same module resolves finitely
    let res_amb = minimal_resolution(&k, true, 4);
    assert!(!res_amb.truncated);
    assert_eq!(res_amb.pd(), Some(2));
    report("resolution-truncation", "PASS", t0);
}

#[test]
fn decompose_reports_zero_and_trivial_cases() {
    let t0 = Instant::now();
    let r = poly_ring(3, &["x", "y"]);
    let z = GradedModule::zero_module(r.clone());
    let dec = decompose(&z, 0).unwrap();
    assert!(dec.pieces.is_empty());
    let one = GradedModule::ring_module(r.clone());
    let dec = decompose(&one, 0).unwrap();
    assert_eq!(dec.pieces.len(), 1);
    assert!(dec.verify(&one));
    // a zero module is a summand of anything
    assert!(is_direct_summand(&z, &one, 0).unwrap().is_some());
    report("decompose-degenerate", "PASS", t0);
}

#[test]
fn vec_poly_zero_is_inert() {
    // tiny guard: the unused import warning silencer with actual content
    let r = poly_ring(3, &["x"]);
    let amb = r.ambient();
    let v = VecPoly::zero();
    assert!(v.add(amb, &VecPoly::zero()).is_zero());
}
