//! End-to-end acceptance run. Each criterion prints one PASS or FAIL line;
//! the process exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::thread;

use jordan_core::algebra::{change_of_basis, is_jordan, orbit_dimension, Algebra};
use jordan_core::catalog::{
    self, compute_record, fingerprint, pairwise_distinct_audit, InvariantRecord,
};
use jordan_core::cohomology::{
    cocycle_row_count, cohomology_dims, z2_dim, CoboundaryMap, CocycleSystem,
};
use jordan_core::deformation::{
    build_closure_graph, build_jor2_graph, conjugate_family, explicit_witnesses, limit_algebra,
    necessary_conditions_audit, rigid_coverage_check, scaling_witness, verify_arrow, ArrowStatus,
    RIGID_SET,
};
use jordan_core::exactla::{int, rat};
use jordan_core::{RatMatrix, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn alg(id: &str) -> &'static Algebra {
    &catalog::get(id).expect("catalog id").algebra
}

/// `(id, dim Der, dim Ann, dim Rad, niltype, associative, unital)` reference values.
type ReferenceRow = (
    &'static str,
    usize,
    usize,
    usize,
    &'static [usize],
    bool,
    bool,
);

const REFERENCE: [ReferenceRow; 30] = [
    ("B1", 1, 0, 1, &[1], true, true),
    ("B2", 2, 0, 1, &[1], false, false),
    ("B3", 2, 1, 2, &[1, 1], true, false),
    ("B4", 0, 0, 0, &[], true, true),
    ("J1", 0, 0, 0, &[], true, true),
    ("J2", 0, 0, 0, &[], true, true),
    ("J3", 1, 0, 0, &[], false, true),
    ("J4", 1, 0, 0, &[], false, true),
    ("J5", 1, 0, 0, &[], false, true),
    ("J6", 1, 1, 1, &[1], true, false),
    ("J7", 2, 0, 1, &[1], false, false),
    ("J8", 2, 0, 1, &[1], false, true),
    ("J9", 1, 0, 1, &[1], true, true),
    ("J10", 1, 1, 1, &[1], true, false),
    ("J11", 2, 0, 1, &[1], false, true),
    ("J12", 6, 0, 2, &[2], false, false),
    ("J13", 4, 0, 2, &[2], true, true),
    ("J14", 3, 1, 2, &[2], false, false),
    ("J15", 2, 1, 2, &[2], true, false),
    ("J16", 3, 0, 2, &[2], false, false),
    ("J17", 4, 2, 2, &[2], true, false),
    ("J18", 2, 0, 2, &[1, 1], true, true),
    ("J19", 2, 1, 2, &[1, 1], false, false),
    ("J20", 2, 0, 2, &[1, 1], false, false),
    ("J21", 2, 1, 2, &[1, 1], true, false),
    ("J22", 9, 3, 3, &[3], true, false),
    ("J23", 3, 1, 3, &[1, 1, 1], true, false),
    ("J24", 4, 1, 3, &[2, 1], true, false),
    ("J25", 5, 2, 3, &[2, 1], true, false),
    ("J26", 4, 1, 3, &[2, 1], true, false),
];

fn tables() -> Outcome {
    for (id, der, ann, rad, nil, assoc, unital) in REFERENCE {
        let expected = InvariantRecord {
            dim_der: der,
            dim_ann: ann,
            dim_rad: rad,
            niltype: (!nil.is_empty()).then(|| nil.to_vec()),
            associative: assoc,
            unital,
        };
        let got = compute_record(alg(id)).map_err(|e| format!("{id}: {e}"))?;
        ensure(got == expected, || {
            format!("{id}: computed {got}, expected {expected}")
        })?;
    }
    Ok(())
}

fn jordan_validation() -> Outcome {
    for id in catalog::classification_ids() {
        ensure(is_jordan(alg(id)).holds(), || format!("{id} is not Jordan"))?;
    }
    ensure(catalog::classification_ids().len() == 32, || {
        "expected 32 algebras".into()
    })?;
    // e1² = e2, e2² = e1: ((e1e1)e1)e1 = 0 but (e1e1)(e1e1) = e1.
    let bad = Algebra::from_products(2, &[(0, 0, 1, int(1)), (1, 1, 0, int(1))])
        .map_err(|e| e.to_string())?;
    let v = is_jordan(&bad);
    ensure(!v.holds(), || "counterexample accepted".into())?;
    ensure(v.to_string().contains("violated at"), || {
        format!("no tuple reported: {v}")
    })
}

fn cohomology() -> Outcome {
    for (id, z2) in [("J7", 7), ("J20", 7), ("J3", 8), ("J4", 8), ("J5", 8)] {
        let got = z2_dim(alg(id)).map_err(|e| e.to_string())?;
        ensure(got == z2, || format!("z2({id}) = {got}, expected {z2}"))?;
    }
    for id in RIGID_SET {
        let d = cohomology_dims(alg(id)).map_err(|e| e.to_string())?;
        ensure(d.h2 == 0, || format!("h2({id}) = {}", d.h2))?;
    }
    let m = CocycleSystem::assemble(alg("J1"));
    ensure(
        cocycle_row_count(3) == 252 && m.matrix().rows() == 252 && m.matrix().cols() == 27,
        || format!("system is {}x{}", m.matrix().rows(), m.matrix().cols()),
    )
}

fn witnesses() -> Outcome {
    let mut all = explicit_witnesses();
    ensure(all.len() == 5, || "expected five explicit witnesses".into())?;
    for e in catalog::entries() {
        all.push(scaling_witness(e.id).map_err(|e| e.to_string())?);
    }
    for w in &all {
        let v = verify_arrow(w).map_err(|e| e.to_string())?;
        ensure(v.holds(), || format!("{} -> {}: {v}", w.source, w.target))?;
    }
    Ok(())
}

fn audit_soundness() -> Outcome {
    let g = build_closure_graph().map_err(|e| e.to_string())?;
    for e in &g.edges {
        let r = necessary_conditions_audit(&e.source, &e.target).map_err(|e| e.to_string())?;
        ensure(r.passed(), || r.to_string())?;
    }
    for (s, t, item) in [("J8", "J7", "i"), ("J3", "J7", "vii")] {
        let r = necessary_conditions_audit(s, t).map_err(|e| e.to_string())?;
        ensure(
            !r.passed() && r.check(item).and_then(|c| c.passed) == Some(false),
            || format!("{s} -> {t} should fail ({item}):\n{r}"),
        )?;
    }
    Ok(())
}

fn distinctness() -> Outcome {
    let list: Vec<(String, Algebra)> = catalog::jordan3_ids()
        .into_iter()
        .map(|id| (id.to_string(), alg(id).clone()))
        .collect();
    let r = pairwise_distinct_audit(&list).map_err(|e| e.to_string())?;
    ensure(r.fingerprints.len() == 26 && r.all_distinct(), || {
        format!("collisions {:?}", r.collisions)
    })?;
    let fp = |id| fingerprint(alg(id)).map_err(|e| e.to_string());
    let (j3, j4, j5) = (fp("J3")?, fp("J4")?, fp("J5")?);
    for (x, y) in [(&j3, &j4), (&j3, &j5), (&j4, &j5)] {
        let mut y2 = y.clone();
        y2.trace_form_signature = x.trace_form_signature;
        ensure(x != y && *x == y2, || {
            "spin factors not separated by the trace form alone".into()
        })?;
    }
    let (j24, j26) = (fp("J24")?, fp("J26")?);
    let mut j26b = j26.clone();
    j26b.square_form_invariant = j24.square_form_invariant;
    ensure(j24 != j26 && j24 == j26b, || {
        "J24/J26 not separated by the square form alone".into()
    })
}

fn coverage() -> Outcome {
    let g = build_closure_graph().map_err(|e| e.to_string())?;
    ensure(g.nodes.len() == 26, || format!("{} nodes", g.nodes.len()))?;
    let r = rigid_coverage_check(&g).map_err(|e| e.to_string())?;
    for n in &g.nodes {
        let p = &r.paths[n];
        ensure(RIGID_SET.contains(&p[0].as_str()), || {
            format!("{n}: path {p:?}")
        })?;
    }
    ensure(r.rigidity_consistent(), || r.to_string())?;
    ensure(g.maximal_nodes() == RIGID_SET.to_vec(), || {
        format!("maximal {:?}", g.maximal_nodes())
    })?;
    ensure(g.nodes.iter().all(|n| g.reachable(n, "J22")), || {
        "J22 not below everything".into()
    })?;
    let dims: Vec<usize> = g.nodes.iter().map(|n| orbit_dimension(alg(n))).collect();
    ensure(
        orbit_dimension(alg("J1")) == 9 && dims.iter().max() == Some(&9),
        || format!("orbit dims {dims:?}"),
    )
}

fn jor2() -> Outcome {
    let g = build_jor2_graph().map_err(|e| e.to_string())?;
    ensure(g.nodes.len() == 7, || format!("{} nodes", g.nodes.len()))?;
    let max = g.maximal_nodes();
    ensure(max == ["Re+Re", "B2", "B4"], || format!("maximal {max:?}"))?;
    ensure(
        g.edges
            .iter()
            .all(|e| e.status == ArrowStatus::VerifiedWitness),
        || "unverified edge".into(),
    )
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> RatMatrix {
    let pool: [Rational; 7] = [
        int(-2),
        int(-1),
        rat(-1, 2),
        int(0),
        rat(1, 2),
        int(1),
        int(2),
    ];
    loop {
        let rows = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| pool[rng.gen_range(0..pool.len())].clone())
                    .collect()
            })
            .collect();
        let m = RatMatrix::from_rows(n, rows);
        if m.det().is_ok_and(|d| d != int(0)) {
            return m;
        }
    }
}

fn properties() -> Outcome {
    const TRIALS: usize = 100;
    let ids = catalog::classification_ids();
    let results: Vec<Outcome> = thread::scope(|s| {
        let handles: Vec<_> = ids
            .iter()
            .enumerate()
            .map(|(idx, &id)| {
                s.spawn(move || -> Outcome {
                    let a = alg(id);
                    let fp = fingerprint(a).map_err(|e| e.to_string())?;
                    let dims = cohomology_dims(a).map_err(|e| e.to_string())?;
                    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + idx as u64);
                    for trial in 0..TRIALS {
                        let g = random_invertible(&mut rng, a.dim());
                        let b = change_of_basis(a, &g).map_err(|e| e.to_string())?;
                        let fb = fingerprint(&b).map_err(|e| e.to_string())?;
                        ensure(fb == fp, || {
                            format!("{id} trial {trial}: fingerprint changed")
                        })?;
                        let db = cohomology_dims(&b).map_err(|e| e.to_string())?;
                        ensure(db == dims, || {
                            format!("{id} trial {trial}: cohomology {db:?} vs {dims:?}")
                        })?;
                    }
                    let cob = CoboundaryMap::assemble(a);
                    let coc = CocycleSystem::assemble(a);
                    let n = a.dim();
                    for p in 0..n {
                        for q in 0..n {
                            ensure(coc.is_cocycle(&cob.generator(p, q)), || {
                                format!("{id}: coboundary ({p},{q}) is not a cocycle")
                            })?;
                        }
                    }
                    Ok(())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err("panicked".into())))
            .collect()
    });
    results.into_iter().collect::<Result<(), String>>()?;

    let mut witnesses: Vec<_> = build_closure_graph()
        .map_err(|e| e.to_string())?
        .edges
        .into_iter()
        .filter_map(|e| e.witness)
        .collect();
    witnesses.extend(
        build_jor2_graph()
            .map_err(|e| e.to_string())?
            .edges
            .into_iter()
            .filter_map(|e| e.witness),
    );
    for w in &witnesses {
        let fam = conjugate_family(alg(&w.source), &w.g).map_err(|e| e.to_string())?;
        let lim = limit_algebra(&fam).map_err(|e| format!("{} -> {}: {e}", w.source, w.target))?;
        ensure(is_jordan(&lim).holds(), || {
            format!("{} -> {}: limit not Jordan", w.source, w.target)
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("tables reproduction", tables),
        ("Jordan validation", jordan_validation),
        ("cohomology dimensions", cohomology),
        ("deformation witnesses", witnesses),
        ("audit soundness", audit_soundness),
        ("fingerprint distinctness", distinctness),
        ("rigid coverage", coverage),
        ("dimension-2 picture", jor2),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => println!("PASS [{}] {name}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{}] {name}: {msg}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
