//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::sync::Arc;

use braidlift_core::base::validate_base;
use braidlift_core::enriched::{interchange_lhs, interchange_rhs, internal_name, self_enrichment, validate_vmoncat, VMonFunctor};
use braidlift_core::equivalence::{check_2functoriality, check_roundtrip, p0, Lifts};
use braidlift_core::fixtures;
use braidlift_core::grading::{validate_graded_modtens, validate_graded_vmoncat, FiniteGroup, GradingAssignment};
use braidlift_core::mates::{check_centrality, compute_adjoint, validate_adjunction, verify_mate_lemmas};
use braidlift_core::modtens::{validate_modtens_0cell, validate_modtens_1cell};
use braidlift_core::report::ValidationReport;
use braidlift_core::scalar::int;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(rep: &ValidationReport, what: &str) -> Result<(), String> {
    ensure(rep.passed(), || format!("{what}: {}", rep.failures().iter().map(|e| e.check.clone()).collect::<Vec<_>>().join(", ")))
}

fn exercised(rep: &ValidationReport, checks: &[&str]) -> Result<(), String> {
    for c in checks {
        ensure(rep.instances(c) > 0, || format!("check {c} never ran"))?;
    }
    Ok(())
}

fn base_fixture() -> Outcome {
    let rep = validate_base(&fixtures::svec());
    passed(&rep, "SVEC")?;
    exercised(
        &rep,
        &["braiding.hexagon_left", "braiding.hexagon_right", "braiding.naturality", "duality.zigzag_object", "duality.zigzag_dual"],
    )?;
    Ok(format!("{} checks, 0 failures", rep.entries().len()))
}

fn self_enrichment_sign() -> Outcome {
    let svec = Arc::new(fixtures::svec());
    let c = self_enrichment(svec.clone()).map_err(|e| e.to_string())?;
    let rep = validate_vmoncat(&c);
    passed(&rep, "self_enrichment(SVEC)")?;
    exercised(&rep, &["vmoncat.braided_interchange"])?;
    let plus = Arc::new(svec.with_braid(1, 1, svec.id(0)).map_err(|e| e.to_string())?);
    let mutated = c.rebased(plus).map_err(|e| e.to_string())?;
    let n = c.len();
    let mut sign_instances = 0;
    for idx in (0..n.pow(6)).map(|k| [0, 1, 2, 3, 4, 5].map(|i| (k / n.pow(i)) % n)) {
        let (Ok(lhs), Ok(rhs)) = (interchange_lhs(&c, idx), interchange_rhs(&mutated, idx)) else { continue };
        if !lhs.coeffs.is_empty() && lhs.coeffs.iter().any(|x| *x != int(0)) && lhs.neg() == rhs {
            sign_instances += 1;
        }
    }
    ensure(sign_instances > 0, || "no interchange instance differs by −1 without β".into())?;
    let mutated_rep = validate_vmoncat(&mutated);
    ensure(mutated_rep.failed_checks().contains(&"vmoncat.braided_interchange"), || "β ↦ +1 mutation was not detected".into())?;
    Ok(format!("{sign_instances} interchange instances differ by −1 before β; mutation fails"))
}

fn adjoint() -> Outcome {
    let adj = compute_adjoint(fixtures::vhat_svec()).map_err(|e| e.to_string())?;
    for v in 0..2 {
        ensure(adj.f_obj(v).ok() == Some(v), || format!("F({v}) is not {v}"))?;
    }
    ensure(adj.is_tensored() == Ok(true), || "self_enrichment(SVEC) is not tensored".into())?;
    let pt2 = fixtures::pt2();
    let adj2 = compute_adjoint(pt2.clone()).map_err(|e| e.to_string())?;
    let star = pt2.base().unit();
    ensure(adj2.f_obj(star).ok() == Some(pt2.unit()), || "F(⋆) is not the unit of PT2".into())?;
    Ok("F = id on SVEC, tensored; F(⋆) = 1 on PT2".into())
}

fn mate_calculus() -> Outcome {
    let mut details = Vec::new();
    for c in [fixtures::vhat_svec(), fixtures::pt2()] {
        let adj = compute_adjoint(c.clone()).map_err(|e| e.to_string())?;
        let rep = validate_adjunction(&adj);
        passed(&rep, c.name())?;
        exercised(&rep, &["mates.bwd_fwd", "mates.fwd_bwd"])?;
        let lemmas = verify_mate_lemmas(&adj, 0, 100);
        passed(&lemmas, c.name())?;
        for l in ["lemma.composition_base", "lemma.composition_category", "lemma.mate_of_composite", "lemma.mate_of_tensor", "lemma.mates_of_f"] {
            ensure(lemmas.instances(l) >= 100, || format!("{l} ran {} trials on {}", lemmas.instances(l), c.name()))?;
        }
        details.push(format!("{}: {} exhaustive", c.name(), rep.instances("mates.bwd_fwd")));
    }
    Ok(format!("{}; 100 trials per lemma", details.join(", ")))
}

fn center_lift() -> Outcome {
    let c = fixtures::vhat_svec();
    let adj = compute_adjoint(c.clone()).map_err(|e| e.to_string())?;
    let base = c.base().clone();
    for (a, v) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let e = adj.half_braiding(a, v).map_err(|e| e.to_string())?;
        let beta = internal_name(&base, base.tensor_obj(a, v), base.unit(), base.braid(a, v)).map_err(|e| e.to_string())?;
        ensure(e.coeffs == beta.coeffs, || format!("e_{{{a},{v}}} differs from β"))?;
    }
    ensure(adj.half_braiding(1, 1).map(|e| e.coeffs) == Ok(vec![int(-1)]), || "e_{1,F(1)} is not −1".into())?;
    let mut central = 0;
    for u in 0..2 {
        for v in 0..2 {
            for f in base.basis(u, v) {
                passed(&check_centrality(&adj, &f), "centrality")?;
                central += 1;
            }
        }
    }
    let all = fixtures::enriched_fixtures();
    for f in &all {
        let l = p0(f.clone()).map_err(|e| e.to_string())?;
        passed(&validate_modtens_0cell(&l.modtens), f.name())?;
    }
    Ok(format!("e = β on 4 pairs; {central} basis morphisms central; {} fixtures pass", all.len()))
}

fn one_cells() -> Outcome {
    let mut lifts = Lifts::new();
    for f in [fixtures::incl(), fixtures::id_functor(fixtures::pt2()), fixtures::id_functor(fixtures::unit_cat())] {
        let cell = lifts.p1(&f).map_err(|e| e.to_string())?;
        let rep = validate_modtens_1cell(&cell);
        passed(&rep, f.name())?;
        exercised(&rep, &["cell1.half_braiding_coherence", "cell1.action_coherence"])?;
    }
    Ok("P1(incl), P1(id) pass with both coherences".into())
}

fn one_cell_fixtures() -> Vec<Arc<VMonFunctor>> {
    vec![
        fixtures::incl(),
        fixtures::proj(),
        fixtures::twist(),
        fixtures::dbl(),
        fixtures::id_functor(fixtures::unit_cat()),
        fixtures::id_functor(fixtures::pt2()),
        fixtures::id_functor(fixtures::pt4()),
    ]
}

fn round_trip() -> Outcome {
    let mut lifts = Lifts::new();
    let transforms = [fixtures::sign(), fixtures::id_transform(fixtures::id_functor(fixtures::pt2()))];
    let rep = check_roundtrip(&mut lifts, &one_cell_fixtures(), &transforms);
    passed(&rep, "round trip")?;
    exercised(&rep, &["roundtrip.q1_p1", "roundtrip.p1_q1", "roundtrip.q2_p2", "roundtrip.p2_q2"])?;
    Ok(format!("{} 1-cells, {} 2-cells, strict equality", rep.instances("roundtrip.q1_p1"), rep.instances("roundtrip.q2_p2")))
}

fn two_functoriality() -> Outcome {
    let mut lifts = Lifts::new();
    let chains = [(fixtures::incl(), fixtures::dbl()), (fixtures::incl(), fixtures::twist()), (fixtures::twist(), fixtures::dbl())];
    let vertical = [(fixtures::sign(), fixtures::sign()), (fixtures::sign(), fixtures::double_x())];
    let horizontal = [(fixtures::sign(), fixtures::dsign())];
    let rep = check_2functoriality(&mut lifts, &chains, &vertical, &horizontal);
    passed(&rep, "2-functoriality")?;
    exercised(
        &rep,
        &["functoriality.unit_1cell", "functoriality.unit_2cell", "functoriality.compose_1cell", "functoriality.vertical", "functoriality.horizontal"],
    )?;
    Ok(format!("UNIT → PT2 → PT4: {} categories, strict equality", rep.instances("functoriality.unit_1cell")))
}

fn gradings() -> Outcome {
    let pt2 = fixtures::pt2();
    let g = GradingAssignment::new(FiniteGroup::cyclic(2), vec![0, 1]).map_err(|e| e.to_string())?;
    let rep = validate_graded_vmoncat(&pt2, &g);
    passed(&rep, "PT2")?;
    exercised(&rep, &["graded.faithful"])?;
    let m = p0(pt2.clone()).map_err(|e| e.to_string())?.modtens;
    let mrep = validate_graded_modtens(&m, &g);
    passed(&mrep, "P0(PT2)")?;
    exercised(&mrep, &["graded.f_trivial"])?;
    let bad = GradingAssignment::new(FiniteGroup::cyclic(2), vec![0, 0]).map_err(|e| e.to_string())?;
    let brep = validate_graded_vmoncat(&pt2, &bad);
    ensure(brep.failed_checks() == vec!["graded.faithful"], || format!("mis-graded PT2 failed {:?}", brep.failed_checks()))?;
    let witness = brep.failures().into_iter().next().map(|e| e.witness.join(" ")).unwrap_or_default();
    ensure(witness == "grade=1", || format!("unexpected witness `{witness}`"))?;
    Ok(format!("faithful; F(V) in degree e; mis-graded witness {witness}"))
}

fn strength() -> Outcome {
    let mut lifts = Lifts::new();
    for f in [fixtures::twist(), fixtures::incl()] {
        let cell = lifts.p1(&f).map_err(|e| e.to_string())?;
        ensure(cell.is_strong(), || format!("P1({}) lost the strong flag", f.name()))?;
        let b = cell.target().cat();
        ensure(cell.rhos().iter().all(|r| b.is_invertible(r)), || format!("P1({}) has a non-invertible laxitor", f.name()))?;
        let back = lifts.q1(&cell).map_err(|e| e.to_string())?;
        ensure(back.is_strong() && back == *f, || format!("Q1(P1({})) lost strength", f.name()))?;
    }
    Ok("twist and incl stay strong through P1 and Q1".into())
}

fn shipped() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn cli_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_braidlift");
    let dir = shipped();
    let run = |d: &Path| Command::new(bin).arg("roundtrip").arg(d).args(["--seed", "0", "--trials", "100"]).output().map_err(|e| e.to_string());
    let (a, b) = (run(&dir)?, run(&dir)?);
    ensure(a.status.success(), || format!("shipped fixtures exit {:?}", a.status.code()))?;
    ensure(a.stdout == b.stdout, || "reports differ between runs".into())?;
    let tmp = std::env::temp_dir().join(format!("braidlift-acceptance-{}", std::process::id()));
    fs::create_dir_all(&tmp).map_err(|e| e.to_string())?;
    for e in fs::read_dir(&dir).map_err(|e| e.to_string())? {
        let p = e.map_err(|e| e.to_string())?.path();
        if p.is_file() {
            fs::copy(&p, tmp.join(p.file_name().unwrap())).map_err(|e| e.to_string())?;
        }
    }
    let target = tmp.join("twist.fun");
    let mut v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&target).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    v["components"][0]["coeffs"][0] = "0".into();
    fs::write(&target, serde_json::to_string_pretty(&v).unwrap()).map_err(|e| e.to_string())?;
    let c = run(&tmp)?;
    let _ = fs::remove_dir_all(&tmp);
    let out = String::from_utf8_lossy(&c.stdout);
    let err = String::from_utf8_lossy(&c.stderr);
    ensure(!c.status.success(), || "corrupted fixtures exit 0".into())?;
    ensure(err.contains("suite `validate` failed"), || format!("failing suite not named: {err}"))?;
    let failing = out.lines().find(|l| l.starts_with("CHECK validate.") && l.contains(" FAIL ")).unwrap_or_default().to_string();
    ensure(failing.contains("functor:twist.functor.identity"), || format!("failing check not named: {failing}"))?;
    Ok(format!("{} identical bytes; corrupted run: {}", a.stdout.len(), failing.split(" # ").next().unwrap_or_default()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("fixture validation", base_fixture),
        ("self-enrichment", self_enrichment_sign),
        ("adjoint computation", adjoint),
        ("mate calculus", mate_calculus),
        ("center lift", center_lift),
        ("1-cell pipeline", one_cells),
        ("round trip", round_trip),
        ("2-functoriality", two_functoriality),
        ("gradings", gradings),
        ("strength propagation", strength),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("ACCEPTANCE {:>2} PASS {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("ACCEPTANCE {:>2} FAIL {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
