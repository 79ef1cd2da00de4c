use std::sync::{Arc, OnceLock};

use braidlift_core::category::Mor;
use braidlift_core::equivalence::{p0, Lifts};
use braidlift_core::fixtures;
use braidlift_core::io::{fixture_workspace, Artifact, Workspace};
use braidlift_core::mates::{compute_adjoint, TensorAdjunction};
use braidlift_core::scalar::{format_scalar, parse_scalar, ratio, solve, Matrix, Scalar};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(proptest::collection::vec(scalar(), cols), rows).prop_map(|r| Matrix::from_rows(r).unwrap())
}

fn adjunctions() -> &'static [TensorAdjunction] {
    static ADJ: OnceLock<Vec<TensorAdjunction>> = OnceLock::new();
    ADJ.get_or_init(|| {
        [fixtures::vhat_svec(), fixtures::vhat_zz22(), fixtures::vhat_dual()].into_iter().map(|c| compute_adjoint(c).unwrap()).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn scalar_text_round_trips(p in -1000i64..1000, q in 1i64..1000) {
        let x = ratio(p, q);
        prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }

    #[test]
    fn solutions_satisfy_the_system((a, x) in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| (matrix(r, c), proptest::collection::vec(scalar(), c)))) {
        let b = a.mul_vec(&x).unwrap();
        let y = solve(&a, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(a.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn inverses_are_two_sided(a in matrix(3, 3)) {
        if let Some(inv) = a.inverse() {
            prop_assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(3));
            prop_assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(3));
        } else {
            prop_assert!(a.rank() < 3);
        }
    }

    #[test]
    fn mates_are_mutually_inverse(k in 0usize..3, cs in proptest::collection::vec(scalar(), 4)) {
        let adj = &adjunctions()[k];
        let cat = adj.cat().clone();
        let base = cat.base().clone();
        for a in 0..cat.len() {
            for v in adj.domain() {
                for b in 0..cat.len() {
                    let h = cat.hom(a, b);
                    let g = Mor::new(v, h, cs.iter().cycle().take(base.hom_dim(v, h)).cloned().collect());
                    let f = adj.mate_fwd(a, v, b, &g).unwrap();
                    prop_assert_eq!(adj.mate_bwd(a, v, b, &f).unwrap(), g);
                }
            }
        }
    }
}

#[test]
fn workspace_load_is_order_independent() {
    let ws = fixture_workspace();
    let docs: Vec<_> = ws.artifacts().iter().map(|a| (a.name().to_string(), serde_json::from_str(&a.to_json(&ws)).unwrap())).collect();
    let forward = Workspace::from_documents(&docs).unwrap();
    let mut reversed = docs.clone();
    reversed.reverse();
    let backward = Workspace::from_documents(&reversed).unwrap();
    let text = |w: &Workspace| w.artifacts().iter().map(|a| a.to_json(w)).collect::<Vec<_>>();
    assert_eq!(text(&forward), text(&backward));
    assert_eq!(text(&forward), text(&ws));
}

#[test]
fn lifted_artifacts_survive_files() {
    let dir = std::env::temp_dir().join(format!("braidlift-core-{}", std::process::id()));
    let mut ws = fixture_workspace();
    let mut lifts = Lifts::new();
    let cell = Arc::new(lifts.p1(&fixtures::dbl()).unwrap());
    ws.insert(Artifact::Cell1(cell.clone())).unwrap();
    ws.insert(Artifact::Cell2(Arc::new(lifts.p2(&fixtures::dsign()).unwrap()))).unwrap();
    ws.write_dir(&dir).unwrap();
    let back = Workspace::load(&[dir.join("dbl.cell1")]).unwrap();
    let _ = std::fs::remove_dir_all(&dir);
    assert_eq!(*back.cells1["dbl"], *cell);
    let m = &back.modtens["PT4"];
    assert_eq!(back.lift_of(m).unwrap().cat, p0(fixtures::pt4()).unwrap().cat);
}
