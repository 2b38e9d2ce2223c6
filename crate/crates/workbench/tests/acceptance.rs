//! Acceptance suite: every headline claim of the workbench, each as one
//! criterion with a printed pass line. All comparisons are exact; there
//! are no tolerances anywhere.

use std::process::Command;
use std::rc::Rc;
use std::time::{Duration, Instant};

use ydl_core::analysis::is_symmetric_pair;
use ydl_core::analysis::{canonical_pair_witnesses, is_flip, pseudosymmetry_verdict};
use ydl_core::cqt::{
    check_cqt, commutativity_symmetry_verdict, extract_zeta, induce_hh_from_zeta,
    induce_ydl_from_zeta, is_cotriangular, BicomoduleData, BilinearForm, CqtError,
};
use ydl_core::hopf::HopfAlgebra;
use ydl_core::linmap::LinearMap;
use ydl_core::qt::{
    check_qt, cocommutativity_symmetry_verdict, extract_r, induce_hh_from_r, induce_ydl_from_r,
    is_triangular, HopfBimoduleData, QtError, RMatrix,
};
use ydl_core::scalar::FieldSpec;
use ydl_core::u_condition::{tensor_u_verdict, u_involutivity_verdict};
use ydl_core::ydl::{check_ydl, example_module, Variant, YdlError};
use ydl_workbench::catalog;

fn q() -> FieldSpec {
    FieldSpec::Rational
}

fn catalog_all() -> Vec<(&'static str, Rc<HopfAlgebra>)> {
    catalog::ALGEBRA_KEYS
        .iter()
        .map(|&k| (k, catalog::algebra(k).unwrap()))
        .collect()
}

fn pass(criterion: &str, detail: impl std::fmt::Display) {
    println!("[PASS] {criterion}: {detail}");
}

#[test]
fn criterion_01_variant_structures_pass_the_full_battery() {
    let start = Instant::now();
    let mut batteries = 0;
    for key in ["c2", "c3", "s3", "sweedler"] {
        let h = catalog::algebra(key).unwrap();
        for v in Variant::ALL {
            let m = example_module(&h, v);
            let reports = check_ydl(&m);
            assert_eq!(reports.len(), 10, "{key} variant {v:?}");
            for rep in reports {
                assert!(
                    rep.passed,
                    "{key} variant {v:?}: axiom {} failed with witness {:?}",
                    rep.axiom_id,
                    rep.witness.map(|w| w.input)
                );
            }
            batteries += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(5),
        "battery sweep took {elapsed:?}, budget 5 s"
    );
    pass(
        "variant structures satisfy all ten axiom families",
        format!("{batteries} batteries over c2, c3, s3, sweedler in {elapsed:?}"),
    );
}

#[test]
fn criterion_02_braiding_symmetric_only_over_the_trivial_base() {
    let start = Instant::now();
    for (key, h) in catalog_all() {
        let results = canonical_pair_witnesses(&h).unwrap();
        assert_eq!(results.len(), 4, "{key}");
        for r in &results {
            assert!(
                r.roundtrip_matches_comul,
                "{key} {:?}: slice round trip differs from 1⊗k₁⊗1⊗k₂",
                r.pair
            );
            if h.dim() == 1 {
                assert!(r.pair_verdict.symmetric, "{key} {:?}", r.pair);
                assert!(r.slice_witness.is_none(), "{key} {:?}", r.pair);
            } else {
                assert!(!r.pair_verdict.symmetric, "{key} {:?}", r.pair);
                let w = r.slice_witness.as_ref().expect("witness");
                // the round trip actually moved the slice vector
                assert_ne!(w.lhs, w.rhs, "{key} {:?}", r.pair);
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(5),
        "pair sweep took {elapsed:?}, budget 5 s"
    );
    pass(
        "braiding is a symmetry only for the trivial base",
        format!(
            "4 canonical pairs × {} instances in {elapsed:?}",
            catalog::ALGEBRA_KEYS.len()
        ),
    );
}

#[test]
fn criterion_03_braiding_collapses_to_flip_exactly_for_cocommutative() {
    let mut cocommutative_count = 0;
    for (key, h) in catalog_all() {
        let m1 = example_module(&h, Variant::V1);
        let m2 = example_module(&h, Variant::V2);
        let rep = is_flip(&m1, &m2).unwrap();
        if h.is_cocommutative() {
            assert!(rep.passed, "{key}: cocommutative but braiding ≠ flip");
            cocommutative_count += 1;
        }
        if key == "sweedler" {
            assert!(!rep.passed, "sweedler braiding must differ from flip");
            let w = rep.witness.expect("flip witness");
            assert!(w.input.as_deref().unwrap().contains('x'));
        }
    }
    pass(
        "braiding equals flip for cocommutative bases and differs for sweedler",
        format!("{cocommutative_count} cocommutative instances checked"),
    );
}

#[test]
fn criterion_04_pseudosymmetry_iff_commutative_and_cocommutative() {
    // canonical triples pass exactly on the commutative + cocommutative
    // instances; elsewhere they fail together with the projected witnesses
    for key in ["c2", "c3", "c2c2"] {
        let h = catalog::algebra(key).unwrap();
        let v = pseudosymmetry_verdict(&h, &[]).unwrap();
        assert!(v.commutative && v.cocommutative, "{key}");
        assert!(
            v.canonical.iter().all(|(_, s)| s.symmetric),
            "{key}: a canonical triple failed"
        );
        assert!(v.biconditional_holds, "{key}");
    }

    let s3 = catalog::algebra("s3").unwrap();
    let v = pseudosymmetry_verdict(&s3, &[]).unwrap();
    assert!(!v.commutative && v.cocommutative);
    assert!(v.biconditional_holds);
    // k₃ ⊗ k₁gS(k₂) ≠ k ⊗ g, and the matching triple fails
    assert!(!v.projected_commutativity.passed);
    assert!(v.projected_commutativity.witness.is_some());
    let t122 = &v.canonical[1];
    assert_eq!(t122.0, (Variant::V1, Variant::V2, Variant::V2));
    assert!(!t122.1.symmetric);

    let dual_s3 = catalog::algebra("dual_s3").unwrap();
    let v = pseudosymmetry_verdict(&dual_s3, &[]).unwrap();
    assert!(v.commutative && !v.cocommutative);
    assert!(v.biconditional_holds);
    // k₂ ⊗ k₃S⁻¹(k₁) ≠ k ⊗ 1, and the matching triple fails
    assert!(!v.projected_cocommutativity.passed);
    assert!(v.projected_cocommutativity.witness.is_some());
    let t121 = &v.canonical[0];
    assert_eq!(t121.0, (Variant::V1, Variant::V2, Variant::V1));
    assert!(!t121.1.symmetric);

    let sweedler = catalog::algebra("sweedler").unwrap();
    let v = pseudosymmetry_verdict(&sweedler, &[]).unwrap();
    assert!(!v.commutative && !v.cocommutative);
    assert!(v.biconditional_holds);
    assert!(!v.projected_cocommutativity.passed && !v.projected_commutativity.passed);
    assert!(v.canonical.iter().any(|(_, s)| !s.symmetric));

    pass(
        "pseudosymmetry holds exactly for commutative and cocommutative bases",
        "canonical triples + projected witnesses across the catalog",
    );
}

#[test]
fn criterion_05_u_condition_iff_involutive_antipode() {
    for (key, h) in catalog_all() {
        let verdict = u_involutivity_verdict(&h);
        assert!(
            verdict.consistent,
            "{key}: u-condition does not match S² = id"
        );
    }
    // sweedler witness on the first variant is exactly x⊗1 ↦ x⊗1 + 2·gx⊗1
    let h = catalog::algebra("sweedler").unwrap();
    let verdict = u_involutivity_verdict(&h);
    assert!(!verdict.involutive);
    let (v, u1) = &verdict.variants[0];
    assert_eq!(*v, Variant::V1);
    assert!(!u1.holds);
    let w = u1.witness.as_ref().unwrap();
    assert_eq!(w.input.as_deref(), Some("x⊗1"));
    assert_eq!(w.lhs_pretty, "x⊗1 + 2·gx⊗1");
    // dense coefficients: x⊗1 at index 8, gx⊗1 at index 12
    assert!(w.lhs[8].is_one());
    assert_eq!(w.lhs[12], q().from_i64(2));
    pass(
        "u-condition holds exactly when S² = id",
        "all four variants across the catalog; sweedler witness x⊗1 ↦ x⊗1 + 2·gx⊗1",
    );
}

#[test]
fn criterion_06_tensor_u_composite_equals_braiding_square() {
    let start = Instant::now();
    let mut pairs = 0;
    for (key, h) in catalog_all() {
        if !h.is_involutive() {
            continue;
        }
        for i in Variant::ALL {
            for j in Variant::ALL {
                let m = example_module(&h, i);
                let n = example_module(&h, j);
                let verdict = tensor_u_verdict(&m, &n).unwrap();
                assert!(
                    verdict.composite_identity_holds,
                    "{key} ({i:?},{j:?}): u_(M⊗N) ≠ ψ_(N,M)∘ψ_(M,N)"
                );
                assert!(
                    verdict.biconditional_holds,
                    "{key} ({i:?},{j:?}): tensor-u ⟺ symmetry failed"
                );
                pairs += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    pass(
        "u-composite of a tensor pair equals the braiding square",
        format!("{pairs} (i,j) pairs over the involutive catalog in {elapsed:?}"),
    );
}

#[test]
fn criterion_07_quasitriangular_pipeline() {
    let h = catalog::algebra("c2").unwrap();
    let r0 = catalog::r_matrix("r0", &h).unwrap();

    // QT1-QT5
    let qt = check_qt(&h, &r0).unwrap();
    assert!(qt.all_passed(), "{:?}", qt.reports);
    assert!(is_triangular(&h, &r0).unwrap().passed);

    // induced structures are YDL bimodules
    let b = HopfBimoduleData::regular(&h);
    let (m, reports) = induce_ydl_from_r(&h, &r0, &b).unwrap();
    assert!(reports.iter().all(|r| r.passed));

    // induced pairs are symmetric
    let verdict = is_symmetric_pair(&m, &m).unwrap();
    assert!(verdict.symmetric);

    // round trip on H⊗H with inverse τ(R₀)
    let (hh, reports) = induce_hh_from_r(&h, &r0).unwrap();
    assert!(reports.iter().all(|r| r.passed));
    let extraction = extract_r(&hh).unwrap();
    assert_eq!(extraction.r, r0);
    let tau_r0 = LinearMap::flip(q(), 2, 2).compose(r0.element()).unwrap();
    assert_eq!(extraction.inverse, tau_r0);
    assert!(extraction.reports.iter().all(|r| r.passed));

    // the self-braiding ⟺ cocommutativity biconditional across the catalog
    for (key, h) in catalog_all() {
        let v = cocommutativity_symmetry_verdict(&h).unwrap();
        assert!(v.biconditional_holds, "{key}");
    }
    pass(
        "quasitriangular pipeline",
        "(c2, R₀) battery, induction, symmetry, extraction round trip; \
         self-braiding ⟺ cocommutativity across the catalog",
    );
}

#[test]
fn criterion_08_coquasitriangular_pipeline() {
    let h = catalog::algebra("c2").unwrap();
    let sign = catalog::zeta_form("sign", &h).unwrap();

    let cq = check_cqt(&h, &sign).unwrap();
    assert!(cq.all_passed(), "{:?}", cq.reports);
    assert!(is_cotriangular(&h, &sign).passed);

    let c = BicomoduleData::regular(&h);
    let (m, reports) = induce_ydl_from_zeta(&h, &sign, &c).unwrap();
    assert!(reports.iter().all(|r| r.passed));
    assert!(is_symmetric_pair(&m, &m).unwrap().symmetric);

    let (hh, reports) = induce_hh_from_zeta(&h, &sign).unwrap();
    assert!(reports.iter().all(|r| r.passed));
    let extraction = extract_zeta(&hh).unwrap();
    assert_eq!(extraction.zeta, sign);
    assert!(extraction.reports.iter().all(|r| r.passed));

    for (key, h) in catalog_all() {
        let v = commutativity_symmetry_verdict(&h).unwrap();
        assert!(v.biconditional_holds, "{key}");
        if key == "s3" {
            assert!(!v.symmetry.symmetric);
            let w = v.symmetry.witness.as_ref().unwrap();
            // the witness is broken by conjugation with a transposition:
            // e⊗(123)⊗e⊗(12) round-trips to e⊗(132)⊗e⊗(23)
            let input = w.input.as_deref().unwrap();
            assert!(
                ["(12)", "(13)", "(23)"].iter().any(|t| input.contains(t)),
                "{input}"
            );
            assert_eq!(input, "e⊗(123)⊗e⊗(12)");
            assert_eq!(w.lhs_pretty, "e⊗(132)⊗e⊗(23)");
        }
    }
    pass(
        "coquasitriangular pipeline",
        "(c2, sign form) battery, induction, symmetry, extraction round trip; \
         self-braiding ⟺ commutativity across the catalog",
    );
}

#[test]
fn criterion_09_corrupted_inputs_fail_with_witnesses() {
    // corrupted comultiplication: Δ(g) := g⊗1 on kC₂
    let h = catalog::algebra("c2").unwrap();
    let one = q().one();
    let bad_comul = LinearMap::from_cols(
        q(),
        4,
        vec![vec![(0usize, one.clone())], vec![(2usize, one.clone())]],
    );
    let broken = HopfAlgebra::from_parts_unchecked(
        q(),
        h.basis_names().to_vec(),
        h.mul().clone(),
        h.unit().clone(),
        bad_comul,
        h.counit().clone(),
        h.antipode().clone(),
    );
    let failing: Vec<_> = broken
        .check_bialgebra()
        .into_iter()
        .filter(|r| !r.passed)
        .collect();
    assert!(!failing.is_empty(), "corrupted comul must fail");
    assert!(failing.iter().all(|r| r.witness.is_some()));

    // non-invertible R: (1+g)⊗1 has a rank-2 left multiplication
    let r = RMatrix::from_grid(
        &h,
        &[vec![one.clone(), q().zero()], vec![one.clone(), q().zero()]],
    )
    .unwrap();
    match check_qt(&h, &r) {
        Err(QtError::NotInvertible { rank }) => assert_eq!(rank, 2),
        other => panic!("expected NotInvertible, got {other:?}"),
    }

    // non-cotriangular ζ: the corrupted sign form names the violating pair
    let bad_zeta = BilinearForm::from_grid(
        &h,
        &[
            vec![one.clone(), one.clone()],
            vec![one.clone(), q().from_i64(2)],
        ],
    )
    .unwrap();
    let rep = is_cotriangular(&h, &bad_zeta);
    assert!(!rep.passed);
    let w = rep.witness.unwrap();
    assert_eq!(w.input.as_deref(), Some("g⊗g"));
    // and it is not even coquasitriangular
    let cq = check_cqt(&h, &bad_zeta).unwrap();
    assert!(!cq.all_passed());

    // a corrupted variant structure fails its battery with a named axiom
    let sw = catalog::algebra("sweedler").unwrap();
    let m = example_module(&sw, Variant::V1);
    let idm = m.id();
    let broken_module = example_module(&sw, Variant::V1)
        .with_act_r(idm.kron(sw.counit()).with_legs(vec![16, 4], vec![16]));
    let reports = check_ydl(&broken_module);
    let yd_right = reports.iter().find(|r| r.axiom_id == "yd_right").unwrap();
    assert!(!yd_right.passed && yd_right.witness.is_some());

    // extraction refuses non-symmetric braidings on both pipelines
    assert!(matches!(
        extract_r(&example_module(&sw, Variant::V3)),
        Err(QtError::NotTriangularizable { .. })
    ));
    let s3 = catalog::algebra("s3").unwrap();
    assert!(matches!(
        extract_zeta(&example_module(&s3, Variant::V4)),
        Err(CqtError::NotCotriangularizable { .. })
    ));

    // sanity: no corrupted case sneaks through as a pass
    assert!(matches!(
        ydl_core::ydl::braiding(
            &example_module(&sw, Variant::V1),
            &example_module(&s3, Variant::V1)
        ),
        Err(YdlError::BaseMismatch)
    ));
    pass(
        "corrupted inputs fail with witnesses",
        "bad comul, singular R, non-cotriangular ζ, corrupted module, mismatched bases",
    );
}

#[test]
fn criterion_10_cli_full_catalog_exits_zero_within_budget() {
    let start = Instant::now();
    for key in catalog::ALGEBRA_KEYS {
        let out = Command::new(env!("CARGO_BIN_EXE_ydl"))
            .args(["check", "all", "--algebra", key, "--report", "machine"])
            .output()
            .expect("binary runs");
        assert_eq!(
            out.status.code(),
            Some(0),
            "{key}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report["schema_version"], 1, "{key}");
        assert_eq!(report["overall"], true, "{key}");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "catalog sweep took {elapsed:?}, budget 60 s"
    );

    // the machine report matches the pinned golden schema
    let out = Command::new(env!("CARGO_BIN_EXE_ydl"))
        .args([
            "check",
            "all",
            "--algebra",
            "c2",
            "--r",
            "r0",
            "--zeta",
            "sign",
            "--report",
            "machine",
        ])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let mut got: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    got["wall_time_ms"] = serde_json::json!(0);
    let golden_text = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/c2_all.json"),
    )
    .unwrap();
    let golden: serde_json::Value = serde_json::from_str(&golden_text).unwrap();
    assert_eq!(got, golden, "machine report schema drifted");

    pass(
        "run_suite(all) over the full catalog",
        format!(
            "{} instances, exit 0 each, {elapsed:?} total, report matches the golden schema",
            catalog::ALGEBRA_KEYS.len()
        ),
    );
}
