use proptest::prelude::*;

use hopfeq::catalog::{example, verify_example, Params, Variant, EXAMPLE_NAMES};
use hopfeq::formats::{from_json, to_json};
use hopfeq::kernel::{Field, Status};

fn mismatches(r: &hopfeq::catalog::Report) -> Vec<String> {
    r.lines.iter().filter(|l| !l.matches()).map(|l| format!("{}: {}", l.check, l.verdict)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn q_family_over_q(name in prop_oneof![Just("bq2"), Just("dq2"), Just("eq2")], q in -4i64..5) {
        let r = verify_example(name, &Params { q: Some(q.to_string()), ..Params::default() }).unwrap();
        prop_assert!(r.matches(), "{:?}", mismatches(&r));
    }

    #[test]
    fn quantum_plane_any_a(a in -3i64..4, q in prop_oneof![Just(1i64), Just(2), Just(-1), Just(3)]) {
        let p = Params { a: Some(a.to_string()), q: Some(q.to_string()), ..Params::default() };
        let r = verify_example("quantum_plane", &p).unwrap();
        prop_assert!(r.matches(), "{:?}", mismatches(&r));
    }

    #[test]
    fn q_family_over_prime_fields(
        name in prop_oneof![Just("dq2"), Just("eq2")],
        (p, q) in prop_oneof![Just(3u64), Just(5)].prop_flat_map(|p| (Just(p), 0..p)),
    ) {
        let params = Params { field: Some(Field::prime(p)), q: Some(q.to_string()), ..Params::default() };
        let r = verify_example(name, &params).unwrap();
        prop_assert!(r.matches(), "{:?}", mismatches(&r));
    }
}

#[test]
fn every_example_matches_its_expectations() {
    for name in EXAMPLE_NAMES {
        let r = verify_example(name, &Params::default()).unwrap();
        assert!(r.matches(), "{name}: {:?}", mismatches(&r));
        assert_eq!(r.status(), Status::Pass);
    }
}

#[test]
fn group_algebra_searches_stay_empty() {
    for (p, n) in [(2, 3), (3, 2), (3, 3)] {
        let params = Params { field: Some(Field::prime(p)), order: Some(n), ..Params::default() };
        let r = verify_example("group_algebra", &params).unwrap();
        assert!(r.matches(), "GF({p}) n={n}: {:?}", mismatches(&r));
    }
}

#[test]
fn reports_serialize() {
    let r = verify_example("fk", &Params { variant: Some(Variant::Verbatim), ..Params::default() }).unwrap();
    assert_eq!(r.status(), Status::Fail);
    let back: hopfeq::catalog::Report = from_json(&to_json(&r)).unwrap();
    assert_eq!(back, r);
}

#[test]
fn exports_rebuild_the_same_objects() {
    for name in ["tk", "fk", "dq2"] {
        let b = example(name, &Params::default()).unwrap();
        let e = b.export();
        let host = std::sync::Arc::new(e.bialgebra.build(4).unwrap());
        for ((label, file), entry) in e.sigmas.iter().zip(&b.sigmas) {
            assert_eq!(&file.build(host.clone()).unwrap(), &entry.sigma, "{name} {label}");
        }
        if let Some(m) = &e.matrix {
            assert_eq!(&m.to_endo().unwrap(), b.operator.as_ref().unwrap());
        }
    }
}
