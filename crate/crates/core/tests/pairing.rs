use proptest::prelude::*;

use hopfeq::catalog::{example, group_algebra_table, Params, Variant};
use hopfeq::kernel::{Field, Scalar};
use hopfeq::pairing::{
    check_dec_identity, convolve, lift, right_integral_space, search_hopf_functions, Lift, Mode, Pairing,
};

fn catalog_sigma(name: &str) -> Pairing {
    let p = Params { variant: Some(Variant::Corrected), ..Params::default() };
    example(name, &p).unwrap().sigmas[0].sigma.clone()
}

fn names() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("tk"), Just("fk"), Just("dq2"), Just("eq2"), Just("bq2"), Just("quantum_plane")]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // σ(c⊗ab) = Σ σ(c₍₁₎⊗a)σ(c₍₂₎⊗b), recomputed from the coproduct of C.
    #[test]
    fn extension_is_multiplicative(name in names(), a in proptest::collection::vec(0usize..8, 0..3), b in proptest::collection::vec(0usize..8, 0..3)) {
        let s = catalog_sigma(name);
        let al = s.host().alphabet().clone();
        let gens = s.host().generators().to_vec();
        let pick = |v: &[usize]| al.word(&v.iter().map(|&i| gens[i % gens.len()].as_str()).collect::<Vec<_>>()).unwrap();
        let (wa, wb) = (pick(&a), pick(&b));
        let c = s.coalgebra();
        let f = s.host().field();
        for ci in 0..c.len() {
            let direct = s.value_word(ci, &wa.concat(&wb));
            let split = c.delta(ci).iter().fold(f.zero(), |acc: Scalar, (l, r, k)| {
                &acc + &(&(k * &s.value_word(*l, &wa)) * &s.value_word(*r, &wb))
            });
            prop_assert_eq!(direct, split);
        }
    }

    #[test]
    fn convolution_is_associative(name in prop_oneof![Just("tk"), Just("fk"), Just("dq2")], kinds in proptest::collection::vec(0usize..3, 3)) {
        let s = catalog_sigma(name);
        let c = s.coalgebra();
        let ls = [Lift::S12, Lift::S13, Lift::S23];
        let [f, g, h] = [0, 1, 2].map(|k| lift(ls[kinds[k]], &s, 2));
        let left = convolve(c, &convolve(c, &f, &g), &h);
        let right = convolve(c, &f, &convolve(c, &g, &h));
        prop_assert!(left.first_difference(&right).is_none());
    }

    #[test]
    fn group_algebra_integrals(n in 1usize..6, p in prop_oneof![Just(2u64), Just(3), Just(5)]) {
        let h = group_algebra_table(Field::prime(p), n).unwrap();
        let space = right_integral_space(&h);
        prop_assert_eq!(space.len(), 1);
        prop_assert!(space[0].is_right_integral(&h).unwrap().is_pass());
    }
}

#[test]
fn search_hits_satisfy_word_level_checks() {
    for p in [2, 3] {
        let b = example("tk", &Params { field: Some(Field::prime(p)), ..Params::default() }).unwrap();
        let c = hopfeq::hopfcore::SubcoalgebraView::from_names(b.bialgebra.clone(), &["x"]).unwrap();
        let hits = search_hopf_functions(&c).unwrap();
        assert!(!hits.is_empty());
        for s in &hits {
            assert!(s.check_hopf_function(Mode::Words(3)).is_pass(), "GF({p}) {:?}", s.table());
            assert!(check_dec_identity(s, 2).is_pass());
        }
    }
}

#[test]
fn corrupting_a_catalog_table_is_detected() {
    let s = catalog_sigma("fk");
    let f = s.host().field();
    let mut caught = 0;
    for c in 0..s.coalgebra().len() {
        for col in 0..s.table()[c].len() {
            let flipped = &s.table()[c][col] + &f.one();
            let t = s.with_entry(c, col, flipped);
            let ok = t.check_well_defined_on_host().is_pass()
                && t.check_hopf_function(Mode::Generators).is_pass();
            caught += usize::from(!ok);
        }
    }
    assert_eq!(caught, 20);
}
