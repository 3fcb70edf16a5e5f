use proptest::prelude::*;

use hopfeq::kernel::{Field, Matrix};
use hopfeq::tensorlab::{
    check_equation, component_check_hopf, component_check_mixed, endo_from_index, invert_endo, leg_embed, search_endos,
    search_endos_range, EndoTensor, Equation, Legs,
};

fn endo(f: Field, n: usize) -> impl Strategy<Value = EndoTensor> {
    let p = f.modulus().unwrap_or(5) as i64;
    let d = n * n;
    proptest::collection::vec(0..p, d * d)
        .prop_map(move |v| EndoTensor::from_matrix(n, Matrix::from_fn(f, d, d, |r, c| f.from_i64(v[r * d + c]))).unwrap())
}

proptest! {
    #[test]
    fn legs_are_homomorphisms(r in endo(Field::prime(3), 2), s in endo(Field::prime(3), 2)) {
        let rs = r.compose(&s).unwrap();
        for legs in [Legs::L12, Legs::L13, Legs::L23] {
            prop_assert_eq!(leg_embed(&rs, legs), leg_embed(&r, legs).then_after(&leg_embed(&s, legs)));
        }
    }

    #[test]
    fn component_and_operator_checks_agree(r in endo(Field::prime(3), 2)) {
        let op = check_equation(Equation::Hopf, &r, None).unwrap();
        prop_assert_eq!(component_check_hopf(&r).is_pass(), op.is_pass());
        if op.is_fail() {
            prop_assert!(op.first_witness().is_some());
        }
    }

    #[test]
    fn mixed_with_itself_is_hopf(r in endo(Field::prime(2), 2)) {
        let hopf = check_equation(Equation::Hopf, &r, None).unwrap().is_pass();
        prop_assert_eq!(check_equation(Equation::Mixed, &r, Some(&r)).unwrap().is_pass(), hopf);
        prop_assert_eq!(component_check_mixed(&r, &r).unwrap().is_pass(), hopf);
    }

    #[test]
    fn index_is_a_bijection(i in 0u64..(1 << 16)) {
        let r = endo_from_index(Field::prime(2), 2, i);
        let back = r.matrix().to_rows().concat().iter().fold(0u64, |acc, s| acc * 2 + s.residue_value().unwrap());
        prop_assert_eq!(back, i);
    }

    #[test]
    fn coefficient_round_trip(r in endo(Field::rationals(), 2)) {
        let rebuilt = EndoTensor::from_coefficients(r.field(), 2, |u, v, j, i| r.coeff(u, v, j, i).clone());
        prop_assert_eq!(rebuilt, r);
    }
}

#[test]
fn inverses_of_gf2_solutions_solve_the_inverse_equation() {
    let f = Field::prime(2);
    let sols = search_endos(f, 2, Equation::Hopf).unwrap();
    let mut invertible = 0;
    for r in &sols {
        if let Ok(s) = invert_endo(r) {
            invertible += 1;
            assert!(check_equation(Equation::InverseEq, &s, None).unwrap().is_pass(), "{r}");
        }
    }
    assert!(invertible > 0);
}

#[test]
fn ranges_partition_the_search() {
    let f = Field::prime(2);
    let full = search_endos(f, 2, Equation::Commute13).unwrap();
    let mut parts = Vec::new();
    for k in 0..4u64 {
        parts.extend(search_endos_range(f, 2, Equation::Commute13, k << 14..(k + 1) << 14).unwrap());
    }
    assert_eq!(parts, full);
}
