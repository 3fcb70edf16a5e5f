use proptest::prelude::*;

use hopfeq::catalog::{example, group_algebra_table, Params};
use hopfeq::hopfcore::{Bialgebra, ModuleAction};
use hopfeq::hopfelement::{check_hopf_element, check_identity_101, r_from_element, TensorElement};
use hopfeq::kernel::{Field, Matrix};
use hopfeq::tensorlab::{check_equation, Equation};
use std::sync::Arc;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    // 1⊗1 with A = k is always a Hopf element; with A = H, (HE3) asks for
    // Δ(g) = 1⊗g, which only the trivial group satisfies.
    #[test]
    fn unit_tensor_on_group_algebras(n in 1usize..5) {
        let f = Field::rationals();
        let host = Arc::new(Bialgebra::from(group_algebra_table(f, n).unwrap()));
        let scalar = TensorElement::from_names(host.clone(), &[], &[(&[], "e", f.one())]).unwrap();
        prop_assert!(check_hopf_element(&scalar).unwrap().is_pass());
        prop_assert!(check_identity_101(&scalar).unwrap().is_pass());
        let gens: Vec<&str> = host.generators().iter().map(String::as_str).collect();
        let whole = TensorElement::from_names(host.clone(), &gens, &[(&[], "e", f.one())]).unwrap();
        prop_assert_eq!(check_hopf_element(&whole).unwrap().is_pass(), n == 1);
    }

    // x acting by any diagonal idempotent, z by zero, is a T(k)-module; the
    // element x⊗1 then yields a solution.
    #[test]
    fn tk_modules_give_solutions(bits in proptest::collection::vec(any::<bool>(), 1..4)) {
        let b = example("tk", &Params::default()).unwrap();
        let host = &b.bialgebra;
        let f = host.field();
        let n = bits.len();
        let x = Matrix::from_fn(f, n, n, |r, c| if r == c && bits[r] { f.one() } else { f.zero() });
        let action = ModuleAction::new(host, vec![x, Matrix::zeros(f, n, n)]).unwrap();
        let r = r_from_element(&b.hopf_elements[0].element, &action).unwrap();
        prop_assert!(check_equation(Equation::Hopf, &r, None).unwrap().is_pass());
    }
}

#[test]
fn q_family_elements_at_several_q() {
    for q in ["1", "2", "3", "-1"] {
        for name in ["dq2", "eq2"] {
            let b = example(name, &Params { q: Some(q.into()), ..Params::default() }).unwrap();
            let v = check_hopf_element(&b.hopf_elements[0].element).unwrap();
            assert!(v.is_pass(), "{name} q={q}: {v}");
        }
    }
}
