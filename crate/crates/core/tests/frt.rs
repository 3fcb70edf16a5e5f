use std::sync::Arc;

use proptest::prelude::*;

use hopfeq::frt::{br_comatrix, build_br, canonical_comodule, chi_relations, comatrix_coalgebra};
use hopfeq::hopfcore::Bialgebra;
use hopfeq::kernel::{Field, Matrix};
use hopfeq::pairing::{r_sigma, sigma_from_r};
use hopfeq::tensorlab::{check_equation, search_endos, EndoTensor, Equation};

fn endo(f: Field, n: usize) -> impl Strategy<Value = EndoTensor> {
    let p = f.modulus().unwrap() as i64;
    let d = n * n;
    proptest::collection::vec(0..p, d * d)
        .prop_map(move |v| EndoTensor::from_matrix(n, Matrix::from_fn(f, d, d, |r, c| f.from_i64(v[r * d + c]))).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // ε(χ) = 0 for every R, since ε(c_ij) = δ_ij turns χ into R − R.
    #[test]
    fn chi_relations_lie_in_the_counit_kernel(r in endo(Field::prime(3), 2)) {
        let chi = chi_relations(&r);
        prop_assert_eq!(chi.polys().len(), 16);
        prop_assert!(chi.check_counit().is_pass());
    }

    // One-dimensional M: B(R) is k[c]/(x c² − x c), and R solves the
    // equation exactly when x³ = x².
    #[test]
    fn one_dimensional_br(x in 0i64..5) {
        let f = Field::prime(5);
        let r = EndoTensor::from_coefficients(f, 1, |_, _, _, _| f.from_i64(x));
        let chi = chi_relations(&r);
        let p = &chi.polys()[0];
        let al = p.alphabet().clone();
        prop_assert_eq!(p.coeff(&al.word(&["c11", "c11"]).unwrap()), f.from_i64(x));
        prop_assert_eq!(p.coeff(&al.word(&["c11"]).unwrap()), f.from_i64(-x));
        prop_assert_eq!(p.terms().len(), if x == 0 { 0 } else { 2 });
        let solves = (x * x * x - x * x) % 5 == 0;
        prop_assert_eq!(check_equation(Equation::Hopf, &r, None).unwrap().is_pass(), solves);
    }
}

#[test]
fn br_of_every_gf2_solution_recovers_r() {
    let f = Field::prime(2);
    for r in search_endos(f, 2, Equation::Hopf).unwrap().iter().step_by(7) {
        let br = Arc::new(Bialgebra::from(build_br(r, 4).unwrap()));
        let comodule = canonical_comodule(&br, 2).unwrap();
        assert!(comodule.check(&br).unwrap().is_pass());
        assert_eq!(br_comatrix(br.clone(), 2).unwrap().len(), 4);
        let sigma = sigma_from_r(r, 4).unwrap();
        assert_eq!(&r_sigma(&sigma, &canonical_comodule(sigma.host(), 2).unwrap()).unwrap(), r);
    }
}

#[test]
fn comatrix_coalgebra_shape() {
    let c = comatrix_coalgebra(Field::rationals(), 3).unwrap();
    assert_eq!(c.len(), 9);
    assert_eq!(c.names()[1], "c12");
}

#[test]
fn non_solution_has_no_sigma() {
    let q = Field::rationals();
    let tau = EndoTensor::switch(q, 2);
    assert!(sigma_from_r(&tau, 4).is_err());
}
