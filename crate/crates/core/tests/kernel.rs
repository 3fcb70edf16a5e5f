use proptest::prelude::*;

use hopfeq::kernel::{Field, FieldSpec, Matrix, Scalar};

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::rationals()), Just(Field::prime(2)), Just(Field::prime(3)), Just(Field::prime(7))]
}

fn scalar(f: Field) -> impl Strategy<Value = Scalar> {
    (-20i64..20, 1i64..6).prop_map(move |(n, d)| {
        let d = if f.modulus().is_some() { 1 } else { d };
        &f.from_i64(n) * &f.from_i64(d).inverse().unwrap()
    })
}

fn field_and_three() -> impl Strategy<Value = (Field, Scalar, Scalar, Scalar)> {
    fields().prop_flat_map(|f| (Just(f), scalar(f), scalar(f), scalar(f)))
}

fn square(f: Field, n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-3i64..4, n * n).prop_map(move |v| Matrix::from_fn(f, n, n, |r, c| f.from_i64(v[r * n + c])))
}

proptest! {
    #[test]
    fn field_axioms((f, a, b, c) in field_and_three()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &a), &f.zero());
        if let Some(inv) = a.inverse() {
            prop_assert_eq!(&a * &inv, f.one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn scalar_text_round_trip((f, a, _, _) in field_and_three()) {
        prop_assert_eq!(f.parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn rank_nullity(m in fields().prop_flat_map(|f| (1usize..5).prop_flat_map(move |n| square(f, n)))) {
        let null = m.nullspace();
        prop_assert_eq!(m.rank() + null.len(), m.cols());
        for v in &null {
            prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn inverse_is_two_sided(m in fields().prop_flat_map(|f| (1usize..5).prop_flat_map(move |n| square(f, n)))) {
        let n = m.rows();
        match m.inverse() {
            Ok(inv) => {
                prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(m.field(), n));
                prop_assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(m.field(), n));
            }
            Err(_) => prop_assert!(m.rank() < n),
        }
    }
}

#[test]
fn field_names() {
    for (text, spec) in [("Q", FieldSpec::Rationals), ("GF(3)", FieldSpec::Prime(3)), ("gf5", FieldSpec::Prime(5)), ("F7", FieldSpec::Prime(7))] {
        assert_eq!(text.parse::<FieldSpec>().unwrap(), spec);
    }
    assert!(Field::new(FieldSpec::Prime(4)).is_err());
    assert!("GF(x)".parse::<FieldSpec>().is_err());
}

#[test]
fn rationals_are_exact() {
    let q = Field::rationals();
    let third = q.parse_scalar("1/3").unwrap();
    assert_eq!(&(&third + &third) + &third, q.one());
    assert_eq!(q.parse_scalar("-2/4").unwrap().to_string(), "-1/2");
}
