use noether::coeff::{Field, FieldElem};
use noether::poly::parse_field;
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    ["QQ", "Fp(7)", "Fp(101)", "QQ(t)", "Fp(3)(t)", "ext(QQ, u, u^2 - 2)", "ext(Fp(2)(t), u, u^2 + t)"]
        .iter()
        .map(|s| parse_field(s).unwrap())
        .collect()
}

/// A small element: `a + b*g` where `g` is the outermost generator, if any.
fn element(field: &Field, a: i64, b: i64, c: i64) -> FieldElem {
    let base = field.from_i64(a);
    match field.generator_names().first() {
        Some(name) => {
            let g = field.generator(name).unwrap();
            let lift = &field.from_i64(b) * &g;
            let denom = &g + &field.from_i64(c);
            let frac = if denom.is_zero() { lift } else { lift.try_div(&denom).unwrap_or(lift) };
            &base + &frac
        }
        None => base.try_div(&field.from_i64(if c == 0 { 1 } else { c })).unwrap_or(base),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(idx in 0usize..7, a in -6i64..6, b in -6i64..6, c in -6i64..6, d in -6i64..6, e in -6i64..6, g in -6i64..6) {
        let f = &fields()[idx];
        let x = element(f, a, b, c);
        let y = element(f, d, e, g);
        let z = element(f, b, g, a);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn display_round_trips(idx in 0usize..7, a in -6i64..6, b in -6i64..6, c in -6i64..6) {
        let f = &fields()[idx];
        let x = element(f, a, b, c);
        let back = noether::poly::parse_field_element(&x.to_string(), f).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn prime_field_elements_embed(a in -50i64..50) {
        let big = parse_field("Fp(7)(t)").unwrap();
        let small = Field::prime(7).unwrap();
        let x = small.from_i64(a);
        let y = big.embed(&x).unwrap();
        prop_assert_eq!(y, big.from_i64(a));
    }
}

#[test]
fn zero_has_no_inverse() {
    for f in fields() {
        assert!(f.zero().inv().is_err(), "{f}");
    }
}
