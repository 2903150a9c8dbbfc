use cdcodes::field::{find_primitive_element, make_field, FieldSpec};
use proptest::prelude::*;

const ORDERS: [u64; 10] = [2, 3, 4, 5, 8, 9, 16, 27, 729, 1024];

fn field_and_elems(k: usize) -> impl Strategy<Value = (FieldSpec, Vec<u32>)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(move |q| {
        (
            Just(FieldSpec::from_order(q).unwrap()),
            prop::collection::vec(0..q as u32, k),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_axioms((f, v) in field_and_elems(3)) {
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        prop_assert_eq!(f.mul(a, 1), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn frobenius_is_a_field_automorphism((f, v) in field_and_elems(2)) {
        let (a, b) = (f.element(v[0]).unwrap(), f.element(v[1]).unwrap());
        prop_assert_eq!((a.clone() + b.clone()).frobenius(), a.frobenius() + b.frobenius());
        prop_assert_eq!((a.clone() * b.clone()).frobenius(), a.frobenius() * b.frobenius());
        prop_assert_eq!(a.pow(f.order() as u64), a);
    }

    #[test]
    fn operators_match_raw_arithmetic((f, v) in field_and_elems(2)) {
        let (a, b) = (f.element(v[0]).unwrap(), f.element(v[1]).unwrap());
        prop_assert_eq!((a.clone() + b.clone()).value(), f.add(v[0], v[1]));
        prop_assert_eq!((a.clone() - b.clone()).value(), f.sub(v[0], v[1]));
        prop_assert_eq!((a.clone() * b.clone()).value(), f.mul(v[0], v[1]));
        prop_assert_eq!((-a.clone()).value(), f.neg(v[0]));
        if v[1] != 0 {
            prop_assert_eq!((a / b).value(), f.mul(v[0], f.inv(v[1])));
        }
    }
}

/// Schoolbook multiplication modulo the stored modulus, independent of the tables.
fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * e];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for d in (e..2 * e).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        for (k, &m) in modulus.iter().enumerate() {
            let idx = d - e + k;
            prod[idx] = (prod[idx] + (p as u64 - c) * m as u64) % p as u64;
        }
    }
    prod[..e].iter().map(|&x| x as u32).collect()
}

#[test]
fn multiplication_matches_schoolbook_oracle() {
    for q in [4u64, 8, 9, 16, 25, 27, 32] {
        let f = FieldSpec::from_order(q).unwrap();
        for a in 0..q as u32 {
            for b in 0..q as u32 {
                let want = poly_mul_mod(&f.coeffs(a), &f.coeffs(b), f.modulus(), f.p());
                assert_eq!(f.coeffs(f.mul(a, b)), want, "q={q} a={a} b={b}");
            }
        }
    }
}

#[test]
fn canonical_moduli() {
    assert_eq!(make_field(2, 3, None).unwrap().modulus(), &[1, 1, 0, 1]);
    assert_eq!(make_field(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
    assert_eq!(make_field(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
}

#[test]
fn primitive_elements_generate() {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 27, 32, 64, 81, 256] {
        let f = FieldSpec::from_order(q).unwrap();
        let g = find_primitive_element(&f, None).unwrap();
        let mut seen = std::collections::HashSet::new();
        let mut x = 1u32;
        for _ in 0..q - 1 {
            assert!(seen.insert(x), "q={q}: order too small");
            x = f.mul(x, g.value());
        }
        assert_eq!(x, 1);
    }
}
