use std::sync::Arc;

use kalman_core::polymatrix::parse_matrix;
use kalman_core::scalar::int;
use kalman_core::{discriminant_q, Monomial, PolyMatrix, Polynomial, QMatrix, Scalar, Universe};
use proptest::prelude::*;

fn xyz() -> Arc<Universe> {
    Universe::coordinates(3)
}

fn poly_strategy(max_terms: usize, max_exp: u16) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, 3), -20i64..=20, 1i64..=4), 0..=max_terms).prop_map(
        |terms| {
            let u = xyz();
            Polynomial::from_terms(
                &u,
                terms.into_iter().map(|(e, n, d)| (Monomial::from_exponents(&e), kalman_core::scalar::ratio(n, d))),
            )
        },
    )
}

fn qmatrix_strategy(n: usize, bound: i64) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-bound..=bound, n * n).prop_map(move |v| QMatrix::from_fn(n, n, |i, j| int(v[i * n + j])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly_strategy(5, 3), q in poly_strategy(5, 3), r in poly_strategy(4, 2)) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn text_round_trip(p in poly_strategy(6, 4)) {
        let back = Polynomial::parse(&xyz(), &p.to_text()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn exact_division_inverts_product(p in poly_strategy(6, 3), q in poly_strategy(4, 2)) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly_strategy(5, 3), q in poly_strategy(5, 3), v in prop::collection::vec(-9i64..=9, 3)) {
        let point: Vec<Scalar> = v.into_iter().map(int).collect();
        let lhs = (&p * &q).eval(&point).unwrap();
        prop_assert_eq!(lhs, p.eval(&point).unwrap() * q.eval(&point).unwrap());
    }

    #[test]
    fn determinant_methods_agree(entries in prop::collection::vec(poly_strategy(3, 2), 16)) {
        let u = xyz();
        let m = PolyMatrix::from_fn(&u, 4, 4, |i, j| entries[i * 4 + j].clone());
        let oracle = m.det_cofactor().unwrap();
        prop_assert_eq!(&m.det_bareiss().unwrap(), &oracle);
        prop_assert_eq!(&m.det_expansion().unwrap(), &oracle);
    }

    #[test]
    fn symbolic_determinant_evaluates_to_rational_determinant(a in qmatrix_strategy(3, 50)) {
        let det = PolyMatrix::symbolic(3).det().unwrap();
        prop_assert_eq!(det.eval(a.entries()).unwrap(), a.det().unwrap());
    }

    #[test]
    fn cayley_hamilton(a in qmatrix_strategy(4, 30)) {
        let cp = a.char_poly().unwrap();
        prop_assert!(a.eval_poly(&cp).unwrap().is_zero());
    }

    #[test]
    fn symbolic_char_poly_specializes(a in qmatrix_strategy(3, 30)) {
        let cp = PolyMatrix::symbolic(3).char_poly().unwrap();
        let at: Vec<Scalar> = cp.iter().map(|c| c.eval(a.entries()).unwrap()).collect();
        prop_assert_eq!(at, a.char_poly().unwrap());
    }

    #[test]
    fn discriminant_is_product_of_root_differences(roots in prop::collection::vec(-30i64..=30, 2..=5)) {
        // Π (λ − r_i), ascending coefficients.
        let mut coeffs = vec![int(1)];
        for r in &roots {
            let mut next = vec![Scalar::from_integer(0.into()); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c.clone();
                next[i] -= c * int(*r);
            }
            coeffs = next;
        }
        let mut expected = int(1);
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let diff = int(roots[i] - roots[j]);
                expected *= &diff * &diff;
            }
        }
        prop_assert_eq!(discriminant_q(&coeffs).unwrap(), expected);
    }

    #[test]
    fn inverse_is_two_sided(a in qmatrix_strategy(3, 20)) {
        if let Some(inv) = a.inverse() {
            prop_assert_eq!(a.mul(&inv).unwrap(), QMatrix::identity(3));
            prop_assert_eq!(inv.mul(&a).unwrap(), QMatrix::identity(3));
        } else {
            prop_assert!(a.rank() < 3);
        }
    }
}

#[test]
fn matrix_text_round_trip() {
    let u = xyz();
    let m = parse_matrix(&u, "x1 + 1/2 | x2^2\n-x3 | 0").unwrap();
    assert_eq!(parse_matrix(&u, &m.to_string()).unwrap(), m);
}
