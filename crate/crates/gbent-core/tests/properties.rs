//! Property-based checks: ring axioms for the cyclotomic integers,
//! transform invariants, and agreement with a floating-point embedding.

use gbent_core::{wht_in_place, CyclotomicInteger, GeneralizedBooleanFunction};
use proptest::prelude::*;

fn ring_elem(m: u32, max: i64) -> impl Strategy<Value = CyclotomicInteger> {
    prop::collection::vec(-max..=max, 1usize << (m - 1))
        .prop_map(move |coeffs| CyclotomicInteger::new(m, coeffs).unwrap())
}

fn ring_triple() -> impl Strategy<Value = (CyclotomicInteger, CyclotomicInteger, CyclotomicInteger)>
{
    (1u32..=4).prop_flat_map(|m| (ring_elem(m, 50), ring_elem(m, 50), ring_elem(m, 50)))
}

fn gbf() -> impl Strategy<Value = GeneralizedBooleanFunction> {
    (1usize..=3, 1u32..=4).prop_flat_map(|(n, m)| {
        prop::collection::vec(0u8..(1 << m), 1usize << n)
            .prop_map(move |values| GeneralizedBooleanFunction::from_values(m, values).unwrap())
    })
}

/// Numerical embedding sending `w` to `exp(pi*i/k)`, for cross-checks only.
fn embed(z: &CyclotomicInteger) -> (f64, f64) {
    let k = z.degree() as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    for (i, &c) in z.coeffs().iter().enumerate() {
        let theta = core::f64::consts::PI * (i as f64) / k;
        re += c as f64 * theta.cos();
        im += c as f64 * theta.sin();
    }
    (re, im)
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    let scale = 1.0 + a.0.abs() + a.1.abs() + b.0.abs() + b.1.abs();
    (a.0 - b.0).abs() <= 1e-9 * scale && (a.1 - b.1).abs() <= 1e-9 * scale
}

proptest! {
    #[test]
    fn addition_commutes_and_associates((a, b, c) in ring_triple()) {
        prop_assert_eq!(a.checked_add(&b).unwrap(), b.checked_add(&a).unwrap());
        let left = a.checked_add(&b).unwrap().checked_add(&c).unwrap();
        let right = a.checked_add(&b.checked_add(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_commutes_and_associates((a, b, c) in ring_triple()) {
        prop_assert_eq!(a.checked_mul(&b).unwrap(), b.checked_mul(&a).unwrap());
        let left = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
        let right = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes((a, b, c) in ring_triple()) {
        let left = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        let right = a
            .checked_mul(&b)
            .unwrap()
            .checked_add(&a.checked_mul(&c).unwrap())
            .unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identities_and_negation((a, _, _) in ring_triple()) {
        let m = a.order_exponent();
        let zero = CyclotomicInteger::zero(m).unwrap();
        let one = CyclotomicInteger::from_int(m, 1).unwrap();
        prop_assert_eq!(a.checked_add(&zero).unwrap(), a.clone());
        prop_assert_eq!(a.checked_mul(&one).unwrap(), a.clone());
        prop_assert!(a.checked_add(&a.negated()).unwrap().is_zero());
    }

    #[test]
    fn conjugation_is_a_ring_homomorphism((a, b, _) in ring_triple()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(
            a.checked_add(&b).unwrap().conj(),
            a.conj().checked_add(&b.conj()).unwrap()
        );
        prop_assert_eq!(
            a.checked_mul(&b).unwrap().conj(),
            a.conj().checked_mul(&b.conj()).unwrap()
        );
    }

    #[test]
    fn norm_is_multiplicative((a, b, _) in ring_triple()) {
        let lhs = a.checked_mul(&b).unwrap().norm_sq();
        let rhs = a.norm_sq().checked_mul(&b.norm_sq()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn omega_powers_add_exponents(m in 1u32..=4, s in -20i64..20, t in -20i64..20) {
        let product = CyclotomicInteger::omega_pow(m, s)
            .unwrap()
            .checked_mul(&CyclotomicInteger::omega_pow(m, t).unwrap())
            .unwrap();
        prop_assert_eq!(product, CyclotomicInteger::omega_pow(m, s + t).unwrap());
    }

    #[test]
    fn scaled_roots_round_trip(m in 1u32..=4, t in 0i64..64, scale in 1i64..1000) {
        let q = 1 << m;
        let z = CyclotomicInteger::omega_pow(m, t).unwrap().scaled(scale);
        prop_assert_eq!(z.as_scaled_root(scale), Some((t % q) as u32));
    }

    #[test]
    fn embedding_respects_the_ring_operations((a, b, _) in ring_triple()) {
        let (ar, ai) = embed(&a);
        let (br, bi) = embed(&b);
        let sum = embed(&a.checked_add(&b).unwrap());
        prop_assert!(close(sum, (ar + br, ai + bi)));
        let product = embed(&a.checked_mul(&b).unwrap());
        prop_assert!(close(product, (ar * br - ai * bi, ar * bi + ai * br)));
        let conj = embed(&a.conj());
        prop_assert!(close(conj, (ar, -ai)));
        // The squared modulus embeds to a real number, |embed(a)|^2.
        let norm = embed(&a.norm_sq());
        prop_assert!(close(norm, (ar * ar + ai * ai, 0.0)));
    }

    #[test]
    fn embedding_with_large_coefficients((a, b) in (1u32..=4).prop_flat_map(|m| {
        (ring_elem(m, 1 << 10), ring_elem(m, 1 << 10))
    })) {
        let (ar, ai) = embed(&a);
        let (br, bi) = embed(&b);
        let product = embed(&a.checked_mul(&b).unwrap());
        prop_assert!(close(product, (ar * br - ai * bi, ar * bi + ai * br)));
    }

    #[test]
    fn wht_is_an_involution_up_to_scale(values in prop::collection::vec(-100i64..=100, 256)) {
        let mut twice = values.clone();
        wht_in_place(&mut twice).unwrap();
        wht_in_place(&mut twice).unwrap();
        let scaled: Vec<i64> = values.iter().map(|&v| 256 * v).collect();
        prop_assert_eq!(twice, scaled);
    }

    #[test]
    fn wht_satisfies_parseval(n in 1usize..=8, seed in any::<u64>()) {
        // Deterministic little generator so the vector length can track n.
        let l = 1usize << n;
        let mut state = seed;
        let values: Vec<i64> = (0..l)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % 41) as i64 - 20
            })
            .collect();
        let mut spectrum = values.clone();
        wht_in_place(&mut spectrum).unwrap();
        let lhs: i64 = spectrum.iter().map(|w| w * w).sum();
        let rhs: i64 = values.iter().map(|v| v * v).sum::<i64>() * l as i64;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gwht_involution_on_coefficient_slices(f in gbf()) {
        let l = f.len() as i64;
        for slice in f.coefficient_slices() {
            let mut twice = slice.clone();
            wht_in_place(&mut twice).unwrap();
            wht_in_place(&mut twice).unwrap();
            let scaled: Vec<i64> = slice.iter().map(|&v| l * v).collect();
            prop_assert_eq!(twice, scaled);
        }
    }

    #[test]
    fn generalized_parseval(f in gbf()) {
        let m = f.order_exponent();
        let mut total = CyclotomicInteger::zero(m).unwrap();
        for z in f.gwht().values() {
            total = total.checked_add(&z.norm_sq()).unwrap();
        }
        let expected = CyclotomicInteger::from_int(m, 1i64 << (2 * f.n())).unwrap();
        prop_assert_eq!(total, expected);
    }

    #[test]
    fn spectrum_matches_naive_summation(f in gbf()) {
        let m = f.order_exponent();
        let spectrum = f.gwht();
        for u in 0..f.len() {
            let mut expected = CyclotomicInteger::zero(m).unwrap();
            for x in 0..f.len() {
                let root = CyclotomicInteger::omega_pow(m, i64::from(f.value(x))).unwrap();
                let term = if (x & u).count_ones() % 2 == 1 {
                    root.negated()
                } else {
                    root
                };
                expected = expected.checked_add(&term).unwrap();
            }
            prop_assert_eq!(spectrum.entry(u), &expected);
        }
    }
}
