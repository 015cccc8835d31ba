//! Property tests for the algebraic laws the engine relies on. Everything is
//! exact rational arithmetic, so every law is asserted as strict equality.

use proptest::prelude::*;

use fueter_core::axial::{
    d_lower, d_upper, dbar_z, is_p_holomorphic, seed_to_pair, HolomorphicSeed, Parity,
    RadialPolynomial,
};
use fueter_core::clifford::{Blade, Multivector};
use fueter_core::polynomial::CliffordPolynomial;
use fueter_core::rational::{integer, Rational};
use fueter_core::spherical::ck_extend;

fn arb_rational() -> impl Strategy<Value = Rational> {
    ((-9i64..=9), (1i64..=4)).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn arb_multivector(m: usize) -> impl Strategy<Value = Multivector> {
    prop::collection::vec(((0u32..(1u32 << m)), arb_rational()), 0..4).prop_map(move |entries| {
        let terms = entries.into_iter().map(|(mask, coeff)| {
            let indices: Vec<usize> = (1..=m).filter(|j| mask & (1 << (j - 1)) != 0).collect();
            (Blade::new(indices, m).expect("valid indices"), coeff)
        });
        Multivector::from_terms(m, terms).expect("valid terms")
    })
}

fn arb_vector(m: usize) -> impl Strategy<Value = Multivector> {
    prop::collection::vec(arb_rational(), m)
        .prop_map(move |components| Multivector::vector(m, &components).expect("m components"))
}

fn arb_poly(m: usize) -> impl Strategy<Value = CliffordPolynomial> {
    prop::collection::vec(
        (prop::collection::vec(0u32..=2, m + 1), arb_multivector(m)),
        0..4,
    )
    .prop_map(move |terms| CliffordPolynomial::from_terms(m, terms).expect("valid terms"))
}

/// Polynomial in the vector variables only (for monogenic extension inputs).
fn arb_spatial_poly(m: usize) -> impl Strategy<Value = CliffordPolynomial> {
    arb_poly(m).prop_map(|p| p.restrict_x0_zero())
}

fn arb_radial(parity: Parity) -> impl Strategy<Value = RadialPolynomial> {
    prop::collection::vec(((0u32..=4), (0u32..=3), arb_rational()), 0..5).prop_map(move |entries| {
        let terms = entries.into_iter().map(|(a, half, coeff)| {
            let b = match parity {
                Parity::Even => 2 * half,
                Parity::Odd => 2 * half + 1,
            };
            (a, b, coeff)
        });
        RadialPolynomial::from_terms(parity, terms).expect("parity-correct")
    })
}

fn with_m<T: std::fmt::Debug>(
    inner: impl Fn(usize) -> BoxedStrategy<T>,
) -> impl Strategy<Value = (usize, T)> {
    (1usize..=5).prop_flat_map(move |m| (Just(m), inner(m)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn geometric_product_is_associative(
        (m, (a, b, c)) in with_m(|m| (arb_multivector(m), arb_multivector(m), arb_multivector(m)).boxed())
    ) {
        let _ = m;
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn conjugation_is_an_anti_homomorphism(
        (_m, (a, b)) in with_m(|m| (arb_multivector(m), arb_multivector(m)).boxed())
    ) {
        prop_assert_eq!(
            a.geometric_product(&b).unwrap().conjugate(),
            b.conjugate().geometric_product(&a.conjugate()).unwrap()
        );
    }

    #[test]
    fn conjugation_is_an_involution(
        (_m, a) in with_m(|m| arb_multivector(m).boxed())
    ) {
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn vectors_square_to_minus_norm(
        (m, v) in with_m(|m| arb_vector(m).boxed())
    ) {
        let norm_sq = v
            .terms()
            .map(|(_, c)| c * c)
            .fold(Rational::new(0.into(), 1.into()), |acc, c| acc + c);
        prop_assert_eq!(&v * &v, Multivector::scalar(m, -norm_sq));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn laplacian_factors_through_both_operator_orders(
        (_m, p) in prop::sample::select(vec![3usize, 5])
            .prop_flat_map(|m| (Just(m), arb_poly(m)))
    ) {
        prop_assert_eq!(p.laplacian(), p.cauchy_riemann().conjugate_cauchy_riemann());
        prop_assert_eq!(p.laplacian(), p.conjugate_cauchy_riemann().cauchy_riemann());
    }

    #[test]
    fn partial_satisfies_leibniz(
        (m, (a, b)) in with_m(|m| (arb_poly(m), arb_poly(m)).boxed()),
        j_pick in 0usize..=5,
    ) {
        let j = j_pick % (m + 1);
        let lhs = a.multiply(&b).unwrap().partial(j).unwrap();
        let rhs = a
            .partial(j)
            .unwrap()
            .multiply(&b)
            .unwrap()
            .add(&a.multiply(&b.partial(j).unwrap()).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dirac_squares_to_minus_spatial_laplacian(
        (m, p) in with_m(|m| arb_poly(m).boxed())
    ) {
        let spatial_laplacian = p
            .laplacian()
            .sub(&p.partial(0).unwrap().partial(0).unwrap())
            .unwrap();
        prop_assert_eq!(p.dirac().dirac(), spatial_laplacian.neg());
        let _ = m;
    }

    #[test]
    fn monogenic_extensions_are_harmonic(
        // monogenic implies harmonic; extensions are monogenic by construction
        (_m, g) in prop::sample::select(vec![3usize, 5])
            .prop_flat_map(|m| (Just(m), arb_spatial_poly(m)))
    ) {
        let extension = ck_extend(&g).unwrap();
        prop_assert!(extension.is_monogenic());
        prop_assert!(extension.laplacian().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ladder_identities_hold(
        g in arb_radial(Parity::Even),
        h in arb_radial(Parity::Odd),
        n in 0usize..=3,
    ) {
        let two_n = integer(2 * n as i64);
        // second derivative commutation for the lower ladder
        let lhs = d_lower(n, &g).unwrap().d_r().d_r();
        let rhs = d_lower(n, &g.d_r().d_r())
            .unwrap()
            .sub(&d_lower(n + 1, &g).unwrap().scale(&two_n))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
        // second derivative commutation for the upper ladder
        let lhs = d_upper(n, &h).unwrap().d_r().d_r();
        let rhs = d_upper(n, &h.d_r().d_r())
            .unwrap()
            .sub(&d_upper(n + 1, &h).unwrap().scale(&two_n))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
        // mixed first-derivative exchange laws
        prop_assert_eq!(d_upper(n, &g.d_r()).unwrap(), d_lower(n, &g).unwrap().d_r());
        let lhs = d_lower(n, &h.d_r())
            .unwrap()
            .sub(&d_upper(n, &h).unwrap().d_r())
            .unwrap();
        let rhs = d_upper(n, &h).unwrap().div_r().scale(&two_n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn seed_pairs_are_holomorphic(coeffs in prop::collection::vec(arb_rational(), 0..6)) {
        let pair = seed_to_pair(&HolomorphicSeed::new(coeffs));
        prop_assert!(dbar_z(&pair).is_zero());
        prop_assert!(is_p_holomorphic(&pair, 0));
    }

    #[test]
    fn polynomial_json_round_trips(
        (_m, p) in with_m(|m| arb_poly(m).boxed())
    ) {
        let json = serde_json::to_string(&p).unwrap();
        let back: CliffordPolynomial = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn multivector_json_round_trips(
        (_m, a) in with_m(|m| arb_multivector(m).boxed())
    ) {
        let json = serde_json::to_string(&a).unwrap();
        let back: Multivector = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn radial_json_round_trips(
        g in arb_radial(Parity::Even),
        h in arb_radial(Parity::Odd),
    ) {
        for poly in [g, h] {
            let json = serde_json::to_string(&poly).unwrap();
            let back: RadialPolynomial = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back, poly);
        }
    }
}
