//! The transform drivers: iterated Laplacian powers of lifted seed pairs,
//! which produce exactly monogenic polynomials from planar holomorphic (and
//! higher-order holomorphic) seeds, together with the radial closed form of
//! those Laplacian powers, the axial `(A, B)` components, and the two-path
//! driver for monogenic factors depending on `x_0`.
//!
//! Only odd dimensions `m >= 3` are supported: the even case would require
//! fractional Laplacian powers outside exact polynomial arithmetic.

use num_traits::{One, Zero};

use crate::axial::{
    d_lower, d_upper, is_p_holomorphic, lift, seed_to_pair, vekua_check, AxialPair, Parity,
    RadialPolynomial,
};
use crate::error::Error;
use crate::polynomial::CliffordPolynomial;
use crate::rational::{binomial, double_factorial, Rational};
use crate::spherical::{ck_axial_form, fischer_decompose, SphericalMonogenic};

/// Parameters of a transform run: dimension `m` (odd, at least 3), factor
/// degree `k`, and higher-order holomorphy index `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FueterConfig {
    pub m: usize,
    pub k: usize,
    pub p: usize,
}

impl FueterConfig {
    pub fn new(m: usize, k: usize, p: usize) -> Result<Self, Error> {
        if m % 2 == 0 || m < 3 {
            return Err(Error::UnsupportedDimension { m });
        }
        Ok(FueterConfig { m, k, p })
    }

    /// The Laplacian exponent `k + (m - 1)/2` of the basic transform.
    pub fn base_exponent(&self) -> usize {
        self.k + (self.m - 1) / 2
    }

    /// The Laplacian exponent `p + k + (m - 1)/2` of the higher-order one.
    pub fn total_exponent(&self) -> usize {
        self.p + self.base_exponent()
    }
}

/// Which side of an axial function a radial polynomial multiplies: the
/// scalar part (`g P`, `g` even in `r`) or the omega part (`g omega P`,
/// `g` odd in `r`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Scalar,
    Omega,
}

/// Record of a transform run: configuration, inputs, output, and exact
/// verification verdicts. `paths_agree` and `vekua_ok` are `None` for runs
/// that have no second computation path or no Vekua system to check. A
/// non-monogenic output always carries its nonzero residual for inspection.
/// The serialized form holds the configuration, output and verdicts; the
/// inputs stay in memory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformReport {
    pub config: FueterConfig,
    /// The seed pair `(u, v)` the transform was driven by.
    pub pair: AxialPair,
    /// The monogenic factor the pair was lifted against.
    pub factor: CliffordPolynomial,
    pub output: CliffordPolynomial,
    pub monogenic: bool,
    pub paths_agree: Option<bool>,
    pub vekua_ok: Option<bool>,
    pub residual: Option<CliffordPolynomial>,
}

impl TransformReport {
    fn from_output(
        config: FueterConfig,
        pair: AxialPair,
        factor: CliffordPolynomial,
        output: CliffordPolynomial,
        paths_agree: Option<bool>,
        vekua_ok: Option<bool>,
    ) -> Self {
        let residual_poly = output.cauchy_riemann();
        let monogenic = residual_poly.is_zero();
        TransformReport {
            config,
            pair,
            factor,
            output,
            monogenic,
            paths_agree,
            vekua_ok,
            residual: if monogenic { None } else { Some(residual_poly) },
        }
    }

    /// All verifications that apply to this run hold.
    pub fn verified(&self) -> bool {
        self.monogenic && self.paths_agree.unwrap_or(true) && self.vekua_ok.unwrap_or(true)
    }

    /// Distinguishes "monogenic because zero" from "monogenic and nonzero".
    pub fn output_is_zero(&self) -> bool {
        self.output.is_zero()
    }
}

/// The descending product `(2k+m-1)(2k+m-3)...(2k+m-(2j-1))` with `j`
/// factors; the empty product (`j = 0`) is 1. Once a factor reaches zero the
/// product is zero, which happens exactly from `j = k + (m+1)/2` on for odd
/// `m`.
pub fn d_coeff(k: usize, m: usize, j: usize) -> Rational {
    let base = 2 * k as i64 + m as i64;
    let mut acc = Rational::one();
    for i in 1..=j as i64 {
        let factor = base - (2 * i - 1);
        if factor == 0 {
            return Rational::zero();
        }
        acc *= Rational::from_integer(factor.into());
    }
    acc
}

/// The radial closed form of the `n`-th Laplacian power of `g P` (scalar
/// variant, `g` even) or `g omega P` (omega variant, `g` odd): the bracket
/// `sum_j d_coeff(k,m,j) binom(n,j) D(j) delta_z^{n-j} g`, with `D` the lower
/// or upper ladder operator according to the variant.
pub fn laplacian_power_axial(
    n: usize,
    g: &RadialPolynomial,
    k: usize,
    m: usize,
    variant: Variant,
) -> Result<RadialPolynomial, Error> {
    let expected = match variant {
        Variant::Scalar => Parity::Even,
        Variant::Omega => Parity::Odd,
    };
    if !g.is_zero() && g.parity() != expected {
        return Err(Error::ParityViolation { expected });
    }
    // delta_z^i g for i = 0..=n
    let mut planar_powers = Vec::with_capacity(n + 1);
    planar_powers.push(g.clone());
    for i in 1..=n {
        planar_powers.push(planar_powers[i - 1].delta_z());
    }
    let mut acc = RadialPolynomial::zero(expected);
    for j in 0..=n {
        let coeff = d_coeff(k, m, j) * Rational::from_integer(binomial(n, j));
        if coeff.is_zero() {
            continue;
        }
        let ladder = match variant {
            Variant::Scalar => d_lower(j, &planar_powers[n - j])?,
            Variant::Omega => d_upper(j, &planar_powers[n - j])?,
        };
        acc = acc.add(&ladder.scale(&coeff))?;
    }
    Ok(acc)
}

/// The basic transform: the `k + (m-1)/2`-th Laplacian power of the lift of
/// a holomorphic seed against a monogenic factor of the vector variables.
/// The output is exactly monogenic.
pub fn fueter_spatial(
    seed: &crate::axial::HolomorphicSeed,
    factor: &SphericalMonogenic,
    m: usize,
) -> Result<TransformReport, Error> {
    let config = FueterConfig::new(m, factor.degree(), 0)?;
    if factor.m() != m {
        return Err(Error::DimensionMismatch {
            left: m,
            right: factor.m(),
        });
    }
    let pair = seed_to_pair(seed);
    let lifted = lift(&pair, factor.poly(), m)?;
    let output = lifted.laplacian_power(config.base_exponent());
    Ok(TransformReport::from_output(
        config,
        pair,
        factor.poly().clone(),
        output,
        None,
        None,
    ))
}

/// Produces a polyharmonic function of order `p` from a radial polynomial
/// annihilated by the `p`-th planar Laplacian power: the `k + (m-1)/2`-th
/// Laplacian power of `g P` (scalar variant) or `g omega P` (omega variant).
pub fn polyharmonic_lift(
    g: &RadialPolynomial,
    factor: &SphericalMonogenic,
    m: usize,
    p: usize,
    variant: Variant,
) -> Result<CliffordPolynomial, Error> {
    let config = FueterConfig::new(m, factor.degree(), p)?;
    if factor.m() != m {
        return Err(Error::DimensionMismatch {
            left: m,
            right: factor.m(),
        });
    }
    if !g.delta_z_power(p).is_zero() {
        return Err(Error::PolyharmonicHypothesis { p });
    }
    let pair = match variant {
        Variant::Scalar => AxialPair::new(g.clone(), RadialPolynomial::zero(Parity::Odd))?,
        Variant::Omega => AxialPair::new(RadialPolynomial::zero(Parity::Even), g.clone())?,
    };
    let lifted = lift(&pair, factor.poly(), m)?;
    Ok(lifted.laplacian_power(config.base_exponent()))
}

/// The axial components of the higher-order transform output:
/// `A = D_lower(k + (m-1)/2) applied to delta_z^p u` and
/// `B = D_upper(k + (m-1)/2) applied to delta_z^p v`.
pub fn ab_components(
    pair: &AxialPair,
    k: usize,
    m: usize,
    p: usize,
) -> (RadialPolynomial, RadialPolynomial) {
    assert!(m % 2 == 1 && m >= 3, "m must be odd and at least 3");
    let steps = k + (m - 1) / 2;
    let a = d_lower(steps, &pair.u().delta_z_power(p)).expect("u is even");
    let b = d_upper(steps, &pair.v().delta_z_power(p)).expect("v is odd");
    (a, b)
}

/// The constant relating the higher-order transform output to the lift of
/// its `(A, B)` components: `(2k+m-1)!! * binom(p + k + (m-1)/2, k + (m-1)/2)`.
pub fn proof_constant(p: usize, k: usize, m: usize) -> Result<Rational, Error> {
    let config = FueterConfig::new(m, k, p)?;
    let df = double_factorial(2 * k + m - 1);
    let binom = binomial(config.total_exponent(), config.base_exponent());
    Ok(Rational::from_integer(df * binom))
}

/// The higher-order transform: the `p + k + (m-1)/2`-th Laplacian power of
/// the lift of a pair satisfying the order-`p` holomorphy equation.
///
/// Two independent verifications are carried out exactly and recorded in the
/// report: the output equals `proof_constant * lift((A, B), P)`
/// (`paths_agree`), and `(A, B)` satisfies the Vekua-type system (`vekua_ok`).
pub fn fueter_higher(
    pair: &AxialPair,
    factor: &SphericalMonogenic,
    m: usize,
    p: usize,
) -> Result<TransformReport, Error> {
    let config = FueterConfig::new(m, factor.degree(), p)?;
    if factor.m() != m {
        return Err(Error::DimensionMismatch {
            left: m,
            right: factor.m(),
        });
    }
    if !is_p_holomorphic(pair, p) {
        return Err(Error::NotPHolomorphic { p });
    }
    let k = factor.degree();
    let lifted = lift(pair, factor.poly(), m)?;
    let output = lifted.laplacian_power(config.total_exponent());

    let (a, b) = ab_components(pair, k, m, p);
    let vekua_ok = vekua_check(&a, &b, k, m)?;
    let constant = proof_constant(p, k, m)?;
    let ab_pair = AxialPair::new(a, b)?;
    let via_components = lift(&ab_pair, factor.poly(), m)?.scale(&constant);
    let paths_agree = output == via_components;

    Ok(TransformReport::from_output(
        config,
        pair.clone(),
        factor.poly().clone(),
        output,
        Some(paths_agree),
        Some(vekua_ok),
    ))
}

/// The transform with a monogenic factor `Q` depending on `x_0` as well: the
/// `k + (m-1)/2`-th Laplacian power of `(lift of the seed pair) * Q`.
///
/// Two independent paths are computed and compared exactly:
/// direct Laplacian powers of the lifted product, and a decomposition route
/// that restricts `Q` at `x_0 = 0`, splits it into monogenic components,
/// rebuilds each extension as an axial pair, multiplies it into the seed as
/// a complex product, and drives the higher-order transform on each piece.
pub fn fueter_axial(
    seed: &crate::axial::HolomorphicSeed,
    q: &CliffordPolynomial,
    m: usize,
) -> Result<TransformReport, Error> {
    if !q.is_monogenic() {
        return Err(Error::NotMonogenic);
    }
    let k = q.total_degree().unwrap_or(0);
    if !q.is_homogeneous(k) {
        return Err(Error::NotHomogeneous { degree: k });
    }
    let config = FueterConfig::new(m, k, 0)?;
    if q.m() != m {
        return Err(Error::DimensionMismatch {
            left: m,
            right: q.m(),
        });
    }
    let seed_pair = seed_to_pair(seed);

    // direct path
    let lifted = lift(&seed_pair, q, m)?;
    let direct = lifted.laplacian_power(config.base_exponent());

    // decomposition path
    let decomposition = fischer_decompose(&q.restrict_x0_zero(), k)?;
    let mut sum = CliffordPolynomial::zero(m);
    let mut sub_paths_agree = true;
    let mut sub_vekua_ok = true;
    for n in 0..=k {
        let component = decomposition.component(n);
        let extension_pair = ck_axial_form(n, k - n, m);
        let product = seed_pair.mul(&extension_pair);
        debug_assert!(
            is_p_holomorphic(&product, n),
            "seed times a degree-{n} pair satisfies the order-{n} holomorphy equation"
        );
        let sub = fueter_higher(&product, component, m, n)?;
        sub_paths_agree &= sub.paths_agree.unwrap_or(true);
        sub_vekua_ok &= sub.vekua_ok.unwrap_or(true);
        sum = sum.add(&sub.output)?;
    }

    let paths_agree = direct == sum && sub_paths_agree;
    Ok(TransformReport::from_output(
        config,
        seed_pair,
        q.clone(),
        direct,
        Some(paths_agree),
        Some(sub_vekua_ok),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axial::HolomorphicSeed;
    use crate::rational::{integer, ratio};
    use crate::spherical::{ck_extend, random_monogenic};

    #[test]
    fn config_rejects_even_or_small_m() {
        assert!(matches!(
            FueterConfig::new(4, 0, 0),
            Err(Error::UnsupportedDimension { m: 4 })
        ));
        assert!(matches!(
            FueterConfig::new(1, 0, 0),
            Err(Error::UnsupportedDimension { m: 1 })
        ));
        let config = FueterConfig::new(5, 2, 1).unwrap();
        assert_eq!(config.base_exponent(), 4);
        assert_eq!(config.total_exponent(), 5);
    }

    #[test]
    fn d_coeff_values() {
        assert_eq!(d_coeff(2, 5, 0), integer(1));
        assert_eq!(d_coeff(0, 3, 1), integer(2));
        // (2k+m-1)(2k+m-3) for k=1, m=3: 4*2 = 8
        assert_eq!(d_coeff(1, 3, 2), integer(8));
        // zero from j = k + (m+1)/2 on
        for k in 0..=2 {
            for m in [3usize, 5] {
                let cutoff = k + (m + 1) / 2;
                assert!(!d_coeff(k, m, cutoff - 1).is_zero());
                for j in cutoff..cutoff + 3 {
                    assert!(d_coeff(k, m, j).is_zero(), "k={k} m={m} j={j}");
                }
            }
        }
    }

    #[test]
    fn proof_constant_values() {
        assert_eq!(proof_constant(0, 0, 3).unwrap(), integer(2));
        assert_eq!(proof_constant(1, 0, 3).unwrap(), integer(4));
        assert!(matches!(
            proof_constant(0, 0, 1),
            Err(Error::UnsupportedDimension { m: 1 })
        ));
        // the double factorial equals the full descending product
        for k in 0..=2 {
            for m in [3usize, 5] {
                let j = k + (m - 1) / 2;
                assert_eq!(
                    d_coeff(k, m, j),
                    Rational::from_integer(double_factorial(2 * k + m - 1)),
                );
            }
        }
    }

    #[test]
    fn laplacian_power_axial_base_cases() {
        let g = RadialPolynomial::from_terms(
            Parity::Even,
            vec![(2, 2, integer(1)), (0, 4, ratio(-1, 2))],
        )
        .unwrap();
        // n = 0 leaves g unchanged
        assert_eq!(
            laplacian_power_axial(0, &g, 1, 3, Variant::Scalar).unwrap(),
            g
        );
        // n = 1 scalar: delta_z g + (2k+m-1) D_lower(1) g
        let k = 1;
        let m = 3;
        let expected = g
            .delta_z()
            .add(&d_lower(1, &g).unwrap().scale(&integer(2 * k + m - 1)))
            .unwrap();
        assert_eq!(
            laplacian_power_axial(1, &g, k as usize, m as usize, Variant::Scalar).unwrap(),
            expected
        );
        // parity violations are rejected
        assert!(laplacian_power_axial(1, &g, 0, 3, Variant::Omega).is_err());
    }

    #[test]
    fn laplacian_power_axial_r4_case() {
        // n=2, g=r^4, k=0, m=3: 24 + 2*2*D_lower(1){12 r^2} + 0 = 120
        let g = RadialPolynomial::monomial(0, 4, integer(1));
        let result = laplacian_power_axial(2, &g, 0, 3, Variant::Scalar).unwrap();
        assert_eq!(result, RadialPolynomial::one().scale(&integer(120)));
        // Cartesian cross-check through the lift
        let m = 3;
        let pair = AxialPair::new(g, RadialPolynomial::zero(Parity::Odd)).unwrap();
        let cartesian = lift(&pair, &CliffordPolynomial::one(m), m)
            .unwrap()
            .laplacian_power(2);
        assert_eq!(cartesian, CliffordPolynomial::scalar(m, integer(120)));
    }

    #[test]
    fn radial_route_annihilates_planar_solutions() {
        // with delta_z^p g = 0 every term of the full-exponent bracket
        // vanishes: the leading k+(m+1)/2 terms by the hypothesis on g, the
        // rest because the descending-product coefficient is zero
        let norm_sq = RadialPolynomial::from_terms(
            Parity::Even,
            vec![(2, 0, integer(1)), (0, 2, integer(1))],
        )
        .unwrap();
        for (k, m, p) in [(0usize, 3usize, 1usize), (1, 3, 2), (0, 5, 1), (2, 5, 2)] {
            let mut even = RadialPolynomial::zero(Parity::Even);
            let mut odd = RadialPolynomial::zero(Parity::Odd);
            let mut weight = RadialPolynomial::one();
            for a in 0..p {
                let pair = seed_to_pair(&HolomorphicSeed::z_power(3 + a));
                even = even.add(&weight.mul(pair.u())).unwrap();
                odd = odd.add(&weight.mul(pair.v())).unwrap();
                weight = weight.mul(&norm_sq);
            }
            assert!(even.delta_z_power(p).is_zero());
            assert!(odd.delta_z_power(p).is_zero());
            let exponent = p + k + (m - 1) / 2;
            let scalar = laplacian_power_axial(exponent, &even, k, m, Variant::Scalar).unwrap();
            let omega = laplacian_power_axial(exponent, &odd, k, m, Variant::Omega).unwrap();
            assert!(scalar.is_zero(), "k={k} m={m} p={p}");
            assert!(omega.is_zero(), "k={k} m={m} p={p}");
        }
    }

    #[test]
    fn non_monogenic_output_carries_its_residual() {
        let config = FueterConfig::new(3, 0, 0).unwrap();
        let build = |output: CliffordPolynomial| {
            TransformReport::from_output(
                config,
                AxialPair::zero(),
                CliffordPolynomial::one(3),
                output,
                None,
                None,
            )
        };
        let report = build(CliffordPolynomial::variable(3, 0).unwrap());
        assert!(!report.monogenic);
        assert!(!report.verified());
        assert_eq!(report.residual, Some(CliffordPolynomial::one(3)));
        // the bare vector variable is not monogenic either
        assert!(!build(CliffordPolynomial::vector_variable(3)).monogenic);
        // a monogenic output carries no residual
        let ck_of_x = crate::spherical::ck_extend(&CliffordPolynomial::vector_variable(3)).unwrap();
        let report = build(ck_of_x);
        assert!(report.monogenic);
        assert_eq!(report.residual, None);
    }

    #[test]
    fn spatial_spot_values() {
        let m = 3;
        let one = SphericalMonogenic::one(m);
        // f = z: the Laplacian of the degree-1 lift vanishes
        let report = fueter_spatial(&HolomorphicSeed::z_power(1), &one, m).unwrap();
        assert!(report.output.is_zero());
        assert!(report.monogenic);
        assert!(report.output_is_zero());
        // f = z^2: constant 2(1 - m) = -4
        let report = fueter_spatial(&HolomorphicSeed::z_power(2), &one, m).unwrap();
        assert_eq!(report.output, CliffordPolynomial::scalar(m, integer(-4)));
        assert!(report.monogenic);
        // f = z^3: -12 x0 - 4 x, computed by hand from the radial single-step
        // formulas; monogenic and of degree 1
        let report = fueter_spatial(&HolomorphicSeed::z_power(3), &one, m).unwrap();
        let expected = &CliffordPolynomial::variable(m, 0)
            .unwrap()
            .scale(&integer(-12))
            + &CliffordPolynomial::vector_variable(m).scale(&integer(-4));
        assert_eq!(report.output, expected);
        assert!(report.monogenic);
        assert!(!report.output_is_zero());
    }

    #[test]
    fn spatial_rejects_even_m() {
        let report = fueter_spatial(&HolomorphicSeed::z_power(2), &SphericalMonogenic::one(4), 4);
        assert!(matches!(report, Err(Error::UnsupportedDimension { m: 4 })));
    }

    #[test]
    fn polyharmonic_lift_examples() {
        let m = 3;
        let one = SphericalMonogenic::one(m);
        // p = 1, harmonic g: output is harmonic
        let g = seed_to_pair(&HolomorphicSeed::z_power(3)).u().clone();
        let out = polyharmonic_lift(&g, &one, m, 1, Variant::Scalar).unwrap();
        assert!(out.is_polyharmonic(1));
        // g = 0 gives 0
        let out = polyharmonic_lift(
            &RadialPolynomial::zero(Parity::Even),
            &one,
            m,
            1,
            Variant::Scalar,
        )
        .unwrap();
        assert!(out.is_zero());
        // p = 2, g = r^2 x0: output 6 x0 with vanishing second Laplacian power
        let g = RadialPolynomial::monomial(1, 2, integer(1));
        assert!(g.delta_z_power(2).is_zero());
        let out = polyharmonic_lift(&g, &one, m, 2, Variant::Scalar).unwrap();
        assert_eq!(
            out,
            CliffordPolynomial::variable(m, 0)
                .unwrap()
                .scale(&integer(6))
        );
        assert!(out.is_polyharmonic(2));
        // hypothesis violations are reported
        let bad = RadialPolynomial::monomial(0, 2, integer(1));
        assert!(matches!(
            polyharmonic_lift(&bad, &one, m, 1, Variant::Scalar),
            Err(Error::PolyharmonicHypothesis { p: 1 })
        ));
    }

    #[test]
    fn ab_component_examples() {
        let m = 3;
        // f = z, k = 0, p = 0: both components vanish
        let pair = seed_to_pair(&HolomorphicSeed::z_power(1));
        let (a, b) = ab_components(&pair, 0, m, 0);
        assert!(a.is_zero());
        assert!(b.is_zero());
        // f = z^3: (-6 x0, -2 r), passing the Vekua check
        let pair = seed_to_pair(&HolomorphicSeed::z_power(3));
        let (a, b) = ab_components(&pair, 0, m, 0);
        assert_eq!(a, RadialPolynomial::x0().scale(&integer(-6)));
        assert_eq!(b, RadialPolynomial::r().scale(&integer(-2)));
        assert!(vekua_check(&a, &b, 0, m).unwrap());
        // the zero pair maps to zero components
        let (a, b) = ab_components(&AxialPair::zero(), 2, m, 1);
        assert!(a.is_zero() && b.is_zero());
    }

    #[test]
    fn higher_reduces_to_spatial_at_p_zero() {
        for m in [3usize, 5] {
            for k in 0..=2usize {
                let factor = random_monogenic(k, m, (3 * m + k) as u64);
                for n in 1..=3usize {
                    let seed = HolomorphicSeed::z_power(n);
                    let spatial = fueter_spatial(&seed, &factor, m).unwrap();
                    let higher = fueter_higher(&seed_to_pair(&seed), &factor, m, 0).unwrap();
                    assert_eq!(spatial.output, higher.output);
                    assert!(higher.verified());
                }
            }
        }
    }

    #[test]
    fn higher_on_first_order_pair() {
        // pair (r^2, 0) satisfies the order-1 equation; both paths agree
        let m = 3;
        let pair = AxialPair::new(
            RadialPolynomial::monomial(0, 2, integer(1)),
            RadialPolynomial::zero(Parity::Odd),
        )
        .unwrap();
        let report = fueter_higher(&pair, &SphericalMonogenic::one(m), m, 1).unwrap();
        assert!(report.verified());
        // rejected at p = 0
        assert!(matches!(
            fueter_higher(&pair, &SphericalMonogenic::one(m), m, 0),
            Err(Error::NotPHolomorphic { p: 0 })
        ));
        // the zero pair maps to zero
        let report = fueter_higher(&AxialPair::zero(), &SphericalMonogenic::one(m), m, 2).unwrap();
        assert!(report.output.is_zero());
        assert!(report.verified());
    }

    #[test]
    fn axial_reduces_to_spatial_for_constant_factor() {
        let m = 3;
        for n in 1..=4 {
            let seed = HolomorphicSeed::z_power(n);
            let spatial = fueter_spatial(&seed, &SphericalMonogenic::one(m), m).unwrap();
            let axial = fueter_axial(&seed, &CliffordPolynomial::one(m), m).unwrap();
            assert_eq!(spatial.output, axial.output);
            assert!(axial.verified());
        }
    }

    #[test]
    fn axial_on_extended_vector_variable() {
        // Q = 3 x0 + x, the monogenic extension of the vector variable
        let m = 3;
        let q = ck_extend(&CliffordPolynomial::vector_variable(m)).unwrap();
        let report = fueter_axial(&HolomorphicSeed::z_power(1), &q, m).unwrap();
        assert!(report.monogenic);
        assert_eq!(report.paths_agree, Some(true));
        assert_eq!(report.vekua_ok, Some(true));
        // f = 0 maps to 0
        let report = fueter_axial(&HolomorphicSeed::zero(), &q, m).unwrap();
        assert!(report.output.is_zero());
        assert!(report.verified());
    }

    #[test]
    fn axial_rejects_bad_factors() {
        let m = 3;
        let seed = HolomorphicSeed::z_power(1);
        // non-monogenic Q
        let x0 = CliffordPolynomial::variable(m, 0).unwrap();
        assert!(matches!(
            fueter_axial(&seed, &x0, m),
            Err(Error::NotMonogenic)
        ));
        // non-homogeneous (but monogenic) Q
        let q = &CliffordPolynomial::one(m)
            + &ck_extend(&CliffordPolynomial::vector_variable(m)).unwrap();
        assert!(q.is_monogenic());
        assert!(matches!(
            fueter_axial(&seed, &q, m),
            Err(Error::NotHomogeneous { .. })
        ));
    }
}
