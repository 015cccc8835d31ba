//! Shared input builders for the benchmark suite: deterministic,
//! representative workloads at desk scale.

use fueter_core::axial::HolomorphicSeed;
use fueter_core::clifford::{Blade, Multivector};
use fueter_core::polynomial::CliffordPolynomial;
use fueter_core::rational::ratio;
use fueter_core::spherical::{ck_extend, random_homogeneous, random_monogenic, SphericalMonogenic};

/// A dense multivector touching every blade of the algebra.
pub fn dense_multivector(m: usize, salt: i64) -> Multivector {
    let terms = (0u32..(1 << m)).map(|mask| {
        let indices: Vec<usize> = (1..=m).filter(|j| mask & (1 << (j - 1)) != 0).collect();
        let blade = Blade::new(indices, m).expect("valid indices");
        (blade, ratio(mask as i64 + salt, 3))
    });
    Multivector::from_terms(m, terms).expect("valid terms")
}

/// Seed and factor for a representative basic transform run.
pub fn spatial_inputs(m: usize, k: usize, n: usize) -> (HolomorphicSeed, SphericalMonogenic) {
    (HolomorphicSeed::z_power(n), random_monogenic(k, m, 2024))
}

/// A monogenic homogeneous factor depending on `x_0`.
pub fn axial_factor(m: usize, k: usize) -> CliffordPolynomial {
    ck_extend(&random_homogeneous(k, m, 2024)).expect("vector variables only")
}

/// A lifted polynomial of moderate size for Laplacian benchmarks.
pub fn lifted_polynomial(m: usize) -> CliffordPolynomial {
    use fueter_core::axial::{lift, seed_to_pair};
    let pair = seed_to_pair(&HolomorphicSeed::z_power(4));
    let factor = random_monogenic(2, m, 2024);
    lift(&pair, factor.poly(), m).expect("matching dimension")
}
