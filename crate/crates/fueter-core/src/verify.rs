//! Randomized verification sweeps behind the command-line `verify` and
//! `lemma-check` subcommands. Every check is an exact polynomial identity;
//! sweeps are deterministic for a fixed seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::axial::{
    d_lower, d_upper, dbar_z, is_p_holomorphic, lift, seed_to_pair, vekua_check, AxialPair,
    HolomorphicSeed, Parity, RadialPolynomial,
};
use crate::fueter::{
    ab_components, fueter_axial, fueter_higher, fueter_spatial, laplacian_power_axial,
    proof_constant, Variant,
};
use crate::polynomial::CliffordPolynomial;
use crate::rational::{integer, Rational};
use crate::spherical::{ck_extend, fischer_decompose, random_homogeneous, random_monogenic};

/// Result of one verification sweep.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(suite: &str) -> Self {
        SuiteOutcome {
            suite: suite.to_owned(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut numer: i64 = rng.random_range(-9..=9);
    if numer == 0 {
        numer = 1;
    }
    let denom: i64 = rng.random_range(1..=3);
    Rational::new(numer.into(), denom.into())
}

/// A random polynomial in `(x0, r)` of the given r-parity, total degree at
/// most `max_degree`, never zero.
fn random_radial(rng: &mut ChaCha8Rng, parity: Parity, max_degree: u32) -> RadialPolynomial {
    let mut terms = Vec::new();
    for _ in 0..rng.random_range(2..=6usize) {
        let a = rng.random_range(0..=max_degree);
        let remaining = max_degree - a;
        let b = match parity {
            Parity::Even => 2 * rng.random_range(0..=remaining / 2),
            Parity::Odd => {
                if remaining == 0 {
                    continue;
                }
                2 * rng.random_range(0..=(remaining - 1) / 2) + 1
            }
        };
        terms.push((a, b, random_rational(rng)));
    }
    let poly = RadialPolynomial::from_terms(parity, terms).expect("parity-correct by construction");
    if poly.is_zero() {
        let b = match parity {
            Parity::Even => 0,
            Parity::Odd => 1,
        };
        return RadialPolynomial::monomial(0, b, integer(1));
    }
    poly
}

fn random_seed_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> HolomorphicSeed {
    let coeffs = (0..=max_degree).map(|_| random_rational(rng)).collect();
    HolomorphicSeed::new(coeffs)
}

/// A random pair satisfying the order-`p` holomorphy equation: a combination
/// `sum_{i<=p} conj(z)^i f_i(z)` of holomorphic seeds.
fn random_p_holomorphic_pair(rng: &mut ChaCha8Rng, p: usize) -> AxialPair {
    let conj_z = seed_to_pair(&HolomorphicSeed::z_power(1)).conjugate();
    let mut acc = AxialPair::zero();
    for i in 0..=p {
        let factor = seed_to_pair(&random_seed_poly(rng, 3));
        acc = acc.add(&conj_z.pow(i).mul(&factor));
    }
    debug_assert!(is_p_holomorphic(&acc, p));
    acc
}

/// A random radial polynomial of the given parity annihilated by the
/// `p`-th planar Laplacian power: a combination `sum_{a<p} |z|^{2a} h_a`
/// with `|z|^2 = x0^2 + r^2` and each `h_a` the parity-matched component of
/// a holomorphic seed pair.
fn random_polyharmonic_radial(rng: &mut ChaCha8Rng, p: usize, parity: Parity) -> RadialPolynomial {
    let norm_sq =
        RadialPolynomial::from_terms(Parity::Even, vec![(2, 0, integer(1)), (0, 2, integer(1))])
            .expect("even r-powers");
    let mut weight = RadialPolynomial::one();
    let mut acc = RadialPolynomial::zero(parity);
    for _ in 0..p {
        let pair = seed_to_pair(&random_seed_poly(rng, 4));
        let harmonic = match parity {
            Parity::Even => pair.u().clone(),
            Parity::Odd => pair.v().clone(),
        };
        acc = acc.add(&weight.mul(&harmonic)).expect("parity preserved");
        weight = weight.mul(&norm_sq);
    }
    assert!(acc.delta_z_power(p).is_zero());
    acc
}

/// The four radial ladder identities, checked on random parity-correct
/// polynomials of degree at most 8 for orders `n <= 3`.
pub fn lemma21(trials: usize, seed: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("lemma21");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let g = random_radial(&mut rng, Parity::Even, 8);
        let h = random_radial(&mut rng, Parity::Odd, 8);
        for n in 0..=3usize {
            let two_n = integer(2 * n as i64);
            // (i) on even g
            let lhs = d_lower(n, &g).unwrap().d_r().d_r();
            let rhs = d_lower(n, &g.d_r().d_r())
                .unwrap()
                .sub(&d_lower(n + 1, &g).unwrap().scale(&two_n))
                .unwrap();
            outcome.check(lhs == rhs, || format!("identity (i) failed: t={t} n={n}"));
            // (ii) on odd h
            let lhs = d_upper(n, &h).unwrap().d_r().d_r();
            let rhs = d_upper(n, &h.d_r().d_r())
                .unwrap()
                .sub(&d_upper(n + 1, &h).unwrap().scale(&two_n))
                .unwrap();
            outcome.check(lhs == rhs, || format!("identity (ii) failed: t={t} n={n}"));
            // (iii) on even g
            let lhs = d_upper(n, &g.d_r()).unwrap();
            let rhs = d_lower(n, &g).unwrap().d_r();
            outcome.check(lhs == rhs, || format!("identity (iii) failed: t={t} n={n}"));
            // (iv) on odd h
            let lhs = d_lower(n, &h.d_r())
                .unwrap()
                .sub(&d_upper(n, &h).unwrap().d_r())
                .unwrap();
            let rhs = d_upper(n, &h).unwrap().div_r().scale(&two_n);
            outcome.check(lhs == rhs, || format!("identity (iv) failed: t={t} n={n}"));
        }
    }
    outcome
}

/// Cartesian Laplacian powers of a lifted radial factor against the radial
/// closed form, both variants, `n <= 3`, `k <= 2`.
pub fn dual_path(ms: &[usize], trials: usize, seed: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("dual-path");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &m in ms {
        for k in 0..=2usize {
            for n in 0..=3usize {
                for variant in [Variant::Scalar, Variant::Omega] {
                    for t in 0..trials {
                        let parity = match variant {
                            Variant::Scalar => Parity::Even,
                            Variant::Omega => Parity::Odd,
                        };
                        let g = random_radial(&mut rng, parity, 6);
                        let factor = random_monogenic(k, m, rng.random());
                        let pair = match variant {
                            Variant::Scalar => {
                                AxialPair::new(g.clone(), RadialPolynomial::zero(Parity::Odd))
                            }
                            Variant::Omega => {
                                AxialPair::new(RadialPolynomial::zero(Parity::Even), g.clone())
                            }
                        }
                        .unwrap();
                        let cartesian = lift(&pair, factor.poly(), m).unwrap().laplacian_power(n);
                        let bracket = laplacian_power_axial(n, &g, k, m, variant).unwrap();
                        let bracket_pair = match variant {
                            Variant::Scalar => {
                                AxialPair::new(bracket, RadialPolynomial::zero(Parity::Odd))
                            }
                            Variant::Omega => {
                                AxialPair::new(RadialPolynomial::zero(Parity::Even), bracket)
                            }
                        }
                        .unwrap();
                        let radial = lift(&bracket_pair, factor.poly(), m).unwrap();
                        outcome.check(cartesian == radial, || {
                            format!("dual-path mismatch: m={m} k={k} n={n} {variant:?} t={t}")
                        });
                    }
                }
            }
        }
    }
    outcome
}

/// Monogenicity of the basic transform for monomial seeds `z^n`, `n <= 5`,
/// and factors of degree `k <= 2`.
pub fn spatial(ms: &[usize], trials: usize, seed: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("spatial");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &m in ms {
        for k in 0..=2usize {
            for t in 0..trials {
                let factor = random_monogenic(k, m, rng.random());
                for n in 1..=5usize {
                    let report = fueter_spatial(&HolomorphicSeed::z_power(n), &factor, m).unwrap();
                    outcome.check(report.output.cauchy_riemann().is_zero(), || {
                        format!("output not monogenic: m={m} k={k} n={n} t={t}")
                    });
                }
            }
        }
    }
    outcome
}

/// Polyharmonicity of lifted planar solutions for `p` in `{1, 2}`.
pub fn polyharmonic(ms: &[usize], trials: usize, seed: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("polyharmonic");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &m in ms {
        for p in 1..=2usize {
            for t in 0..trials {
                for variant in [Variant::Scalar, Variant::Omega] {
                    let parity = match variant {
                        Variant::Scalar => Parity::Even,
                        Variant::Omega => Parity::Odd,
                    };
                    let g = random_polyharmonic_radial(&mut rng, p, parity);
                    let k = t % 3;
                    let factor = random_monogenic(k, m, rng.random());
                    let output =
                        crate::fueter::polyharmonic_lift(&g, &factor, m, p, variant).unwrap();
                    outcome.check(output.laplacian_power(p).is_zero(), || {
                        format!("output not order-{p} polyharmonic: m={m} k={k} {variant:?} t={t}")
                    });
                }
            }
        }
    }
    outcome
}

/// The higher-order transform: exact monogenicity, agreement with the
/// constant times the lifted `(A, B)` components, and the Vekua system, for
/// `p <= 2` and `k <= 2`.
pub fn higher(ms: &[usize], trials: usize, seed: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("higher");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &m in ms {
        for p in 0..=2usize {
            for k in 0..=2usize {
                for t in 0..trials {
                    let pair = random_p_holomorphic_pair(&mut rng, p);
                    let factor = random_monogenic(k, m, rng.random());
                    let report = fueter_higher(&pair, &factor, m, p).unwrap();
                    outcome.check(report.output.cauchy_riemann().is_zero(), || {
                        format!("output not monogenic: m={m} p={p} k={k} t={t}")
                    });
                    let (a, b) = ab_components(&pair, k, m, p);
                    let rebuilt = lift(
                        &AxialPair::new(a.clone(), b.clone()).unwrap(),
                        factor.poly(),
                        m,
                    )
                    .unwrap()
                    .scale(&proof_constant(p, k, m).unwrap());
                    outcome.check(report.output == rebuilt, || {
                        format!("constant path mismatch: m={m} p={p} k={k} t={t}")
                    });
                    outcome.check(vekua_check(&a, &b, k, m).unwrap(), || {
                        format!("Vekua system violated: m={m} p={p} k={k} t={t}")
                    });
                }
            }
        }
    }
    outcome
}

/// Monogenic extension and decomposition machinery: extensions are monogenic
/// and restrict correctly; decompositions reassemble exactly with monogenic
/// components for `k <= 4`; summed extensions of the components reproduce a
/// monogenic homogeneous polynomial for `k <= 3`.
pub fn ck_fischer(ms: &[usize], trials: usize, seed: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("ck-fischer");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &m in ms {
        for t in 0..trials {
            // (a) extension: monogenic, restricts to the input
            for k in 0..=4usize {
                let g = random_homogeneous(k, m, rng.random());
                let extension = ck_extend(&g).unwrap();
                outcome.check(extension.is_monogenic(), || {
                    format!("extension not monogenic: m={m} k={k} t={t}")
                });
                outcome.check(extension.restrict_x0_zero() == g, || {
                    format!("extension does not restrict to input: m={m} k={k} t={t}")
                });
            }
            // (b) decomposition: exact reassembly, monogenic components
            for k in 0..=4usize {
                let p = random_homogeneous(k, m, rng.random());
                let decomposition = fischer_decompose(&p, k).unwrap();
                outcome.check(decomposition.reassemble() == p, || {
                    format!("reassembly mismatch: m={m} k={k} t={t}")
                });
                let all_monogenic = decomposition
                    .components()
                    .iter()
                    .all(|c| c.poly().dirac().is_zero());
                outcome.check(all_monogenic, || {
                    format!("non-monogenic component: m={m} k={k} t={t}")
                });
            }
            // (c) summed extensions of the components reproduce the input
            for k in 0..=3usize {
                let q = ck_extend(&random_homogeneous(k, m, rng.random())).unwrap();
                let decomposition = fischer_decompose(&q.restrict_x0_zero(), k).unwrap();
                let x = CliffordPolynomial::vector_variable(m);
                let mut sum = CliffordPolynomial::zero(m);
                for n in 0..=k {
                    let piece = x
                        .pow(n)
                        .multiply(decomposition.component(n).poly())
                        .unwrap();
                    sum = sum.add(&ck_extend(&piece).unwrap()).unwrap();
                }
                outcome.check(sum == q, || {
                    format!("summed extensions mismatch: m={m} k={k} t={t}")
                });
            }
        }
    }
    outcome
}

/// The closed form for the Dirac operator on `x^n M` against brute-force
/// differentiation of the product, `n <= 6`.
pub fn dirac_power(ms: &[usize], trials: usize, seed: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("dirac-power");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &m in ms {
        for n in 0..=6usize {
            for t in 0..trials {
                let l = t % 3;
                let monogenic = random_monogenic(l, m, rng.random());
                let closed = crate::spherical::dirac_power_on_xn_p(n, &monogenic);
                let brute = CliffordPolynomial::vector_variable(m)
                    .pow(n)
                    .multiply(monogenic.poly())
                    .unwrap()
                    .dirac();
                outcome.check(closed == brute, || {
                    format!("closed form mismatch: m={m} n={n} l={l} t={t}")
                });
            }
        }
    }
    outcome
}

/// The two-path transform with a monogenic factor depending on `x_0`:
/// path agreement and exact monogenicity for `k` in `{1, 2, 3}` and monomial
/// seeds `z^n`, `n <= 4`.
pub fn axial(ms: &[usize], trials: usize, seed: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("axial");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &m in ms {
        for k in 1..=3usize {
            for t in 0..trials {
                let q = ck_extend(&random_homogeneous(k, m, rng.random())).unwrap();
                for n in 1..=4usize {
                    let report = fueter_axial(&HolomorphicSeed::z_power(n), &q, m).unwrap();
                    outcome.check(report.paths_agree == Some(true), || {
                        format!("paths disagree: m={m} k={k} n={n} t={t}")
                    });
                    outcome.check(report.output.cauchy_riemann().is_zero(), || {
                        format!("output not monogenic: m={m} k={k} n={n} t={t}")
                    });
                }
            }
        }
    }
    outcome
}

/// Frozen spot values of the basic transform against the direct symbolic
/// Laplacian.
pub fn spot() -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("spot");
    let m = 3;
    let one = crate::spherical::SphericalMonogenic::one(m);
    let report = fueter_spatial(&HolomorphicSeed::z_power(1), &one, m).unwrap();
    outcome.check(report.output.is_zero(), || {
        "transform of z against 1 is not zero".to_owned()
    });
    let oracle = CliffordPolynomial::paravector(m).laplacian();
    outcome.check(report.output == oracle, || {
        "transform of z disagrees with the symbolic Laplacian".to_owned()
    });
    let report = fueter_spatial(&HolomorphicSeed::z_power(2), &one, m).unwrap();
    outcome.check(
        report.output == CliffordPolynomial::scalar(m, integer(-4)),
        || "transform of z^2 is not the constant -4".to_owned(),
    );
    let x = CliffordPolynomial::paravector(m);
    let oracle = x.multiply(&x).unwrap().laplacian();
    outcome.check(report.output == oracle, || {
        "transform of z^2 disagrees with the symbolic Laplacian".to_owned()
    });
    outcome
}

/// JSON emit/parse identity on random polynomials.
pub fn roundtrip(trials: usize, seed: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("roundtrip");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let m = [2, 3, 5][t % 3];
        let k = t % 4;
        let mut poly = random_homogeneous(k, m, rng.random());
        if t % 2 == 1 {
            // mix in x0 dependence
            poly = poly.multiply(&CliffordPolynomial::paravector(m)).unwrap();
        }
        let json = serde_json::to_string(&poly).unwrap();
        match serde_json::from_str::<CliffordPolynomial>(&json) {
            Ok(back) => outcome.check(back == poly, || {
                format!("round-trip value mismatch: t={t} m={m} k={k}")
            }),
            Err(err) => outcome.check(false, || format!("round-trip parse error: t={t} {err}")),
        }
    }
    outcome
}

/// Holomorphy of every seed-induced pair (order 0), a structural property of
/// the seed construction.
pub fn seed_holomorphy(trials: usize, seed: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("seed-holomorphy");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let f = random_seed_poly(&mut rng, 6);
        let pair = seed_to_pair(&f);
        outcome.check(dbar_z(&pair).is_zero(), || {
            format!("seed pair not holomorphic: t={t}")
        });
    }
    outcome
}
