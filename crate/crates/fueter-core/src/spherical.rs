//! Homogeneous polynomial machinery: the monogenic extension of functions of
//! the vector variable, the decomposition of homogeneous polynomials into
//! monogenic pieces times powers of the vector variable, the closed form for
//! the Dirac operator on such products, and the axial `(U, V)` shape of the
//! extension of `x^n M`.

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::axial::{AxialPair, Parity, RadialPolynomial};
use crate::clifford::{Blade, Multivector};
use crate::error::Error;
use crate::polynomial::CliffordPolynomial;
use crate::rational::{factorial, Rational};

/// A homogeneous monogenic polynomial of degree `k` in the vector variables
/// only: `dirac(poly) = 0`, no `x_0` dependence, every term of degree `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalMonogenic {
    poly: CliffordPolynomial,
    degree: usize,
}

impl SphericalMonogenic {
    pub fn new(poly: CliffordPolynomial, degree: usize) -> Result<Self, Error> {
        if poly.depends_on_x0() {
            return Err(Error::DependsOnX0);
        }
        if !poly.is_homogeneous(degree) {
            return Err(Error::NotHomogeneous { degree });
        }
        if !poly.dirac().is_zero() {
            return Err(Error::NotMonogenic);
        }
        Ok(SphericalMonogenic { poly, degree })
    }

    /// The constant polynomial 1, degree 0.
    pub fn one(m: usize) -> Self {
        SphericalMonogenic {
            poly: CliffordPolynomial::one(m),
            degree: 0,
        }
    }

    pub fn poly(&self) -> &CliffordPolynomial {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn m(&self) -> usize {
        self.poly.m()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

/// The components of a homogeneous polynomial `P` of degree `k` written as
/// `P = sum_n x^n M_{k-n}`: entry `n` is the monogenic factor of `x^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FischerDecomposition {
    k: usize,
    components: Vec<SphericalMonogenic>,
}

impl FischerDecomposition {
    /// Assembles a decomposition from its components; entry `n` must have
    /// degree `k - n` and there must be exactly `k + 1` of them.
    pub fn new(k: usize, components: Vec<SphericalMonogenic>) -> Result<Self, Error> {
        if components.len() != k + 1 {
            return Err(Error::ExponentLength {
                expected: k + 1,
                found: components.len(),
            });
        }
        for (n, comp) in components.iter().enumerate() {
            if comp.degree() != k - n {
                return Err(Error::NotHomogeneous { degree: k - n });
            }
        }
        Ok(FischerDecomposition { k, components })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Entry `n` is the factor of `x^n`, of degree `k - n`.
    pub fn components(&self) -> &[SphericalMonogenic] {
        &self.components
    }

    pub fn component(&self, n: usize) -> &SphericalMonogenic {
        &self.components[n]
    }

    /// Rebuilds `sum_n x^n M_{k-n}` exactly.
    pub fn reassemble(&self) -> CliffordPolynomial {
        let m = self.components[0].m();
        let x = CliffordPolynomial::vector_variable(m);
        let mut acc = CliffordPolynomial::zero(m);
        for (n, comp) in self.components.iter().enumerate() {
            let term = x.pow(n).multiply(comp.poly()).expect("same dimension");
            acc = &acc + &term;
        }
        acc
    }
}

/// The monogenic extension to `R^{m+1}` of a polynomial `g` of the vector
/// variables, via the terminating series `sum_j ((-x_0)^j / j!) dirac^j g`.
/// The result restricts to `g` at `x_0 = 0`.
pub fn ck_extend(g: &CliffordPolynomial) -> Result<CliffordPolynomial, Error> {
    if g.depends_on_x0() {
        return Err(Error::DependsOnX0);
    }
    let mut acc = CliffordPolynomial::zero(g.m());
    let mut current = g.clone();
    let mut j: u32 = 0;
    while !current.is_zero() {
        // (-1)^j / j!
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let coeff = Rational::new(sign.into(), factorial(j as usize));
        let term = current.scale(&coeff).mul_x0_power(j);
        acc = acc.add(&term)?;
        current = current.dirac();
        j += 1;
    }
    Ok(acc)
}

/// Single application of the Dirac operator to `x^n M` with `M` monogenic of
/// degree `l`: the result is `c * x^{n-1} M` with
/// `c = -(n + 2l + m - 1)` for odd `n` and `c = -n` for even `n`.
fn dirac_step_constant(n: usize, l: usize, m: usize) -> Rational {
    let c = if n % 2 == 1 {
        -((n + 2 * l + m - 1) as i64)
    } else {
        -(n as i64)
    };
    Rational::from_integer(c.into())
}

/// Product of the step constants for `j` successive applications of the
/// Dirac operator to `x^n M`, `j <= n`. Never zero for `j <= n`.
fn dirac_iterated_constant(j: usize, n: usize, l: usize, m: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..j {
        acc *= dirac_step_constant(n - i, l, m);
    }
    acc
}

/// Closed form for the Dirac operator applied once to `x^n M`, `M` monogenic
/// of degree `l`; returns zero for `n = 0`.
pub fn dirac_power_on_xn_p(n: usize, monogenic: &SphericalMonogenic) -> CliffordPolynomial {
    let m = monogenic.m();
    if n == 0 {
        return CliffordPolynomial::zero(m);
    }
    let c = dirac_step_constant(n, monogenic.degree(), m);
    CliffordPolynomial::vector_variable(m)
        .pow(n - 1)
        .multiply(monogenic.poly())
        .expect("same dimension")
        .scale(&c)
}

/// Decomposes a homogeneous polynomial `P` of degree `k` in the vector
/// variables as `P = sum_n x^n M_{k-n}` with every `M_{k-n}` monogenic.
///
/// The top component is peeled off by iterated Dirac applications: `dirac^n`
/// annihilates every summand `x^j M` with `j < n` and maps `x^n M` to a
/// nonzero constant multiple of `M`, so each factor is recovered exactly and
/// subtracted. Uniqueness makes the result independent of the peeling order.
pub fn fischer_decompose(p: &CliffordPolynomial, k: usize) -> Result<FischerDecomposition, Error> {
    if p.depends_on_x0() {
        return Err(Error::DependsOnX0);
    }
    if !p.is_homogeneous(k) {
        return Err(Error::NotHomogeneous { degree: k });
    }
    let m = p.m();
    let x = CliffordPolynomial::vector_variable(m);
    let mut remainder = p.clone();
    let mut components: Vec<Option<SphericalMonogenic>> = vec![None; k + 1];
    for n in (0..=k).rev() {
        let l = k - n;
        let mut iterated = remainder.clone();
        for _ in 0..n {
            iterated = iterated.dirac();
        }
        let mu = dirac_iterated_constant(n, n, l, m);
        let component = iterated.scale(&mu.recip());
        let term = x.pow(n).multiply(&component)?;
        remainder = remainder.sub(&term)?;
        components[n] = Some(SphericalMonogenic::new(component, l)?);
    }
    assert!(
        remainder.is_zero(),
        "decomposition residual is nonzero: arithmetic bug"
    );
    Ok(FischerDecomposition {
        k,
        components: components.into_iter().map(Option::unwrap).collect(),
    })
}

/// The axial `(U, V)` form of the monogenic extension of `x^n M` for `M` of
/// degree `l`: homogeneous of degree `n` in `(x_0, r)`, and for every such
/// `M`, `lift((U, V), M) = ck_extend(x^n M)`.
///
/// Computed coefficient-wise: the extension is `sum_j c_j x_0^j x^{n-j} M`
/// with `c_j = (-1)^j mu_j / j!` where `mu_j` iterates the Dirac step
/// constants; even powers `x^{2a} = (-1)^a r^{2a}` land in `U` and odd powers
/// `x^{2a+1} = (-1)^a r^{2a+1} omega` land in `V`.
pub fn ck_axial_form(n: usize, l: usize, m: usize) -> AxialPair {
    let mut u_terms: Vec<(u32, u32, Rational)> = Vec::new();
    let mut v_terms: Vec<(u32, u32, Rational)> = Vec::new();
    for j in 0..=n {
        let mu = dirac_iterated_constant(j, n, l, m);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = mu * Rational::new(sign.into(), factorial(j));
        if c.is_zero() {
            continue;
        }
        let power = n - j;
        let a = (power / 2) as i64;
        let radial_sign = if a % 2 == 0 { 1 } else { -1 };
        let coeff = c * Rational::from_integer(radial_sign.into());
        if power % 2 == 0 {
            u_terms.push((j as u32, power as u32, coeff));
        } else {
            v_terms.push((j as u32, power as u32, coeff));
        }
    }
    let u = RadialPolynomial::from_terms(Parity::Even, u_terms).expect("even r-powers");
    let v = RadialPolynomial::from_terms(Parity::Odd, v_terms).expect("odd r-powers");
    AxialPair::new(u, v).expect("valid parities")
}

/// All exponent tuples of length `m + 1` with `exps[0] = 0` summing to `k`.
fn homogeneous_exponents(m: usize, k: usize) -> Vec<Vec<u32>> {
    fn fill(slot: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slot == current.len() - 1 {
            current[slot] = remaining;
            out.push(current.clone());
            return;
        }
        for d in 0..=remaining {
            current[slot] = d;
            fill(slot + 1, remaining - d, current, out);
        }
        current[slot] = 0;
    }
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    let mut current = vec![0u32; m + 1];
    fill(1, k as u32, &mut current, &mut out);
    out
}

/// A seed-driven random homogeneous polynomial of degree `k` in the vector
/// variables: deterministic for a fixed seed, never zero.
pub fn random_homogeneous(k: usize, m: usize, seed: u64) -> CliffordPolynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut terms: Vec<(Vec<u32>, Multivector)> = Vec::new();
    let exponents = homogeneous_exponents(m, k);
    for exps in &exponents {
        if !rng.random_bool(0.6) {
            continue;
        }
        let blades = rng.random_range(1..=2usize);
        let mut mv_terms = Vec::new();
        for _ in 0..blades {
            let mask: u32 = rng.random_range(0..(1u32 << m));
            let indices: Vec<usize> = (1..=m).filter(|j| mask & (1 << (j - 1)) != 0).collect();
            let blade = Blade::new(indices, m).expect("indices in range");
            let mut numer: i64 = rng.random_range(-9..=9);
            if numer == 0 {
                numer = 1;
            }
            let denom: i64 = rng.random_range(1..=3);
            mv_terms.push((blade, Rational::new(numer.into(), denom.into())));
        }
        let coeff = Multivector::from_terms(m, mv_terms).expect("valid blades");
        if !coeff.is_zero() {
            terms.push((exps.clone(), coeff));
        }
    }
    let mut poly = CliffordPolynomial::from_terms(m, terms).expect("valid terms");
    if poly.is_zero() {
        poly = CliffordPolynomial::monomial(m, exponents[0].clone(), Multivector::one(m))
            .expect("valid term");
    }
    poly
}

/// The degree-`k` component of the decomposition of a random homogeneous
/// polynomial: a deterministic nonzero monogenic of degree `k`.
pub fn random_monogenic(k: usize, m: usize, seed: u64) -> SphericalMonogenic {
    for attempt in 0u64.. {
        let p = random_homogeneous(k, m, seed.wrapping_add(attempt));
        let decomposition = fischer_decompose(&p, k).expect("homogeneous by construction");
        let top = decomposition.component(0);
        if !top.is_zero() {
            return top.clone();
        }
    }
    unreachable!("a nonzero degree-k component is found eventually")
}
