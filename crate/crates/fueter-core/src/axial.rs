//! Bivariate calculus in the half-plane variables `(x_0, r)` with r-parity
//! tracking: seed pairs `(u, v)` from holomorphic polynomials, the radial
//! ladder operators, the planar Cauchy-Riemann operator and Laplacian, the
//! Vekua system check, and the lift to Cartesian Clifford polynomials.
//!
//! Parity typing (u even in r, v odd in r) is enforced structurally: it is
//! exactly the class of pairs for which `(u + omega*v)P` is a polynomial,
//! with `omega = x/r` the unit vector variable.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::polynomial::CliffordPolynomial;
use crate::rational::{binomial, Rational};

/// Parity of the r-exponents of a [`RadialPolynomial`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_exponent(b: u32) -> Parity {
        if b % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn matches(self, b: u32) -> bool {
        Parity::of_exponent(b) == self
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Parity of a product of two terms.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// A polynomial in `(x_0, r)` with exact rational coefficients in which every
/// r-exponent has the declared parity. Keys are `(x0-exponent, r-exponent)`.
#[derive(Debug, Clone)]
pub struct RadialPolynomial {
    parity: Parity,
    terms: BTreeMap<(u32, u32), Rational>,
}

impl RadialPolynomial {
    pub fn zero(parity: Parity) -> Self {
        RadialPolynomial {
            parity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        RadialPolynomial::monomial(0, 0, Rational::from_integer(1.into()))
    }

    pub fn x0() -> Self {
        RadialPolynomial::monomial(1, 0, Rational::from_integer(1.into()))
    }

    pub fn r() -> Self {
        RadialPolynomial::monomial(0, 1, Rational::from_integer(1.into()))
    }

    /// `c * x0^a r^b`; the parity is inferred from `b`.
    pub fn monomial(a: u32, b: u32, coeff: Rational) -> Self {
        let parity = Parity::of_exponent(b);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((a, b), coeff);
        }
        RadialPolynomial { parity, terms }
    }

    pub fn from_terms(
        parity: Parity,
        terms: impl IntoIterator<Item = (u32, u32, Rational)>,
    ) -> Result<Self, Error> {
        let mut map: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for (a, b, coeff) in terms {
            if !parity.matches(b) {
                return Err(Error::ParityViolation { expected: parity });
            }
            let entry = map.entry((a, b)).or_insert_with(Rational::zero);
            *entry += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(RadialPolynomial { parity, terms: map })
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    /// True when every term has total degree `n`.
    pub fn is_homogeneous(&self, n: u32) -> bool {
        self.terms.keys().all(|(a, b)| a + b == n)
    }

    pub fn add(&self, other: &RadialPolynomial) -> Result<RadialPolynomial, Error> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.parity != other.parity {
            return Err(Error::ParityMismatch {
                left: self.parity,
                right: other.parity,
            });
        }
        let mut terms = self.terms.clone();
        for (key, coeff) in &other.terms {
            let entry = terms.entry(*key).or_insert_with(Rational::zero);
            *entry += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(RadialPolynomial {
            parity: self.parity,
            terms,
        })
    }

    pub fn sub(&self, other: &RadialPolynomial) -> Result<RadialPolynomial, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RadialPolynomial {
        let terms = self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect();
        RadialPolynomial {
            parity: self.parity,
            terms,
        }
    }

    pub fn scale(&self, factor: &Rational) -> RadialPolynomial {
        if factor.is_zero() {
            return RadialPolynomial::zero(self.parity);
        }
        let terms = self.terms.iter().map(|(k, c)| (*k, c * factor)).collect();
        RadialPolynomial {
            parity: self.parity,
            terms,
        }
    }

    /// Product; parities combine (even*even = odd*odd = even, mixed = odd).
    pub fn mul(&self, other: &RadialPolynomial) -> RadialPolynomial {
        let parity = self.parity.combine(other.parity);
        let mut terms: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let entry = terms
                    .entry((a1 + a2, b1 + b2))
                    .or_insert_with(Rational::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        RadialPolynomial { parity, terms }
    }

    /// Partial derivative in `x_0`; parity preserved.
    pub fn d_x0(&self) -> RadialPolynomial {
        let mut terms = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            if *a == 0 {
                continue;
            }
            terms.insert((a - 1, *b), c * Rational::from_integer((*a).into()));
        }
        RadialPolynomial {
            parity: self.parity,
            terms,
        }
    }

    /// Partial derivative in `r`; parity flips.
    pub fn d_r(&self) -> RadialPolynomial {
        let mut terms = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            if *b == 0 {
                continue;
            }
            terms.insert((*a, b - 1), c * Rational::from_integer((*b).into()));
        }
        RadialPolynomial {
            parity: self.parity.flip(),
            terms,
        }
    }

    /// Exact division by `r` via exponent decrement; parity flips.
    ///
    /// Panics if any r-exponent is zero: the parity invariants guarantee this
    /// never happens on valid inputs, so a panic indicates a logic bug.
    pub fn div_r(&self) -> RadialPolynomial {
        let mut terms = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            assert!(*b > 0, "division by r of a term with r-exponent 0");
            terms.insert((*a, b - 1), c.clone());
        }
        RadialPolynomial {
            parity: self.parity.flip(),
            terms,
        }
    }

    /// The planar Laplacian `d^2/dx_0^2 + d^2/dr^2`; parity preserved.
    pub fn delta_z(&self) -> RadialPolynomial {
        let dx0 = self.d_x0().d_x0();
        let dr = self.d_r().d_r();
        dx0.add(&dr).expect("parity preserved")
    }

    pub fn delta_z_power(&self, p: usize) -> RadialPolynomial {
        let mut acc = self.clone();
        for _ in 0..p {
            if acc.is_zero() {
                break;
            }
            acc = acc.delta_z();
        }
        acc
    }
}

// A zero polynomial compares equal regardless of its declared parity.
impl PartialEq for RadialPolynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.terms.is_empty() && other.terms.is_empty() {
            return true;
        }
        self.parity == other.parity && self.terms == other.terms
    }
}

impl Eq for RadialPolynomial {}

impl fmt::Display for RadialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, b), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", crate::rational::format_rational(c))?;
            if *a > 0 {
                write!(f, "*x0^{a}")?;
            }
            if *b > 0 {
                write!(f, "*r^{b}")?;
            }
        }
        Ok(())
    }
}

/// The ladder operator `(r^{-1} d/dr)^n` on polynomials even in `r`.
pub fn d_lower(n: usize, g: &RadialPolynomial) -> Result<RadialPolynomial, Error> {
    if !g.is_zero() && g.parity() != Parity::Even {
        return Err(Error::ParityViolation {
            expected: Parity::Even,
        });
    }
    let mut acc = g.clone();
    for _ in 0..n {
        acc = acc.d_r().div_r();
    }
    Ok(acc)
}

/// The ladder operator `D(n){g} = d/dr (D(n-1){g} / r)` on polynomials odd
/// in `r`.
pub fn d_upper(n: usize, g: &RadialPolynomial) -> Result<RadialPolynomial, Error> {
    if !g.is_zero() && g.parity() != Parity::Odd {
        return Err(Error::ParityViolation {
            expected: Parity::Odd,
        });
    }
    let mut acc = g.clone();
    for _ in 0..n {
        acc = acc.div_r().d_r();
    }
    Ok(acc)
}

/// A seed pair `(u, v)` with `u` even and `v` odd in `r`, representing the
/// complex-valued function `u + iv` of `z = x_0 + ir`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxialPair {
    u: RadialPolynomial,
    v: RadialPolynomial,
}

impl AxialPair {
    pub fn new(u: RadialPolynomial, v: RadialPolynomial) -> Result<Self, Error> {
        if !u.is_zero() && u.parity() != Parity::Even {
            return Err(Error::ParityViolation {
                expected: Parity::Even,
            });
        }
        if !v.is_zero() && v.parity() != Parity::Odd {
            return Err(Error::ParityViolation {
                expected: Parity::Odd,
            });
        }
        // normalize the parity tags of zero components
        let u = if u.is_zero() {
            RadialPolynomial::zero(Parity::Even)
        } else {
            u
        };
        let v = if v.is_zero() {
            RadialPolynomial::zero(Parity::Odd)
        } else {
            v
        };
        Ok(AxialPair { u, v })
    }

    pub fn zero() -> Self {
        AxialPair {
            u: RadialPolynomial::zero(Parity::Even),
            v: RadialPolynomial::zero(Parity::Odd),
        }
    }

    pub fn u(&self) -> &RadialPolynomial {
        &self.u
    }

    pub fn v(&self) -> &RadialPolynomial {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn add(&self, other: &AxialPair) -> AxialPair {
        AxialPair {
            u: self.u.add(&other.u).expect("matching parity"),
            v: self.v.add(&other.v).expect("matching parity"),
        }
    }

    /// The complex product `(u1 + i v1)(u2 + i v2)` carried out on pairs:
    /// `(u1 u2 - v1 v2, u1 v2 + v1 u2)`. Parity is preserved.
    pub fn mul(&self, other: &AxialPair) -> AxialPair {
        let u = self
            .u
            .mul(&other.u)
            .sub(&self.v.mul(&other.v))
            .expect("even parity");
        let v = self
            .u
            .mul(&other.v)
            .add(&self.v.mul(&other.u))
            .expect("odd parity");
        AxialPair { u, v }
    }

    /// The complex conjugate `(u, -v)`.
    pub fn conjugate(&self) -> AxialPair {
        AxialPair {
            u: self.u.clone(),
            v: self.v.neg(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> AxialPair {
        AxialPair {
            u: self.u.scale(factor),
            v: self.v.scale(factor),
        }
    }

    pub fn pow(&self, n: usize) -> AxialPair {
        let mut acc = AxialPair::new(RadialPolynomial::one(), RadialPolynomial::zero(Parity::Odd))
            .expect("valid parities");
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Componentwise planar Laplacian power.
    pub fn delta_z_power(&self, p: usize) -> AxialPair {
        AxialPair {
            u: self.u.delta_z_power(p),
            v: self.v.delta_z_power(p),
        }
    }
}

/// A real-coefficient univariate polynomial `f(z) = sum c_n z^n`, the planar
/// holomorphic seed of the transforms. Real coefficients keep the induced
/// pair parity-correct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HolomorphicSeed {
    coeffs: Vec<Rational>,
}

impl HolomorphicSeed {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        HolomorphicSeed { coeffs }
    }

    pub fn zero() -> Self {
        HolomorphicSeed { coeffs: Vec::new() }
    }

    /// The monomial seed `z^n`.
    pub fn z_power(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::from_integer(1.into());
        HolomorphicSeed { coeffs }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_pair(&self) -> AxialPair {
        seed_to_pair(self)
    }
}

/// Substitutes `z = x_0 + i r` into the seed and splits into real and
/// imaginary parts: `u` collects even powers of `r`, `v` odd powers.
pub fn seed_to_pair(seed: &HolomorphicSeed) -> AxialPair {
    let mut u_terms: Vec<(u32, u32, Rational)> = Vec::new();
    let mut v_terms: Vec<(u32, u32, Rational)> = Vec::new();
    for (n, c) in seed.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for j in 0..=n {
            // (x0 + i r)^n expands with i^j on the x0^{n-j} r^j term
            let coeff = c * Rational::from_integer(binomial(n, j));
            let (a, b) = ((n - j) as u32, j as u32);
            match j % 4 {
                0 => u_terms.push((a, b, coeff)),
                1 => v_terms.push((a, b, coeff)),
                2 => u_terms.push((a, b, -coeff)),
                _ => v_terms.push((a, b, -coeff)),
            }
        }
    }
    let u = RadialPolynomial::from_terms(Parity::Even, u_terms).expect("even r-powers");
    let v = RadialPolynomial::from_terms(Parity::Odd, v_terms).expect("odd r-powers");
    AxialPair { u, v }
}

/// The planar Cauchy-Riemann operator `(1/2)(d/dx_0 + i d/dr)` applied to
/// `u + iv`, returned as a pair. Zero exactly on holomorphic pairs.
pub fn dbar_z(pair: &AxialPair) -> AxialPair {
    let half = Rational::new(1.into(), 2.into());
    let u = pair
        .u
        .d_x0()
        .sub(&pair.v.d_r())
        .expect("even parity")
        .scale(&half);
    let v = pair
        .v
        .d_x0()
        .add(&pair.u.d_r())
        .expect("odd parity")
        .scale(&half);
    AxialPair { u, v }
}

/// True iff the pair satisfies the order-`p` holomorphy equation: the planar
/// Cauchy-Riemann operator annihilates the `p`-th planar Laplacian power.
pub fn is_p_holomorphic(pair: &AxialPair, p: usize) -> bool {
    dbar_z(&pair.delta_z_power(p)).is_zero()
}

/// Substitutes `r^2 -> x_1^2 + ... + x_m^2` into an even radial polynomial.
fn radial_to_cartesian(g: &RadialPolynomial, m: usize) -> CliffordPolynomial {
    debug_assert!(g.is_zero() || g.parity() == Parity::Even);
    let rho_sq = {
        let mut acc = CliffordPolynomial::zero(m);
        for j in 1..=m {
            let xj = CliffordPolynomial::variable(m, j).expect("j <= m");
            acc = &acc + &(&xj * &xj);
        }
        acc
    };
    // cache powers of rho^2 up to the largest needed
    let max_half: u32 = g.terms.keys().map(|(_, b)| b / 2).max().unwrap_or(0);
    let mut powers = Vec::with_capacity(max_half as usize + 1);
    powers.push(CliffordPolynomial::one(m));
    for i in 1..=max_half as usize {
        powers.push(&powers[i - 1] * &rho_sq);
    }
    let mut acc = CliffordPolynomial::zero(m);
    for ((a, b), c) in &g.terms {
        let term = powers[(b / 2) as usize].scale(c).mul_x0_power(*a);
        acc = &acc + &term;
    }
    acc
}

/// Lifts `(u + omega*v) P` to a Cartesian polynomial, with the pair factor
/// multiplying `P` from the left: `omega*v = x * (v/r)` and `r^2` becomes
/// `x_1^2 + ... + x_m^2`.
pub fn lift(
    pair: &AxialPair,
    p: &CliffordPolynomial,
    m: usize,
) -> Result<CliffordPolynomial, Error> {
    if p.m() != m {
        return Err(Error::DimensionMismatch {
            left: m,
            right: p.m(),
        });
    }
    let scalar_part = radial_to_cartesian(&pair.u, m);
    let omega_part = radial_to_cartesian(&pair.v.div_r(), m);
    let factor = &scalar_part + &(&CliffordPolynomial::vector_variable(m) * &omega_part);
    factor.multiply(p)
}

/// Checks the coupled first-order system characterizing the components of an
/// axial monogenic function:
/// `d/dx_0 A - d/dr B = ((2k + m - 1)/r) B` and `d/dx_0 B + d/dr A = 0`.
pub fn vekua_check(
    a: &RadialPolynomial,
    b: &RadialPolynomial,
    k: usize,
    m: usize,
) -> Result<bool, Error> {
    if !a.is_zero() && a.parity() != Parity::Even {
        return Err(Error::ParityViolation {
            expected: Parity::Even,
        });
    }
    if !b.is_zero() && b.parity() != Parity::Odd {
        return Err(Error::ParityViolation {
            expected: Parity::Odd,
        });
    }
    let factor = Rational::from_integer((2 * k as i64 + m as i64 - 1).into());
    let first = a.d_x0().sub(&b.d_r())?.sub(&b.div_r().scale(&factor))?;
    let second = b.d_x0().add(&a.d_r())?;
    Ok(first.is_zero() && second.is_zero())
}
