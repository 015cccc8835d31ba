//! Multivariate polynomials in `x_0, ..., x_m` with multivector coefficients,
//! and the first-order operators acting on them: the Dirac operator, the
//! generalized Cauchy-Riemann operator and its conjugate, and the Laplacian.
//!
//! This is the universal carrier for all Cartesian computation. Exponent
//! tuples are dense of fixed length `m + 1`; the zero polynomial is the empty
//! term collection, so equality and zero tests are exact.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::clifford::Multivector;
use crate::error::Error;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordPolynomial {
    m: usize,
    terms: BTreeMap<Vec<u32>, Multivector>,
}

impl CliffordPolynomial {
    pub fn zero(m: usize) -> Self {
        CliffordPolynomial {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        CliffordPolynomial::constant(Multivector::one(m))
    }

    pub fn scalar(m: usize, value: Rational) -> Self {
        CliffordPolynomial::constant(Multivector::scalar(m, value))
    }

    pub fn constant(coeff: Multivector) -> Self {
        let m = coeff.m();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(vec![0; m + 1], coeff);
        }
        CliffordPolynomial { m, terms }
    }

    /// The variable `x_j` (scalar coefficient), `0 <= j <= m`.
    pub fn variable(m: usize, j: usize) -> Result<Self, Error> {
        if j > m {
            return Err(Error::VariableOutOfRange { index: j, m });
        }
        let mut exps = vec![0u32; m + 1];
        exps[j] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, Multivector::one(m));
        Ok(CliffordPolynomial { m, terms })
    }

    /// The vector variable `e_1 x_1 + ... + e_m x_m`.
    pub fn vector_variable(m: usize) -> Self {
        let mut terms = BTreeMap::new();
        for j in 1..=m {
            let mut exps = vec![0u32; m + 1];
            exps[j] = 1;
            terms.insert(exps, Multivector::basis_vector(m, j).expect("j <= m"));
        }
        CliffordPolynomial { m, terms }
    }

    /// The paravector `x_0 + e_1 x_1 + ... + e_m x_m`.
    pub fn paravector(m: usize) -> Self {
        let x0 = CliffordPolynomial::variable(m, 0).expect("0 <= m");
        &x0 + &CliffordPolynomial::vector_variable(m)
    }

    pub fn monomial(m: usize, exponents: Vec<u32>, coeff: Multivector) -> Result<Self, Error> {
        CliffordPolynomial::from_terms(m, vec![(exponents, coeff)])
    }

    pub fn from_terms(
        m: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Multivector)>,
    ) -> Result<Self, Error> {
        let mut map: BTreeMap<Vec<u32>, Multivector> = BTreeMap::new();
        for (exponents, coeff) in terms {
            if exponents.len() != m + 1 {
                return Err(Error::ExponentLength {
                    expected: m + 1,
                    found: exponents.len(),
                });
            }
            if coeff.m() != m {
                return Err(Error::DimensionMismatch {
                    left: m,
                    right: coeff.m(),
                });
            }
            match map.entry(exponents) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(coeff);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().add(&coeff)?;
                    *e.get_mut() = sum;
                }
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(CliffordPolynomial { m, terms: map })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Multivector)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the given exponent tuple (zero when absent).
    pub fn coeff(&self, exponents: &[u32]) -> Multivector {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(|| Multivector::zero(self.m))
    }

    fn check_dimension(&self, other: &CliffordPolynomial) -> Result<(), Error> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CliffordPolynomial) -> Result<CliffordPolynomial, Error> {
        self.check_dimension(other)?;
        let mut terms = self.terms.clone();
        for (exps, coeff) in &other.terms {
            match terms.entry(exps.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(coeff.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().add(coeff)?;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        Ok(CliffordPolynomial { m: self.m, terms })
    }

    pub fn sub(&self, other: &CliffordPolynomial) -> Result<CliffordPolynomial, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CliffordPolynomial {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.neg()))
            .collect();
        CliffordPolynomial { m: self.m, terms }
    }

    pub fn scale(&self, factor: &Rational) -> CliffordPolynomial {
        if factor.is_zero() {
            return CliffordPolynomial::zero(self.m);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.scale(factor)))
            .collect();
        CliffordPolynomial { m: self.m, terms }
    }

    /// Non-commutative ring product: monomials commute, coefficients multiply
    /// through the geometric product with the left factor on the left.
    pub fn multiply(&self, other: &CliffordPolynomial) -> Result<CliffordPolynomial, Error> {
        self.check_dimension(other)?;
        let mut terms: BTreeMap<Vec<u32>, Multivector> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let product = ca.geometric_product(cb)?;
                match terms.entry(exps) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(product);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get().add(&product)?;
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(CliffordPolynomial { m: self.m, terms })
    }

    pub fn pow(&self, n: usize) -> CliffordPolynomial {
        let mut acc = CliffordPolynomial::one(self.m);
        for _ in 0..n {
            acc = acc.multiply(self).expect("same dimension");
        }
        acc
    }

    /// Formal partial derivative with respect to `x_j`, coefficient-wise.
    pub fn partial(&self, j: usize) -> Result<CliffordPolynomial, Error> {
        if j > self.m {
            return Err(Error::VariableOutOfRange {
                index: j,
                m: self.m,
            });
        }
        let mut terms = BTreeMap::new();
        for (exps, coeff) in &self.terms {
            let d = exps[j];
            if d == 0 {
                continue;
            }
            let mut new_exps = exps.clone();
            new_exps[j] = d - 1;
            terms.insert(new_exps, coeff.scale(&Rational::from_integer(d.into())));
        }
        Ok(CliffordPolynomial { m: self.m, terms })
    }

    /// The Dirac operator `sum_j e_j d/dx_j` (left multiplication by `e_j`).
    pub fn dirac(&self) -> CliffordPolynomial {
        let mut acc = CliffordPolynomial::zero(self.m);
        for j in 1..=self.m {
            let ej = Multivector::basis_vector(self.m, j).expect("j <= m");
            let dj = self.partial(j).expect("j <= m");
            let term = CliffordPolynomial::constant(ej)
                .multiply(&dj)
                .expect("same dimension");
            acc = acc.add(&term).expect("same dimension");
        }
        acc
    }

    /// The generalized Cauchy-Riemann operator `d/dx_0 + Dirac`.
    pub fn cauchy_riemann(&self) -> CliffordPolynomial {
        let d0 = self.partial(0).expect("0 <= m");
        d0.add(&self.dirac()).expect("same dimension")
    }

    /// The conjugate operator `d/dx_0 - Dirac`.
    pub fn conjugate_cauchy_riemann(&self) -> CliffordPolynomial {
        let d0 = self.partial(0).expect("0 <= m");
        d0.sub(&self.dirac()).expect("same dimension")
    }

    /// The Laplacian over all `m + 1` variables.
    pub fn laplacian(&self) -> CliffordPolynomial {
        let mut acc = CliffordPolynomial::zero(self.m);
        for j in 0..=self.m {
            let second = self.partial(j).and_then(|p| p.partial(j)).expect("j <= m");
            acc = acc.add(&second).expect("same dimension");
        }
        acc
    }

    pub fn laplacian_power(&self, n: usize) -> CliffordPolynomial {
        let mut acc = self.clone();
        for _ in 0..n {
            if acc.is_zero() {
                break;
            }
            acc = acc.laplacian();
        }
        acc
    }

    /// Exact zero test of the generalized Cauchy-Riemann operator.
    pub fn is_monogenic(&self) -> bool {
        self.cauchy_riemann().is_zero()
    }

    /// Exact zero test of the `degree`-th Laplacian power.
    pub fn is_polyharmonic(&self, degree: usize) -> bool {
        self.laplacian_power(degree).is_zero()
    }

    /// True when every exponent tuple sums to `k` (vacuously true for zero).
    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.terms
            .keys()
            .all(|exps| exps.iter().sum::<u32>() as usize == k)
    }

    /// Largest total degree among the terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|exps| exps.iter().sum::<u32>() as usize)
            .max()
    }

    pub fn depends_on_x0(&self) -> bool {
        self.terms.keys().any(|exps| exps[0] > 0)
    }

    /// Substitutes `x_0 = 0`, dropping every term with a positive x0-exponent.
    pub fn restrict_x0_zero(&self) -> CliffordPolynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(exps, _)| exps[0] == 0)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        CliffordPolynomial { m: self.m, terms }
    }

    /// Multiplies by the scalar monomial `x_0^j`.
    pub fn mul_x0_power(&self, j: u32) -> CliffordPolynomial {
        let terms = self
            .terms
            .iter()
            .map(|(exps, c)| {
                let mut e = exps.clone();
                e[0] += j;
                (e, c.clone())
            })
            .collect();
        CliffordPolynomial { m: self.m, terms }
    }
}

impl fmt::Display for CliffordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({coeff})")?;
            for (j, &d) in exps.iter().enumerate() {
                if d == 1 {
                    write!(f, "*x{j}")?;
                } else if d > 1 {
                    write!(f, "*x{j}^{d}")?;
                }
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn add(self, other: &CliffordPolynomial) -> CliffordPolynomial {
        CliffordPolynomial::add(self, other).expect("dimension mismatch")
    }
}

impl std::ops::Sub for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn sub(self, other: &CliffordPolynomial) -> CliffordPolynomial {
        CliffordPolynomial::sub(self, other).expect("dimension mismatch")
    }
}

impl std::ops::Mul for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn mul(self, other: &CliffordPolynomial) -> CliffordPolynomial {
        self.multiply(other).expect("dimension mismatch")
    }
}

impl std::ops::Neg for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn neg(self) -> CliffordPolynomial {
        CliffordPolynomial::neg(self)
    }
}
