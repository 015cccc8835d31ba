//! Exact arithmetic kernel for the real Clifford algebra with generators
//! `e_1, ..., e_m` satisfying `e_j e_k + e_k e_j = -2 delta_jk`.
//!
//! Values are immutable and kept in canonical form: no zero coefficient is
//! ever stored, and blades are sorted index sequences.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::rational::Rational;

/// A basis blade `e_{j_1} ... e_{j_g}` with strictly increasing indices drawn
/// from `{1, ..., m}`. The empty sequence is the identity blade.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Blade(Vec<usize>);

impl Blade {
    /// The identity blade (empty index sequence).
    pub fn identity() -> Self {
        Blade(Vec::new())
    }

    /// Builds a blade from an index sequence, validating it against `m`.
    pub fn new(indices: impl Into<Vec<usize>>, m: usize) -> Result<Self, Error> {
        let indices = indices.into();
        for window in indices.windows(2) {
            if window[0] >= window[1] {
                return Err(Error::BladeNotIncreasing { indices });
            }
        }
        for &index in &indices {
            if index < 1 || index > m {
                return Err(Error::BladeIndexOutOfRange { index, m });
            }
        }
        Ok(Blade(indices))
    }

    // internal shortcut; callers guarantee 1 <= j <= m
    pub(crate) fn single(j: usize) -> Self {
        Blade(vec![j])
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn grade(&self) -> usize {
        self.0.len()
    }

    fn max_index(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for j in &self.0 {
            write!(f, "e{j}")?;
        }
        Ok(())
    }
}

/// Multiplies two blades: concatenate the index sequences, bubble-sort into
/// increasing order counting transpositions (each swap flips the sign), then
/// cancel adjacent equal pairs with `e_j e_j = -1`.
fn blade_product(a: &Blade, b: &Blade) -> (i32, Blade) {
    let mut seq: Vec<usize> = a.0.iter().chain(b.0.iter()).copied().collect();
    let mut sign = 1i32;
    let len = seq.len();
    for pass in 0..len {
        for i in 0..len.saturating_sub(1 + pass) {
            if seq[i] > seq[i + 1] {
                seq.swap(i, i + 1);
                sign = -sign;
            }
        }
    }
    let mut reduced = Vec::with_capacity(seq.len());
    let mut iter = seq.into_iter().peekable();
    while let Some(j) = iter.next() {
        if iter.peek() == Some(&j) {
            iter.next();
            sign = -sign; // e_j^2 = -1
        } else {
            reduced.push(j);
        }
    }
    (sign, Blade(reduced))
}

/// An element of the Clifford algebra over `R^m`: a finite linear combination
/// of basis blades with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector {
    m: usize,
    terms: BTreeMap<Blade, Rational>,
}

impl Multivector {
    pub fn zero(m: usize) -> Self {
        Multivector {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(m: usize, value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Blade::identity(), value);
        }
        Multivector { m, terms }
    }

    pub fn one(m: usize) -> Self {
        Multivector::scalar(m, Rational::from_integer(1.into()))
    }

    /// The basis vector `e_j`, `1 <= j <= m`.
    pub fn basis_vector(m: usize, j: usize) -> Result<Self, Error> {
        let blade = Blade::new(vec![j], m)?;
        let mut terms = BTreeMap::new();
        terms.insert(blade, Rational::from_integer(1.into()));
        Ok(Multivector { m, terms })
    }

    /// The grade-1 element with the given components on `e_1, ..., e_m`.
    pub fn vector(m: usize, components: &[Rational]) -> Result<Self, Error> {
        if components.len() != m {
            return Err(Error::ExponentLength {
                expected: m,
                found: components.len(),
            });
        }
        let mut terms = BTreeMap::new();
        for (i, c) in components.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(Blade::single(i + 1), c.clone());
            }
        }
        Ok(Multivector { m, terms })
    }

    /// Accumulates `(blade, coefficient)` pairs, validating every blade and
    /// restoring canonical form.
    pub fn from_terms(
        m: usize,
        terms: impl IntoIterator<Item = (Blade, Rational)>,
    ) -> Result<Self, Error> {
        let mut map: BTreeMap<Blade, Rational> = BTreeMap::new();
        for (blade, coeff) in terms {
            if blade.max_index() > m {
                return Err(Error::BladeIndexOutOfRange {
                    index: blade.max_index(),
                    m,
                });
            }
            let entry = map.entry(blade).or_insert_with(Rational::zero);
            *entry += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Multivector { m, terms: map })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `blade` (zero when absent).
    pub fn coeff(&self, blade: &Blade) -> Rational {
        self.terms
            .get(blade)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scalar_part(&self) -> Rational {
        self.coeff(&Blade::identity())
    }

    fn check_dimension(&self, other: &Multivector) -> Result<(), Error> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector, Error> {
        self.check_dimension(other)?;
        let mut terms = self.terms.clone();
        for (blade, coeff) in &other.terms {
            let entry = terms.entry(blade.clone()).or_insert_with(Rational::zero);
            *entry += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Multivector { m: self.m, terms })
    }

    pub fn sub(&self, other: &Multivector) -> Result<Multivector, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Multivector {
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| (b.clone(), -c.clone()))
            .collect();
        Multivector { m: self.m, terms }
    }

    pub fn scale(&self, factor: &Rational) -> Multivector {
        if factor.is_zero() {
            return Multivector::zero(self.m);
        }
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| (b.clone(), c * factor))
            .collect();
        Multivector { m: self.m, terms }
    }

    /// The geometric product, the bilinear extension of the blade product
    /// determined by the anticommutation relations.
    pub fn geometric_product(&self, other: &Multivector) -> Result<Multivector, Error> {
        self.check_dimension(other)?;
        let mut terms: BTreeMap<Blade, Rational> = BTreeMap::new();
        for (ba, ca) in &self.terms {
            for (bb, cb) in &other.terms {
                let (sign, blade) = blade_product(ba, bb);
                let mut coeff = ca * cb;
                if sign < 0 {
                    coeff = -coeff;
                }
                let entry = terms.entry(blade).or_insert_with(Rational::zero);
                *entry += coeff;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Multivector { m: self.m, terms })
    }

    /// Clifford conjugation: on a blade of grade `g` the sign is
    /// `(-1)^{g(g+1)/2}`; extended linearly. An anti-automorphism.
    pub fn conjugate(&self) -> Multivector {
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| {
                let g = b.grade();
                let coeff = if (g * (g + 1) / 2) % 2 == 0 {
                    c.clone()
                } else {
                    -c.clone()
                };
                (b.clone(), coeff)
            })
            .collect();
        Multivector { m: self.m, terms }
    }
}

// Display is used in diagnostics only; keep it simple.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (blade, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if blade.grade() == 0 {
                write!(f, "{}", crate::rational::format_rational(coeff))?;
            } else {
                write!(f, "{}*{}", crate::rational::format_rational(coeff), blade)?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Multivector {
    type Output = Multivector;
    fn add(self, other: &Multivector) -> Multivector {
        Multivector::add(self, other).expect("dimension mismatch")
    }
}

impl std::ops::Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, other: &Multivector) -> Multivector {
        Multivector::sub(self, other).expect("dimension mismatch")
    }
}

impl std::ops::Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, other: &Multivector) -> Multivector {
        self.geometric_product(other).expect("dimension mismatch")
    }
}

impl std::ops::Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector::neg(self)
    }
}
