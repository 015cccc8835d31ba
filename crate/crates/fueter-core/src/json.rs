//! JSON wire formats.
//!
//! Rationals are encoded as strings in lowest terms with a positive
//! denominator (`"p/q"`, the `/q` omitted when the denominator is one).
//! Blades are sorted integer arrays; term lists are sorted by blade or by
//! exponent tuple, so emission is canonical and deterministic.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::axial::{Parity, RadialPolynomial};
use crate::clifford::{Blade, Multivector};
use crate::fueter::TransformReport;
use crate::polynomial::CliffordPolynomial;
use crate::rational::{format_rational, parse_rational};
use crate::spherical::{FischerDecomposition, SphericalMonogenic};

#[derive(Serialize, Deserialize)]
struct MultivectorTermDto {
    blade: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct MultivectorDto {
    m: usize,
    terms: Vec<MultivectorTermDto>,
}

fn multivector_terms(mv: &Multivector) -> Vec<MultivectorTermDto> {
    mv.terms()
        .map(|(blade, coeff)| MultivectorTermDto {
            blade: blade.indices().to_vec(),
            coeff: format_rational(coeff),
        })
        .collect()
}

fn multivector_from_terms<E: serde::de::Error>(
    m: usize,
    terms: Vec<MultivectorTermDto>,
) -> Result<Multivector, E> {
    let mut parsed = Vec::with_capacity(terms.len());
    for term in terms {
        let blade = Blade::new(term.blade, m).map_err(E::custom)?;
        let coeff = parse_rational(&term.coeff).map_err(E::custom)?;
        parsed.push((blade, coeff));
    }
    Multivector::from_terms(m, parsed).map_err(E::custom)
}

impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MultivectorDto {
            m: self.m(),
            terms: multivector_terms(self),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Multivector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = MultivectorDto::deserialize(deserializer)?;
        multivector_from_terms(dto.m, dto.terms)
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialTermDto {
    exponents: Vec<u32>,
    coeff: Vec<MultivectorTermDto>,
}

#[derive(Serialize, Deserialize)]
struct PolynomialDto {
    m: usize,
    terms: Vec<PolynomialTermDto>,
}

impl Serialize for CliffordPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .map(|(exponents, coeff)| PolynomialTermDto {
                exponents: exponents.clone(),
                coeff: multivector_terms(coeff),
            })
            .collect();
        PolynomialDto { m: self.m(), terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CliffordPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = PolynomialDto::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(dto.terms.len());
        for term in dto.terms {
            let coeff = multivector_from_terms::<D::Error>(dto.m, term.coeff)?;
            terms.push((term.exponents, coeff));
        }
        CliffordPolynomial::from_terms(dto.m, terms).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RadialTermDto {
    x0: u32,
    r: u32,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct RadialDto {
    parity: String,
    terms: Vec<RadialTermDto>,
}

impl Serialize for RadialPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .map(|(&(x0, r), coeff)| RadialTermDto {
                x0,
                r,
                coeff: format_rational(coeff),
            })
            .collect();
        RadialDto {
            parity: self.parity().to_string(),
            terms,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RadialPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = RadialDto::deserialize(deserializer)?;
        let parity = match dto.parity.as_str() {
            "even" => Parity::Even,
            "odd" => Parity::Odd,
            other => {
                return Err(D::Error::custom(format!(
                    "parity must be \"even\" or \"odd\", got {other:?}"
                )))
            }
        };
        let mut terms = Vec::with_capacity(dto.terms.len());
        for term in dto.terms {
            let coeff = parse_rational(&term.coeff).map_err(D::Error::custom)?;
            terms.push((term.x0, term.r, coeff));
        }
        RadialPolynomial::from_terms(parity, terms).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct FischerDto {
    k: usize,
    components: Vec<CliffordPolynomial>,
}

impl Serialize for FischerDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FischerDto {
            k: self.k(),
            components: self.components().iter().map(|c| c.poly().clone()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FischerDecomposition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = FischerDto::deserialize(deserializer)?;
        if dto.components.len() != dto.k + 1 {
            return Err(D::Error::custom(format!(
                "expected {} components, got {}",
                dto.k + 1,
                dto.components.len()
            )));
        }
        let mut components = Vec::with_capacity(dto.components.len());
        for (n, poly) in dto.components.into_iter().enumerate() {
            components.push(SphericalMonogenic::new(poly, dto.k - n).map_err(D::Error::custom)?);
        }
        FischerDecomposition::new(dto.k, components).map_err(D::Error::custom)
    }
}

#[derive(Serialize)]
struct ConfigDto {
    m: usize,
    k: usize,
    p: usize,
}

#[derive(Serialize)]
struct ReportDto<'a> {
    config: ConfigDto,
    output: &'a CliffordPolynomial,
    monogenic: bool,
    paths_agree: Option<bool>,
    vekua_ok: Option<bool>,
    residual: &'a Option<CliffordPolynomial>,
}

impl Serialize for TransformReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ReportDto {
            config: ConfigDto {
                m: self.config.m,
                k: self.config.k,
                p: self.config.p,
            },
            output: &self.output,
            monogenic: self.monogenic,
            paths_agree: self.paths_agree,
            vekua_ok: self.vekua_ok,
            residual: &self.residual,
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};

    #[test]
    fn multivector_encoding_shape() {
        let mv =
            Multivector::from_terms(3, vec![(Blade::new(vec![1, 2], 3).unwrap(), ratio(-3, 2))])
                .unwrap();
        let json = serde_json::to_string(&mv).unwrap();
        assert_eq!(json, r#"{"m":3,"terms":[{"blade":[1,2],"coeff":"-3/2"}]}"#);
        let back: Multivector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, mv);
    }

    #[test]
    fn multivector_terms_are_sorted_by_blade() {
        let mv = Multivector::from_terms(
            3,
            vec![
                (Blade::new(vec![2], 3).unwrap(), integer(1)),
                (Blade::identity(), integer(5)),
                (Blade::new(vec![1, 3], 3).unwrap(), integer(-1)),
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&mv).unwrap();
        assert_eq!(
            json,
            r#"{"m":3,"terms":[{"blade":[],"coeff":"5"},{"blade":[1,3],"coeff":"-1"},{"blade":[2],"coeff":"1"}]}"#
        );
    }

    #[test]
    fn polynomial_round_trip() {
        let p = CliffordPolynomial::paravector(3)
            .multiply(&CliffordPolynomial::vector_variable(3))
            .unwrap()
            .scale(&ratio(2, 7));
        let json = serde_json::to_string(&p).unwrap();
        let back: CliffordPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn polynomial_rejects_bad_input() {
        // blade index out of range for m
        let bad = r#"{"m":2,"terms":[{"exponents":[0,0,0],"coeff":[{"blade":[3],"coeff":"1"}]}]}"#;
        assert!(serde_json::from_str::<CliffordPolynomial>(bad).is_err());
        // exponent tuple of the wrong length
        let bad = r#"{"m":2,"terms":[{"exponents":[0,0],"coeff":[{"blade":[],"coeff":"1"}]}]}"#;
        assert!(serde_json::from_str::<CliffordPolynomial>(bad).is_err());
        // malformed rational
        let bad = r#"{"m":2,"terms":[{"exponents":[0,0,0],"coeff":[{"blade":[],"coeff":"1/0"}]}]}"#;
        assert!(serde_json::from_str::<CliffordPolynomial>(bad).is_err());
    }

    #[test]
    fn radial_round_trip_and_parity() {
        let g = RadialPolynomial::from_terms(
            Parity::Even,
            vec![(0, 2, integer(1)), (3, 0, ratio(-1, 3))],
        )
        .unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(
            json,
            r#"{"parity":"even","terms":[{"x0":0,"r":2,"coeff":"1"},{"x0":3,"r":0,"coeff":"-1/3"}]}"#
        );
        let back: RadialPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        // declared parity must match the terms
        let bad = r#"{"parity":"odd","terms":[{"x0":0,"r":2,"coeff":"1"}]}"#;
        assert!(serde_json::from_str::<RadialPolynomial>(bad).is_err());
    }

    #[test]
    fn fischer_round_trip() {
        let p = crate::spherical::random_homogeneous(2, 3, 17);
        let decomposition = crate::spherical::fischer_decompose(&p, 2).unwrap();
        let json = serde_json::to_string(&decomposition).unwrap();
        let back: FischerDecomposition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, decomposition);
        assert!(json.starts_with(r#"{"k":2,"components":["#));
    }

    #[test]
    fn report_shape() {
        use crate::axial::HolomorphicSeed;
        use crate::fueter::fueter_spatial;
        use crate::spherical::SphericalMonogenic;
        let report =
            fueter_spatial(&HolomorphicSeed::z_power(2), &SphericalMonogenic::one(3), 3).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            concat!(
                r#"{"config":{"m":3,"k":0,"p":0},"#,
                r#""output":{"m":3,"terms":[{"exponents":[0,0,0,0],"coeff":[{"blade":[],"coeff":"-4"}]}]},"#,
                r#""monogenic":true,"paths_agree":null,"vekua_ok":null,"residual":null}"#
            )
        );
    }
}
