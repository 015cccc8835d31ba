//! Parser for seed expressions such as `"3*z^4 - z + 1/2"`.
//!
//! Grammar (whitespace-insensitive):
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := rational ('*'? 'z' ('^' uint)?)? | 'z' ('^' uint)?
//! rational := int ('/' uint)?
//! ```

use std::fmt;

use fueter_core::axial::HolomorphicSeed;
use fueter_core::rational::Rational;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for SeedParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at offset {}: {}",
            self.position, self.message
        )
    }
}

impl std::error::Error for SeedParseError {}

pub fn parse_seed(text: &str) -> Result<HolomorphicSeed, SeedParseError> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    parser.expr()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> SeedParseError {
        SeedParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<HolomorphicSeed, SeedParseError> {
        let mut terms: Vec<(usize, Rational)> = Vec::new();
        self.skip_ws();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (power, coeff) = self.term()?;
            let coeff = if sign < 0 { -coeff } else { coeff };
            terms.push((power, coeff));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    sign = 1;
                    self.pos += 1;
                }
                Some(b'-') => {
                    sign = -1;
                    self.pos += 1;
                }
                Some(c) => {
                    return Err(self.error(format!(
                        "expected '+' or '-' between terms, found {:?}",
                        c as char
                    )))
                }
            }
        }
        let max_power = terms.iter().map(|(p, _)| *p).max().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); max_power + 1];
        for (power, coeff) in terms {
            coeffs[power] += coeff;
        }
        Ok(HolomorphicSeed::new(coeffs))
    }

    fn term(&mut self) -> Result<(usize, Rational), SeedParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'z') => {
                self.pos += 1;
                Ok((self.optional_power()?, Rational::from_integer(1.into())))
            }
            Some(c) if c.is_ascii_digit() || c == b'-' => {
                let coeff = self.rational()?;
                let after_rational = self.pos;
                self.skip_ws();
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        self.skip_ws();
                        if self.peek() != Some(b'z') {
                            return Err(self.error("expected 'z' after '*'"));
                        }
                        self.pos += 1;
                        Ok((self.optional_power()?, coeff))
                    }
                    Some(b'z') => {
                        self.pos += 1;
                        Ok((self.optional_power()?, coeff))
                    }
                    _ => {
                        self.pos = after_rational;
                        Ok((0, coeff))
                    }
                }
            }
            Some(c) => Err(self.error(format!("expected a term, found {:?}", c as char))),
            None => Err(self.error("expected a term")),
        }
    }

    fn optional_power(&mut self) -> Result<usize, SeedParseError> {
        let saved = self.pos;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            self.uint()
        } else {
            self.pos = saved;
            Ok(1)
        }
    }

    fn digits(&mut self) -> Result<&str, SeedParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits"))
    }

    fn uint(&mut self) -> Result<usize, SeedParseError> {
        let position = self.pos;
        let digits = self.digits()?;
        digits.parse().map_err(|_| SeedParseError {
            position,
            message: format!("integer {digits} is too large"),
        })
    }

    fn rational(&mut self) -> Result<Rational, SeedParseError> {
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
            self.skip_ws();
        }
        let numer: BigInt = self.digits()?.parse().expect("digits parse as BigInt");
        let numer = if negative { -numer } else { numer };
        let saved = self.pos;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let denom_pos = self.pos;
            let denom: BigInt = self.digits()?.parse().expect("digits parse as BigInt");
            if denom.is_zero() {
                return Err(SeedParseError {
                    position: denom_pos,
                    message: "zero denominator".to_owned(),
                });
            }
            Ok(Rational::new(numer, denom))
        } else {
            self.pos = saved;
            Ok(Rational::from_integer(numer))
        }
    }
}
