//! Polynomial literal grammar.
//!
//! ```text
//! poly  := sign? term (("+" | "-") term)*
//! term  := coeff | coeff? "*"? var ("^" nat)?
//! coeff := nat ("/" nat)?
//! var   := "x" | "X"
//! ```
//!
//! Whitespace is ignored. Exponents above 64 are rejected.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::RatPoly;

pub const MAX_EXPONENT: usize = 64;

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    i: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (src[..i].chars().count() + 1, c))
            .collect();
        Lexer { chars, i: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars
            .get(self.i)
            .map(|&(p, _)| p)
            .unwrap_or_else(|| self.src.chars().count() + 1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn nat(&mut self) -> Result<BigInt> {
        let start = self.i;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.i += 1;
        }
        if self.i == start {
            return self.err("expected a number");
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn coeff(&mut self) -> Result<BigRational> {
        let n = self.nat()?;
        if self.eat('/') {
            let pos = self.pos();
            let d = self.nat()?;
            if d.is_zero() {
                return Err(Error::Parse {
                    pos,
                    msg: "zero denominator".into(),
                });
            }
            Ok(BigRational::new(n, d))
        } else {
            Ok(BigRational::from_integer(n))
        }
    }

    fn term(&mut self) -> Result<(BigRational, usize)> {
        let c = match self.peek() {
            Some(c) if c.is_ascii_digit() => Some(self.coeff()?),
            Some('x' | 'X') => None,
            Some(other) => return self.err(format!("unexpected '{other}'")),
            None => return self.err("unexpected end of input"),
        };
        let had_star = c.is_some() && self.eat('*');
        if matches!(self.peek(), Some('x' | 'X')) {
            self.i += 1;
            let mut e = 1usize;
            if self.eat('^') {
                let pos = self.pos();
                let n = self.nat()?;
                e = match usize::try_from(&n) {
                    Ok(e) if e <= MAX_EXPONENT => e,
                    _ => {
                        return Err(Error::Parse {
                            pos,
                            msg: format!("exponent exceeds {MAX_EXPONENT}"),
                        })
                    }
                };
            }
            Ok((c.unwrap_or_else(BigRational::one), e))
        } else if had_star {
            self.err("expected variable after '*'")
        } else {
            Ok((c.expect("coefficient present"), 0))
        }
    }
}

/// Parses a polynomial literal such as `x^3 + x^2 + x - 2` or `3/2x - 1`.
pub fn parse_poly(text: &str) -> Result<RatPoly> {
    let mut lx = Lexer::new(text);
    if lx.peek().is_none() {
        return lx.err("empty input");
    }
    let mut coeffs: Vec<BigRational> = Vec::new();
    let mut negative = if lx.eat('-') {
        true
    } else {
        lx.eat('+');
        false
    };
    loop {
        let (c, e) = lx.term()?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigRational::zero());
        }
        if negative {
            coeffs[e] -= c;
        } else {
            coeffs[e] += c;
        }
        match lx.peek() {
            None => break,
            Some('+') => negative = false,
            Some('-') => negative = true,
            Some(other) => return lx.err(format!("unexpected '{other}'")),
        }
        lx.i += 1;
    }
    Ok(RatPoly::new(coeffs))
}

/// Parses `rational:a/b` as `x - a/b`, anything else as a polynomial literal.
pub fn parse_input(text: &str) -> Result<RatPoly> {
    let trimmed = text.trim();
    if let Some(rest) = trimmed.strip_prefix("rational:") {
        let mut lx = Lexer::new(rest);
        let q = lx.coeff()?;
        if lx.peek().is_some() {
            let offset = "rational:".len();
            return Err(Error::Parse {
                pos: lx.pos() + offset,
                msg: "trailing input after rational".into(),
            });
        }
        return Ok(RatPoly::new(vec![-q, BigRational::one()]));
    }
    parse_poly(trimmed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;

    fn ip(text: &str) -> IntPoly {
        parse_poly(text).unwrap().to_int().unwrap()
    }

    #[test]
    fn literals() {
        assert_eq!(ip("x^3 + x^2 + x - 2"), IntPoly::from_i64(&[-2, 1, 1, 1]));
        assert_eq!(ip("x^2 - 4x + 1"), IntPoly::from_i64(&[1, -4, 1]));
        assert_eq!(ip("-X^2+2*x"), IntPoly::from_i64(&[0, 2, -1]));
        assert_eq!(ip("x + x"), IntPoly::from_i64(&[0, 2]));
        assert_eq!(
            parse_poly("3/2x - 1/3").unwrap(),
            RatPoly::from_ratios(&[(-1, 3), (3, 2)])
        );
    }

    #[test]
    fn constant_parses_as_degree_zero() {
        assert_eq!(parse_poly("3/2").unwrap().degree(), Some(0));
    }

    #[test]
    fn rational_form() {
        assert_eq!(
            parse_input("rational:3/2").unwrap(),
            RatPoly::from_ratios(&[(-3, 2), (1, 1)])
        );
        assert!(parse_input("rational:3/2x").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_poly("x^2 + y"),
            Err(Error::Parse {
                pos: 7,
                msg: "unexpected 'y'".into()
            })
        );
        assert!(matches!(
            parse_poly("x^65"),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(parse_poly("x^64").is_ok());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("1/0").is_err());
        assert!(parse_poly("2*").is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["x^3 + x^2 + x - 2", "3/2x - 1/3", "-x^5 + 7", "x", "0"] {
            let p = parse_poly(s).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }
}
