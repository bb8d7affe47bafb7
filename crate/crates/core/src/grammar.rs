//! Text grammar for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (('*'|'/') power)*        division only by nonzero constants
//! power  := atom ['^' uint]
//! atom   := uint | name | '(' expr ')'
//! ```
//!
//! Names must belong to the universe. Whitespace is ignored between tokens.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::monomial::Universe;
use crate::poly::Polynomial;
use crate::scalar::{self, Scalar};

pub(crate) fn parse(universe: &Arc<Universe>, text: &str) -> Result<Polynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, universe };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    universe: &'a Arc<Universe>,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: String::from(msg) }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.power()?;
                    let c = d.as_constant().filter(|c| !c.is_zero()).ok_or(Error::Parse {
                        pos: at,
                        msg: String::from("division only by a nonzero constant"),
                    })?;
                    acc = acc.scale(&(Scalar::from_integer(1.into()) / c));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.uint()?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
            if e > u16::MAX as u32 {
                return Err(self.error("exponent too large"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("validated digits"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.uint()?;
                Ok(Polynomial::constant(self.universe, scalar::from_bigint(v)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                let idx = self.universe.index_of(name).ok_or_else(|| Error::Parse {
                    pos: start,
                    msg: format!("unknown variable {name}"),
                })?;
                Ok(Polynomial::variable(self.universe, idx))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::monomial::Universe;
    use crate::scalar::ratio;

    #[test]
    fn parses_and_prints_canonically() {
        let u = Universe::coordinates(3);
        let p = parse(&u, "  -(x1 - x2)^2 + 3/4 * x3 - x1*x1").unwrap();
        assert_eq!(p.to_string(), "-2*x1^2 + 2*x1*x2 - x2^2 + 3/4*x3");
        assert_eq!(parse(&u, &p.to_string()).unwrap(), p);
        assert_eq!(parse(&u, "x3/2").unwrap(), Polynomial::variable(&u, 2).scale(&ratio(1, 2)));
    }

    #[test]
    fn reports_errors_with_positions() {
        let u = Universe::coordinates(2);
        assert!(matches!(parse(&u, "x1 + y"), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse(&u, "x1 / x2"), Err(Error::Parse { .. })));
        assert!(matches!(parse(&u, "x1 / 0"), Err(Error::Parse { .. })));
        assert!(matches!(parse(&u, "(x1"), Err(Error::Parse { .. })));
        assert!(matches!(parse(&u, "x1 x2"), Err(Error::Parse { .. })));
        assert!(matches!(parse(&u, ""), Err(Error::Parse { .. })));
    }
}
