//! Text syntax for cyclotomic numbers: integers, fractions `a/b`, `E(n)` for
//! `ζ_n`, `^k` powers, `+`, `-`, `*` and parentheses.

use num_bigint::BigInt;

use super::{Cyclotomic, Rational};
use crate::error::{Error, Result};

pub(super) fn parse(s: &str) -> Result<Cyclotomic> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Cyclotomic> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Cyclotomic> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Cyclotomic> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                self.power(v)
            }
            Some(b'E') => {
                self.pos += 1;
                self.expect(b'(')?;
                let n = self.integer()?;
                self.expect(b')')?;
                let n: u32 = n
                    .try_into()
                    .ok()
                    .filter(|&n: &u32| n > 0)
                    .ok_or_else(|| self.err("root of unity order must be a positive integer"))?;
                let k = if self.eat(b'^') {
                    let neg = self.eat(b'-');
                    let k = self.integer()?;
                    let k: i64 = k.try_into().map_err(|_| self.err("exponent too large"))?;
                    if neg {
                        -k
                    } else {
                        k
                    }
                } else {
                    1
                };
                Ok(Cyclotomic::root_of_unity(n, k))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let q = if self.eat(b'/') {
                    let den = self.integer()?;
                    if den == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    Rational::new(num, den)
                } else {
                    Rational::from_integer(num)
                };
                self.power(Cyclotomic::from_rational(q))
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            _ => Err(self.err("expected a number, E(n) or '('")),
        }
    }

    fn power(&mut self, base: Cyclotomic) -> Result<Cyclotomic> {
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let e: u32 = self
            .integer()?
            .try_into()
            .map_err(|_| self.err("exponent too large"))?;
        let v = base.pow(e);
        if neg {
            v.inv()
        } else {
            Ok(v)
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as an integer"))
    }
}
