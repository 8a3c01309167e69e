//! Literal syntax for cyclotomic numbers.
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)* ;
//! term   := coeff ['*' root] | root ;
//! root   := 'E(' uint ')' ['^' uint] ;
//! coeff  := uint ['/' uint] ;
//! ```
//!
//! No whitespace is accepted anywhere.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::MAX_CONDUCTOR;
use super::{Cyclotomic, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cyclotomic literal, byte {position}: {message}")]
pub struct LiteralError {
    pub position: usize,
    pub message: String,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, LiteralError> {
        Err(LiteralError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, b: u8) -> Result<(), LiteralError> {
        match self.peek() {
            Some(c) if c == b => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.fail(format!("expected '{}', found '{}'", b as char, c as char)),
            None => self.fail(format!("expected '{}', found end of input", b as char)),
        }
    }

    fn uint(&mut self) -> Result<BigUint, LiteralError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.peek() {
                Some(c) => self.fail(format!("expected digit, found '{}'", c as char)),
                None => self.fail("expected digit, found end of input"),
            };
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("validated digits"))
    }

    fn root(&mut self) -> Result<Cyclotomic, LiteralError> {
        self.expect(b'E')?;
        self.expect(b'(')?;
        let at = self.pos;
        let n = self.uint()?;
        let n = match n.to_u32() {
            Some(0) => {
                return Err(LiteralError {
                    position: at,
                    message: "conductor must be positive".into(),
                })
            }
            Some(n) if n <= MAX_CONDUCTOR => n,
            _ => {
                return Err(LiteralError {
                    position: at,
                    message: format!("conductor exceeds {MAX_CONDUCTOR}"),
                })
            }
        };
        self.expect(b')')?;
        let mut k = BigUint::one();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            k = self.uint()?;
        }
        let k = (k % BigUint::from(n)).to_i64().expect("reduced exponent");
        Ok(Cyclotomic::root_of_unity(n, k))
    }

    fn term(&mut self) -> Result<Cyclotomic, LiteralError> {
        if self.peek() == Some(b'E') {
            return self.root();
        }
        let num = self.uint()?;
        let mut den = BigUint::one();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            den = self.uint()?;
            if den.is_zero() {
                return Err(LiteralError {
                    position: at,
                    message: "zero denominator".into(),
                });
            }
        }
        let coeff = Cyclotomic::from_rational(&Rational::new(BigInt::from(num), BigInt::from(den)));
        if self.peek() == Some(b'*') {
            self.pos += 1;
            let r = self.root()?;
            return Ok(&coeff * &r);
        }
        Ok(coeff)
    }
}

/// Parse a literal into its canonically reduced value.
pub fn parse(text: &str) -> Result<Cyclotomic, LiteralError> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut negative = false;
    // the sum lives at the lcm of the term conductors, which must stay in range
    let mut conductor = 1u64;
    if cur.peek() == Some(b'-') {
        cur.pos += 1;
        negative = true;
    }
    loop {
        let at = cur.pos;
        let t = cur.term()?;
        conductor = num_integer::lcm(conductor, t.conductor() as u64);
        if conductor > MAX_CONDUCTOR as u64 {
            return Err(LiteralError {
                position: at,
                message: format!("combined conductor {conductor} exceeds {MAX_CONDUCTOR}"),
            });
        }
        terms.push(if negative { -t } else { t });
        match cur.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(c) => return cur.fail(format!("unexpected '{}'", c as char)),
        }
        cur.pos += 1;
    }
    Ok(Cyclotomic::sum_grouped(terms))
}

fn push_rational(out: &mut String, r: &Rational) {
    out.push_str(&r.numer().abs().to_string());
    if !r.denom().is_one() {
        out.push('/');
        out.push_str(&r.denom().to_string());
    }
}

/// Render in the literal syntax at the smallest conductor: exponents
/// increasing, zero coefficients, unit coefficients and `^1` omitted.
pub fn render(x: &Cyclotomic) -> String {
    let x = &x.minimized();
    let n = x.conductor();
    let mut out = String::new();
    for (k, c) in x.coefficients() {
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if k == 0 {
            push_rational(&mut out, &c);
            continue;
        }
        if !c.abs().is_one() {
            push_rational(&mut out, &c);
            out.push('*');
        }
        out.push_str(&format!("E({n})"));
        if k != 1 {
            out.push_str(&format!("^{k}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl std::str::FromStr for Cyclotomic {
    type Err = LiteralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        assert_eq!(parse("1").unwrap(), Cyclotomic::one());
        assert_eq!(parse("E(4)^2").unwrap(), Cyclotomic::from_integer(-1));
        assert_eq!(parse("-3/6").unwrap().to_string(), "-1/2");
        assert_eq!(parse("1/2*E(3)-E(3)^2").unwrap().to_string(), "1+3/2*E(3)");
        assert_eq!(parse("E(4)^1").unwrap().to_string(), "E(4)");
    }

    #[test]
    fn rejects_whitespace_and_bad_input() {
        assert_eq!(parse("1 + E(4)").unwrap_err().position, 1);
        assert_eq!(parse("E(0)").unwrap_err().position, 2);
        assert_eq!(parse("1/0").unwrap_err().position, 2);
        assert_eq!(parse("").unwrap_err().position, 0);
        assert_eq!(parse("E(5").unwrap_err().position, 3);
        assert_eq!(parse("2*3").unwrap_err().position, 2);
        assert_eq!(parse("--1").unwrap_err().position, 1);
        assert!(parse("E(99999)").is_err());
    }

    #[test]
    fn render_zero_and_signs() {
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!(parse("-E(5)").unwrap().to_string(), "-E(5)");
        assert_eq!(parse("E(5)+E(5)^4").unwrap().to_string(), "-1-E(5)^2-E(5)^3");
    }

    #[test]
    fn render_uses_smallest_conductor() {
        let x = &parse("E(12)^4").unwrap() + &parse("E(8)^2").unwrap();
        assert_eq!(x.to_string(), "-1+E(12)^2+E(12)^3");
        let y = &parse("E(24)").unwrap() * &parse("E(24)^5").unwrap();
        assert_eq!(y.to_string(), "E(4)");
        assert_eq!(parse("E(6)").unwrap().to_string(), "1+E(3)");
    }
}
