//! Canonical text form: ascending exponents, `c*q^e` terms joined by ` + ` or
//! ` - `, unit coefficients and `q^0` elided, `q^1` written as `q`, fractional
//! exponents parenthesised as `q^(n/d)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::exponent::QExponent;
use super::poly::QPoly;
use crate::error::Error;

fn write_body(f: &mut fmt::Formatter<'_>, e: &QExponent, mag: &BigInt) -> fmt::Result {
    if e.is_zero() {
        return write!(f, "{mag}");
    }
    if !mag.is_one() {
        write!(f, "{mag}*")?;
    }
    if e.is_integer() {
        if e.numer().is_one() {
            write!(f, "q")
        } else {
            write!(f, "q^{}", e.numer())
        }
    } else {
        write!(f, "q^({}/{})", e.numer(), e.denom())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_body(f, e, &c.abs())?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.s.len() && self.s[self.pos] == b'-' {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }
}

impl FromStr for QPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let err = |msg: &str| Error::Parse(format!("{msg} in polynomial `{s}`"));
        let mut cur = Cursor { s: s.as_bytes(), pos: 0 };
        let mut out = QPoly::zero();
        if cur.peek().is_none() {
            return Err(err("empty input"));
        }
        let mut first = true;
        loop {
            let mut negative = false;
            if cur.eat(b'-') {
                negative = true;
            } else if !first && !cur.eat(b'+') {
                return Err(err("expected `+` or `-`"));
            }
            first = false;
            let coeff = if cur.peek().is_some_and(|b| b.is_ascii_digit()) {
                let c = cur.integer().ok_or_else(|| err("bad coefficient"))?;
                if cur.eat(b'*') {
                    Some(c)
                } else {
                    out.add_term(QExponent::zero(), if negative { -c } else { c });
                    if cur.peek().is_none() {
                        break;
                    }
                    continue;
                }
            } else {
                None
            };
            if !cur.eat(b'q') {
                return Err(err("expected `q`"));
            }
            let exp = if cur.eat(b'^') {
                if cur.eat(b'(') {
                    let n = cur.integer().ok_or_else(|| err("bad exponent"))?;
                    let d = if cur.eat(b'/') {
                        cur.integer().ok_or_else(|| err("bad denominator"))?
                    } else {
                        BigInt::one()
                    };
                    if !cur.eat(b')') {
                        return Err(err("expected `)`"));
                    }
                    if d == BigInt::from(0) {
                        return Err(err("zero denominator"));
                    }
                    QExponent::from_big(n, d)
                } else {
                    let n = cur.integer().ok_or_else(|| err("bad exponent"))?;
                    QExponent::from_big(n, BigInt::one())
                }
            } else {
                QExponent::one()
            };
            let c = coeff.unwrap_or_else(BigInt::one);
            out.add_term(exp, if negative { -c } else { c });
            if cur.peek().is_none() {
                break;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_canonical() {
        let p = QPoly::from_coeffs(&[1, 1, 2, 2, 2, 1, 1]);
        assert_eq!(p.to_string(), "1 + q + 2*q^2 + 2*q^3 + 2*q^4 + q^5 + q^6");
        let p = QPoly::from_terms([
            (QExponent::new(3, 2), -1i64),
            (QExponent::new(-2, 1), 5),
            (QExponent::new(1, 1), -3),
        ]);
        assert_eq!(p.to_string(), "5*q^-2 - 3*q - q^(3/2)");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from(-1).to_string(), "-1");
    }

    #[test]
    fn parse_accepts_canonical_and_loose_forms() {
        let p: QPoly = "1 + q + 2*q^2".parse().unwrap();
        assert_eq!(p, QPoly::from_coeffs(&[1, 1, 2]));
        let p: QPoly = "-q^(27/2)+3*q^(-1)-2".parse().unwrap();
        assert_eq!(p.to_string(), "3*q^-1 - 2 - q^(27/2)");
        assert!("1 +".parse::<QPoly>().is_err());
        assert!("x".parse::<QPoly>().is_err());
        assert!("q^(1/0)".parse::<QPoly>().is_err());
    }
}
