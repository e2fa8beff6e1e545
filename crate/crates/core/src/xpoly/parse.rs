//! Precedence-climbing parser for polynomial expressions in x and q.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := 'x' | 'q' | rational | '(' expr ')'
//! rational := int ('/' nat)?
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::XPoly;
use crate::error::ParseError;
use crate::qscalar::{BigRat, QRat};

const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    X,
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number `{n}`"),
            Tok::X => "`x`".into(),
            Tok::Q => "`q`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            b'x' => Tok::X,
            b'q' => Tok::Q,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(ParseError {
                    position: i,
                    expected: "x, q, number, operator or parenthesis".into(),
                    found: format!("`{ch}`"),
                });
            }
        };
        out.push((i, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            position: self.offset(),
            expected: expected.into(),
            found: self.peek().describe(),
        }
    }

    fn expr(&mut self) -> Result<XPoly, ParseError> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<XPoly, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<XPoly, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                let exp = u32::try_from(n)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| ParseError {
                        position: at,
                        expected: format!("exponent at most {MAX_EXPONENT}"),
                        found: "larger exponent".into(),
                    })?;
                Ok(base.pow(exp))
            }
            _ => Err(self.error("natural number exponent")),
        }
    }

    fn base(&mut self) -> Result<XPoly, ParseError> {
        match self.peek().clone() {
            Tok::X => {
                self.bump();
                Ok(XPoly::x())
            }
            Tok::Q => {
                self.bump();
                Ok(XPoly::constant(QRat::q()))
            }
            Tok::Num(n) => {
                self.bump();
                let mut value = BigRat::from_integer(n);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let at = self.offset();
                    match self.peek().clone() {
                        Tok::Num(d) if !d.is_zero() => {
                            self.bump();
                            value /= BigRat::from_integer(d);
                        }
                        Tok::Num(_) => {
                            return Err(ParseError {
                                position: at,
                                expected: "nonzero denominator".into(),
                                found: "`0`".into(),
                            })
                        }
                        _ => return Err(self.error("natural number denominator")),
                    }
                }
                Ok(XPoly::constant(QRat::from_bigrat(value)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error("term (x, q, number or `(`)")),
        }
    }
}

/// Parse a polynomial expression in x with coefficients polynomial in q.
pub fn parse(text: &str) -> Result<XPoly, ParseError> {
    let mut parser = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let value = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.error("operator or end of input"));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::QNumPoly;

    #[test]
    fn simple_polynomials() {
        let p = parse("x^2 - 1/2").unwrap();
        assert_eq!(
            p.coeffs(),
            &[QRat::from_ratio(-1, 2), QRat::zero(), QRat::one()]
        );
        let p = parse("(1+q)*x").unwrap();
        assert_eq!(p.coeff(1), QRat::from_poly(QNumPoly::from_ints(&[1, 1])));
        assert_eq!(parse("0").unwrap(), XPoly::zero());
        assert_eq!(parse("-(x-1)").unwrap(), parse("1-x").unwrap());
        assert_eq!(
            parse(" ( x + 1 ) ^ 2 ").unwrap(),
            parse("x^2+2*x+1").unwrap()
        );
        assert_eq!(parse("x^0").unwrap(), XPoly::one());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("x + + 1").unwrap_err();
        assert_eq!(e.position, 4);
        assert!(e.expected.contains("term"));
        let e = parse("x^^2").unwrap_err();
        assert_eq!(e.position, 2);
        assert!(e.expected.contains("exponent"));
        assert_eq!(parse("(x+1").unwrap_err().position, 4);
        assert_eq!(parse("x y").unwrap_err().position, 2);
        assert_eq!(parse("1/0").unwrap_err().position, 2);
        assert_eq!(parse("x/2").unwrap_err().position, 1);
        assert_eq!(parse("").unwrap_err().position, 0);
        assert_eq!(parse("--x").unwrap_err().position, 1);
        assert!(parse("x^99999").is_err());
        assert_eq!(parse("x^").unwrap_err().position, 2);
    }
}
