//! Plain ASCII grammar for rational functions, e.g. `(4+u)/(4-u)` or
//! `2mu^2 - 1/(m+2)`. Adjacency is multiplication, `^` is a non-negative
//! integer power. The variable `n` is accepted as an alias for variable 0
//! (the classical series parameter prints as `n`).

use super::poly::MultiPoly;
use super::rf::RationalFunc;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn peek_tok(&mut self) -> Result<(Tok, usize), ParseError> {
        let save = self.pos;
        let t = self.next_tok()?;
        let after = self.pos;
        self.pos = save;
        Ok((t, after))
    }

    fn next_tok(&mut self) -> Result<Tok, ParseError> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(Tok::End);
        }
        let c = self.src[self.pos];
        self.pos += 1;
        Ok(match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Int(text.parse().unwrap())
            }
            b'm' | b'n' => Tok::Var(0),
            b'u' => Tok::Var(1),
            b'v' => Tok::Var(2),
            other => {
                self.pos -= 1;
                return Err(self.error(format!("unexpected character '{}'", other as char)));
            }
        })
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
}

impl<'a> Parser<'a> {
    fn expr(&mut self) -> Result<RationalFunc, ParseError> {
        let mut acc = self.term()?;
        loop {
            let (t, after) = self.lex.peek_tok()?;
            match t {
                Tok::Plus => {
                    self.lex.pos = after;
                    acc = acc.add_ref(&self.term()?);
                }
                Tok::Minus => {
                    self.lex.pos = after;
                    acc = acc.sub_ref(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunc, ParseError> {
        let mut acc = self.factor()?;
        loop {
            let (t, after) = self.lex.peek_tok()?;
            match t {
                Tok::Star => {
                    self.lex.pos = after;
                    acc = acc.mul_ref(&self.factor()?);
                }
                Tok::Slash => {
                    self.lex.pos = after;
                    let rhs = self.factor()?;
                    acc = acc
                        .div_ref(&rhs)
                        .map_err(|e| self.lex.error(e.to_string()))?;
                }
                // implicit multiplication: 4u, 2(m+2), (m+1)(m+2)
                Tok::Int(_) | Tok::Var(_) | Tok::LParen => {
                    acc = acc.mul_ref(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RationalFunc, ParseError> {
        let (t, after) = self.lex.peek_tok()?;
        if t == Tok::Minus {
            self.lex.pos = after;
            return Ok(self.factor()?.neg_ref());
        }
        let base = self.atom()?;
        let (t, after) = self.lex.peek_tok()?;
        if t == Tok::Caret {
            self.lex.pos = after;
            let e = match self.lex.next_tok()? {
                Tok::Int(n) => n,
                _ => return Err(self.lex.error("expected integer exponent after '^'")),
            };
            let e: u32 = e
                .try_into()
                .map_err(|_| self.lex.error("exponent out of range"))?;
            let mut acc = RationalFunc::one();
            for _ in 0..e {
                acc = acc.mul_ref(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RationalFunc, ParseError> {
        match self.lex.next_tok()? {
            Tok::Int(n) => Ok(RationalFunc::from_poly(MultiPoly::constant(n))),
            Tok::Var(i) => Ok(RationalFunc::var(i)),
            Tok::LParen => {
                let inner = self.expr()?;
                match self.lex.next_tok()? {
                    Tok::RParen => Ok(inner),
                    _ => Err(self.lex.error("expected ')'")),
                }
            }
            other => Err(self.lex.error(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse a rational function from the plain ASCII grammar.
pub fn parse_ratfunc(text: &str) -> Result<RationalFunc, ParseError> {
    let mut p = Parser {
        lex: Lexer::new(text),
    };
    let out = p.expr()?;
    match p.lex.next_tok()? {
        Tok::End => Ok(out),
        other => Err(p.lex.error(format!("trailing input: {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_example() {
        let f = parse_ratfunc("(4+u)/(4-u)").unwrap();
        let g = parse_ratfunc("(u+4)/(4-u)").unwrap();
        assert_eq!(f, g);
        assert_eq!(f.to_string(), "(-u-4)/(u-4)");
    }

    #[test]
    fn implicit_multiplication() {
        let f = parse_ratfunc("2mu^2").unwrap();
        let g = parse_ratfunc("2*m*u^2").unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn n_is_an_alias_for_var0() {
        assert_eq!(parse_ratfunc("n+2").unwrap(), parse_ratfunc("m+2").unwrap());
    }

    #[test]
    fn roundtrip_print_parse() {
        for text in [
            "(4+u)/(4-u)",
            "-m/(2m+4) + 1/(2m+4)",
            "(4m+8)u/(2m-u)",
            "u^3 - 2uv + 7/3",
            "1/(2m+2-u)",
        ] {
            let f = parse_ratfunc(text).unwrap();
            let printed = f.to_string();
            let reparsed = parse_ratfunc(&printed).unwrap();
            assert_eq!(f, reparsed, "round trip failed for {text} -> {printed}");
        }
    }

    #[test]
    fn error_position() {
        let err = parse_ratfunc("(4+u").unwrap_err();
        assert!(err.pos >= 4);
    }
}
