//! Parser for harmonic expressions such as `H4 + 2*H2 + 2*H0` or
//! `S2(S2(H1)) (x) H1*`.
//!
//! ```text
//! sum     := term ('+' term)*
//! term    := [INT '*'] product
//! product := atom ('(x)' atom)*
//! atom    := 'H' INT ['*'] | 'S2(' sum ')' | 'L2(' sum ')' | '(' sum ')'
//! ```
//!
//! Whitespace is ignored between tokens.

use isoclips_core::irreps::{alt_square, sym_square, tensor_product, HarmonicLabel, HarmonicSum};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("negative multiplicity at byte {offset}")]
    NegativeMultiplicity { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::NegativeMultiplicity { offset } => {
                *offset
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Int(u64),
    H(u32),
    Star,
    Plus,
    Tensor,
    Open,
    Close,
    Sym,
    Alt,
    End,
}

fn describe(t: Tok) -> String {
    match t {
        Tok::Int(k) => format!("integer {k}"),
        Tok::H(n) => format!("H{n}"),
        Tok::Star => "'*'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Tensor => "'(x)'".into(),
        Tok::Open => "'('".into(),
        Tok::Close => "')'".into(),
        Tok::Sym => "'S2('".into(),
        Tok::Alt => "'L2('".into(),
        Tok::End => "end of input".into(),
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

fn skip_ws(b: &[u8], mut i: usize) -> usize {
    while i < b.len() && b[i].is_ascii_whitespace() {
        i += 1;
    }
    i
}

fn digits(text: &str, start: usize) -> Result<(u64, usize), ParseError> {
    let b = text.as_bytes();
    let mut end = start;
    while end < b.len() && b[end].is_ascii_digit() {
        end += 1;
    }
    if end == start {
        return Err(syntax(start, "expected a number"));
    }
    let value = text[start..end]
        .parse()
        .map_err(|_| syntax(start, "number too large"))?;
    Ok((value, end))
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = skip_ws(b, 0);
    while i < b.len() {
        let start = i;
        match b[i] {
            b'0'..=b'9' => {
                let (k, end) = digits(text, i)?;
                out.push((Tok::Int(k), start));
                i = end;
            }
            b'H' => {
                let j = skip_ws(b, i + 1);
                let (n, end) = digits(text, j)?;
                let n = u32::try_from(n).map_err(|_| syntax(j, "degree too large"))?;
                out.push((Tok::H(n), start));
                i = end;
            }
            b'S' | b'L' => {
                let j = skip_ws(b, i + 1);
                if b.get(j) != Some(&b'2') {
                    return Err(syntax(j, "expected '2' after function name"));
                }
                let k = skip_ws(b, j + 1);
                if b.get(k) != Some(&b'(') {
                    return Err(syntax(k, "expected '('"));
                }
                out.push((if b[i] == b'S' { Tok::Sym } else { Tok::Alt }, start));
                i = k + 1;
            }
            b'(' => {
                let j = skip_ws(b, i + 1);
                let k = skip_ws(b, j + 1);
                if b.get(j) == Some(&b'x') && b.get(k) == Some(&b')') {
                    out.push((Tok::Tensor, start));
                    i = k + 1;
                } else {
                    out.push((Tok::Open, start));
                    i += 1;
                }
            }
            b')' => {
                out.push((Tok::Close, start));
                i += 1;
            }
            b'*' => {
                out.push((Tok::Star, start));
                i += 1;
            }
            b'+' => {
                out.push((Tok::Plus, start));
                i += 1;
            }
            b'-' if b.get(skip_ws(b, i + 1)).is_some_and(u8::is_ascii_digit) => {
                return Err(ParseError::NegativeMultiplicity { offset: start });
            }
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return Err(syntax(start, format!("unexpected character {ch:?}")));
            }
        }
        i = skip_ws(b, i);
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Tok {
        self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.peek();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        syntax(
            self.offset(),
            format!("expected {wanted}, found {}", describe(self.peek())),
        )
    }

    fn sum(&mut self) -> Result<HarmonicSum, ParseError> {
        let mut acc = self.term()?;
        while self.peek() == Tok::Plus {
            self.bump();
            acc = acc.plus(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<HarmonicSum, ParseError> {
        if let Tok::Int(k) = self.peek() {
            self.bump();
            if self.peek() != Tok::Star {
                return Err(self.unexpected("'*' after multiplicity"));
            }
            self.bump();
            return Ok(self.product()?.scaled(k));
        }
        self.product()
    }

    fn product(&mut self) -> Result<HarmonicSum, ParseError> {
        let mut acc = self.atom()?;
        while self.peek() == Tok::Tensor {
            self.bump();
            acc = tensor_product(&acc, &self.atom()?);
        }
        Ok(acc)
    }

    fn closing(&mut self) -> Result<(), ParseError> {
        if self.peek() != Tok::Close {
            return Err(self.unexpected("')'"));
        }
        self.bump();
        Ok(())
    }

    fn atom(&mut self) -> Result<HarmonicSum, ParseError> {
        match self.peek() {
            Tok::H(n) => {
                self.bump();
                let star = self.peek() == Tok::Star;
                if star {
                    self.bump();
                }
                Ok(HarmonicSum::single(HarmonicLabel::new(n, star)))
            }
            Tok::Sym | Tok::Alt => {
                let symmetric = self.bump() == Tok::Sym;
                let inner = self.sum()?;
                self.closing()?;
                Ok(if symmetric {
                    sym_square(&inner)
                } else {
                    alt_square(&inner)
                })
            }
            Tok::Open => {
                self.bump();
                let inner = self.sum()?;
                self.closing()?;
                Ok(inner)
            }
            _ => Err(self.unexpected("a harmonic term")),
        }
    }
}

/// Parses and evaluates a harmonic expression.
pub fn parse_rep(text: &str) -> Result<HarmonicSum, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let sum = p.sum()?;
    if p.peek() != Tok::End {
        return Err(p.unexpected("'+' or end of input"));
    }
    Ok(sum)
}
