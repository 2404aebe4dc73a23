//! Ideal input: the JSON schema of [`crate::format::IdealFile`] or a short
//! human syntax such as `x^2*y, y^3`.
//!
//! Human syntax uses either the named variables `x, y, z, w` or the indexed
//! variables `x1 ... xd`, never both. `1` is the unit monomial and a lone `0`
//! is the zero ideal.

use epsmult_core::{ExponentVector, MonomialIdeal};

use crate::error::ParseError;
use crate::format::IdealFile;

pub const DEFAULT_MAX_DIM: usize = 8;

const NAMED: [char; 4] = ['x', 'y', 'z', 'w'];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Scheme {
    Named,
    Indexed,
}

/// Parse an ideal. `dim` overrides the dimension inferred from the variables
/// used; it must be at least that large.
pub fn parse_ideal(text: &str, dim: Option<usize>, max_dim: usize) -> Result<MonomialIdeal, ParseError> {
    let trimmed = text.trim_start();
    let ideal = if trimmed.starts_with('{') {
        let file: IdealFile = serde_json::from_str(text).map_err(|e| ParseError {
            line: e.line(),
            column: e.column(),
            message: format!("invalid ideal JSON: {e}"),
        })?;
        if let Some(d) = dim.filter(|&d| d != file.dim) {
            return Err(at_start(format!("JSON ideal has dim {} but {d} was requested", file.dim)));
        }
        file.into_ideal().map_err(|e| at_start(e.to_string()))?
    } else {
        Parser::new(text).ideal(dim)?
    };
    if ideal.dim() > max_dim {
        return Err(at_start(format!("dimension {} exceeds the maximum {max_dim}", ideal.dim())));
    }
    Ok(ideal)
}

fn at_start(message: String) -> ParseError {
    ParseError { line: 1, column: 1, message }
}

struct Parser<'a> {
    chars: Vec<(usize, usize, char)>,
    pos: usize,
    scheme: Option<Scheme>,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let mut chars = Vec::new();
        let (mut line, mut col) = (1, 1);
        for c in src.chars() {
            chars.push((line, col, c));
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        Parser { chars, pos: 0, scheme: None, _src: src }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].2.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.2)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, column) = match self.chars.get(self.pos) {
            Some(&(l, c, _)) => (l, c),
            None => self.chars.last().map_or((1, 1), |&(l, c, _)| (l, c + 1)),
        };
        ParseError { line, column, message: message.into() }
    }

    fn number(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].2.is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|c| c.2).collect();
        digits.parse().map_err(|_| ParseError {
            line: self.chars[start].0,
            column: self.chars[start].1,
            message: format!("number {digits} is too large"),
        })
    }

    fn set_scheme(&mut self, scheme: Scheme) -> Result<(), ParseError> {
        match self.scheme {
            Some(s) if s != scheme => Err(self.error("mixed variable naming: use either x,y,z,w or x1..xd")),
            _ => {
                self.scheme = Some(scheme);
                Ok(())
            }
        }
    }

    /// Zero-based variable index.
    fn variable(&mut self) -> Result<usize, ParseError> {
        let c = self.peek().ok_or_else(|| self.error("expected a variable"))?;
        let Some(named) = NAMED.iter().position(|&n| n == c) else {
            return Err(self.error(format!("unexpected character '{c}'")));
        };
        let here = self.pos;
        self.pos += 1;
        let indexed = c == 'x' && self.chars.get(self.pos).is_some_and(|c| c.2.is_ascii_digit());
        if indexed {
            let idx = self.number()?;
            let end = self.pos;
            self.pos = here;
            if idx == 0 {
                return Err(self.error("indexed variables start at x1"));
            }
            self.set_scheme(Scheme::Indexed)?;
            self.pos = end;
            Ok(idx as usize - 1)
        } else {
            self.pos = here;
            self.set_scheme(Scheme::Named)?;
            self.pos += 1;
            Ok(named)
        }
    }

    fn monomial(&mut self) -> Result<Vec<u32>, ParseError> {
        let mut exps: Vec<u32> = Vec::new();
        if self.peek() == Some('1') {
            self.pos += 1;
            if matches!(self.peek(), Some(c) if c != ',') {
                return Err(self.error("expected ',' after the unit monomial"));
            }
            return Ok(exps);
        }
        loop {
            let var = self.variable()?;
            let mut e = 1;
            if self.peek() == Some('^') {
                self.pos += 1;
                e = self.number()?;
            }
            if exps.len() <= var {
                exps.resize(var + 1, 0);
            }
            exps[var] = exps[var].checked_add(e).ok_or_else(|| self.error("exponent overflow"))?;
            match self.peek() {
                Some('*') => self.pos += 1,
                Some(',') | None => return Ok(exps),
                Some('+') | Some('-') => return Err(self.error("sums are not monomials")),
                Some(c) => return Err(self.error(format!("unexpected character '{c}'"))),
            }
        }
    }

    fn ideal(mut self, dim: Option<usize>) -> Result<MonomialIdeal, ParseError> {
        if self.peek().is_none() {
            return Err(self.error("empty ideal"));
        }
        let zero = self.chars.iter().filter(|c| !c.2.is_whitespace()).map(|c| c.2).eq("0".chars());
        let mut monomials = Vec::new();
        if !zero {
            loop {
                monomials.push(self.monomial()?);
                match self.peek() {
                    Some(',') => self.pos += 1,
                    None => break,
                    Some(c) => return Err(self.error(format!("unexpected character '{c}'"))),
                }
            }
        }
        let used = monomials.iter().map(Vec::len).max().unwrap_or(0);
        let d = match dim {
            Some(d) if d < used => {
                return Err(at_start(format!("variables need dimension {used} but {d} was requested")))
            }
            Some(d) => d,
            None if used == 0 => return Err(at_start("cannot infer the dimension; pass it explicitly".into())),
            None => used,
        };
        if d == 0 {
            return Err(at_start("dimension must be positive".into()));
        }
        let gens = monomials.into_iter().map(|mut m| {
            m.resize(d, 0);
            ExponentVector::new(m)
        });
        MonomialIdeal::new(d, gens).map_err(|e| at_start(e.to_string()))
    }
}
