//! Reader for the textual polynomial grammar:
//!
//! ```text
//! poly   ::= term (('+' | '-') term)*
//! term   ::= [sign] [coeff '*'] factor ('*' factor)*  |  [sign] coeff
//! factor ::= name ['^' positive-integer]
//! coeff  ::= integer | integer '/' positive-integer
//! ```
//!
//! Whitespace is insignificant. The Unicode minus sign is accepted as `-`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, MultiPoly, PolyError};
use crate::exact::Rational;

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Cursor { chars: text.chars().collect(), pos: 0 }
    }

    fn line_col(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn syntax(&self, pos: usize, message: impl Into<String>) -> PolyError {
        let (line, column) = self.line_col(pos);
        PolyError::Syntax { line, column, message: message.into() }
    }

    fn digits(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            Some((start, self.chars[start..self.pos].iter().collect()))
        }
    }

    fn name(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        match self.chars.get(self.pos) {
            Some(c) if c.is_alphabetic() || *c == '_' => self.pos += 1,
            _ => return None,
        }
        while self.pos < self.chars.len() && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_') {
            self.pos += 1;
        }
        Some((start, self.chars[start..self.pos].iter().collect()))
    }
}

fn is_minus(c: char) -> bool {
    c == '-' || c == '\u{2212}'
}

/// Parses `text` into a polynomial over the coordinates `names` (in order).
pub fn parse_polynomial(text: &str, names: &[String]) -> Result<MultiPoly, PolyError> {
    let nvars = names.len();
    let mut cur = Cursor::new(text);
    let mut poly = MultiPoly::zero(nvars);
    if cur.peek().is_none() {
        return Err(cur.syntax(cur.pos, "empty polynomial"));
    }
    let mut first = true;
    loop {
        let mut sign = Rational::one();
        match cur.peek() {
            Some('+') => {
                cur.pos += 1;
            }
            Some(c) if is_minus(c) => {
                cur.pos += 1;
                sign = -sign;
            }
            Some(_) if first => {}
            Some(c) => return Err(cur.syntax(cur.pos, format!("expected '+' or '-', found '{c}'"))),
            None => break,
        }
        first = false;
        let (m, c) = parse_term(&mut cur, names)?;
        poly.add_term(m, c * sign);
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(poly)
}

fn parse_term(cur: &mut Cursor, names: &[String]) -> Result<(Monomial, Rational), PolyError> {
    let nvars = names.len();
    let mut exps = vec![0u32; nvars];
    let mut coeff = Rational::one();
    let mut need_factor = true;

    if let Some((start, num)) = cur.digits() {
        let num: BigInt = num.parse().map_err(|_| cur.syntax(start, "bad integer"))?;
        let mut c = Rational::from_integer(num);
        if cur.peek() == Some('/') {
            cur.pos += 1;
            let (dpos, den) = cur.digits().ok_or_else(|| cur.syntax(cur.pos, "expected denominator"))?;
            let den: BigInt = den.parse().map_err(|_| cur.syntax(dpos, "bad integer"))?;
            if den.is_zero() {
                return Err(cur.syntax(dpos, "zero denominator"));
            }
            c /= Rational::from_integer(den);
        }
        coeff = c;
        if cur.peek() == Some('*') {
            cur.pos += 1;
        } else {
            need_factor = false;
        }
    }

    while need_factor {
        let (start, name) = match cur.name() {
            Some(n) => n,
            None => {
                let found = cur.peek().map(|c| format!("'{c}'")).unwrap_or_else(|| "end of input".into());
                return Err(cur.syntax(cur.pos, format!("expected coordinate name, found {found}")));
            }
        };
        let idx = names.iter().position(|n| *n == name).ok_or_else(|| {
            let (line, column) = cur.line_col(start);
            PolyError::UnknownCoordinate { name: name.clone(), line, column }
        })?;
        let mut e = 1u32;
        if cur.peek() == Some('^') {
            cur.pos += 1;
            let epos = {
                cur.skip_ws();
                cur.pos
            };
            let bad = |cur: &mut Cursor| {
                // swallow the offending token for the message
                let start = cur.pos;
                while cur.pos < cur.chars.len()
                    && !cur.chars[cur.pos].is_whitespace()
                    && !matches!(cur.chars[cur.pos], '*' | '+')
                {
                    cur.pos += 1;
                }
                let (line, column) = cur.line_col(epos);
                PolyError::NonIntegerExponent { text: cur.chars[start..cur.pos].iter().collect(), line, column }
            };
            match cur.digits() {
                Some((_, d)) => {
                    if cur.chars.get(cur.pos).is_some_and(|c| *c == '.' || *c == '/') {
                        cur.pos = epos;
                        return Err(bad(cur));
                    }
                    e = d.parse().map_err(|_| cur.syntax(epos, "exponent too large"))?;
                    if e == 0 {
                        return Err(cur.syntax(epos, "exponent must be a positive integer"));
                    }
                }
                None => return Err(bad(cur)),
            }
        }
        exps[idx] += e;
        if cur.peek() == Some('*') {
            cur.pos += 1;
        } else {
            need_factor = false;
        }
    }
    Ok((Monomial::new(exps), coeff))
}
