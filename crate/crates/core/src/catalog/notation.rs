//! Parser for the compact product notation used by the catalog tables:
//! `"e1e1=e2, e1e2=1/2e3, e2e1=-a e4, e2e2=-2e3+e4, e3e1=2a(a+1)e5"`.
//!
//! Coefficients are rational expressions in the single parameter `a`,
//! with juxtaposition meaning multiplication.

use crate::field::Rational;

use super::CatalogError;

struct Cursor<'s> {
    src: &'s str,
    bytes: &'s [u8],
    pos: usize,
    param: Option<&'s Rational>,
}

impl<'s> Cursor<'s> {
    fn err(&self, msg: &str) -> CatalogError {
        CatalogError::Transcription(format!("{msg} at byte {} of {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize, CatalogError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| self.err("expected a number"))
    }

    fn basis(&mut self) -> Result<usize, CatalogError> {
        if !self.eat(b'e') {
            return Err(self.err("expected a basis vector"));
        }
        self.number()
    }

    fn factor(&mut self) -> Result<Rational, CatalogError> {
        match self.peek() {
            Some(b'a') => {
                self.pos += 1;
                self.param.cloned().ok_or_else(|| self.err("parameter used but not bound"))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(Rational::integer(self.number()? as i64)),
            _ => Err(self.err("expected a coefficient")),
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(b'a' | b'(' | b'0'..=b'9'))
    }

    /// Product of factors; `/` divides by the next factor only.
    fn product(&mut self) -> Result<Rational, CatalogError> {
        let mut v = self.factor()?;
        loop {
            if self.eat(b'/') {
                let d = self.factor()?;
                if d.is_zero() {
                    return Err(CatalogError::DivisionByZero(self.src.to_string()));
                }
                v = &v / &d;
            } else if self.eat(b'*') || self.starts_factor() {
                v = &v * &self.factor()?;
            } else {
                return Ok(v);
            }
        }
    }

    fn sum(&mut self) -> Result<Rational, CatalogError> {
        let mut neg = self.eat(b'-');
        let mut total = Rational::zero();
        loop {
            let t = self.product()?;
            total = if neg { &total - &t } else { &total + &t };
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(total);
            }
        }
    }

    /// Right-hand side `c1 e_k1 ± c2 e_k2 ...`.
    fn vector(&mut self) -> Result<Vec<(usize, Rational)>, CatalogError> {
        let mut out = Vec::new();
        let mut neg = self.eat(b'-');
        loop {
            let c = if self.peek() == Some(b'e') { Rational::one() } else { self.product()? };
            let k = self.basis()?;
            out.push((k, if neg { -c } else { c }));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(out);
            }
        }
    }
}

/// Parse a product list into 1-based `(i, j, k, c)` terms.
pub(crate) fn parse_products(
    src: &str,
    param: Option<&Rational>,
) -> Result<Vec<(usize, usize, usize, Rational)>, CatalogError> {
    let mut out = Vec::new();
    for rule in src.split(',') {
        if rule.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor { src: rule, bytes: rule.as_bytes(), pos: 0, param };
        let i = cur.basis()?;
        let j = cur.basis()?;
        if !cur.eat(b'=') {
            return Err(cur.err("expected '='"));
        }
        for (k, c) in cur.vector()? {
            out.push((i, j, k, c));
        }
        if cur.peek().is_some() {
            return Err(cur.err("trailing input"));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn plain_rules() {
        let p = parse_products("e1e1=e2, e1e2=1/2e3, e2e2=-2e3+e4", None).unwrap();
        assert_eq!(p, vec![(1, 1, 2, q("1")), (1, 2, 3, q("1/2")), (2, 2, 3, q("-2")), (2, 2, 4, q("1"))]);
    }

    #[test]
    fn parametric_rules() {
        let a = q("2");
        let p = parse_products("e2e1=-a e3, e3e1=2a(a+1)e5, e2e1=(1+a)/(1-a)e4", Some(&a)).unwrap();
        assert_eq!(p, vec![(2, 1, 3, q("-2")), (3, 1, 5, q("12")), (2, 1, 4, q("-3"))]);
        let one = q("1");
        assert!(matches!(parse_products("e2e1=(1+a)/(1-a)e4", Some(&one)), Err(CatalogError::DivisionByZero(_))));
        assert!(parse_products("e1e1=a e2", None).is_err());
        assert!(parse_products("e1e1=e2 e3", None).is_err());
    }
}
