//! Text notation for braid words.
//!
//! ```text
//! s3           generator σ_3          s3^-2     power
//! a^(b)        conjugate b^-1 a b     b * a     b a b^-1 (lowest precedence, right associative)
//! D(i,j)       half twist of the band i..=j
//! 1            identity               (...)     grouping; juxtaposition multiplies
//! ```

use crate::braid::BraidWord;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    strands: usize,
}

pub fn parse_braid(strands: usize, text: &str) -> Result<BraidWord> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, strands };
    let w = p.star()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(w)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_whitespace() {
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

    fn number(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.src.get(self.pos) == Some(&b'-');
        if neg {
            self.pos += 1;
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let v: i64 = std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("number too large"))?;
        Ok(if neg { -v } else { v })
    }

    fn star(&mut self) -> Result<BraidWord> {
        let left = self.product()?;
        if self.eat(b'*') {
            let right = self.star()?;
            return right.star(&left);
        }
        Ok(left)
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(b's' | b'D' | b'1' | b'('))
    }

    fn product(&mut self) -> Result<BraidWord> {
        if !self.starts_atom() {
            return Err(self.err("expected a braid"));
        }
        let mut out = BraidWord::identity(self.strands);
        while self.starts_atom() {
            let p = self.power()?;
            out = out.compose(&p)?;
        }
        Ok(out)
    }

    fn power(&mut self) -> Result<BraidWord> {
        let mut base = self.atom()?;
        while self.eat(b'^') {
            match self.peek() {
                Some(c) if c == b'-' || c.is_ascii_digit() => {
                    let e = self.number()?;
                    base = base.pow(e);
                }
                _ => {
                    let g = self.atom()?;
                    base = base.conj(&g)?;
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BraidWord> {
        match self.peek() {
            Some(b's') => {
                self.pos += 1;
                let j = self.number()?;
                if j <= 0 {
                    return Err(self.err("generator index must be positive"));
                }
                BraidWord::new(self.strands, vec![j as i32])
            }
            Some(b'D') => {
                self.pos += 1;
                self.expect(b'(')?;
                let i = self.number()?;
                self.expect(b',')?;
                let j = self.number()?;
                self.expect(b')')?;
                if i <= 0 || j <= 0 {
                    return Err(self.err("band indices must be positive"));
                }
                BraidWord::partial_garside(self.strands, i as usize, j as usize)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(BraidWord::identity(self.strands))
            }
            Some(b'(') => {
                self.pos += 1;
                let w = self.star()?;
                self.expect(b')')?;
                Ok(w)
            }
            _ => Err(self.err("expected s<j>, D(i,j), 1 or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: usize, s: &str) -> Vec<i32> {
        parse_braid(d, s).unwrap().letters().to_vec()
    }

    #[test]
    fn plain_words() {
        assert_eq!(p(3, "s1 s2^-1 s1"), vec![1, -2, 1]);
        assert_eq!(p(3, "s2^3"), vec![2, 2, 2]);
        assert_eq!(p(3, "1"), Vec::<i32>::new());
    }

    #[test]
    fn conjugation_and_star() {
        assert_eq!(p(3, "s1^(s2)"), vec![-2, 1, 2]);
        assert_eq!(p(3, "s1^s2"), vec![-2, 1, 2]);
        assert_eq!(p(4, "s2 s3 * s1^2"), vec![2, 3, 1, 1, -3, -2]);
        assert_eq!(p(4, "(s2*s1) s3"), vec![2, 1, -2, 3]);
    }

    #[test]
    fn half_twists() {
        assert_eq!(p(5, "D(2,4)^2"), vec![2, 3, 2, 2, 3, 2]);
    }

    #[test]
    fn errors_carry_position() {
        assert!(matches!(parse_braid(3, "s1 x"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_braid(3, "s3"), Err(Error::LetterOutOfRange { .. })));
    }
}
