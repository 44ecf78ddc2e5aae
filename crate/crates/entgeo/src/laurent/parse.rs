//! Parser for the polynomial grammar
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := coeff | coeff '*' mono | mono
//! mono   := factor+
//! factor := 'u' INDEX ('^' SIGNED_INT)?
//! coeff  := UNSIGNED_INT
//! ```
//!
//! Whitespace is ignored; `INDEX` ranges over `1..=d`. Example:
//! `1 + u1 + u2^-1`.

use super::{LaurentPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
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

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn unsigned_int(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an unsigned integer");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse::<u64>()
            .map_err(|_| ParseError {
                position: start,
                message: "integer out of range".into(),
            })
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let negative = match self.bytes.get(self.pos) {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mag = self.unsigned_int()?;
        let mag = i64::try_from(mag).map_err(|_| ParseError {
            position: self.pos,
            message: "exponent out of range".into(),
        })?;
        Ok(if negative { -mag } else { mag })
    }
}

/// Parse `text` as a Laurent polynomial in `dim` variables mod `modulus`.
///
/// Coefficients are reduced mod `modulus` and vanishing terms dropped, so
/// `"2 + u1"` parses to `u1` when `modulus = 2`.
pub fn parse_poly(text: &str, dim: usize, modulus: u64) -> Result<LaurentPoly, ParseError> {
    if modulus < 2 {
        return Err(ParseError {
            position: 0,
            message: PolyError::BadModulus(modulus).to_string(),
        });
    }
    let mut cur = Cursor::new(text);
    let mut poly = LaurentPoly::zero(dim, modulus).expect("modulus checked");
    loop {
        let (exp, coeff) = parse_term(&mut cur, dim)?;
        poly.add_term(exp, coeff).map_err(|e| ParseError {
            position: cur.pos,
            message: e.to_string(),
        })?;
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.bump();
            }
            Some(c) => {
                return cur.err(format!("expected '+' or end of input, found {:?}", c as char))
            }
        }
    }
    Ok(poly)
}

fn parse_term(cur: &mut Cursor<'_>, dim: usize) -> Result<(Vec<i64>, u64), ParseError> {
    let mut coeff = 1u64;
    let mut have_coeff = false;
    match cur.peek() {
        Some(b) if b.is_ascii_digit() => {
            coeff = cur.unsigned_int()?;
            have_coeff = true;
        }
        Some(b'u') => {}
        Some(c) => return cur.err(format!("expected a term, found {:?}", c as char)),
        None => return cur.err("expected a term, found end of input"),
    }
    if have_coeff {
        match cur.peek() {
            Some(b'*') => {
                cur.bump();
                let exp = parse_mono(cur, dim)?;
                return Ok((exp, coeff));
            }
            Some(b'u') => {
                // juxtaposed coefficient and monomial, e.g. `2u1`
                let exp = parse_mono(cur, dim)?;
                return Ok((exp, coeff));
            }
            _ => return Ok((vec![0; dim], coeff)),
        }
    }
    let exp = parse_mono(cur, dim)?;
    Ok((exp, coeff))
}

fn parse_mono(cur: &mut Cursor<'_>, dim: usize) -> Result<Vec<i64>, ParseError> {
    let mut exp = vec![0i64; dim];
    let mut any = false;
    while let Some(b'u') = cur.peek() {
        cur.bump();
        let idx_pos = cur.pos;
        let idx = cur.unsigned_int().map_err(|_| ParseError {
            position: idx_pos,
            message: "expected a variable index after 'u'".into(),
        })?;
        if idx < 1 || idx as usize > dim {
            return Err(ParseError {
                position: idx_pos,
                message: format!("variable index {idx} exceeds dimension {dim}"),
            });
        }
        let mut power = 1i64;
        if let Some(b'^') = cur.peek() {
            cur.bump();
            power = cur.signed_int().map_err(|e| ParseError {
                position: e.position,
                message: format!("malformed exponent: {}", e.message),
            })?;
        }
        exp[idx as usize - 1] += power;
        any = true;
    }
    if !any {
        return cur.err("expected a monomial factor 'u<i>'");
    }
    Ok(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_dot() {
        let f = parse_poly("1 + u1 + u2", 2, 2).unwrap();
        assert_eq!(f.coeff(&[0, 0]), 1);
        assert_eq!(f.coeff(&[1, 0]), 1);
        assert_eq!(f.coeff(&[0, 1]), 1);
        assert_eq!(f.num_terms(), 3);
    }

    #[test]
    fn coefficient_reduction() {
        let f = parse_poly("2 + u1", 2, 2).unwrap();
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.coeff(&[1, 0]), 1);
    }

    #[test]
    fn negative_exponents_and_dim3() {
        let f = parse_poly("1 + u1^-1 + u2 + u3", 3, 2).unwrap();
        assert_eq!(f.coeff(&[-1, 0, 0]), 1);
        assert_eq!(f.num_terms(), 4);
    }

    #[test]
    fn explicit_star_and_juxtaposition() {
        let a = parse_poly("3*u1u2^2", 2, 5).unwrap();
        let b = parse_poly("3u1u2^2", 2, 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coeff(&[1, 2]), 3);
    }

    #[test]
    fn repeated_factors_accumulate() {
        let f = parse_poly("u1u1^2", 1, 3).unwrap();
        assert_eq!(f.coeff(&[3]), 1);
    }

    #[test]
    fn index_out_of_range_is_reported() {
        let err = parse_poly("1 + u3", 2, 2).unwrap_err();
        assert!(err.message.contains("exceeds dimension"));
        assert_eq!(err.position, 5);
    }

    #[test]
    fn malformed_exponent_is_reported() {
        let err = parse_poly("u1^", 1, 2).unwrap_err();
        assert!(err.message.contains("malformed exponent"));
    }

    #[test]
    fn syntax_error_position() {
        let err = parse_poly("1 + + u1", 2, 2).unwrap_err();
        assert_eq!(err.position, 4);
    }

    #[test]
    fn zero_constant_gives_zero_poly() {
        let f = parse_poly("0", 2, 7).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn whitespace_ignored() {
        let a = parse_poly("  1+ u1 ^ 2  + 4 * u2", 2, 7).unwrap();
        let b = parse_poly("1+u1^2+4u2", 2, 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn display_round_trip() {
        let f = parse_poly("2u1^-3u2 + 1 + 6u2^4", 2, 7).unwrap();
        let rendered = f.to_string();
        let back = parse_poly(&rendered, 2, 7).unwrap();
        assert_eq!(f, back);
    }
}
