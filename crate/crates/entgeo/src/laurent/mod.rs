//! Multivariate Laurent polynomials with coefficients in `Z/qZ`.
//!
//! A [`LaurentPoly`] is a finite map from exponent vectors in `Z^d` to
//! nonzero residues mod `q`, kept in least-nonnegative normal form so that
//! structural equality is semantic equality. These polynomials carry the
//! defining relations of every system in this crate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

mod factor;
mod parse;

pub use factor::{irreducible_mod_p, Irreducibility};
pub use parse::{parse_poly, ParseError};

/// Exponent vector of a monomial `u^n = u_1^{n_1} ... u_d^{n_d}`.
pub type Exponent = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("exponent vector has length {got}, expected {expected}")]
    BadExponent { expected: usize, got: usize },
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is a monomial (a unit)")]
    MonomialInput,
}

/// Laurent polynomial over `Z/qZ` in `dim` variables.
///
/// Invariants: no stored coefficient is `0 mod q`, every exponent vector
/// has length `dim`, and the zero polynomial is the empty term map.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    dim: usize,
    modulus: u64,
    terms: BTreeMap<Exponent, u64>,
}

/// The set of exponent vectors carrying a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    points: BTreeSet<Exponent>,
}

impl SupportSet {
    pub fn points(&self) -> &BTreeSet<Exponent> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Exponent> {
        self.points.iter()
    }
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero(dim: usize, modulus: u64) -> Result<Self, PolyError> {
        if modulus < 2 {
            return Err(PolyError::BadModulus(modulus));
        }
        Ok(LaurentPoly {
            dim,
            modulus,
            terms: BTreeMap::new(),
        })
    }

    /// The constant polynomial `c`.
    pub fn constant(c: u64, dim: usize, modulus: u64) -> Result<Self, PolyError> {
        let mut p = Self::zero(dim, modulus)?;
        p.add_term(vec![0; dim], c)?;
        Ok(p)
    }

    /// A single term `c * u^exp`.
    pub fn monomial(c: u64, exp: Exponent, dim: usize, modulus: u64) -> Result<Self, PolyError> {
        let mut p = Self::zero(dim, modulus)?;
        p.add_term(exp, c)?;
        Ok(p)
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I>(terms: I, dim: usize, modulus: u64) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Exponent, u64)>,
    {
        let mut p = Self::zero(dim, modulus)?;
        for (exp, c) in terms {
            p.add_term(exp, c)?;
        }
        Ok(p)
    }

    fn add_term(&mut self, exp: Exponent, c: u64) -> Result<(), PolyError> {
        if exp.len() != self.dim {
            return Err(PolyError::BadExponent {
                expected: self.dim,
                got: exp.len(),
            });
        }
        let c = c % self.modulus;
        if c == 0 {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Occupied(mut o) => {
                let v = ((*o.get() as u128 + c as u128) % self.modulus as u128) as u64;
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, u64)> {
        self.terms.iter().map(|(e, c)| (e, *c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[i64]) -> u64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff the support is a single point. The zero polynomial is *not*
    /// a monomial; query [`LaurentPoly::is_zero`] separately.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Exactly the keys of the term map.
    pub fn support(&self) -> SupportSet {
        SupportSet {
            points: self.terms.keys().cloned().collect(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.dim != other.dim {
            return Err(PolyError::DimMismatch(self.dim, other.dim));
        }
        if self.modulus != other.modulus {
            return Err(PolyError::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (exp, c) in other.terms() {
            out.add_term(exp.clone(), c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.dim, self.modulus).expect("valid modulus");
        for (exp, c) in self.terms() {
            out.add_term(exp.clone(), self.modulus - c).expect("same dim");
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    /// Convolution of term maps with coefficient reduction mod `q`.
    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.dim, self.modulus)?;
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let exp: Exponent = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                let c = mulmod(ca, cb, self.modulus);
                out.add_term(exp, c)?;
            }
        }
        Ok(out)
    }

    /// Multiply by the unit `u^shift`, translating the support.
    pub fn translate(&self, shift: &[i64]) -> Result<Self, PolyError> {
        if shift.len() != self.dim {
            return Err(PolyError::BadExponent {
                expected: self.dim,
                got: shift.len(),
            });
        }
        let mut out = Self::zero(self.dim, self.modulus)?;
        for (exp, c) in self.terms() {
            let e: Exponent = exp.iter().zip(shift.iter()).map(|(a, b)| a + b).collect();
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: u64) -> Self {
        let mut out = Self::zero(self.dim, self.modulus).expect("valid modulus");
        for (exp, a) in self.terms() {
            out.add_term(exp.clone(), mulmod(a, c, self.modulus))
                .expect("same dim");
        }
        out
    }

    /// Componentwise minimum of the support, or `None` for the zero
    /// polynomial.
    pub fn support_min(&self) -> Option<Exponent> {
        if self.is_zero() {
            return None;
        }
        let mut min = vec![i64::MAX; self.dim];
        for exp in self.terms.keys() {
            for (m, e) in min.iter_mut().zip(exp.iter()) {
                *m = (*m).min(*e);
            }
        }
        Some(min)
    }

    /// Translate so that the support touches zero in every coordinate.
    /// This is the canonical unit-multiple used by divisibility tests.
    pub fn normalized(&self) -> Self {
        match self.support_min() {
            None => self.clone(),
            Some(min) => {
                let shift: Exponent = min.iter().map(|m| -m).collect();
                self.translate(&shift).expect("same dim")
            }
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let is_const = exp.iter().all(|e| *e == 0);
            if is_const {
                write!(f, "{c}")?;
                continue;
            }
            if c != 1 {
                write!(f, "{c}*")?;
            }
            for (i, e) in exp.iter().enumerate() {
                match *e {
                    0 => {}
                    1 => write!(f, "u{}", i + 1)?,
                    e => write!(f, "u{}^{}", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[d={}, q={}]({})", self.dim, self.modulus, self)
    }
}

pub(crate) fn mulmod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Modular inverse mod a prime, via Fermat.
pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod(a % p, p - 2, p)
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, dim: usize, q: u64) -> LaurentPoly {
        parse_poly(text, dim, q).expect("parse")
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let f = p("2 + u1", 2, 2);
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.coeff(&[1, 0]), 1);
        assert_eq!(f.coeff(&[0, 0]), 0);
    }

    #[test]
    fn three_dot_support() {
        let f = p("1 + u1 + u2", 2, 2);
        let pts: Vec<_> = f.support().points().iter().cloned().collect();
        assert_eq!(pts, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn four_dot_parse() {
        let f = p("1 + u1^-1 + u2 + u3", 3, 2);
        assert_eq!(f.coeff(&[0, 0, 0]), 1);
        assert_eq!(f.coeff(&[-1, 0, 0]), 1);
        assert_eq!(f.coeff(&[0, 1, 0]), 1);
        assert_eq!(f.coeff(&[0, 0, 1]), 1);
        assert_eq!(f.num_terms(), 4);
    }

    #[test]
    fn product_of_mirror_pair_matches_expansion() {
        let a = p("1 + u1 + u2", 2, 2);
        let b = p("1 + u1 + u2^-1", 2, 2);
        let prod = a.mul(&b).unwrap();
        let expected = p("u2^-1 + u1u2^-1 + u1^2 + u2 + u1u2", 2, 2);
        assert_eq!(prod, expected);
    }

    #[test]
    fn mul_identity() {
        let f = p("1 + u1 + u2", 2, 3);
        let one = LaurentPoly::constant(1, 2, 3).unwrap();
        assert_eq!(f.mul(&one).unwrap(), f);
    }

    #[test]
    fn frobenius_square_mod_2() {
        let f = p("1 + u1", 1, 2);
        let sq = f.mul(&f).unwrap();
        assert_eq!(sq, p("1 + u1^2", 1, 2));
    }

    #[test]
    fn zero_support_empty() {
        let z = LaurentPoly::zero(2, 5).unwrap();
        assert!(z.support().is_empty());
        assert!(!z.is_monomial());
        assert!(z.is_zero());
    }

    #[test]
    fn monomial_queries() {
        let m = p("u1u2^2", 2, 3);
        assert!(m.is_monomial());
        let f = p("1 + u1", 2, 3);
        assert!(!f.is_monomial());
    }

    #[test]
    fn mismatches_are_errors() {
        let a = p("u1", 1, 2);
        let b = p("u1", 2, 2);
        assert_eq!(a.mul(&b), Err(PolyError::DimMismatch(1, 2)));
        let c = p("u1", 1, 3);
        assert_eq!(a.mul(&c), Err(PolyError::ModulusMismatch(2, 3)));
    }

    #[test]
    fn normalized_touches_zero() {
        let f = p("u2^-1 + u1u2^-1 + u1^2 + u2 + u1u2", 2, 2);
        let n = f.normalized();
        assert_eq!(n.support_min(), Some(vec![0, 0]));
        assert_eq!(n, p("1 + u1 + u1^2u2 + u2^2 + u1u2^2", 2, 2));
    }

    #[test]
    fn primality_helper() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(97));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
    }
}
