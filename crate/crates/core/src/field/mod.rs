//! Exact arithmetic in the multiquadratic field ℚ(i, √2, √3, √5).
//!
//! Every element is stored in the ℚ-basis
//! `{1, √2, √3, √5, √6, √10, √15, √30} × {1, i}`. A basis monomial is encoded
//! as a bitmask (bit 0: √2, bit 1: √3, bit 2: √5, bit 3: i), which makes
//! multiplication of monomials an XOR plus a rational scale factor.

mod matrix;
mod sparse;

pub use matrix::FieldMatrix;
pub use sparse::{SparseEchelon, SparseRow};

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Builds the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

const SQRT2: u8 = 0b0001;
const SQRT3: u8 = 0b0010;
const SQRT5: u8 = 0b0100;
const IMAG: u8 = 0b1000;
const PRIMES: [(u8, i64); 3] = [(SQRT2, 2), (SQRT3, 3), (SQRT5, 5)];

/// Display order of the real monomials: 1, √2, √3, √5, √6, √10, √15, √30.
const DISPLAY_ORDER: [u8; 8] = [0, 1, 2, 4, 3, 5, 6, 7];

/// A basis monomial `√d` or `i·√d` with `d` a squarefree divisor of 30.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(u8);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);
    pub const I: Monomial = Monomial(IMAG);

    /// The real monomial `√d`; `d` must be one of 1, 2, 3, 5, 6, 10, 15, 30.
    pub fn sqrt(d: u32) -> Option<Monomial> {
        let mut bits = 0;
        let mut rest = d;
        for (bit, p) in PRIMES {
            if rest.is_multiple_of(p as u32) {
                bits |= bit;
                rest /= p as u32;
            }
        }
        (rest == 1).then_some(Monomial(bits))
    }

    pub fn is_imaginary(self) -> bool {
        self.0 & IMAG != 0
    }

    /// The squarefree radicand `d` of `√d`.
    pub fn radicand(self) -> u32 {
        PRIMES
            .iter()
            .filter(|(bit, _)| self.0 & bit != 0)
            .map(|(_, p)| *p as u32)
            .product()
    }

    fn display_rank(self) -> usize {
        let real = self.0 & !IMAG;
        let pos = DISPLAY_ORDER.iter().position(|&m| m == real).unwrap();
        pos + if self.is_imaginary() { 8 } else { 0 }
    }

    /// Product of two monomials as `scale · monomial`.
    fn mul(self, other: Monomial) -> (i64, Monomial) {
        let common = self.0 & other.0;
        let mut scale = 1;
        for (bit, p) in PRIMES {
            if common & bit != 0 {
                scale *= p;
            }
        }
        if common & IMAG != 0 {
            scale = -scale;
        }
        (scale, Monomial(self.0 ^ other.0))
    }

    /// All sixteen basis monomials in display order.
    pub fn all() -> impl Iterator<Item = Monomial> {
        (0..16u8)
            .map(|k| Monomial(DISPLAY_ORDER[(k % 8) as usize] | if k >= 8 { IMAG } else { 0 }))
    }
}

/// An element of ℚ(i, √2, √3, √5).
///
/// Terms are kept sorted by monomial with no zero coefficients, so structural
/// equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldElem {
    terms: Vec<(Monomial, Rational)>,
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(rat(num, den))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::monomial(r, Monomial::ONE)
    }

    pub fn monomial(r: Rational, m: Monomial) -> Self {
        if r.is_zero() {
            Self::zero()
        } else {
            FieldElem { terms: vec![(m, r)] }
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::monomial(Rational::one(), Monomial::I)
    }

    /// `√d` for a squarefree divisor `d` of 30.
    ///
    /// Panics if `d` is not one of 1, 2, 3, 5, 6, 10, 15, 30.
    pub fn sqrt_of(d: u32) -> Self {
        let m = Monomial::sqrt(d).unwrap_or_else(|| panic!("√{d} is not a basis monomial"));
        Self::monomial(Rational::one(), m)
    }

    /// Square root of a rational, when it lies in the field.
    pub fn sqrt_rational(r: &Rational) -> Option<Self> {
        if r.is_zero() {
            return Some(Self::zero());
        }
        // √(p/q) = √(p·q)/q
        let prod = (r.numer() * r.denom()).abs();
        let mut square = BigInt::one();
        let mut radicand = 1u32;
        let mut rest = prod;
        for (_, p) in PRIMES {
            let p = BigInt::from(p);
            let mut exp = 0u32;
            while (&rest % &p).is_zero() {
                rest /= &p;
                exp += 1;
            }
            square *= num_traits::pow(p.clone(), (exp / 2) as usize);
            if exp % 2 == 1 {
                radicand *= p.to_u32().unwrap();
            }
        }
        let root = rest.sqrt();
        if &root * &root != rest {
            return None;
        }
        let coeff = Rational::new(square * root, r.denom().clone());
        let mut out = Self::monomial(coeff, Monomial::sqrt(radicand)?);
        if r.is_negative() {
            out = out * Self::i();
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    /// Coefficient of a basis monomial.
    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(k, _)| *k == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(|(m, _)| *m == Monomial::ONE)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeff(Monomial::ONE))
    }

    /// True when the element lies in the real subfield ℚ(√2, √3, √5).
    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|(m, _)| !m.is_imaginary())
    }

    /// Complex conjugation (the automorphism sending `i` to `-i`).
    pub fn conj(&self) -> Self {
        self.galois(IMAG)
    }

    /// The automorphism negating every monomial that contains `bit`.
    fn galois(&self, bit: u8) -> Self {
        FieldElem {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.0 & bit != 0 { -c.clone() } else { c.clone() }))
                .collect(),
        }
    }

    /// Multiplicative inverse by iterated conjugation down the tower.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut num = Self::one();
        let mut den = self.clone();
        for bit in [IMAG, SQRT2, SQRT3, SQRT5] {
            if den.terms.iter().any(|(m, _)| m.0 & bit != 0) {
                let c = den.galois(bit);
                num = &num * &c;
                den = &den * &c;
            }
        }
        let d = den.to_rational().expect("norm lies in ℚ");
        Ok(num.scale(&d.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        FieldElem {
            terms: self.terms.iter().map(|(m, c)| (*m, c * r)).collect(),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Approximate value as `(re, im)`; only for human-readable output.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (m, c) in &self.terms {
            let v = c.to_f64().unwrap_or(f64::NAN) * f64::from(m.radicand()).sqrt();
            if m.is_imaginary() {
                im += v;
            } else {
                re += v;
            }
        }
        (re, im)
    }

    /// Random element with small rational coefficients on a few monomials.
    pub fn random_small<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut out = Self::zero();
        let n_terms = rng.gen_range(1..=3);
        for _ in 0..n_terms {
            let m = Monomial(rng.gen_range(0..16u8));
            let num = rng.gen_range(-5i64..=5);
            let den = rng.gen_range(1i64..=4);
            out += Self::monomial(rat(num, den), m);
        }
        out
    }

    /// Random real element (no imaginary part).
    pub fn random_real<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut out = Self::zero();
        for _ in 0..rng.gen_range(1..=2) {
            let m = Monomial(rng.gen_range(0..8u8));
            out += Self::monomial(rat(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=3)), m);
        }
        out
    }

    fn add_terms(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, ca)), Some((mb, cb))) => {
                    if ma < mb {
                        out.push((*ma, ca.clone()));
                        a.next();
                    } else if mb < ma {
                        out.push((*mb, if negate { -cb } else { cb.clone() }));
                        b.next();
                    } else {
                        let s = if negate { ca - cb } else { ca + cb };
                        if !s.is_zero() {
                            out.push((*ma, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ma, ca)), None) => {
                    out.push((*ma, ca.clone()));
                    a.next();
                }
                (None, Some((mb, cb))) => {
                    out.push((*mb, if negate { -cb } else { cb.clone() }));
                    b.next();
                }
                (None, None) => break,
            }
        }
        FieldElem { terms: out }
    }

    fn mul_terms(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 && other.terms.len() == 1 {
            let (ma, ca) = &self.terms[0];
            let (mb, cb) = &other.terms[0];
            let (s, m) = ma.mul(*mb);
            return FieldElem {
                terms: vec![(m, ca * cb * Rational::from_integer(BigInt::from(s)))],
            };
        }
        let mut acc: [Option<Rational>; 16] = Default::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let (s, m) = ma.mul(*mb);
                let term = ca * cb * Rational::from_integer(BigInt::from(s));
                let slot = &mut acc[m.0 as usize];
                *slot = Some(match slot.take() {
                    Some(prev) => prev + term,
                    None => term,
                });
            }
        }
        FieldElem {
            terms: acc
                .into_iter()
                .enumerate()
                .filter_map(|(k, c)| c.filter(|c| !c.is_zero()).map(|c| (Monomial(k as u8), c)))
                .collect(),
        }
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_int(n)
    }
}

impl From<Rational> for FieldElem {
    fn from(r: Rational) -> Self {
        FieldElem::from_rational(r)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &'b FieldElem) -> FieldElem {
                $body(self, rhs)
            }
        }
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                $body(&self, &rhs)
            }
        }
        impl<'b> $tr<&'b FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &'b FieldElem) -> FieldElem {
                $body(&self, rhs)
            }
        }
        impl<'a> $tr<FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &FieldElem, b: &FieldElem| a.add_terms(b, false));
forward_binop!(Sub, sub, |a: &FieldElem, b: &FieldElem| a.add_terms(b, true));
forward_binop!(Mul, mul, |a: &FieldElem, b: &FieldElem| a.mul_terms(b));
forward_binop!(Div, div, |a: &FieldElem, b: &FieldElem| a
    .checked_div(b)
    .expect("division by zero in FieldElem"));

impl AddAssign<FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: FieldElem) {
        *self = self.add_terms(&rhs, false);
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        *self = self.add_terms(rhs, false);
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        *self = self.add_terms(rhs, true);
    }
}

impl SubAssign<FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: FieldElem) {
        *self = self.add_terms(&rhs, true);
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = self.mul_terms(rhs);
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(mut self) -> FieldElem {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -self.clone()
    }
}

impl std::iter::Sum for FieldElem {
    fn sum<I: Iterator<Item = FieldElem>>(iter: I) -> FieldElem {
        iter.fold(FieldElem::zero(), |acc, x| acc + x)
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Text encoding: terms `<rat>`, `<rat>*r2`, … `<rat>*r30`, each optionally
/// prefixed by `i*`, joined by ` + `. Zero is `0`.
impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| m.display_rank());
        let parts: Vec<String> = terms
            .into_iter()
            .map(|(m, c)| {
                let mut s = String::new();
                if m.is_imaginary() {
                    s.push_str("i*");
                }
                s.push_str(&fmt_rational(c));
                let d = m.radicand();
                if d != 1 {
                    s.push_str(&format!("*r{d}"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

impl FromStr for FieldElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        let mut out = FieldElem::zero();
        for raw in s.split('+') {
            let mut term = raw.trim();
            let mut m = Monomial::ONE;
            if let Some(rest) = term.strip_prefix("i*") {
                m = Monomial::I;
                term = rest.trim();
            }
            let (coeff, root) = match term.rsplit_once('*') {
                Some((c, r)) => (c.trim(), Some(r.trim())),
                None => (term, None),
            };
            if let Some(r) = root {
                let d: u32 = r
                    .strip_prefix('r')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad radical `{r}` in `{s}`")))?;
                let rm = Monomial::sqrt(d)
                    .filter(|_| d > 1)
                    .ok_or_else(|| Error::Parse(format!("√{d} is not a field generator")))?;
                m = Monomial(m.0 | rm.0);
            }
            out += FieldElem::monomial(parse_rational(coeff)?, m);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn r(d: u32) -> FieldElem {
        FieldElem::sqrt_of(d)
    }

    #[test]
    fn defining_relations() {
        assert_eq!(r(5) * r(5), FieldElem::from_int(5));
        assert_eq!(FieldElem::i() * FieldElem::i(), FieldElem::from_int(-1));
        assert_eq!(r(2) * r(3), r(6));
        assert_eq!(r(6) * r(10), FieldElem::from_int(2) * r(15));
    }

    #[test]
    fn inverses() {
        assert_eq!(FieldElem::from_int(2).inv().unwrap(), FieldElem::from_ratio(1, 2));
        let one_plus_i = FieldElem::one() + FieldElem::i();
        let expected = (FieldElem::one() - FieldElem::i()) * FieldElem::from_ratio(1, 2);
        assert_eq!(one_plus_i.inv().unwrap(), expected);
        assert_eq!(r(5).inv().unwrap(), r(5) * FieldElem::from_ratio(1, 5));
        assert!(matches!(FieldElem::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn inverse_of_dense_element() {
        let mut a = FieldElem::zero();
        for (k, m) in Monomial::all().enumerate() {
            a += FieldElem::monomial(rat(k as i64 + 1, 3), m);
        }
        assert!((&a * a.inv().unwrap()).is_one());
    }

    #[test]
    fn norm_is_rational() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = FieldElem::random_small(&mut rng);
            let mut prod = FieldElem::one();
            for mask in 0..16u8 {
                let mut conj = a.clone();
                for bit in [SQRT2, SQRT3, SQRT5, IMAG] {
                    if mask & bit != 0 {
                        conj = conj.galois(bit);
                    }
                }
                prod = prod * conj;
            }
            assert!(prod.is_rational());
        }
    }

    #[test]
    fn sqrt_of_rationals() {
        assert_eq!(FieldElem::sqrt_rational(&rat(144, 5)).unwrap(), r(5) * FieldElem::from_ratio(12, 5));
        assert_eq!(FieldElem::sqrt_rational(&rat(15, 2)).unwrap(), r(30) * FieldElem::from_ratio(1, 2));
        assert_eq!(FieldElem::sqrt_rational(&rat(-4, 1)).unwrap(), FieldElem::from_int(2) * FieldElem::i());
        assert!(FieldElem::sqrt_rational(&rat(7, 1)).is_none());
    }

    #[test]
    fn text_encoding() {
        let tau0 = r(5) * FieldElem::from_ratio(-12, 5);
        assert_eq!(tau0.to_string(), "-12/5*r5");
        assert_eq!("-12/5*r5".parse::<FieldElem>().unwrap(), tau0);
        let z: FieldElem = "1 + i*-1/2*r30 + 3*r2".parse().unwrap();
        assert_eq!(z.to_string(), "1 + 3*r2 + i*-1/2*r30");
        assert_eq!("0".parse::<FieldElem>().unwrap(), FieldElem::zero());
        assert!("1*r7".parse::<FieldElem>().is_err());
        assert!("1/0".parse::<FieldElem>().is_err());
    }

    #[test]
    fn canonical_form_uniqueness() {
        let a = r(2) + r(3) - r(2);
        assert_eq!(a, r(3));
        assert_eq!((r(2) - r(2)), FieldElem::zero());
    }
}
