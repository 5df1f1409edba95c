//! Exact scalar arithmetic over the rationals and prime fields.
//!
//! Every computation in this crate runs over one of these two kinds of
//! fields; floating point is never used.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// The base field: either `Q` or `F_p` for a prime `p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

/// A field element. Prime-field elements are stored reduced to `0..p`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    pub fn rationals() -> Field {
        Field::Rationals
    }

    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 31 {
            return Err(Error::Input(format!("characteristic {p} too large (must be < 2^31)")));
        }
        if !is_prime(p) {
            return Err(Error::Input(format!("characteristic {p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Prime(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp(r)
            }
        }
    }

    /// Parses "a", "-a" or "a/b" into a field element.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let n: i64 = num
            .parse()
            .map_err(|_| Error::Input(format!("cannot parse coefficient {s:?}")))?;
        let d: i64 = match den {
            Some(d) => d
                .parse()
                .map_err(|_| Error::Input(format!("cannot parse coefficient {s:?}")))?,
            None => 1,
        };
        if d == 0 {
            return Err(Error::Input(format!("zero denominator in {s:?}")));
        }
        let dv = self.from_i64(d);
        let inv = self
            .inv(&dv)
            .ok_or_else(|| Error::Input(format!("denominator of {s:?} vanishes in the field")))?;
        Ok(self.mul(&self.from_i64(n), &inv))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp(x) => *x == 0,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            _ => panic!("field/scalar mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + p - y) % p),
            _ => panic!("field/scalar mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(x * y % p),
            _ => panic!("field/scalar mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (Field::Prime(p), Scalar::Fp(x)) => Scalar::Fp((p - x) % p),
            _ => panic!("field/scalar mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(x.recip()))
                }
            }
            (Field::Prime(p), Scalar::Fp(x)) => {
                if *x == 0 {
                    None
                } else {
                    // extended Euclid
                    let (mut t, mut new_t) = (0i64, 1i64);
                    let (mut r, mut new_r) = (*p as i64, *x as i64);
                    while new_r != 0 {
                        let q = r / new_r;
                        (t, new_t) = (new_t, t - q * new_t);
                        (r, new_r) = (new_r, r - q * new_r);
                    }
                    debug_assert_eq!(r, 1);
                    Some(Scalar::Fp(t.rem_euclid(*p as i64) as u64))
                }
            }
            _ => panic!("field/scalar mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn pow(&self, a: &Scalar, n: u64) -> Scalar {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn format(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp(x) => x.to_string(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl Scalar {
    pub fn is_negative_rat(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }
}
