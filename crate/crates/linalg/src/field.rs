use crate::LinalgError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The base field: arbitrary-precision rationals or a prime field `F_p` with `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u32),
}

/// A field element. The variant always matches the field it was produced by.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Q(BigRational),
    P(u32),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Builds `F_p`, checking primality and the `2^31` bound.
    pub fn prime(p: u64) -> Result<Field, LinalgError> {
        if p >= (1u64 << 31) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p as u64,
        }
    }

    pub fn zero(&self) -> Elem {
        match self {
            Field::Rationals => Elem::Q(BigRational::zero()),
            Field::Prime(_) => Elem::P(0),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        match self {
            Field::Rationals => Elem::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Elem::P(n.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Q(x), Elem::Q(y)) => Elem::Q(x + y),
            (Elem::P(x), Elem::P(y)) => {
                let p = self.modulus();
                Elem::P(((*x as u64 + *y as u64) % p) as u32)
            }
            _ => panic!("mixed field elements"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match a {
            Elem::Q(x) => Elem::Q(-x),
            Elem::P(x) => {
                let p = self.modulus();
                Elem::P(((p - *x as u64) % p) as u32)
            }
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Q(x), Elem::Q(y)) => Elem::Q(x * y),
            (Elem::P(x), Elem::P(y)) => {
                let p = self.modulus();
                Elem::P(((*x as u64 * *y as u64) % p) as u32)
            }
            _ => panic!("mixed field elements"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Elem) -> Option<Elem> {
        if a.is_zero() {
            return None;
        }
        match a {
            Elem::Q(x) => Some(Elem::Q(x.recip())),
            Elem::P(x) => {
                let p = self.modulus();
                Some(Elem::P(pow_mod(*x as u64, p - 2, p) as u32))
            }
        }
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem, LinalgError> {
        let inv = self.inv(b).ok_or(LinalgError::DivisionByZero)?;
        Ok(self.mul(a, &inv))
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn modulus(&self) -> u64 {
        match self {
            Field::Prime(p) => *p as u64,
            Field::Rationals => unreachable!("modulus of Q"),
        }
    }

    /// Parses `"a"`, `"-a"` or `"a/b"`. Over `F_p` the value is reduced modulo `p`.
    pub fn parse(&self, s: &str) -> Result<Elem, LinalgError> {
        let err = || LinalgError::Parse(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = num.parse().map_err(|_| err())?;
        let d: BigInt = den.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        match self {
            Field::Rationals => Ok(Elem::Q(BigRational::new(n, d))),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let reduce = |x: &BigInt| -> u32 {
                    let r = ((x % &pb) + &pb) % &pb;
                    r.to_u32().unwrap_or(0)
                };
                let nr = Elem::P(reduce(&n));
                let dr = Elem::P(reduce(&d));
                self.div(&nr, &dr).map_err(|_| err())
            }
        }
    }

    /// Canonical textual form: integers as `"a"`, rationals as `"a/b"`.
    pub fn format(&self, a: &Elem) -> String {
        a.to_string()
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl Elem {
    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Q(x) => x.is_zero(),
            Elem::P(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Elem::Q(x) => x.is_one(),
            Elem::P(x) => *x == 1,
        }
    }

    /// Small-integer view used for deterministic candidate enumeration.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Elem::Q(x) if x.is_integer() => x.to_integer().to_i64(),
            Elem::Q(_) => None,
            Elem::P(x) => Some(*x as i64),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Q(x) => {
                if x.is_integer() {
                    write!(f, "{}", x.numer())
                } else {
                    let sign = if x.is_negative() { "-" } else { "" };
                    write!(f, "{}{}/{}", sign, x.numer().abs(), x.denom())
                }
            }
            Elem::P(x) => write!(f, "{x}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(f.add(&a, &b), Elem::P(1));
        assert_eq!(f.mul(&a, &b), Elem::P(1));
        assert_eq!(f.inv(&a).unwrap(), Elem::P(5));
        assert_eq!(f.neg(&a), Elem::P(4));
        assert!(f.inv(&f.zero()).is_none());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
    }

    #[test]
    fn parse_and_format_rationals() {
        let q = Field::Rationals;
        let x = q.parse("-6/4").unwrap();
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(q.parse("5").unwrap().to_string(), "5");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("abc").is_err());
    }

    #[test]
    fn parse_reduces_mod_p() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.parse("-1").unwrap(), Elem::P(4));
        assert_eq!(f.parse("1/2").unwrap(), Elem::P(3));
    }
}
