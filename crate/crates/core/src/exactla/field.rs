//! Coefficient fields: the rationals and prime fields.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinAlgError;

/// Runtime description of a coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<Self, LinAlgError> {
        let t = s.trim();
        if t == "Q" || t == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let rest = t
            .strip_prefix("Fp:")
            .or_else(|| t.strip_prefix("F"))
            .ok_or_else(|| LinAlgError::Parse(format!("unknown field '{t}'")))?;
        let p: u64 = rest
            .parse()
            .map_err(|_| LinAlgError::Parse(format!("bad prime in '{t}'")))?;
        PrimeField::new(p)?;
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// A field given by a (cheap to clone) context object; elements are plain values.
pub trait Field: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn parse(&self, s: &str) -> Result<Self::Elem, LinAlgError>;
    fn format(&self, a: &Self::Elem) -> String;

    /// `a - c * b`, the inner step of elimination.
    fn sub_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(c, b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// The prime field with `p` elements, `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, LinAlgError> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(LinAlgError::Parse(format!("{p} is not a supported prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        t0.rem_euclid(self.p as i64) as u64
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn parse(&self, s: &str) -> Result<u64, LinAlgError> {
        let q = parse_rational(s)?;
        let num = (q.numer() % BigInt::from(self.p)).to_i64().unwrap();
        let den = (q.denom() % BigInt::from(self.p)).to_i64().unwrap();
        let den = self.from_i64(den);
        if den == 0 {
            return Err(LinAlgError::Parse(format!(
                "denominator of '{s}' vanishes mod {}",
                self.p
            )));
        }
        Ok(self.mul(&self.from_i64(num), &self.inv(&den)))
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn sub_mul(&self, a: &u64, c: &u64, b: &u64) -> u64 {
        let cb = c * b % self.p;
        self.sub(a, &cb)
    }
}

/// An exact rational number in lowest terms.
///
/// Values that fit in `i64` numerator and denominator take the small path;
/// everything else falls back to arbitrary precision.
#[derive(Clone, Debug)]
pub enum Rational {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Rational::Small(a), Rational::Small(b)) => a == b,
            _ => self.to_big() == other.to_big(),
        }
    }
}

impl Eq for Rational {}

impl Rational {
    pub fn from_big(q: BigRational) -> Self {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => {
                Rational::Small(Ratio::new_raw(n, d))
            }
            _ => Rational::Big(q),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(r) => {
                BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
            }
            Rational::Big(b) => b.clone(),
        }
    }

    pub fn integer(v: i64) -> Self {
        if v == i64::MIN {
            Rational::Big(BigRational::from_integer(BigInt::from(v)))
        } else {
            Rational::Small(Ratio::from_integer(v))
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Rational::Small(r) => r.numer().is_zero(),
            Rational::Big(b) => b.is_zero(),
        }
    }

    fn binop(
        &self,
        other: &Self,
        small: impl Fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Self {
        if let (Rational::Small(a), Rational::Small(b)) = (self, other) {
            if let Some(r) = small(a, b) {
                if *r.numer() != i64::MIN && *r.denom() != i64::MIN {
                    return Rational::Small(r);
                }
            }
        }
        Rational::from_big(big(&self.to_big(), &other.to_big()))
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let q = self.to_big();
        if q.denom().is_one() {
            write!(f, "{}", q.numer())
        } else {
            write!(f, "{}/{}", q.numer(), q.denom())
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, LinAlgError> {
    let t = s.trim();
    let bad = || LinAlgError::Parse(format!("bad rational '{t}'"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(LinAlgError::Parse(format!("zero denominator in '{t}'")));
    }
    Ok(BigRational::new(n, d))
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> Rational {
        Rational::integer(0)
    }
    fn one(&self) -> Rational {
        Rational::integer(1)
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a.binop(b, |x, y| x.checked_add(y), |x, y| x + y)
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a.binop(b, |x, y| x.checked_sub(y), |x, y| x - y)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a.binop(b, |x, y| x.checked_mul(y), |x, y| x * y)
    }
    fn neg(&self, a: &Rational) -> Rational {
        match a {
            Rational::Small(r) => Rational::Small(-r),
            Rational::Big(b) => Rational::from_big(-b),
        }
    }
    fn inv(&self, a: &Rational) -> Rational {
        assert!(!a.is_zero(), "inverse of zero");
        match a {
            Rational::Small(r) => Rational::Small(r.recip()),
            Rational::Big(b) => Rational::from_big(b.recip()),
        }
    }
    fn from_i64(&self, v: i64) -> Rational {
        Rational::integer(v)
    }
    fn parse(&self, s: &str) -> Result<Rational, LinAlgError> {
        parse_rational(s).map(Rational::from_big)
    }
    fn format(&self, a: &Rational) -> String {
        a.to_string()
    }
    fn is_one(&self, a: &Rational) -> bool {
        match a {
            Rational::Small(r) => r.is_integer() && *r.numer() == 1,
            Rational::Big(b) => b.is_one(),
        }
    }
}
