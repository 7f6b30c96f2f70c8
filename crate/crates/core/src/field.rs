//! Exact scalars over the rationals and over prime fields GF(p).
//!
//! Every structure in the crate stores its coefficients as [`Scalar`]s that
//! belong to one [`FieldSpec`]. Mixing fields inside an arithmetic operator
//! is a programming error and panics; the `checked_*` methods report it as
//! [`Error::FieldMismatch`] instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exclusive upper bound on the characteristic of a prime field.
pub const MAX_PRIME: u64 = 1 << 31;

/// The ambient field of a structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u32 },
}

impl FieldSpec {
    /// GF(p); `p` must be a prime below 2^31.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_PRIME {
            return Err(Error::InvalidField(format!("p = {p} is not below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("p = {p} is not prime")));
        }
        Ok(FieldSpec::Prime { p: p as u32 })
    }

    pub fn gf(p: u64) -> Self {
        Self::prime(p).expect("valid prime")
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => *p,
        }
    }

    /// Re-checks the primality invariant, for values built by deserialization.
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Rational => Ok(()),
            FieldSpec::Prime { p } => Self::prime(u64::from(*p)).map(|_| ()),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime { p } => Scalar::Modular {
                value: v.rem_euclid(i64::from(p)) as u32,
                modulus: p,
            },
        }
    }

    fn of_bigint(&self, v: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            FieldSpec::Prime { p } => {
                let m = BigInt::from(p);
                let r = ((v % &m) + &m) % &m;
                Scalar::Modular {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    /// The `index`-th element in the canonical enumeration `0, 1, …, p-1` of GF(p).
    pub fn element(&self, index: u32) -> Scalar {
        match *self {
            FieldSpec::Rational => self.from_i64(i64::from(index)),
            FieldSpec::Prime { p } => Scalar::Modular {
                value: index % p,
                modulus: p,
            },
        }
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        x.field() == *self
    }

    /// Parses `integer | integer "/" integer`. Fractions are rejected over GF(p).
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let num = parse_integer(num)?;
        match (self, den) {
            (FieldSpec::Prime { p }, Some(_)) => Err(Error::Parse(format!(
                "fraction syntax {text:?} is not allowed over GF({p})"
            ))),
            (_, None) => Ok(self.of_bigint(&num)),
            (FieldSpec::Rational, Some(d)) => {
                let den = parse_integer(d)?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime { p } => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `rational`, `GF(p)`, `gfp` or a bare prime.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "rational" || t == "rationals" {
            return Ok(FieldSpec::Rational);
        }
        let digits = t
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("gf"))
            .unwrap_or(&t);
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("unrecognized field {s:?}")))?;
        FieldSpec::prime(p)
    }
}

fn parse_integer(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not an integer: {s:?}")));
    }
    s.parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

/// Trial division; `p` is below 2^31 so this is cheap.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element in canonical form.
///
/// Rationals are kept reduced with a positive denominator (guaranteed by
/// `BigRational`); residues are kept in `[0, p)`. Structural equality is
/// therefore field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Modular { modulus, .. } => FieldSpec::Prime { p: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Re-normalizes the value. A no-op for values built through this API.
    pub fn canonicalize(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(BigRational::new(q.numer().clone(), q.denom().clone())),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: value % modulus,
                modulus: *modulus,
            },
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field().to_string(),
                right: other.field().to_string(),
            })
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self * rhs)
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self * &rhs.inverse()?)
    }

    /// Multiplicative inverse; GF(p) uses the extended Euclidean algorithm.
    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// `self += a * b` without intermediate allocation on the modular path.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (
                Scalar::Modular { value, modulus },
                Scalar::Modular { value: x, modulus: m1 },
                Scalar::Modular { value: y, modulus: m2 },
            ) => {
                assert!(*modulus == *m1 && *m1 == *m2, "field mismatch in add_product");
                let m = u64::from(*modulus);
                *value = ((u64::from(*value) + u64::from(*x) * u64::from(*y) % m) % m) as u32;
            }
            (Scalar::Rational(acc), Scalar::Rational(x), Scalar::Rational(y)) => {
                if !x.is_zero() && !y.is_zero() {
                    *acc += x * y;
                }
            }
            _ => panic!("field mismatch in add_product"),
        }
    }

    pub fn add_assign(&mut self, a: &Scalar) {
        match (self, a) {
            (Scalar::Modular { value, modulus }, Scalar::Modular { value: x, modulus: m }) => {
                assert_eq!(*modulus, *m, "field mismatch in add_assign");
                *value = ((u64::from(*value) + u64::from(*x)) % u64::from(*m)) as u32;
            }
            (Scalar::Rational(acc), Scalar::Rational(x)) => *acc += x,
            _ => panic!("field mismatch in add_assign"),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Residue for GF(p) elements.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Modular { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    let (mut old_r, mut r) = (i64::from(a), i64::from(p));
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(i64::from(p)) as u32
}

/// Deterministic total order: by field, then numerically (rationals) or by residue.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (
                Scalar::Modular { value: a, modulus: p },
                Scalar::Modular { value: b, modulus: q },
            ) => (p, a).cmp(&(q, b)),
            (Scalar::Rational(_), Scalar::Modular { .. }) => Ordering::Less,
            (Scalar::Modular { .. }, Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $modular:expr, $rational:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;

            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (
                        Scalar::Modular { value: a, modulus: p },
                        Scalar::Modular { value: b, modulus: q },
                    ) => {
                        assert_eq!(p, q, "field mismatch: GF({p}) vs GF({q})");
                        let f: fn(u64, u64, u64) -> u64 = $modular;
                        Scalar::Modular {
                            value: f(u64::from(*a), u64::from(*b), u64::from(*p)) as u32,
                            modulus: *p,
                        }
                    }
                    (Scalar::Rational(a), Scalar::Rational(b)) => {
                        let f: fn(&BigRational, &BigRational) -> BigRational = $rational;
                        Scalar::Rational(f(a, b))
                    }
                    _ => panic!("field mismatch: {} vs {}", self.field(), rhs.field()),
                }
            }
        }

        impl $trait for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b, p| (a + b) % p, |a, b| a + b);
binop!(Sub, sub, |a, b, p| (a + p - b) % p, |a, b| a - b);
binop!(Mul, mul, |a, b, p| (a * b) % p, |a, b| a * b);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;

    /// Panics on division by zero; use [`Scalar::checked_div`] for a `Result`.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by a nonzero scalar of the same field")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field arithmetic with mismatch and zero-division reported as errors.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

pub fn parse_scalar(text: &str, field: FieldSpec) -> Result<Scalar> {
    field.parse(text)
}

/// Small signed integer view, used by tests and fixtures.
pub fn to_i64(x: &Scalar) -> Option<i64> {
    match x {
        Scalar::Rational(q) if q.is_integer() => q.numer().to_i64(),
        Scalar::Rational(_) => None,
        Scalar::Modular { value, .. } => Some(i64::from(*value)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        FieldSpec::Rational.parse(s).unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&q("1/2") + &q("1/3"), q("5/6"));
    }

    #[test]
    fn modular_product() {
        let f = FieldSpec::gf(5);
        assert_eq!(&f.from_i64(3) * &f.from_i64(4), f.from_i64(2));
    }

    #[test]
    fn modular_inverse_via_euclid() {
        let f = FieldSpec::gf(5);
        let r = scalar_arith(&f.one(), &f.from_i64(3), ArithOp::Div).unwrap();
        assert_eq!(r, f.from_i64(2));
        assert_eq!(&r * &f.from_i64(3), f.one());
    }

    #[test]
    fn division_by_zero() {
        let f = FieldSpec::gf(7);
        assert!(matches!(
            scalar_arith(&f.one(), &f.zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(FieldSpec::Rational.parse("3/0"), Err(Error::DivisionByZero)));
    }

    #[test]
    fn mismatched_fields() {
        let a = FieldSpec::gf(5).one();
        let b = FieldSpec::Rational.one();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch { .. })));
        let c = FieldSpec::gf(7).one();
        assert!(matches!(scalar_arith(&a, &c, ArithOp::Mul), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(q("-4/6").to_string(), "-2/3");
        assert_eq!(q("4/-6").to_string(), "-2/3");
        assert_eq!(FieldSpec::gf(5).parse("7").unwrap().to_string(), "2");
        assert_eq!(FieldSpec::gf(5).parse("-1").unwrap().to_string(), "4");
    }

    #[test]
    fn parse_rejects() {
        assert!(matches!(FieldSpec::gf(5).parse("1/2"), Err(Error::Parse(_))));
        for bad in ["", "x", "1.5", "1/", "/2", "--3", "1/2/3"] {
            assert!(FieldSpec::Rational.parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(2_147_483_647).is_ok());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1 << 31).is_err());
        assert_eq!("GF(5)".parse::<FieldSpec>().unwrap(), FieldSpec::gf(5));
        assert_eq!("gf3".parse::<FieldSpec>().unwrap(), FieldSpec::gf(3));
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert!("GF(4)".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "-7", "22/7", "-1/1000000000000000000000"] {
            let x = q(s);
            assert_eq!(q(&x.to_string()), x);
        }
    }

    #[test]
    fn large_prime_products_do_not_overflow() {
        let f = FieldSpec::gf(2_147_483_647);
        let a = f.from_i64(-1);
        assert_eq!(&a * &a, f.one());
        let mut acc = f.from_i64(-1);
        acc.add_product(&a, &a);
        assert!(acc.is_zero());
    }
}
