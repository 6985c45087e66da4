//! Exact scalar fields: the rationals and prime fields GF(p).

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;

/// An exact field. Elements are canonical, so structural equality is field
/// equality.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn render(&self, a: &Self::Elem) -> String;
    fn spec(&self) -> FieldSpec;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Rank of a matrix over this field.
    fn rank(&self, m: &Matrix<Self>) -> usize {
        linalg::echelon_rank(m)
    }
}

/// Field selection as it appears in documents and on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    #[serde(with = "rational_tag")]
    Rational,
    Prime {
        prime: u64,
    },
}

mod rational_tag {
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str("rational")
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(), D::Error> {
        let s = String::deserialize(d)?;
        if s == "rational" {
            Ok(())
        } else {
            Err(de::Error::custom(format!("unknown field `{s}`")))
        }
    }
}

impl FieldSpec {
    /// Parses the command-line syntax `rational` or `gf:p`.
    pub fn parse_flag(s: &str) -> Result<Self> {
        match s {
            "rational" | "q" | "Q" => Ok(FieldSpec::Rational),
            _ => {
                let p = s
                    .strip_prefix("gf:")
                    .ok_or_else(|| {
                        Error::InvalidField(format!("expected rational or gf:p, got `{s}`"))
                    })?
                    .parse::<u64>()
                    .map_err(|e| Error::InvalidField(format!("bad prime in `{s}`: {e}")))?;
                PrimeField::new(p)?;
                Ok(FieldSpec::Prime { prime: p })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Prime { prime } => write!(f, "gf:{prime}"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|e| Error::parse(format!("bad rational `{s}`: {e}")))
        };
        match s.split_once('/') {
            Some((num, den)) => {
                let den = parse_int(den)?;
                if den.is_zero() {
                    return Err(Error::parse(format!("zero denominator in `{s}`")));
                }
                Ok(BigRational::new(parse_int(num)?, den))
            }
            None => Ok(BigRational::from_integer(parse_int(s)?)),
        }
    }

    fn render(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn rank(&self, m: &Matrix<Self>) -> usize {
        linalg::fraction_free_rank(m)
    }
}

/// GF(p) with residues stored in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "{p} is not a prime below 2^32"
            )));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    /// Accepts integers (any sign) and fractions `a/b` with `b` invertible mod p.
    fn parse(&self, s: &str) -> Result<u64> {
        let q = Rationals.parse(s)?;
        let p = BigInt::from(self.p);
        let reduce = |x: &BigInt| -> u64 {
            let r = ((x % &p) + &p) % &p;
            r.to_string().parse().expect("residue fits in u64")
        };
        let num = reduce(q.numer());
        let den = reduce(q.denom());
        let den_inv = self
            .inv(&den)
            .ok_or_else(|| Error::parse(format!("denominator of `{s}` vanishes mod {}", self.p)))?;
        Ok(self.mul(&num, &den_inv))
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime { prime: self.p }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.inv(&2), Some(3));
        assert_eq!(f.from_i64(-1), 4);
        assert_eq!(f.parse("1/2").unwrap(), 3);
        assert_eq!(f.parse("-7").unwrap(), 3);
        assert!(f.parse("1/5").is_err());
        assert!(PrimeField::new(6).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn rational_parse_render() {
        let q = Rationals;
        let x = q.parse("6/-4").unwrap();
        assert_eq!(q.render(&x), "-3/2");
        assert_eq!(q.render(&q.parse(" 4 ").unwrap()), "4");
        assert!(q.parse("1/0").is_err());
    }

    #[test]
    fn field_spec_syntax() {
        assert_eq!(
            FieldSpec::parse_flag("gf:7").unwrap(),
            FieldSpec::Prime { prime: 7 }
        );
        assert_eq!(
            FieldSpec::parse_flag("rational").unwrap(),
            FieldSpec::Rational
        );
        assert!(FieldSpec::parse_flag("gf:9").is_err());
        let json: FieldSpec = serde_json::from_str("\"rational\"").unwrap();
        assert_eq!(json, FieldSpec::Rational);
        let json: FieldSpec = serde_json::from_str("{\"prime\": 3}").unwrap();
        assert_eq!(json, FieldSpec::Prime { prime: 3 });
        assert_eq!(
            serde_json::to_string(&FieldSpec::Rational).unwrap(),
            "\"rational\""
        );
    }
}
