//! Exact coefficient fields: the rationals and odd prime fields GF(p), p < 2^31.
//!
//! All arithmetic is exact. Prime-field elements are machine-word residues in
//! `[0, p)`; products fit in 64 bits because p < 2^31. Rational coefficients
//! are arbitrary-precision, always-reduced fractions.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::fmt;

/// A coefficient field: Q or GF(p) for an odd prime p < 2^31.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Field {
    Rationals,
    Prime(u32),
}

/// A field element. The variant must match the field that operates on it;
/// mixing variants across fields is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(Box<BigRational>),
    Fp(u64),
}

fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Extended Euclid over i128: returns (g, x, y) with a*x + b*y = g = gcd(a, b).
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

impl Field {
    /// Validated constructor for GF(p). The characteristic-2 case is excluded.
    pub fn prime(p: u32) -> Result<Field> {
        if p == 2 || p >= 1 << 31 || !is_prime_u32(p) {
            return Err(Error::InvalidPrime(p as u64));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p as u64,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(Box::new(BigRational::zero())),
            Field::Prime(_) => Coeff::Fp(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(Box::new(BigRational::one())),
            Field::Prime(_) => Coeff::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(Box::new(BigRational::from(BigInt::from(n)))),
            Field::Prime(p) => {
                let p = *p as i64;
                Coeff::Fp(n.rem_euclid(p) as u64)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(Box::new(BigRational::from(n.clone()))),
            Field::Prime(p) => {
                let p_big = BigInt::from(*p);
                let mut r = n % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                Coeff::Fp(r.to_u64().expect("reduced residue fits u64"))
            }
        }
    }

    /// Builds a coefficient from a rational literal `num/den`.
    ///
    /// Over GF(p) this is `num * den^{-1} mod p` and fails when p | den.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        if den.is_zero() {
            return Err(Error::BadCoefficient {
                field: self.to_string(),
                reason: "zero denominator".into(),
            });
        }
        match self {
            Field::Rationals => Ok(Coeff::Rat(Box::new(BigRational::new(
                num.clone(),
                den.clone(),
            )))),
            Field::Prime(_) => {
                let n = self.from_bigint(num);
                let d = self.from_bigint(den);
                let d_inv = self.inv(&d)?;
                Ok(self.mul(&n, &d_inv))
            }
        }
    }

    pub fn from_big_rational(&self, q: &BigRational) -> Result<Coeff> {
        self.from_ratio(q.numer(), q.denom())
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x + &**y))
            }
            (Field::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                let p = *p as u64;
                let s = x + y;
                Coeff::Fp(if s >= p { s - p } else { s })
            }
            _ => panic!("coefficient/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x - &**y))
            }
            (Field::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                let p = *p as u64;
                Coeff::Fp(if x >= y { x - y } else { x + p - y })
            }
            _ => panic!("coefficient/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => {
                Coeff::Rat(Box::new(&**x * &**y))
            }
            (Field::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x * y) % (*p as u64)),
            _ => panic!("coefficient/field mismatch"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Rationals, Coeff::Rat(x)) => Coeff::Rat(Box::new(-&**x)),
            (Field::Prime(p), Coeff::Fp(x)) => {
                Coeff::Fp(if *x == 0 { 0 } else { *p as u64 - x })
            }
            _ => panic!("coefficient/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        match (self, a) {
            (Field::Rationals, Coeff::Rat(x)) => {
                if x.is_zero() {
                    Err(Error::BadCoefficient {
                        field: self.to_string(),
                        reason: "inverse of zero".into(),
                    })
                } else {
                    Ok(Coeff::Rat(Box::new(x.recip())))
                }
            }
            (Field::Prime(p), Coeff::Fp(x)) => {
                if *x == 0 {
                    return Err(Error::BadCoefficient {
                        field: self.to_string(),
                        reason: "inverse of zero".into(),
                    });
                }
                let (g, s, _) = ext_gcd(*x as i128, *p as i128);
                debug_assert_eq!(g, 1);
                Ok(Coeff::Fp(s.rem_euclid(*p as i128) as u64))
            }
            _ => panic!("coefficient/field mismatch"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(x) => x.is_one(),
            Coeff::Fp(x) => *x == 1,
        }
    }

    /// True for rationals with negative sign; GF(p) residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rat(x) => x.is_negative(),
            Coeff::Fp(_) => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl Field {
    /// Parses the CLI/file syntax `q` or `gf:<p>`.
    pub fn parse(text: &str) -> Result<Field> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        if let Some(p) = t.strip_prefix("gf:").or_else(|| t.strip_prefix("GF:")) {
            let p: u32 = p
                .parse()
                .map_err(|_| Error::domain(format!("bad prime `{p}`")))?;
            return Field::prime(p);
        }
        Err(Error::domain(format!(
            "unknown field `{t}` (expected `q` or `gf:<p>`)"
        )))
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Coeff::Fp(x) => write!(f, "{x}"),
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Field::prime(32003).is_ok());
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn mersenne_prime_fits() {
        // 2^31 - 1 = 2147483647 is an odd prime strictly below 2^31.
        assert!(Field::prime(2147483647).is_ok());
    }

    #[test]
    fn fp_inverse_by_euclid() {
        let f = Field::prime(5).unwrap();
        // 3/2 mod 5 = 3 * 2^{-1} = 3 * 3 = 9 = 4
        let c = f
            .from_ratio(&BigInt::from(3), &BigInt::from(2))
            .unwrap();
        assert_eq!(c, Coeff::Fp(4));
    }

    #[test]
    fn fp_non_representable() {
        let f = Field::prime(5).unwrap();
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(5)).is_err());
    }

    #[test]
    fn rat_reduction() {
        let f = Field::Rationals;
        let c = f
            .from_ratio(&BigInt::from(6), &BigInt::from(4))
            .unwrap();
        assert_eq!(c.to_string(), "3/2");
    }

    #[test]
    fn field_roundtrip_syntax() {
        assert_eq!(Field::parse("q").unwrap(), Field::Rationals);
        assert_eq!(Field::parse("gf:32003").unwrap(), Field::Prime(32003));
        assert!(Field::parse("gf:4").is_err());
    }

    #[test]
    fn fp_ops_match_integers_mod_p() {
        let f = Field::prime(32003).unwrap();
        let a = f.from_i64(-7);
        assert_eq!(a, Coeff::Fp(31996));
        let b = f.from_i64(9);
        let prod = f.mul(&a, &b);
        assert_eq!(prod, f.from_i64(-63));
        let inv = f.inv(&b).unwrap();
        assert!(f.mul(&b, &inv).is_one());
    }
}
