//! Exact field scalars: arbitrary-precision rationals and prime fields.
//!
//! A [`Scalar`] is an element of one fixed field described by a
//! [`FieldSpec`]. Rationals are kept in lowest terms with a positive
//! denominator; prime-field elements are reduced residues. Mixing scalars
//! from different fields in one arithmetic operation is a programming
//! error and panics.

use alloc::string::{String, ToString};
use alloc::{format, vec::Vec};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// Exact rationals with arbitrary-precision integers.
    Rational,
    /// The prime field with `p` elements.
    Prime(u64),
}

/// Errors from scalar construction and parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    /// Division by zero (or inverting zero).
    DivisionByZero,
    /// The string is not a valid scalar for the field.
    Parse(String),
    /// `p` is not a prime number.
    NotPrime(u64),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::Parse(s) => write!(f, "cannot parse scalar from {s:?}"),
            ScalarError::NotPrime(p) => write!(f, "{p} is not prime"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= p) {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Validates the field description (primality of the modulus).
    pub fn validate(self) -> Result<Self, ScalarError> {
        match self {
            FieldSpec::Rational => Ok(self),
            FieldSpec::Prime(p) => {
                if is_prime(p) {
                    Ok(self)
                } else {
                    Err(ScalarError::NotPrime(p))
                }
            }
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Scalar::Prime {
                value: ((v as i128).rem_euclid(p as i128)) as u64,
                modulus: p,
            },
        }
    }

    /// `num/den` in this field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar, ScalarError> {
        if den == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        self.from_i64(num).div(&self.from_i64(den))
    }

    /// Characteristic of the field: 0 for the rationals, `p` otherwise.
    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    /// Parses a scalar from a decimal string, `"n"` or `"n/d"`.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar, ScalarError> {
        let s = s.trim();
        let bad = || ScalarError::Parse(s.to_string());
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num = BigInt::from_str(num_s).map_err(|_| bad())?;
        let den = match den_s {
            Some(d) => BigInt::from_str(d).map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match self {
            FieldSpec::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::Prime(p) => {
                let pm = BigInt::from(p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &pm) + &pm) % &pm;
                    let (_, digits) = r.to_u64_digits();
                    digits.first().copied().unwrap_or(0)
                };
                let n = Scalar::Prime {
                    value: reduce(&num),
                    modulus: p,
                };
                let d = Scalar::Prime {
                    value: reduce(&den),
                    modulus: p,
                };
                n.div(&d)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Prime(p) => write!(f, "prime {p}"),
        }
    }
}

/// An element of an exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    fn check_same_field(&self, other: &Scalar) {
        assert!(
            self.field() == other.field(),
            "scalar field mismatch: {} vs {}",
            self.field(),
            other.field()
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check_same_field(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check_same_field(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }
}

/// Inverse of `a` mod prime `p` by the extended Euclidean algorithm.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "{a} not invertible mod {p}");
    old_s.rem_euclid(p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Pretty-prints a sparse coefficient combination over named basis vectors,
/// e.g. `x⊗1 + 2·gx⊗1`. A label function keeps the caller in charge of
/// tensor-index decoding.
pub fn pretty_combination<'a>(
    terms: impl Iterator<Item = (usize, &'a Scalar)>,
    label: impl Fn(usize) -> String,
) -> String {
    let mut out = String::new();
    for (idx, coeff) in terms {
        if coeff.is_zero() {
            continue;
        }
        let (sign_neg, abs) = match coeff {
            Scalar::Rational(r) => (r.is_negative(), Scalar::Rational(r.abs())),
            other => (false, other.clone()),
        };
        if out.is_empty() {
            if sign_neg {
                out.push('-');
            }
        } else {
            out.push_str(if sign_neg { " - " } else { " + " });
        }
        let name = label(idx);
        if abs.is_one() {
            out.push_str(&name);
        } else if name == "1" {
            out.push_str(&format!("{abs}"));
        } else {
            out.push_str(&format!("{abs}·{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Dense view helper used by reports.
pub fn pretty_dense(coeffs: &[Scalar], label: impl Fn(usize) -> String) -> String {
    pretty_combination(coeffs.iter().enumerate(), label)
}

/// Round-trips through [`FieldSpec::parse_scalar`]: canonical print.
pub fn print_scalar(s: &Scalar) -> String {
    s.to_string()
}

pub type ScalarVec = Vec<Scalar>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact_and_reduced() {
        let f = FieldSpec::Rational;
        let half = f.ratio(1, 2).unwrap();
        let third = f.ratio(1, 3).unwrap();
        let sum = half.add(&third);
        assert_eq!(sum, f.ratio(5, 6).unwrap());
        // lowest terms with positive denominator
        assert_eq!(f.ratio(2, -4).unwrap().to_string(), "-1/2");
        assert_eq!(f.ratio(-6, -4).unwrap().to_string(), "3/2");
    }

    #[test]
    fn parse_print_round_trip() {
        let f = FieldSpec::Rational;
        for s in ["0", "7", "-3", "1/2", "-22/7", "123456789123456789/2"] {
            let v = f.parse_scalar(s).unwrap();
            assert_eq!(v.to_string(), s);
            assert_eq!(f.parse_scalar(&v.to_string()).unwrap(), v);
        }
        // non-canonical input parses to the canonical value
        assert_eq!(f.parse_scalar("2/4").unwrap(), f.ratio(1, 2).unwrap());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::Prime(7).validate().unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(a.mul(&b), f.from_i64(1)); // 15 = 1 mod 7
        assert_eq!(a.inv().unwrap(), f.from_i64(5));
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.parse_scalar("3/5").unwrap(), f.from_i64(2)); // 3·3 = 2 mod 7
        assert!(FieldSpec::Prime(6).validate().is_err());
    }

    #[test]
    fn zero_inverse_is_an_error() {
        assert_eq!(
            FieldSpec::Rational.zero().inv(),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn cross_field_arithmetic_panics() {
        let a = FieldSpec::Rational.one();
        let b = FieldSpec::Prime(5).one();
        let _ = a.add(&b);
    }

    #[test]
    fn pretty_combination_formats_signs() {
        let f = FieldSpec::Rational;
        let coeffs = [f.from_i64(1), f.from_i64(0), f.from_i64(2), f.from_i64(-1)];
        let names = ["1", "g", "x", "gx"];
        let s = pretty_dense(&coeffs, |i| names[i].into());
        assert_eq!(s, "1 + 2·x - gx");
        let zero = [f.from_i64(0)];
        assert_eq!(pretty_dense(&zero, |i| names[i].into()), "0");
    }
}
