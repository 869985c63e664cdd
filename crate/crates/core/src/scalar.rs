//! Exact field scalars: arbitrary-precision rationals and prime fields.
//!
//! Rationals keep an `i64/i64` fast path and spill into `BigRational` only on
//! overflow; profiling the elimination core showed almost all entries stay
//! small, so the fast path carries nearly all of the work.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::Error;

/// The coefficient field of a computation: ℚ or 𝔽_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Small(0, 1),
            Field::Prime(p) => Scalar::Mod { p: *p, v: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Small(n, 1),
            Field::Prime(p) => {
                let p64 = *p as i64;
                let mut r = n % p64;
                if r < 0 {
                    r += p64;
                }
                Scalar::Mod { p: *p, v: r as u64 }
            }
        }
    }

    /// n/d as a field element; `d` must be invertible.
    pub fn from_ratio(&self, n: i64, d: i64) -> Scalar {
        assert!(d != 0, "zero denominator");
        match self {
            Field::Rational => normalize_small(n as i128, d as i128),
            Field::Prime(_) => {
                let den = self.from_i64(d);
                assert!(!den.is_zero(), "denominator not invertible mod p");
                self.from_i64(n).mul(&den.inv().unwrap())
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// An exact scalar.  Canonical forms: `Small(n, d)` with `d > 0` and
/// `gcd(n, d) = 1`; `Big` only when the value does not fit `Small`;
/// `Mod {{ p, v }}` with `v < p`.
#[derive(Debug, Clone)]
pub enum Scalar {
    Small(i64, i64),
    Big(Box<BigRational>),
    Mod { p: u32, v: u64 },
}


fn gcd128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn normalize_small(mut n: i128, mut d: i128) -> Scalar {
    debug_assert!(d != 0);
    if d < 0 {
        n = -n;
        d = -d;
    }
    if n == 0 {
        return Scalar::Small(0, 1);
    }
    let g = gcd128(n, d);
    n /= g;
    d /= g;
    if n >= i64::MIN as i128 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
        Scalar::Small(n as i64, d as i64)
    } else {
        Scalar::Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d))))
    }
}

fn shrink_big(r: BigRational) -> Scalar {
    // fold back into the small representation when possible
    if let (Some(n), Some(d)) = (to_i64(r.numer()), to_i64(r.denom())) {
        Scalar::Small(n, d)
    } else {
        Scalar::Big(Box::new(r))
    }
}

fn to_i64(b: &BigInt) -> Option<i64> {
    use num::ToPrimitive;
    b.to_i64()
}

fn to_big(s: &Scalar) -> BigRational {
    match s {
        Scalar::Small(n, d) => BigRational::new(BigInt::from(*n), BigInt::from(*d)),
        Scalar::Big(b) => (**b).clone(),
        Scalar::Mod { .. } => panic!("prime-field scalar used as rational"),
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Small(..) | Scalar::Big(_) => Field::Rational,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn same_field(&self, other: &Scalar) -> Result<(), Error> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::MixedFields(
                self.field().to_string(),
                other.field().to_string(),
            ))
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Small(n, _) => *n == 0,
            Scalar::Big(b) => b.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Small(n, d) => *n == 1 && *d == 1,
            Scalar::Big(b) => b.is_one(),
            Scalar::Mod { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                let n = (*a as i128) * (*d as i128) + (*c as i128) * (*b as i128);
                let den = (*b as i128) * (*d as i128);
                normalize_small(n, den)
            }
            (Scalar::Mod { p, v }, Scalar::Mod { p: q, v: w }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Mod { p: *p, v: (v + w) % (*p as u64) }
            }
            (a, b) => {
                debug_assert_eq!(a.field(), b.field(), "mixed fields");
                shrink_big(to_big(a) + to_big(b))
            }
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Small(n, d) => {
                if *n == i64::MIN {
                    shrink_big(-to_big(self))
                } else {
                    Scalar::Small(-n, *d)
                }
            }
            Scalar::Big(b) => shrink_big(-(**b).clone()),
            Scalar::Mod { p, v } => {
                if *v == 0 {
                    self.clone()
                } else {
                    Scalar::Mod { p: *p, v: *p as u64 - v }
                }
            }
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                let n = (*a as i128) * (*c as i128);
                let den = (*b as i128) * (*d as i128);
                normalize_small(n, den)
            }
            (Scalar::Mod { p, v }, Scalar::Mod { p: q, v: w }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Mod { p: *p, v: (v * w) % (*p as u64) }
            }
            (a, b) => {
                debug_assert_eq!(a.field(), b.field(), "mixed fields");
                shrink_big(to_big(a) * to_big(b))
            }
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Small(n, d) => normalize_small(*d as i128, *n as i128),
            Scalar::Big(b) => shrink_big((**b).recip()),
            Scalar::Mod { p, v } => Scalar::Mod { p: *p, v: mod_inv(*v, *p as u64) },
        })
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv().expect("division by zero"))
    }

    /// Multiply by a small integer (used for engine signs: n is ±1).
    pub fn scaled(&self, n: i64) -> Scalar {
        match n {
            1 => self.clone(),
            -1 => self.neg(),
            _ => self.mul(&self.field().from_i64(n)),
        }
    }
}

fn mod_inv(v: u64, p: u64) -> u64 {
    // extended Euclid; p prime, 0 < v < p
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, v as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "not invertible");
    let mut t = t % p as i128;
    if t < 0 {
        t += p as i128;
    }
    t as u64
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => a == c && b == d,
            (Scalar::Mod { p, v }, Scalar::Mod { p: q, v: w }) => p == q && v == w,
            (Scalar::Small(..), Scalar::Big(_)) | (Scalar::Big(_), Scalar::Small(..)) => {
                // canonical forms never alias, but compare defensively
                to_big(self) == to_big(other)
            }
            (Scalar::Big(a), Scalar::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Mod { p, v }, Scalar::Mod { p: q, v: w }) => (p, v).cmp(&(q, w)),
            (Scalar::Mod { .. }, _) => Ordering::Less,
            (_, Scalar::Mod { .. }) => Ordering::Greater,
            _ => to_big(self).cmp(&to_big(other)),
        }
    }
}

impl std::hash::Hash for Scalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        match self {
            Scalar::Small(n, d) => {
                (*n).hash(state);
                (*d).hash(state);
            }
            Scalar::Big(b) => {
                // hash must agree with Small for equal values; rely on canonical
                // forms never overlapping instead
                b.numer().hash(state);
                b.denom().hash(state);
            }
            Scalar::Mod { p, v } => {
                p.hash(state);
                v.hash(state);
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(n, 1) => write!(f, "{n}"),
            Scalar::Small(n, d) => write!(f, "{n}/{d}"),
            Scalar::Big(b) => write!(f, "{b}"),
            Scalar::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

/// Binomial coefficient in the field (used by the divided-power oracle).
pub fn binomial(field: Field, n: u64, k: u64) -> Scalar {
    if k > n {
        return field.zero();
    }
    let mut acc = field.one();
    for i in 0..k {
        let num = field.from_i64((n - i) as i64);
        let den = field.from_i64((i + 1) as i64);
        acc = acc.mul(&num).div(&den);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact_and_canonical() {
        let q = Field::Rational;
        let a = q.from_ratio(2, 4);
        assert_eq!(a, Scalar::Small(1, 2));
        let b = q.from_ratio(1, 3);
        assert_eq!(a.add(&b), q.from_ratio(5, 6));
        assert_eq!(a.mul(&b), q.from_ratio(1, 6));
        assert_eq!(a.sub(&a), q.zero());
        assert_eq!(a.inv().unwrap(), q.from_i64(2));
        assert_eq!(q.from_ratio(-3, -6), q.from_ratio(1, 2));
    }

    #[test]
    fn overflow_spills_to_big_and_back() {
        let q = Field::Rational;
        let mut x = q.from_i64(1);
        let big = q.from_i64(i64::MAX / 2);
        for _ in 0..4 {
            x = x.mul(&big);
        }
        assert!(matches!(x, Scalar::Big(_)));
        let y = x.mul(&x.inv().unwrap());
        assert!(y.is_one());
        assert!(matches!(y, Scalar::Small(1, 1)));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = Field::Prime(5);
        let a = f5.from_i64(3);
        let b = f5.from_i64(4);
        assert_eq!(a.add(&b), f5.from_i64(2));
        assert_eq!(a.mul(&b), f5.from_i64(2));
        assert_eq!(a.inv().unwrap(), f5.from_i64(2));
        assert_eq!(f5.from_i64(-1), f5.from_i64(4));
        let f2 = Field::Prime(2);
        assert_eq!(f2.from_i64(1).add(&f2.from_i64(1)), f2.zero());
    }

    #[test]
    fn mixed_fields_detected() {
        let a = Field::Rational.one();
        let b = Field::Prime(2).one();
        assert!(a.same_field(&b).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(Field::Rational, 4, 2), Field::Rational.from_i64(6));
        assert_eq!(binomial(Field::Prime(2), 2, 1), Field::Prime(2).zero());
        assert_eq!(binomial(Field::Prime(2), 3, 1), Field::Prime(2).one());
        assert_eq!(binomial(Field::Rational, 3, 5), Field::Rational.zero());
    }
}
