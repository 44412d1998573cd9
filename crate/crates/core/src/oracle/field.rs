use std::fmt::{self, Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficient field for polynomial arithmetic.
pub trait Field: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    const NAME: &'static str;
    const CHARACTERISTIC: u64;
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Sign used when printing; only ordered fields have negatives.
    fn is_negative(&self) -> bool {
        false
    }

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

/// The rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Q(pub BigRational);

impl Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(&self.0, f)
    }
}

impl Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(&self.0, f)
    }
}

impl Field for Q {
    const NAME: &'static str = "Q";
    const CHARACTERISTIC: u64 = 0;

    fn zero() -> Self {
        Q(BigRational::zero())
    }
    fn one() -> Self {
        Q(BigRational::one())
    }
    fn from_i64(v: i64) -> Self {
        Q(BigRational::from_integer(BigInt::from(v)))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Q(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Q(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Q(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Q(-&self.0)
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Q(self.0.recip())
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

/// The prime field `Z/P`, for primes below `2^32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(pub u64);

/// The field with two elements.
pub type F2 = Fp<2>;

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    const NAME: &'static str = if P == 2 { "F2" } else { "Fp" };
    const CHARACTERISTIC: u64 = P;

    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp((self.0 + other.0) % P)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp((self.0 + P - other.0) % P)
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(self.0 * other.0 % P)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        // Fermat: a^(P-2).
        let (mut base, mut e, mut acc) = (self.0, P - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        let a = Q::from_i64(3);
        let b = Q::from_i64(-6);
        assert_eq!(a.div(&b).mul(&Q::from_i64(-2)), Q::one());
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.neg().add(&a), Q::zero());
    }

    #[test]
    fn prime_fields() {
        assert_eq!(F2::from_i64(-1), F2::one());
        assert_eq!(F2::one().add(&F2::one()), F2::zero());
        type F7 = Fp<7>;
        for v in 1..7 {
            assert_eq!(F7::from_i64(v).mul(&F7::from_i64(v).inv()), F7::one());
        }
    }
}
