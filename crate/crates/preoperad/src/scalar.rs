//! Exact rational scalar.
//!
//! A [`Rat`] is an arbitrary-precision rational kept in canonical reduced
//! form (positive denominator, gcd 1, zero as `0/1`). Values whose numerator
//! and denominator fit in an `i64` are stored inline and computed with
//! `i128` intermediates; anything larger promotes to a heap
//! [`BigRational`]. Promotion and demotion are exact and invisible: equal
//! values always have equal representations, so equality is structural.
//!
//! The inline path exists because the identity suites evaluate tens of
//! millions of small integer fraction operations; allocating on each one is
//! the difference between seconds and minutes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

/// Exact rational number, always in reduced canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rat(Repr);

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    /// Canonicalize from `i128` parts. `den` must be nonzero; inputs need
    /// not be reduced or sign-normalized.
    fn from_i128_parts(mut num: i128, mut den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        if num == 0 {
            return Rat(Repr::Small { num: 0, den: 1 });
        }
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = gcd_i128(num, den);
        num /= g;
        den /= g;
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(n), Ok(d)) => Rat(Repr::Small { num: n, den: d }),
            _ => Rat(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(num),
                BigInt::from(den),
            )))),
        }
    }

    /// Canonicalize a reduced [`BigRational`], demoting when it fits inline.
    pub fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(num), Some(den)) => Rat(Repr::Small { num, den }),
            _ => Rat(Repr::Big(Box::new(r))),
        }
    }

    /// Exact rational `num/den` from big integer parts; `den` must be
    /// nonzero.
    pub fn from_big_parts(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::from_big(BigRational::new(num, den))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(Repr::Small { num: n, den: 1 })
    }

    pub fn zero() -> Self {
        Rat(Repr::Small { num: 0, den: 1 })
    }

    pub fn one() -> Self {
        Rat(Repr::Small { num: 1, den: 1 })
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    /// The value as a [`BigRational`] (already canonical).
    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Repr::Big(r) => (**r).clone(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { num: 1, den: 1 })
    }

    pub fn recip(&self) -> Self {
        match &self.0 {
            Repr::Small { num, den } => {
                assert!(*num != 0, "reciprocal of zero");
                Rat::from_i128_parts(i128::from(*den), i128::from(*num))
            }
            Repr::Big(r) => Rat::from_big(r.recip()),
        }
    }

    fn add_impl(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) => {
                let (n1, d1) = (i128::from(*n1), i128::from(*d1));
                let (n2, d2) = (i128::from(*n2), i128::from(*d2));
                Rat::from_i128_parts(n1 * d2 + n2 * d1, d1 * d2)
            }
            _ => Rat::from_big(self.to_big() + other.to_big()),
        }
    }

    fn sub_impl(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) => {
                let (n1, d1) = (i128::from(*n1), i128::from(*d1));
                let (n2, d2) = (i128::from(*n2), i128::from(*d2));
                Rat::from_i128_parts(n1 * d2 - n2 * d1, d1 * d2)
            }
            _ => Rat::from_big(self.to_big() - other.to_big()),
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) => {
                Rat::from_i128_parts(
                    i128::from(*n1) * i128::from(*n2),
                    i128::from(*d1) * i128::from(*d2),
                )
            }
            _ => Rat::from_big(self.to_big() * other.to_big()),
        }
    }

    fn div_impl(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) => {
                assert!(*n2 != 0, "division by zero");
                Rat::from_i128_parts(
                    i128::from(*n1) * i128::from(*d2),
                    i128::from(*d1) * i128::from(*n2),
                )
            }
            _ => {
                assert!(!other.is_zero(), "division by zero");
                Rat::from_big(self.to_big() / other.to_big())
            }
        }
    }

    fn neg_impl(&self) -> Self {
        match &self.0 {
            Repr::Small { num, den } => {
                Rat::from_i128_parts(-i128::from(*num), i128::from(*den))
            }
            Repr::Big(r) => Rat::from_big(-(**r).clone()),
        }
    }
}

impl Zero for Rat {
    fn zero() -> Self {
        Rat(Repr::Small { num: 0, den: 1 })
    }

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }
}

impl One for Rat {
    fn one() -> Self {
        Rat(Repr::Small { num: 1, den: 1 })
    }
}

impl Default for Rat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den } => {
                if *den == 1 {
                    write!(f, "{num}")
                } else {
                    write!(f, "{num}/{den}")
                }
            }
            Repr::Big(r) => write!(f, "{r}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                self.$impl_fn(&rhs)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                self.$impl_fn(rhs)
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                self.$impl_fn(&rhs)
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                self.$impl_fn(rhs)
            }
        }
    };
}

binop!(Add, add, add_impl);
binop!(Sub, sub, sub_impl);
binop!(Mul, mul, mul_impl);
binop!(Div, div, div_impl);

macro_rules! assignop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<Rat> for Rat {
            fn $method(&mut self, rhs: Rat) {
                *self = self.$impl_fn(&rhs);
            }
        }
        impl $trait<&Rat> for Rat {
            fn $method(&mut self, rhs: &Rat) {
                *self = self.$impl_fn(rhs);
            }
        }
    };
}

assignop!(AddAssign, add_assign, add_impl);
assignop!(SubAssign, sub_assign, sub_impl);
assignop!(MulAssign, mul_assign, mul_impl);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        self.neg_impl()
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        self.neg_impl()
    }
}
