//! Split-complex numbers `a + b*u` with `u^2 = +1`, generic over the scalar ring.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::Rational;
use crate::scalar::Scalar;

/// `re + hy*u`. The relation `u^2 = 1` lives only in multiplication.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Hyperbolic<T> {
    pub re: T,
    pub hy: T,
}

impl<T: Scalar> Hyperbolic<T> {
    pub fn new(re: T, hy: T) -> Self {
        Hyperbolic { re, hy }
    }

    pub fn real(re: T) -> Self {
        Hyperbolic { re, hy: T::zero() }
    }

    /// The hyperbolic unit `u`.
    pub fn unit() -> Self {
        Hyperbolic {
            re: T::zero(),
            hy: T::one(),
        }
    }

    /// `a + bu -> a - bu`.
    pub fn conj(&self) -> Self {
        Hyperbolic {
            re: self.re.clone(),
            hy: -self.hy.clone(),
        }
    }

    /// Coordinates `(a + b, a - b)` against the idempotents `(1 + u)/2` and
    /// `(1 - u)/2`. Products become componentwise in these coordinates.
    pub fn split(&self) -> (T, T) {
        (
            self.re.clone() + self.hy.clone(),
            self.re.clone() - self.hy.clone(),
        )
    }

    /// Inverse of [`Hyperbolic::split`].
    pub fn join(plus: T, minus: T) -> Self {
        let half = Rational::new(1, 2).expect("nonzero");
        Hyperbolic {
            re: (plus.clone() + minus.clone()).scale(&half),
            hy: (plus - minus).scale(&half),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        Hyperbolic {
            re: self.re.clone() * k.clone(),
            hy: self.hy.clone() * k.clone(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Hyperbolic {
            re: self.re.scale(r),
            hy: self.hy.scale(r),
        }
    }

    /// Applies a ring map to both components.
    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Hyperbolic<U> {
        Hyperbolic {
            re: f(&self.re),
            hy: f(&self.hy),
        }
    }

    /// Invertible iff both idempotent coordinates are.
    pub fn try_inv(&self) -> Option<Self> {
        let (p, m) = self.split();
        Some(Self::join(p.try_inv()?, m.try_inv()?))
    }
}

impl<T: Scalar> Add for Hyperbolic<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Hyperbolic {
            re: self.re + rhs.re,
            hy: self.hy + rhs.hy,
        }
    }
}

impl<T: Scalar> Sub for Hyperbolic<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Hyperbolic {
            re: self.re - rhs.re,
            hy: self.hy - rhs.hy,
        }
    }
}

impl<T: Scalar> Neg for Hyperbolic<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Hyperbolic {
            re: -self.re,
            hy: -self.hy,
        }
    }
}

impl<T: Scalar> Mul for Hyperbolic<T> {
    type Output = Self;
    /// `(a1 + b1 u)(a2 + b2 u) = (a1 a2 + b1 b2) + (a1 b2 + b1 a2) u`.
    fn mul(self, rhs: Self) -> Self {
        Hyperbolic {
            re: self.re.clone() * rhs.re.clone() + self.hy.clone() * rhs.hy.clone(),
            hy: self.re * rhs.hy + self.hy * rhs.re,
        }
    }
}

impl<T: Scalar> Zero for Hyperbolic<T> {
    fn zero() -> Self {
        Hyperbolic {
            re: T::zero(),
            hy: T::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.hy.is_zero()
    }
}

impl<T: Scalar> One for Hyperbolic<T> {
    fn one() -> Self {
        Self::real(T::one())
    }
}

impl<T: Scalar> fmt::Display for Hyperbolic<T> {
    /// `-1+3u`, `3u`, `1`, `(1 + 2*x)u`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.hy.is_zero() {
            return write!(f, "{}", self.re);
        }
        let hy = if self.hy.is_one() {
            alloc::string::String::from("u")
        } else if (-self.hy.clone()).is_one() {
            alloc::string::String::from("-u")
        } else if self.hy.is_atom() {
            alloc::format!("{}u", self.hy)
        } else {
            alloc::format!("({})u", self.hy)
        };
        if self.re.is_zero() {
            f.write_str(&hy)
        } else if hy.starts_with('-') {
            write!(f, "{}{hy}", self.re)
        } else {
            write!(f, "{}+{hy}", self.re)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    type H = Hyperbolic<Rational>;

    fn h(a: i64, b: i64) -> H {
        Hyperbolic::new(Rational::from(a), Rational::from(b))
    }

    #[test]
    fn multiplication() {
        assert_eq!(H::unit() * H::unit(), H::one());
        assert!((h(1, 1) * h(1, -1)).is_zero());
        assert_eq!(h(1, 8) * h(1, -1), h(-7, 7));
    }

    #[test]
    fn conjugation() {
        assert_eq!(h(0, 3).conj(), h(0, -3));
        assert_eq!(h(-1, 1).conj(), h(-1, -1));
        assert_eq!(h(1, 8).conj().conj(), h(1, 8));
    }

    #[test]
    fn idempotent_split() {
        let r = Rational::from;
        assert_eq!(h(1, 8).split(), (r(9), r(-7)));
        assert_eq!(H::unit().split(), (r(1), r(-1)));
        let (p, m) = h(-2, 4).split();
        assert_eq!(H::join(p, m), h(-2, 4));
    }

    #[test]
    fn zero_divisors_have_no_inverse() {
        assert!(h(1, 1).try_inv().is_none());
        let z = h(3, 1);
        assert_eq!(z.clone() * z.try_inv().unwrap(), H::one());
    }

    #[test]
    fn text_form() {
        assert_eq!(h(-1, 3).to_string(), "-1+3u");
        assert_eq!(h(0, 3).to_string(), "3u");
        assert_eq!(h(1, 0).to_string(), "1");
        assert_eq!(h(0, 0).to_string(), "0");
        assert_eq!(h(-1, -1).to_string(), "-1-u");
        assert_eq!(h(2, 1).to_string(), "2+u");
    }
}
