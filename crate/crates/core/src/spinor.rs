//! Two-component hyperbolic spinors and the split-quaternion correspondence.

use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::ext::ExtElem;
use crate::hyperbolic::Hyperbolic;
use crate::poly::UniPoly;
use crate::quat::SplitQuat;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// Column `[c1; c2]` of hyperbolic scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Spinor<T> {
    pub c1: Hyperbolic<T>,
    pub c2: Hyperbolic<T>,
}

pub type HypSpinor = Spinor<Rational>;
pub type PolySpinor = Spinor<UniPoly>;
pub type ExtSpinor = Spinor<ExtElem>;

/// The fixed matrix `C = [[0, 1], [-1, 0]]` acting on spinors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SpinMatrixC;

impl SpinMatrixC {
    pub const ENTRIES: [[i8; 2]; 2] = [[0, 1], [-1, 0]];

    /// `C [a; b] = [b; -a]`.
    pub fn apply<T: Scalar>(&self, s: &Spinor<T>) -> Spinor<T> {
        Spinor {
            c1: s.c2.clone(),
            c2: -s.c1.clone(),
        }
    }

    /// `C * C`, as an integer matrix.
    pub fn squared() -> [[i8; 2]; 2] {
        let c = Self::ENTRIES;
        let mut out = [[0i8; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (col, cell) in row.iter_mut().enumerate() {
                *cell = (0..2).map(|k| c[r][k] * c[k][col]).sum();
            }
        }
        out
    }
}

impl<T: Scalar> Spinor<T> {
    pub fn new(c1: Hyperbolic<T>, c2: Hyperbolic<T>) -> Self {
        Spinor { c1, c2 }
    }

    /// Builds `[a1 + b1 u; a2 + b2 u]`.
    pub fn from_parts(a1: T, b1: T, a2: T, b2: T) -> Self {
        Spinor {
            c1: Hyperbolic::new(a1, b1),
            c2: Hyperbolic::new(a2, b2),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        Spinor {
            c1: self.c1.scale(k),
            c2: self.c2.scale(k),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Spinor {
            c1: self.c1.scale_rational(r),
            c2: self.c2.scale_rational(r),
        }
    }

    pub fn scale_hyperbolic(&self, h: &Hyperbolic<T>) -> Self {
        Spinor {
            c1: h.clone() * self.c1.clone(),
            c2: h.clone() * self.c2.clone(),
        }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Spinor<U> {
        Spinor {
            c1: self.c1.map(&f),
            c2: self.c2.map(&f),
        }
    }

    /// Ordinary hyperbolic conjugate, componentwise.
    pub fn bar(&self) -> Self {
        Spinor {
            c1: self.c1.conj(),
            c2: self.c2.conj(),
        }
    }

    /// Spinor conjugate `u * C * bar(s)`.
    pub fn tilde(&self) -> Self {
        SpinMatrixC
            .apply(&self.bar())
            .scale_hyperbolic(&Hyperbolic::unit())
    }

    /// Spinor mate `-C * bar(s)`.
    pub fn mate(&self) -> Self {
        -SpinMatrixC.apply(&self.bar())
    }
}

impl<T: Scalar> Add for Spinor<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Spinor {
            c1: self.c1 + rhs.c1,
            c2: self.c2 + rhs.c2,
        }
    }
}

impl<T: Scalar> Sub for Spinor<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Spinor {
            c1: self.c1 - rhs.c1,
            c2: self.c2 - rhs.c2,
        }
    }
}

impl<T: Scalar> Neg for Spinor<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Spinor {
            c1: -self.c1,
            c2: -self.c2,
        }
    }
}

impl<T: Scalar> Zero for Spinor<T> {
    fn zero() -> Self {
        Spinor {
            c1: Hyperbolic::zero(),
            c2: Hyperbolic::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }
}

impl<T: Scalar> fmt::Display for Spinor<T> {
    /// `[3u; -1+u]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}]", self.c1, self.c2)
    }
}

impl PolySpinor {
    /// Substitutes a rational value for `x`.
    pub fn eval(&self, at: &Rational) -> HypSpinor {
        self.map(|p| p.eval(at))
    }

    pub fn to_ext(&self) -> ExtSpinor {
        self.map(|p| ExtElem::from_poly(p.clone()))
    }
}

impl HypSpinor {
    pub fn to_poly(&self) -> PolySpinor {
        self.map(|r| UniPoly::constant(r.clone()))
    }
}

impl ExtSpinor {
    /// The polynomial spinor this equals, if every entry is a polynomial.
    pub fn to_poly(&self) -> Option<PolySpinor> {
        Some(Spinor::from_parts(
            self.c1.re.to_poly()?,
            self.c1.hy.to_poly()?,
            self.c2.re.to_poly()?,
            self.c2.hy.to_poly()?,
        ))
    }
}

/// The correspondence `a + bi + cj + dk -> [a + d u; -b + c u]`.
pub fn quat_to_spinor(q: &SplitQuat) -> HypSpinor {
    Spinor::from_parts(q.a.clone(), q.d.clone(), -&q.b, q.c.clone())
}

/// Spinor of the conjugate quaternion.
pub fn spinor_star(q: &SplitQuat) -> HypSpinor {
    quat_to_spinor(&q.conj())
}

/// Inverse of [`quat_to_spinor`] on its image. Every spinor with rational
/// entries is in the image, so this always succeeds for [`HypSpinor`].
pub fn spinor_to_quat(s: &HypSpinor) -> SplitQuat {
    SplitQuat::new(s.c1.re.clone(), -&s.c2.re, s.c2.hy.clone(), s.c1.hy.clone())
}

/// Vector built from the spinor parameters `(phi1, phi2)`, together with
/// the quadratic form `a1^2 + a2^2 - a3^2` evaluated in the hyperbolic ring.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IsotropicVector {
    pub a1: Hyperbolic<Rational>,
    pub a2: Hyperbolic<Rational>,
    pub a3: Hyperbolic<Rational>,
    pub form: Hyperbolic<Rational>,
}

/// `(phi1^2 - phi2^2, u(phi1^2 + phi2^2), -2 phi1 phi2)`.
///
/// The form value is reported rather than asserted: with `u^2 = +1` it equals
/// `2(phi1^2 - phi2^2)^2`, which vanishes only when `phi1^2 = phi2^2`.
pub fn isotropic_vector(
    phi1: &Hyperbolic<Rational>,
    phi2: &Hyperbolic<Rational>,
) -> IsotropicVector {
    let s1 = phi1.clone() * phi1.clone();
    let s2 = phi2.clone() * phi2.clone();
    let a1 = s1.clone() - s2.clone();
    let a2 = Hyperbolic::unit() * (s1 + s2);
    let a3 = (phi1.clone() * phi2.clone()).scale_rational(&Rational::from(-2));
    let form = a1.clone() * a1.clone() + a2.clone() * a2.clone() - a3.clone() * a3.clone();
    IsotropicVector { a1, a2, a3, form }
}
