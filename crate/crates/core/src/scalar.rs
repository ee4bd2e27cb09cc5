use core::fmt::{Debug, Display};
use core::ops::{Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Commutative ring of scalars that the hyperbolic and spinor layers are
/// generic over. Every implementor contains the rationals.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Zero + One + Sub<Output = Self> + Neg<Output = Self>
{
    fn from_rational(r: Rational) -> Self;

    fn try_inv(&self) -> Option<Self>;

    /// Whether the printed form can prefix the hyperbolic unit without
    /// parentheses.
    fn is_atom(&self) -> bool;

    fn scale(&self, r: &Rational) -> Self {
        self.clone() * Self::from_rational(r.clone())
    }
}

impl Scalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn try_inv(&self) -> Option<Self> {
        self.recip().ok()
    }

    fn is_atom(&self) -> bool {
        true
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
}
