//! The quadratic extension `Q(x)[c]` with `c^2 = 8x + 1`, home of the
//! characteristic roots `(1 ± c)/2` of `t^2 - t - 2x`.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// `(p + q*c) / den` in lowest terms: `gcd(p, q, den) = 1` and `den` monic.
///
/// That normal form is unique, so derived equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "ExtRepr"))]
pub struct ExtElem {
    p: UniPoly,
    q: UniPoly,
    den: UniPoly,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct ExtRepr {
    p: UniPoly,
    q: UniPoly,
    den: UniPoly,
}

#[cfg(feature = "serde")]
impl TryFrom<ExtRepr> for ExtElem {
    type Error = Error;
    fn try_from(r: ExtRepr) -> Result<Self> {
        ExtElem::new(r.p, r.q, r.den)
    }
}

/// `8x + 1`, the square of `c`.
pub fn discriminant() -> UniPoly {
    UniPoly::from_ints(&[1, 8])
}

impl ExtElem {
    pub fn new(p: UniPoly, q: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(p, q, den))
    }

    fn normalized(p: UniPoly, q: UniPoly, den: UniPoly) -> Self {
        if p.is_zero() && q.is_zero() {
            return ExtElem::zero();
        }
        let g = p.gcd(&q).gcd(&den);
        let (mut p, mut q, mut den) = if g.is_one() {
            (p, q, den)
        } else {
            (
                p.div_exact(&g).expect("gcd divides p"),
                q.div_exact(&g).expect("gcd divides q"),
                den.div_exact(&g).expect("gcd divides den"),
            )
        };
        let lead = den.leading().expect("den is nonzero").clone();
        if !lead.is_one() {
            let inv = lead.recip().expect("nonzero");
            p = p.scale(&inv);
            q = q.scale(&inv);
            den = den.scale(&inv);
        }
        ExtElem { p, q, den }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        ExtElem {
            p,
            q: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    /// `sqrt(8x + 1)`.
    pub fn c() -> Self {
        ExtElem {
            p: UniPoly::zero(),
            q: UniPoly::one(),
            den: UniPoly::one(),
        }
    }

    /// `(1 + c) / 2`.
    pub fn alpha() -> Self {
        let half = Rational::new(1, 2).expect("nonzero");
        ExtElem {
            p: UniPoly::constant(half.clone()),
            q: UniPoly::constant(half),
            den: UniPoly::one(),
        }
    }

    /// `(1 - c) / 2`.
    pub fn beta() -> Self {
        Self::alpha().conj()
    }

    pub fn rational_part(&self) -> &UniPoly {
        &self.p
    }

    pub fn c_part(&self) -> &UniPoly {
        &self.q
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    /// `p + q*c -> p - q*c`.
    pub fn conj(&self) -> Self {
        ExtElem {
            p: self.p.clone(),
            q: -&self.q,
            den: self.den.clone(),
        }
    }

    /// `z * conj(z)`, which never has a `c` component.
    pub fn norm(&self) -> Self {
        let num = &(&self.p * &self.p) - &(&discriminant() * &(&self.q * &self.q));
        Self::normalized(num, UniPoly::zero(), &self.den * &self.den)
    }

    pub fn inv(&self) -> Result<Self> {
        let num = &(&self.p * &self.p) - &(&discriminant() * &(&self.q * &self.q));
        if num.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(Self::normalized(
            &self.p * &self.den,
            -&(&self.q * &self.den),
            num,
        ))
    }

    /// `a * conj(b) / (b * conj(b))`.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn is_c_free(&self) -> bool {
        self.q.is_zero()
    }

    /// The polynomial this element equals, if it is one.
    pub fn to_poly(&self) -> Option<UniPoly> {
        (self.q.is_zero() && self.den.is_one()).then(|| self.p.clone())
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = ExtElem::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Zero for ExtElem {
    fn zero() -> Self {
        ExtElem::from_poly(UniPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }
}

impl One for ExtElem {
    fn one() -> Self {
        ExtElem::from_poly(UniPoly::one())
    }
}

impl<'a> Add<&'a ExtElem> for &'a ExtElem {
    type Output = ExtElem;
    fn add(self, rhs: &'a ExtElem) -> ExtElem {
        if self.den == rhs.den {
            let p = &self.p + &rhs.p;
            let q = &self.q + &rhs.q;
            if self.den.is_one() {
                return ExtElem {
                    p,
                    q,
                    den: self.den.clone(),
                };
            }
            return ExtElem::normalized(p, q, self.den.clone());
        }
        ExtElem::normalized(
            &(&self.p * &rhs.den) + &(&rhs.p * &self.den),
            &(&self.q * &rhs.den) + &(&rhs.q * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Neg for &ExtElem {
    type Output = ExtElem;
    fn neg(self) -> ExtElem {
        ExtElem {
            p: -&self.p,
            q: -&self.q,
            den: self.den.clone(),
        }
    }
}

impl<'a> Sub<&'a ExtElem> for &'a ExtElem {
    type Output = ExtElem;
    fn sub(self, rhs: &'a ExtElem) -> ExtElem {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a ExtElem> for &'a ExtElem {
    type Output = ExtElem;
    /// `(p + qc)(r + sc) = (pr + qs(8x+1)) + (ps + qr)c`.
    fn mul(self, rhs: &'a ExtElem) -> ExtElem {
        let p = &(&self.p * &rhs.p) + &(&discriminant() * &(&self.q * &rhs.q));
        let q = &(&self.p * &rhs.q) + &(&self.q * &rhs.p);
        if self.den.is_one() && rhs.den.is_one() {
            if p.is_zero() && q.is_zero() {
                return ExtElem::zero();
            }
            return ExtElem {
                p,
                q,
                den: UniPoly::one(),
            };
        }
        ExtElem::normalized(p, q, &self.den * &rhs.den)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for ExtElem {
            type Output = ExtElem;
            fn $method(self, rhs: ExtElem) -> ExtElem {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for ExtElem {
    type Output = ExtElem;
    fn neg(self) -> ExtElem {
        -&self
    }
}

impl Scalar for ExtElem {
    fn from_rational(r: Rational) -> Self {
        ExtElem::from_poly(UniPoly::constant(r))
    }

    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn is_atom(&self) -> bool {
        self.q.is_zero() && self.den.is_one() && self.p.is_constant()
    }
}

fn paren(p: &UniPoly) -> String {
    if p.is_constant() {
        alloc::format!("{p}")
    } else {
        alloc::format!("({p})")
    }
}

impl fmt::Display for ExtElem {
    /// `p + q*c`, or `(p + q*c)/(den)` when a denominator remains.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c_term = if self.q.is_one() {
            String::from("c")
        } else if (-&self.q).is_one() {
            String::from("-c")
        } else {
            alloc::format!("{}*c", paren(&self.q))
        };
        let numer = match (self.p.is_zero(), self.q.is_zero()) {
            (_, true) => alloc::format!("{}", self.p),
            (true, false) => c_term,
            (false, false) => match c_term.strip_prefix('-') {
                Some(rest) => alloc::format!("{} - {rest}", self.p),
                None => alloc::format!("{} + {c_term}", self.p),
            },
        };
        if self.den.is_one() {
            f.write_str(&numer)
        } else {
            let single = self.q.is_zero() && self.p.is_constant();
            if single {
                write!(f, "{numer}/{}", paren(&self.den))
            } else {
                write!(f, "({numer})/{}", paren(&self.den))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn poly(c: &[i64]) -> ExtElem {
        ExtElem::from_poly(UniPoly::from_ints(c))
    }

    #[test]
    fn c_squares_to_discriminant() {
        let c = ExtElem::c();
        assert_eq!(&c * &c, poly(&[1, 8]));
    }

    #[test]
    fn roots_of_the_characteristic_polynomial() {
        let (a, b) = (ExtElem::alpha(), ExtElem::beta());
        // (1 - c^2)/4 = -2x
        assert_eq!(&a * &b, poly(&[0, -2]));
        assert_eq!(&a + &b, ExtElem::one());
        assert_eq!(&a - &b, ExtElem::c());
        // t^2 - t - 2x = 0
        assert!((&(&(&a * &a) - &a) - &poly(&[0, 2])).is_zero());
    }

    #[test]
    fn division() {
        let two_c = ExtElem::c().scale(&Rational::from(2));
        assert_eq!(two_c.checked_div(&two_c).unwrap(), ExtElem::one());
        // 1/(2c) = c / (2(8x+1))
        let inv = ExtElem::one().checked_div(&two_c).unwrap();
        let expected = ExtElem::new(
            UniPoly::zero(),
            UniPoly::one(),
            UniPoly::from_ints(&[2, 16]),
        )
        .unwrap();
        assert_eq!(inv, expected);
        assert_eq!(&inv * &two_c, ExtElem::one());
        let diff = &ExtElem::alpha() - &ExtElem::beta();
        assert_eq!(diff.checked_div(&ExtElem::c()).unwrap(), ExtElem::one());
        assert_eq!(
            ExtElem::one().checked_div(&ExtElem::zero()),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn normal_form_is_unique() {
        let x1 = UniPoly::from_ints(&[1, 1]);
        let a = ExtElem::new(&x1 * &x1, x1.clone(), &x1 * &UniPoly::from_ints(&[0, 3])).unwrap();
        let b = ExtElem::new(x1.clone(), UniPoly::one(), UniPoly::from_ints(&[0, 3])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.denominator(), &UniPoly::x());
        assert_eq!(
            ExtElem::new(UniPoly::one(), UniPoly::zero(), UniPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn norm_is_c_free() {
        let z = ExtElem::new(
            UniPoly::from_ints(&[3, 1]),
            UniPoly::from_ints(&[-2]),
            UniPoly::from_ints(&[1, 1]),
        )
        .unwrap();
        assert!(z.norm().is_c_free());
        assert_eq!(z.norm(), &z * &z.conj());
    }

    #[test]
    fn power_sum_sanity() {
        // alpha^2 + beta^2 = (alpha + beta)^2 - 2 alpha beta = 1 + 4x
        let s = &ExtElem::alpha().pow(2) + &ExtElem::beta().pow(2);
        assert_eq!(s.to_poly(), Some(UniPoly::from_ints(&[1, 4])));
    }

    #[test]
    fn text_form() {
        assert_eq!(ExtElem::c().to_string(), "c");
        assert_eq!(ExtElem::alpha().to_string(), "1/2 + 1/2*c");
        let inv = ExtElem::one().checked_div(&ExtElem::c()).unwrap();
        assert_eq!(inv.to_string(), "(1/8*c)/(1/8 + x)");
    }
}
