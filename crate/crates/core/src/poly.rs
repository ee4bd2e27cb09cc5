//! Dense univariate polynomials over the rationals.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scalar::Scalar;

/// Polynomial in `x` with rational coefficients, index = degree.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * at) + c)
    }

    /// Euclidean division. Returns `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &UniPoly) -> Option<(UniPoly, UniPoly)> {
        let dd = divisor.degree()?;
        let lead_inv = divisor.leading()?.recip().ok()?;
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree().filter(|&d| d >= dd) else {
            return Some((UniPoly::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd] * &lead_inv;
            if top.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&top * dc);
            }
            quot[k] = top;
        }
        rem.truncate(dd);
        Some((UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem)))
    }

    /// Exact quotient, or `None` if `divisor` is zero or leaves a remainder.
    pub fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Scales to leading coefficient one. The zero polynomial stays zero.
    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            Some(lead) => self.scale(&lead.recip().expect("leading coefficient is nonzero")),
            None => UniPoly::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r.monic();
        }
        a
    }
}

impl Zero for UniPoly {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for UniPoly {
    fn one() -> Self {
        Self::from_ints(&[1])
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &'a UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &'a UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &'a UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl Scalar for UniPoly {
    fn from_rational(r: Rational) -> Self {
        UniPoly::constant(r)
    }

    fn try_inv(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.recip().ok().map(UniPoly::constant),
            _ => None,
        }
    }

    fn is_atom(&self) -> bool {
        self.is_constant()
    }

    fn scale(&self, r: &Rational) -> Self {
        UniPoly::scale(self, r)
    }
}

impl fmt::Display for UniPoly {
    /// `a0 + a1*x + a2*x^2`, zero terms omitted, unit coefficients elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = if c.is_negative() { -c } else { c.clone() };
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    f.write_str("x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for UniPoly {
    type Err = Error;

    /// Parses the printed form; accepts `c`, `c*x`, `x`, `c*x^k`, `x^k` terms
    /// joined by `+`/`-`, in any order, whitespace ignored.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            kind: "polynomial",
            input: s.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        let bytes = compact.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            if (b == b'+' || b == b'-') && i > 0 && bytes[i - 1] != b'^' {
                terms.push((negative, &compact[start..i]));
                negative = b == b'-';
                start = i + 1;
            } else if (b == b'+' || b == b'-') && i == 0 {
                negative = b == b'-';
                start = 1;
            }
        }
        terms.push((negative, &compact[start..]));

        let mut out = UniPoly::zero();
        for (neg, body) in terms {
            if body.is_empty() {
                return Err(bad());
            }
            let (coeff, power) = match body.find('x') {
                None => (body.parse::<Rational>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let coeff = match &body[..pos] {
                        "" => Rational::one(),
                        pre => pre
                            .strip_suffix('*')
                            .ok_or_else(bad)?
                            .parse::<Rational>()
                            .map_err(|_| bad())?,
                    };
                    let power = match &body[pos + 1..] {
                        "" => 1,
                        rest => rest
                            .strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<usize>()
                            .map_err(|_| bad())?,
                    };
                    (coeff, power)
                }
            };
            let coeff = if neg { -coeff } else { coeff };
            out = &out + &UniPoly::constant(coeff).shift(power);
        }
        Ok(out)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for UniPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn zero_is_empty_and_trimmed() {
        assert!(p(&[0, 0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(UniPoly::zero().degree(), None);
    }

    #[test]
    fn multiplication() {
        let two_x = p(&[0, 2]);
        assert_eq!(&two_x * &UniPoly::one(), two_x);
        assert_eq!(&two_x * &p(&[1, 2]), p(&[0, 2, 4]));
        // one recurrence step: J_4(x) = J_3(x) + 2x J_2(x)
        let j2 = UniPoly::one();
        let j3 = p(&[1, 2]);
        assert_eq!(&(&j2 * &two_x) + &(&j3 * &UniPoly::one()), p(&[1, 4]));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, 2]).eval(&Rational::from(1)), Rational::from(3));
        assert!(UniPoly::zero().eval(&Rational::from(17)).is_zero());
        let half = Rational::new(1, 2).unwrap();
        assert_eq!(p(&[1, 4]).eval(&half), Rational::from(3));
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // x^2 - 1
        let b = p(&[1, 1]); // x + 1
        assert_eq!(a.div_exact(&b), Some(p(&[-1, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&b), None);
        let (q, r) = p(&[3, 0, 2]).div_rem(&p(&[0, 2])).unwrap();
        assert_eq!((q, r), (p(&[0, 1]), p(&[3])));
        assert!(a.div_rem(&UniPoly::zero()).is_none());
        let g = (&a * &p(&[2, 3])).gcd(&(&p(&[4, 6]) * &p(&[5, 1])));
        assert_eq!(
            g,
            UniPoly::from_coeffs(alloc::vec![Rational::new(2, 3).unwrap(), Rational::one()])
        );
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[1, 6, 4]).to_string(), "1 + 6*x + 4*x^2");
        assert_eq!(p(&[-1, -2]).to_string(), "-1 - 2*x");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(UniPoly::zero().to_string(), "0");
        let half_x = UniPoly::x().scale(&Rational::new(-1, 2).unwrap());
        assert_eq!(half_x.to_string(), "-1/2*x");
        for s in [
            "1 + 6*x + 4*x^2",
            "-1 - 2*x",
            "x",
            "0",
            "-1/2*x",
            "3*x^5 - x^2 + 7",
        ] {
            let parsed: UniPoly = s.parse().unwrap();
            assert_eq!(parsed.to_string().parse::<UniPoly>().unwrap(), parsed);
        }
        assert_eq!("-x^2+x".parse::<UniPoly>().unwrap(), p(&[0, 1, -1]));
        for bad in ["", "x*2", "2x", "x^", "1 +", "y"] {
            assert!(bad.parse::<UniPoly>().is_err(), "{bad}");
        }
    }
}
