//! Split quaternions `a + bi + cj + dk` with `i^2 = -1`, `j^2 = k^2 = 1`,
//! `ij = k = -ji`, over exact rationals.

use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SplitQuat {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl SplitQuat {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        SplitQuat { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    /// `a - bi - cj - dk`, the conjugate for which `q * conj(q)` is the norm.
    pub fn conj(&self) -> Self {
        SplitQuat {
            a: self.a.clone(),
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    /// `a^2 + b^2 - c^2 - d^2`.
    pub fn norm(&self) -> Rational {
        let sq = |x: &Rational| x * x;
        &(&sq(&self.a) + &sq(&self.b)) - &(&sq(&self.c) + &sq(&self.d))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        SplitQuat {
            a: &self.a * r,
            b: &self.b * r,
            c: &self.c * r,
            d: &self.d * r,
        }
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

impl Add for SplitQuat {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        SplitQuat::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl Sub for SplitQuat {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        SplitQuat::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl Neg for SplitQuat {
    type Output = Self;
    fn neg(self) -> Self {
        SplitQuat::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl<'a> Mul<&'a SplitQuat> for &'a SplitQuat {
    type Output = SplitQuat;
    // i^2 = -1, j^2 = k^2 = 1, ij = k, ji = -k, jk = -i, kj = i, ki = j, ik = -j
    fn mul(self, o: &'a SplitQuat) -> SplitQuat {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        let m = |x: &Rational, y: &Rational| x * y;
        SplitQuat {
            a: m(a1, a2) - m(b1, b2) + m(c1, c2) + m(d1, d2),
            b: m(a1, b2) + m(b1, a2) - m(c1, d2) + m(d1, c2),
            c: m(a1, c2) + m(c1, a2) - m(b1, d2) + m(d1, b2),
            d: m(a1, d2) + m(d1, a2) + m(b1, c2) - m(c1, b2),
        }
    }
}

impl Mul for SplitQuat {
    type Output = SplitQuat;
    fn mul(self, o: SplitQuat) -> SplitQuat {
        &self * &o
    }
}

impl Zero for SplitQuat {
    fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }
    fn is_zero(&self) -> bool {
        self.is_scalar() && self.a.is_zero()
    }
}

impl One for SplitQuat {
    fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }
}

impl fmt::Display for SplitQuat {
    /// `1+2i-3k`; unit coefficients are elided, zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            wrote = true;
        }
        for (coeff, unit) in [(&self.b, 'i'), (&self.c, 'j'), (&self.d, 'k')] {
            if coeff.is_zero() {
                continue;
            }
            let neg = coeff.is_negative();
            if neg {
                f.write_str("-")?;
            } else if wrote {
                f.write_str("+")?;
            }
            let mag = if neg { -coeff } else { coeff.clone() };
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{unit}")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for SplitQuat {
    type Err = Error;

    /// Parses sums of terms like `3`, `-1/2`, `i`, `2j`, `-3/4k`, in any order.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            kind: "split quaternion",
            input: s.to_string(),
        };
        let compact: alloc::string::String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = SplitQuat::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ if rest.len() == compact.len() => (false, rest),
                _ => return Err(bad()),
            };
            let end = body[1.min(body.len())..]
                .find(['+', '-'])
                .map_or(body.len(), |p| p + 1);
            let term = &body[..end];
            rest = &body[end..];
            let (num, unit) = match term.chars().last() {
                Some(u @ ('i' | 'j' | 'k')) => (&term[..term.len() - 1], Some(u)),
                Some(_) => (term, None),
                None => return Err(bad()),
            };
            let mut value = match num {
                "" if unit.is_some() => Rational::one(),
                _ => num.parse::<Rational>().map_err(|_| bad())?,
            };
            if neg {
                value = -value;
            }
            let slot = match unit {
                None => &mut out.a,
                Some('i') => &mut out.b,
                Some('j') => &mut out.c,
                _ => &mut out.d,
            };
            *slot = &*slot + &value;
        }
        Ok(out)
    }
}
