//! Jacobsthal and Jacobsthal-Lucas numbers, their split quaternions, and the
//! hyperbolic spinor sequences built from them, each by recurrence and by
//! closed form.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ext::ExtElem;
use crate::hyperbolic::Hyperbolic;
use crate::memo::Memo;
use crate::poly::UniPoly;
use crate::quat::SplitQuat;
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::spinor::{quat_to_spinor, ExtSpinor, HypSpinor, PolySpinor, Spinor};

/// Which hyperbolic spinor sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum SeqKind {
    /// Hyperbolic Jacobsthal spinors `HSJ_n`.
    Hsj,
    /// Hyperbolic Jacobsthal-Lucas spinors `HSJL_n`.
    Hsjl,
}

impl SeqKind {
    pub const ALL: [SeqKind; 2] = [SeqKind::Hsj, SeqKind::Hsjl];

    pub fn name(self) -> &'static str {
        match self {
            SeqKind::Hsj => "HSJ",
            SeqKind::Hsjl => "HSJL",
        }
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Converts a signed index; negative indices are not part of any sequence here.
pub fn checked_index(n: i64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::IndexOutOfRange(n))
}

fn step_by_two(cells: &[BigInt]) -> BigInt {
    let n = cells.len();
    &cells[n - 1] + (&cells[n - 2] << 1)
}

static JACOBSTHAL: Memo<BigInt> = Memo::new(|| vec![BigInt::zero(), BigInt::one()], step_by_two);
static JACOBSTHAL_LUCAS: Memo<BigInt> =
    Memo::new(|| vec![BigInt::from(2), BigInt::one()], step_by_two);
static JACOBSTHAL_POLY: Memo<UniPoly> = Memo::new(
    || vec![UniPoly::zero(), UniPoly::one()],
    |cells| {
        let n = cells.len();
        &cells[n - 1] + &cells[n - 2].shift(1).scale(&Rational::from(2))
    },
);

/// `J_0 = 0, J_1 = 1, J_n = J_{n-1} + 2 J_{n-2}`.
pub fn jacobsthal(n: usize) -> BigInt {
    JACOBSTHAL.get(n)
}

/// `jL_0 = 2, jL_1 = 1`, same recurrence as [`jacobsthal`].
pub fn jacobsthal_lucas(n: usize) -> BigInt {
    JACOBSTHAL_LUCAS.get(n)
}

/// The integer sequence underlying `kind`.
pub fn base_number(kind: SeqKind, n: usize) -> BigInt {
    match kind {
        SeqKind::Hsj => jacobsthal(n),
        SeqKind::Hsjl => jacobsthal_lucas(n),
    }
}

/// `X_n + i X_{n+1} + j X_{n+2} + k X_{n+3}` for the base sequence `X`.
pub fn split_quat_seq(kind: SeqKind, n: usize) -> SplitQuat {
    let x = |k: usize| Rational::from_integer(base_number(kind, n + k));
    SplitQuat::new(x(0), x(1), x(2), x(3))
}

/// `[X_n + u X_{n+3}; -X_{n+1} + u X_{n+2}]`, read from the integer caches.
pub fn spinor_term(kind: SeqKind, n: usize) -> HypSpinor {
    let x = |k: usize| Rational::from_integer(base_number(kind, n + k));
    Spinor::from_parts(x(0), x(3), -x(1), x(2))
}

/// Terms `0..=last` by the spinor recurrence `S_{n+2} = S_{n+1} + 2 S_n`,
/// started from the quaternion images of the first two split quaternions.
pub fn spinor_terms_by_recurrence(kind: SeqKind, last: usize) -> Vec<HypSpinor> {
    let two = Rational::from(2);
    let mut out = vec![
        quat_to_spinor(&split_quat_seq(kind, 0)),
        quat_to_spinor(&split_quat_seq(kind, 1)),
    ];
    while out.len() <= last {
        let n = out.len();
        out.push(out[n - 1].clone() + out[n - 2].scale_rational(&two));
    }
    out.truncate(last + 1);
    out
}

/// `sum_{s=0}^{t} S_{n+s}` by direct summation.
pub fn spinor_partial_sum(kind: SeqKind, n: usize, t: usize) -> HypSpinor {
    (n..=n + t).fold(Spinor::zero(), |acc, k| acc + spinor_term(kind, k))
}

/// Constants of the closed form over the roots `2` and `-1`:
/// `HSJ_n = (2^n A - (-1)^n B)/3` and `HSJL_n = 2^n A + (-1)^n B`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BinetConstants {
    pub kind: SeqKind,
    pub a: HypSpinor,
    pub b: HypSpinor,
    /// Whether these are the literal published constants rather than
    /// values solved from the seeds.
    pub printed: bool,
}

fn hs(a1: i64, b1: i64, a2: i64, b2: i64) -> HypSpinor {
    Spinor::from_parts(a1.into(), b1.into(), a2.into(), b2.into())
}

impl BinetConstants {
    /// Solves the 2x2 system given by the terms at `n = 0` and `n = 1`.
    pub fn derive(kind: SeqKind) -> Self {
        let s0 = spinor_term(kind, 0);
        let s1 = spinor_term(kind, 1);
        let third = Rational::new(1, 3).expect("nonzero");
        // S_n = P 2^n + Q (-1)^n  =>  P = (S0 + S1)/3, Q = (2 S0 - S1)/3
        let p = (s0.clone() + s1.clone()).scale_rational(&third);
        let q = (s0.scale_rational(&Rational::from(2)) - s1).scale_rational(&third);
        let (a, b) = match kind {
            SeqKind::Hsj => (
                p.scale_rational(&Rational::from(3)),
                q.scale_rational(&Rational::from(-3)),
            ),
            SeqKind::Hsjl => (p, q),
        };
        BinetConstants {
            kind,
            a,
            b,
            printed: false,
        }
    }

    /// The constants exactly as published. For `HSJ` the top-right entry
    /// of `A` reads `4u` where the seeds force `-2+4u`.
    pub fn printed(kind: SeqKind) -> Self {
        let a = match kind {
            SeqKind::Hsj => hs(1, 8, 0, 4),
            SeqKind::Hsjl => hs(1, 8, -2, 4),
        };
        BinetConstants {
            kind,
            a,
            b: hs(1, -1, 1, 1),
            printed: true,
        }
    }

    pub fn eval(&self, n: usize) -> HypSpinor {
        let pow2 = Rational::from_integer(BigInt::one() << n);
        let sign = Rational::from(if n.is_multiple_of(2) { 1 } else { -1 });
        let a = self.a.scale_rational(&pow2);
        let b = self.b.scale_rational(&sign);
        match self.kind {
            SeqKind::Hsj => (a - b).scale_rational(&Rational::new(1, 3).expect("nonzero")),
            SeqKind::Hsjl => a + b,
        }
    }
}

/// Closed-form term; `use_printed` swaps in the published constants.
pub fn spinor_binet(kind: SeqKind, n: usize, use_printed: bool) -> HypSpinor {
    let consts = if use_printed {
        BinetConstants::printed(kind)
    } else {
        BinetConstants::derive(kind)
    };
    consts.eval(n)
}

/// The Jacobsthal polynomial `J_n(x)`: `J_0 = 0, J_1 = 1,
/// J_n = J_{n-1} + 2x J_{n-2}`.
pub fn jacobsthal_poly(n: usize) -> UniPoly {
    JACOBSTHAL_POLY.get(n)
}

/// `[J_n(x) + u J_{n+3}(x); -J_{n+1}(x) + u J_{n+2}(x)]`.
pub fn spinor_poly_term(n: usize) -> PolySpinor {
    let j = |k: usize| jacobsthal_poly(n + k);
    Spinor::from_parts(j(0), j(3), -j(1), j(2))
}

/// Terms `0..=last` by `S_n(x) = S_{n-1}(x) + 2x S_{n-2}(x)`.
pub fn spinor_poly_terms_by_recurrence(last: usize) -> Vec<PolySpinor> {
    let two_x = UniPoly::from_ints(&[0, 2]);
    let mut out = vec![spinor_poly_term(0), spinor_poly_term(1)];
    while out.len() <= last {
        let n = out.len();
        out.push(out[n - 1].clone() + out[n - 2].scale(&two_x));
    }
    out.truncate(last + 1);
    out
}

/// Closed form `S_n(x) = X alpha^n + Y beta^n` over `Q(x)[c]`, `c^2 = 8x+1`,
/// with `X`, `Y` solved from `S_0(x)` and `S_1(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyBinet {
    /// `2c X = 2(S_1 - beta S_0)`.
    pub scaled_x: ExtSpinor,
    /// `2c Y = 2(alpha S_0 - S_1)`.
    pub scaled_y: ExtSpinor,
}

impl PolyBinet {
    pub fn derive() -> Self {
        let s0 = spinor_poly_term(0).to_ext();
        let s1 = spinor_poly_term(1).to_ext();
        let two = Rational::from(2);
        let scaled_x = (s1.clone() - s0.scale(&ExtElem::beta())).scale_rational(&two);
        let scaled_y = (s0.scale(&ExtElem::alpha()) - s1).scale_rational(&two);
        PolyBinet { scaled_x, scaled_y }
    }

    /// The element before division by `2c`: `2c X alpha^n + 2c Y beta^n`.
    pub fn numerator(&self, n: usize) -> ExtSpinor {
        let an = ExtElem::alpha().pow(n as u64);
        let bn = ExtElem::beta().pow(n as u64);
        self.scaled_x.scale(&an) + self.scaled_y.scale(&bn)
    }

    pub fn eval(&self, n: usize) -> Result<ExtSpinor> {
        let inv = ExtElem::c().scale(&Rational::from(2)).inv()?;
        Ok(self.numerator(n).scale(&inv))
    }
}

/// The published polynomial closed form taken at face value:
/// `(A(x) alpha + B(x) beta) / (2c)`, with no dependence on `n`.
pub fn printed_poly_binet() -> ExtSpinor {
    let x = || ExtElem::from_poly(UniPoly::x());
    let k = |v: i64| ExtElem::from_poly(UniPoly::constant(Rational::from(v)));
    let c = ExtElem::c;
    let four_x_1 = &(&k(4) * &x()) + &k(1);
    // A(x) = [-1 + c + (4x + 1 + c)u; -1 - c + (4x + 1 + c)u]
    let a = Spinor::new(
        Hyperbolic::new(&k(-1) + &c(), &four_x_1 + &c()),
        Hyperbolic::new(&k(-1) - &c(), &four_x_1 + &c()),
    );
    // B(x) = [-2 + (c(2x + 1) - 6x - 1)u; -1 - c + (c - 4x - 1)u]
    let two_x_1 = &(&k(2) * &x()) + &k(1);
    let six_x_1 = &(&k(6) * &x()) + &k(1);
    let b = Spinor::new(
        Hyperbolic::new(k(-2), &(&c() * &two_x_1) - &six_x_1),
        Hyperbolic::new(&k(-1) - &c(), &c() - &four_x_1),
    );
    let sum = a.scale(&ExtElem::alpha()) + b.scale(&ExtElem::beta());
    let inv = (&k(2) * &c()).inv().expect("2c is invertible");
    sum.scale(&inv)
}

/// Closed-form polynomial spinor; fails only if the division by `2c` were to
/// leave a `c` component or a remainder.
pub fn spinor_poly_binet(n: usize) -> Result<PolySpinor> {
    PolyBinet::derive()
        .eval(n)?
        .to_poly()
        .ok_or(Error::NotPolynomial)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(a1: i64, b1: i64, a2: i64, b2: i64) -> HypSpinor {
        super::hs(a1, b1, a2, b2)
    }

    #[test]
    fn integer_sequences() {
        assert_eq!(jacobsthal(0), BigInt::zero());
        assert_eq!(jacobsthal(3), BigInt::from(3));
        // (2^10 - 1)/3
        assert_eq!(jacobsthal(10), BigInt::from(341));
        assert_eq!(jacobsthal_lucas(0), BigInt::from(2));
        assert_eq!(jacobsthal_lucas(1), BigInt::one());
        // 2^5 - 1
        assert_eq!(jacobsthal_lucas(5), BigInt::from(31));
        assert_eq!(checked_index(-1), Err(Error::IndexOutOfRange(-1)));
        assert_eq!(checked_index(7), Ok(7));
    }

    #[test]
    fn split_quaternions() {
        assert_eq!(
            split_quat_seq(SeqKind::Hsj, 0),
            SplitQuat::from_ints(0, 1, 1, 3)
        );
        assert_eq!(
            split_quat_seq(SeqKind::Hsjl, 0),
            SplitQuat::from_ints(2, 1, 5, 7)
        );
        assert_eq!(
            split_quat_seq(SeqKind::Hsj, 2),
            SplitQuat::from_ints(1, 3, 5, 11)
        );
        let two = Rational::from(2);
        for kind in SeqKind::ALL {
            for n in 0..10 {
                let lhs = split_quat_seq(kind, n + 2);
                let rhs = split_quat_seq(kind, n + 1) + split_quat_seq(kind, n).scale(&two);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn spinor_terms() {
        assert_eq!(spinor_term(SeqKind::Hsj, 0), hs(0, 3, -1, 1));
        assert_eq!(spinor_term(SeqKind::Hsj, 2), hs(1, 11, -3, 5));
        assert_eq!(spinor_term(SeqKind::Hsjl, 1), hs(1, 17, -5, 7));
        let rec = spinor_terms_by_recurrence(SeqKind::Hsj, 2);
        assert_eq!(
            rec[2],
            rec[1].clone() + rec[0].scale_rational(&Rational::from(2))
        );
    }

    #[test]
    fn binet_constants_come_from_the_seeds() {
        let hsj = BinetConstants::derive(SeqKind::Hsj);
        assert_eq!(hsj.a, hs(1, 8, -2, 4));
        assert_eq!(hsj.b, hs(1, -1, 1, 1));
        let hsjl = BinetConstants::derive(SeqKind::Hsjl);
        assert_eq!(hsjl.a, hs(1, 8, -2, 4));
        assert_eq!(hsjl.b, hs(1, -1, 1, 1));
        assert_eq!(
            hsjl,
            BinetConstants {
                printed: false,
                ..BinetConstants::printed(SeqKind::Hsjl)
            }
        );
        assert_ne!(hsj.a, BinetConstants::printed(SeqKind::Hsj).a);
    }

    #[test]
    fn binet_terms() {
        assert_eq!(spinor_binet(SeqKind::Hsj, 0, false), hs(0, 3, -1, 1));
        let printed = spinor_binet(SeqKind::Hsj, 0, true);
        let third = Rational::new(-1, 3).unwrap();
        assert_eq!(
            printed,
            Spinor::from_parts(0.into(), 3.into(), third, 1.into())
        );
        assert_eq!(spinor_binet(SeqKind::Hsjl, 1, false), hs(1, 17, -5, 7));
        assert_eq!(spinor_binet(SeqKind::Hsjl, 1, true), hs(1, 17, -5, 7));
    }

    #[test]
    fn partial_sums() {
        assert_eq!(spinor_partial_sum(SeqKind::Hsj, 0, 0), hs(0, 3, -1, 1));
        assert_eq!(spinor_partial_sum(SeqKind::Hsj, 0, 1), hs(1, 8, -2, 4));
        assert_eq!(spinor_partial_sum(SeqKind::Hsjl, 0, 0), hs(2, 7, -1, 5));
    }

    #[test]
    fn jacobsthal_polynomials() {
        assert_eq!(jacobsthal_poly(1), UniPoly::one());
        assert_eq!(jacobsthal_poly(3), UniPoly::from_ints(&[1, 2]));
        assert_eq!(jacobsthal_poly(5), UniPoly::from_ints(&[1, 6, 4]));
    }

    #[test]
    fn polynomial_spinors() {
        let p = UniPoly::from_ints;
        let ps =
            |a: &[i64], b: &[i64], c: &[i64], d: &[i64]| Spinor::from_parts(p(a), p(b), p(c), p(d));
        assert_eq!(spinor_poly_term(0), ps(&[], &[1, 2], &[-1], &[1]));
        assert_eq!(spinor_poly_term(1), ps(&[1], &[1, 4], &[-1], &[1, 2]));
        assert_eq!(
            spinor_poly_term(0).eval(&Rational::from(1)),
            hs(0, 3, -1, 1)
        );
        let expected2 = ps(&[1], &[1, 6, 4], &[-1, -2], &[1, 4]);
        assert_eq!(spinor_poly_term(2), expected2);
        assert_eq!(spinor_poly_binet(0).unwrap(), spinor_poly_term(0));
        assert_eq!(spinor_poly_binet(2).unwrap(), expected2);
    }

    #[test]
    fn printed_poly_binet_misses_the_seed() {
        assert_ne!(printed_poly_binet(), spinor_poly_term(0).to_ext());
    }
}
