//! Truncated formal power series and the generating-function expansions.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hyperbolic::Hyperbolic;
use crate::poly::UniPoly;
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::sequences::{spinor_poly_term, spinor_term, SeqKind};
use crate::spinor::{HypSpinor, PolySpinor, Spinor};

/// `sum_{n <= order} coeffs[n] x^n + O(x^{order+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Clone> Series<C> {
    /// `coeffs` must be nonempty; its length fixes the truncation order.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series has at least one coefficient"
        );
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&C> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        Series { coeffs }
    }
}

impl<C: Clone + Zero> Series<C> {
    /// Pads or cuts a finite coefficient list to the given order.
    pub fn from_prefix(prefix: &[C], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| prefix.get(k).cloned().unwrap_or_else(C::zero))
            .collect();
        Series { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k].clone() + other.coeffs[k].clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Series<T> {
    /// Cauchy product modulo `x^{min order + 1}`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|n| {
                    (0..=n).fold(T::zero(), |acc, k| {
                        acc + self.coeffs[k].clone() * other.coeffs[n - k].clone()
                    })
                })
                .collect(),
        }
    }

    /// Reciprocal series; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0].try_inv().ok_or(Error::NotInvertible)?;
        let mut out: Vec<T> = Vec::with_capacity(self.coeffs.len());
        out.push(c0_inv.clone());
        for n in 1..self.coeffs.len() {
            let acc = (1..=n).fold(T::zero(), |acc, k| {
                acc + self.coeffs[k].clone() * out[n - k].clone()
            });
            out.push(-(acc * c0_inv.clone()));
        }
        Ok(Series { coeffs: out })
    }

    pub fn div(&self, divisor: &Self) -> Result<Self> {
        Ok(self.mul(&divisor.inverse()?))
    }

    /// `1 - x - 2 lambda x^2`, truncated.
    pub fn characteristic(lambda: &T, order: usize) -> Self {
        let two = Rational::from(2);
        let prefix = [T::one(), -T::one(), -lambda.scale(&two)];
        Self::from_prefix(&prefix, order)
    }
}

/// Coefficients of `1 / (1 - x - 2 lambda x^2)` up to `x^order`:
/// `a_0 = a_1 = 1`, `a_n = a_{n-1} + 2 lambda a_{n-2}`.
pub fn denom_inverse<T: Scalar>(lambda: &T, order: usize) -> Series<T> {
    let two_lambda = lambda.scale(&Rational::from(2));
    let mut coeffs: Vec<T> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let next = match n {
            0 | 1 => T::one(),
            _ => coeffs[n - 1].clone() + two_lambda.clone() * coeffs[n - 2].clone(),
        };
        coeffs.push(next);
    }
    Series { coeffs }
}

impl<T: Scalar> Series<Spinor<T>> {
    /// Product with a scalar series.
    pub fn scaled_by(&self, scalars: &Series<T>) -> Self {
        let order = self.order().min(scalars.order());
        Series {
            coeffs: (0..=order)
                .map(|n| {
                    (0..=n).fold(Spinor::zero(), |acc, k| {
                        acc + self.coeffs[k].scale(&scalars.coeffs[n - k])
                    })
                })
                .collect(),
        }
    }
}

fn hs(a1: i64, b1: i64, a2: i64, b2: i64) -> HypSpinor {
    Spinor::from_parts(a1.into(), b1.into(), a2.into(), b2.into())
}

/// Numerator `N_0 + N_1 x` of the generating function over `1 - x - 2x^2`.
///
/// The corrected numerator is `S_0 + (S_1 - S_0) x`; the published one is
/// `x[3u; -1+2u] - [1+8u; -2+4u]` for `HSJ` and
/// `x[2+7u; -1+5u] - 3[1+8u; -2+4u]` for `HSJL`.
pub fn gen_function_numerator(kind: SeqKind, use_printed: bool) -> [HypSpinor; 2] {
    if use_printed {
        let a = hs(1, 8, -2, 4);
        match kind {
            SeqKind::Hsj => [-a, hs(0, 3, -1, 2)],
            SeqKind::Hsjl => [-a.scale_rational(&Rational::from(3)), hs(2, 7, -1, 5)],
        }
    } else {
        let s0 = spinor_term(kind, 0);
        let s1 = spinor_term(kind, 1);
        [s0.clone(), s1 - s0]
    }
}

/// Expansion of the generating function of `kind` up to `x^order`.
pub fn gen_function_series(kind: SeqKind, order: usize, use_printed: bool) -> Series<HypSpinor> {
    let numer = Series::from_prefix(&gen_function_numerator(kind, use_printed), order);
    numer.scaled_by(&denom_inverse(&Rational::one(), order))
}

/// Numerator of the bivariate generating function over `1 - t - 2x t^2`,
/// as coefficients of `t^0` and `t^1`.
///
/// Corrected: `(1 - t) S_0(x) + t S_1(x)`. Published:
/// `(1 - t)[(2x+1)u; -1+u] + [1+(4x+1)u; -1+(2x+1)u]`, whose second term
/// lacks the factor `t`.
pub fn poly_gen_numerator(use_printed: bool) -> [PolySpinor; 2] {
    if use_printed {
        let p = UniPoly::from_ints;
        let first = Spinor::new(
            Hyperbolic::new(UniPoly::zero(), p(&[1, 2])),
            Hyperbolic::new(p(&[-1]), p(&[1])),
        );
        let second = Spinor::new(
            Hyperbolic::new(p(&[1]), p(&[1, 4])),
            Hyperbolic::new(p(&[-1]), p(&[1, 2])),
        );
        [first.clone() + second, -first]
    } else {
        let s0 = spinor_poly_term(0);
        let s1 = spinor_poly_term(1);
        [s0.clone(), s1 - s0]
    }
}

/// Expansion in `t` of the bivariate generating function up to `t^order`.
pub fn poly_gen_series(order: usize, use_printed: bool) -> Series<PolySpinor> {
    let numer = Series::from_prefix(&poly_gen_numerator(use_printed), order);
    numer.scaled_by(&denom_inverse(&UniPoly::x(), order))
}
