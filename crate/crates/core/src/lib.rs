//! Exact algebra for hyperbolic Jacobsthal, Jacobsthal-Lucas and
//! Jacobsthal-polynomial spinors built from split quaternions, together with
//! a registry of their identities and a brute-force grid verifier.
//!
//! Everything here is `no_std` + `alloc` and uses exact rationals only.

#![no_std]
extern crate alloc;

mod error;
mod ext;
mod hyperbolic;
mod memo;
mod poly;
mod quat;
mod rational;
mod scalar;
pub mod sequences;
pub mod series;
mod spinor;
pub mod verifier;

pub use error::{Error, Result};
pub use ext::{discriminant, ExtElem};
pub use hyperbolic::Hyperbolic;
pub use poly::UniPoly;
pub use quat::SplitQuat;
pub use rational::Rational;
pub use scalar::Scalar;
pub use sequences::SeqKind;
pub use spinor::{
    isotropic_vector, quat_to_spinor, spinor_star, spinor_to_quat, ExtSpinor, HypSpinor,
    IsotropicVector, PolySpinor, SpinMatrixC, Spinor,
};
