//! Exact computer algebra for Drinfeld-Jimbo quantum enveloping algebras,
//! their cocycle twists and the Galois objects `A_λ`.
//!
//! Everything is computed over exact rationals: the deformation parameter
//! `q` and the family `λ` are specialized to rational numbers, and every
//! identity is checked on the nose.
//!
//! The crate is organized bottom-up:
//!
//! * [`coeffs`]: exact scalars, parameter sets and balanced q-integers.
//! * [`cartan`]: Cartan data, presets and validation.
//! * [`algebra`]: the rewriting engine for `U`, `gr U`, `A_λ` and the
//!   quantum torus, Serre elements, and the relabeling maps `φ_λ` / `ψ`.
//! * [`hopf`]: coproduct, counit, antipode and the coaction on `A_λ`.
//! * [`cocycle`]: bilinear forms (`σ_λ`, `σ̃_λ`, `ρ`, `σ_ρ`), convolution and
//!   first-principles twisted products.
//! * [`galois`]: restriction to the group algebra, truncated cotensor
//!   products and the homotopy invariant.
//! * [`cli`]: expression parser, canonical printer, JSON configuration and
//!   the command-line driver, including the verification suites.

pub mod algebra;
pub mod cartan;
pub mod cli;
pub mod cocycle;
pub mod coeffs;
mod error;
pub mod galois;
pub mod hopf;
pub mod linalg;
pub mod sample;

pub use algebra::{AlgebraSpec, Element, Generator, Kind, NormalWord};
pub use cartan::{CartanDatum, Family};
pub use coeffs::{make_params, ParamSet, Scalar};
pub use error::{Error, Result};
pub use hopf::TensorElement;
