//! Exact algebra for polycyclic codes over small finite fields.
//!
//! The crate is `no_std` (it only needs `alloc`) and is organised bottom-up:
//!
//! * [`field`]: table-backed arithmetic in `GF(p^s)` with discrete logs,
//!   traces and binomial root solving.
//! * [`poly`]: dense univariate polynomials, Euclidean and closed-form
//!   binomial gcds.
//! * [`factor`]: complete factorization over `GF(q)` and monic divisor
//!   enumeration.
//! * [`equiv`]: ambient spaces `GF(q)[x]/<x^n - a(x)>`, isometry witnesses
//!   `f(x) -> f(alpha x)` and equivalence-class enumeration.
//! * [`codes`]: polycyclic codes, generator/parity-check matrices and
//!   minimum distance.
//! * [`trinomial`]: Artin–Schreier trinomials and the closed-form
//!   factorizations of `x^(p^(l+1)) - x^(p^l) - 1` and `x^(p^(l+s)) - x^(p^l) - 1`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod codes;
pub mod equiv;
mod error;
pub mod factor;
pub mod field;
pub mod poly;
pub mod trinomial;

pub use codes::{CodeParams, DistanceMethod, DistanceResult, Matrix, PolycyclicCode, Strategy};
pub use equiv::{AmbientSpace, ClassIndex, EquivWitness};
pub use error::{Error, Result};
pub use factor::Factorization;
pub use field::{Elem, FieldRef, GaloisField};
pub use poly::Poly;
pub use trinomial::{AsFactorization, GeneratorFamily};
