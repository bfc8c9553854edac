//! Exact computations in the restricted quantum group `U_q sl2` at
//! `q = exp(πi/p)`.
//!
//! The algebra is realised concretely: scalars live in the cyclotomic field
//! `Q(ζ_{2p})` ([`cyclotomic`]), elements are sparse combinations of PBW
//! monomials `E^a F^b K^c` ([`pbw`]), and every structural statement
//! (idempotents, projective modules, the Casimir block decomposition, the
//! basic algebra and its trace space) is checked by exact arithmetic.

pub mod basic;
pub mod center;
pub mod cyclotomic;
pub mod error;
pub mod idempotents;
pub mod linalg;
pub mod pbw;
pub mod poly;
pub mod repr;
pub mod sign;
pub mod verify;

pub use cyclotomic::{CycField, CycNum, Rational, RationalPoly};
pub use error::{Error, Result};
pub use pbw::{Element, Monomial, Uq};
pub use repr::{check_relations, projective_module, simple_module, Representation};
pub use sign::Sign;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/field.md")]
    mod field {}
    #[doc = include_str!("../../../book/src/pbw.md")]
    mod pbw {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/idempotents.md")]
    mod idempotents {}
    #[doc = include_str!("../../../book/src/center.md")]
    mod center {}
    #[doc = include_str!("../../../book/src/basic.md")]
    mod basic {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
