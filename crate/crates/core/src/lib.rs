pub mod error;
pub mod hecke;
pub mod lkrep;
pub mod ring;
pub mod rootsys;
pub mod scalar;
pub mod verify;
pub mod wordalg;

pub use error::{Error, Result};
pub use ring::{Ring, RingConst};
pub use scalar::{Poly, RatFunc, Scalar, Q};
pub use rootsys::{DynkinType, Family, Node, Root, RootSystem, WeylElement};
pub use hecke::{HeckeAlgebra, HeckeElement};
pub use lkrep::{CoeffAlgebra, LkModel, RepMatrix, Z0Coeffs};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/roots.md")]
    mod roots {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/hecke.md")]
    mod hecke {}
    #[doc = include_str!("../../../book/src/representation.md")]
    mod representation {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
