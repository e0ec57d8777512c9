//! Minimal algebraic interfaces shared by scalars, Hecke elements and
//! matrix blocks.

/// An associative ring with unit, not necessarily commutative.
///
/// Method names avoid clashing with `std::ops`.
pub trait Ring: Clone + PartialEq + Send + Sync {
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn is_zero(&self) -> bool;
}

/// A ring whose zero and one need no context to build.
pub trait RingConst: Ring {
    fn zero() -> Self;
    fn one() -> Self;
}
