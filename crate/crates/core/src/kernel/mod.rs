//! Exact scalar and polynomial arithmetic underpinning every other module.

pub mod bipoly;
pub mod jet;
pub mod linalg;
pub mod polymat;
pub mod rational;

pub use bipoly::BiPoly;
pub use jet::{jet_eval, Jet};
pub use linalg::int_matrix_rank;
pub use polymat::{poly_det, PolyMatrix};
pub use rational::{GaussRational, Rational};

use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Coefficient scalars the generic kernel and maps run over: exact rationals,
/// Gaussian rationals, and jets. `invertible` is the division precondition
/// (for jets only the value part must be nonzero, the gradient may vanish).
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn invertible(&self) -> bool;
}

impl Scalar for Rational {
    fn invertible(&self) -> bool {
        !self.is_zero()
    }
}

impl Scalar for GaussRational {
    fn invertible(&self) -> bool {
        !self.is_zero()
    }
}

impl Scalar for Jet {
    fn invertible(&self) -> bool {
        !self.value().is_zero()
    }
}
