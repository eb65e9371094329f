//! Exact-arithmetic implementation of the family of discrete integrable maps
//! T_k (the pentagram map at k = 3): cluster (p,q)-dynamics, invariant
//! log-canonical Poisson structures, Lax matrices with their bivariate
//! spectral polynomial, and the geometric realizations on corrugated
//! polygons and pairs of projective-line polygons.
//!
//! Everything the theory states as a polynomial or rational identity is
//! verified as an equality of exact rationals; the single floating-point
//! corner is the plane-polygon reconstruction, whose branches are invariant
//! subspaces and hence irrational.
//!
//! ```
//! use pentagram_maps::dynamics::{map_T, map_T_inv, MapShape, XYState};
//! use pentagram_maps::{lax, Rational};
//!
//! let shape = MapShape::new(3, 5)?;
//! let s = XYState::new(
//!     shape,
//!     (1..=5).map(Rational::from_int).collect(),
//!     vec![Rational::from_int(1); 5],
//! )?;
//! // the map is birational on the regular locus ...
//! assert_eq!(map_T_inv(&map_T(&s)?)?, s);
//! // ... and preserves every coefficient of det(I + z M(lambda)) exactly
//! let before = lax::spectral(&s)?;
//! let after = lax::spectral(&map_T(&s)?)?;
//! assert_eq!(before.poly(), after.poly());
//! # Ok::<(), pentagram_maps::Error>(())
//! ```

// The maps are called T_k, D_k, C_k and the measurement matrices L, M, A;
// keeping those names beats snake_casing them into anonymity.
#![allow(non_snake_case)]

pub mod dynamics;
pub mod error;
pub mod geometry;
pub mod io;
pub mod kernel;
pub mod lax;
pub mod leapfrog;
pub mod poisson;
pub mod report;
pub mod sample;

pub use error::{Error, Result};
pub use kernel::{BiPoly, GaussRational, Jet, PolyMatrix, Rational};

pub use dynamics::{CornerState, MapShape, PQState, XYState};
pub use geometry::{LiftedPolygon, RP1Point};
pub use lax::IntegralTable;
pub use leapfrog::LeapfrogState;
