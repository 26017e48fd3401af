//! Exact finite geometry of the three-qubit Pauli group.
//!
//! The 63 nontrivial three-qubit observables (up to sign) are the points of
//! the symplectic polar space W(5,2); its 135 planes are the maximal sets of
//! seven mutually commuting observables ("heptads"). This crate builds that
//! geometry from bit-level GF(2) arithmetic and layers on top of it:
//!
//! - [`clifford7`]: a Cliff(7) labeling of the 63 observables and the
//!   order-seven automorphism that permutes its generators cyclically;
//! - [`spgroup`]: concrete generators of Sp(6,2) in the 6-dimensional and
//!   8-dimensional (spin module) representations, group closure and orbits;
//! - [`grassmann`]: the Plücker embedding of planes and the resulting
//!   bijection between heptads and symmetric four-qubit observables;
//! - [`mermin`]: enumeration and sign certification of Mermin pentagrams;
//! - [`hexagon`]: the split Cayley hexagon of order two inside Q⁺(7,2).
//!
//! ```
//! use heptads::{grassmann, polar};
//!
//! let planes = polar::context_space();
//! assert_eq!(planes.len(), 135);
//! let image = grassmann::plane_to_four_qubit(&planes[0]);
//! assert!(image.is_symmetric());
//! ```

pub mod clifford7;
pub mod gf2;
pub mod grassmann;
pub mod hexagon;
pub mod mermin;
pub mod pauli;
pub mod polar;
pub mod spgroup;

pub use gf2::{Gf2Matrix, Gf2Vector};
pub use pauli::PauliOperator;
pub use polar::IsotropicPlane;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },
    #[error("the zero vector is not allowed here")]
    ZeroVector,
    #[error("basis has rank {0}, expected 3")]
    RankDeficient(usize),
    #[error("subspace is not totally isotropic")]
    NotIsotropic,
    #[error("{0} is not a symmetric four-qubit class")]
    NotOnQuadric(String),
    #[error("{0} is symmetric; an antisymmetric class is required")]
    SymmetricRejected(String),
    #[error("invalid spread: {0}")]
    InvalidSpread(String),
    #[error("invalid pentad: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    InvalidPentad(Vec<mermin::PentadViolation>),
    #[error("not a line of the quadric: {0}")]
    NotAQuadricLine(String),
    #[error("inconsistent geometry: {0}")]
    Inconsistent(String),
    #[error("construction failed: {0}")]
    Construction(String),
}
