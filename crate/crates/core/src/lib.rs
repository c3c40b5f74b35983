//! Exact operadic calculus on endomorphism operads of finite-dimensional
//! rational modules.
//!
//! The toolkit represents multilinear operations as exact coefficient
//! tensors and builds, on top of the partial compositions, the standard
//! calculus of a non-symmetric operad: operadic flows and cup products,
//! Gerstenhaber brackets, the coboundary operator with its Hochschild
//! expansion and exact cohomology tables, deformation residuals of the
//! Maurer-Cartan and Yang-Mills type, and linear time evolution generated
//! by degree-1 cocycles. All algebra is over arbitrary-precision rationals;
//! the only floating-point boundary is trajectory integration.

pub mod algebra;
pub mod cohomology;
pub mod deformation;
pub mod dynamics;
pub mod flows;
pub mod linalg;
pub mod operation;
pub mod regions;
pub mod rng;
pub mod scalar;
pub mod verify;

mod error;

pub use algebra::AlgebraSpec;
pub use error::Error;
pub use operation::Operation;
pub use scalar::Scalar;

pub type Result<T> = std::result::Result<T, Error>;
