//! Level-0 crystal combinatorics of affine sl2.
//!
//! The crate implements the spin crystal and its affinization, the m-path
//! model with its walls and domains, the path-spin morphism and the
//! classification of connected components by extremal vectors.
//!
//! ```
//! use sl2_crystal::crystal::{Crystal, Dir};
//! use sl2_crystal::elementary::Sign;
//! use sl2_crystal::morphism::psi_hat;
//! use sl2_crystal::path::construct_extremal;
//! use sl2_crystal::weights::Color;
//!
//! let p = construct_extremal(1, 0, 3, &[1, 0], &[0, 0], Sign::Plus, 0)?;
//! let q = p.apply(Color::Zero, Dir::Lower).unwrap();
//! assert_eq!(psi_hat(&q)?, psi_hat(&p)?.lower(Color::Zero).unwrap());
//! # Ok::<(), sl2_crystal::CrystalError>(())
//! ```

pub mod cli;
pub mod crystal;
pub mod element;
pub mod elementary;
pub mod error;
pub mod morphism;
pub mod oracle;
pub mod path;
pub mod sampling;
pub mod verify;
pub mod weights;

pub use error::{CrystalError, Result};
