//! Optimal classical-ball and horoball packings of the hyperbolic Coxeter
//! tilings `{∞, q, r, ∞}`.
//!
//! Each tiling is generated by a simply truncated orthoscheme with a pair of
//! parallel faces. The crate builds the fundamental polyhedron in the
//! projective (Beltrami–Cayley–Klein) model of hyperbolic 3-space, computes
//! its volume from the Lobachevsky function, and derives:
//!
//! * the optimal inscribed ball and its packing density ([`inball`]),
//! * the optimal one- and two-type horoball packings ([`horoball`]).
//!
//! All geometry lives in the signature `(1,3)` Lorentz space ([`lorentz`]).
//! [`reference`] holds the published tables used by the `hypack verify`
//! command.

pub mod error;
pub mod horoball;
pub mod inball;
pub mod lorentz;
pub mod optimize;
pub mod orthoscheme;
pub mod reference;
pub mod report;

pub use error::{Error, Result};
pub use lorentz::{LorentzIsometry, LorentzVector, PointClass};
pub use orthoscheme::{SchlafliMatrices, TilingParams, TruncatedOrthoscheme};
