//! Exact computation of the truncated de Rham cohomology `H^1(C) = Ω^1(C)/dO(C)` of
//! reduced affine plane curves over the rationals.
//!
//! Two independent routes are provided:
//!
//! * the *formula* route: first Betti number of the curve (via projective closure,
//!   genera and branch counts) plus the sum of local Milnor numbers of its singular points;
//! * the *oracle* route: degree-truncated exact linear algebra on the module of Kähler
//!   differentials of the coordinate ring.
//!
//! On top of this, [`family`] analyzes fibers of polynomial maps and checks lower
//! semicontinuity of the fiberwise dimension.

pub mod algebra;
pub mod cli;
pub mod derham;
pub mod error;
pub mod family;
pub mod groebner;
pub mod oracle;
pub mod singular;
pub mod topology;

pub use error::{Error, Result};
