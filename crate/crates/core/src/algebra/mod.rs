//! Exact arithmetic: rationals, sparse multivariate polynomials, dense univariate
//! polynomials over ℚ and ℚ(α), univariate factorization and resultants.

mod factor;
mod field;
mod modp;
mod monomial;
mod numfield;
mod poly;
mod rational;
mod resultant;
mod upoly;

pub use factor::{factor_over_number_field, factor_univariate, factor_univariate_poly, DEGREE_CAP};
pub use field::{Field, RationalField};
pub use monomial::Monomial;
pub use numfield::{NumberField, NumberFieldElement};
pub(crate) use numfield::upoly_to_string;
pub use poly::{squarefree_part, MultiPoly};
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use resultant::{resultant, resultant_with_caveat};
pub use upoly::UPoly;
