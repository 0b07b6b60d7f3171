//! Passports of real Morse polynomials.
//!
//! * [`polycore`]: exact polynomial arithmetic, Sturm root isolation, resultants.
//! * [`snakes`]: proper alternating permutations and the Euler–Bernoulli triangle.
//! * [`morse`]: critical data, passports and construction of realizing polynomials.

pub mod contour;
pub mod error;
pub mod morse;
pub mod polycore;
pub mod sign;
pub mod snakes;
pub mod strata5;
pub mod strata6;

pub use error::{Error, Result};
pub use morse::{passport, CriticalPointSpec, PassportOutcome};
pub use polycore::{Polynomial, Rational};
pub use sign::Sign;
pub use snakes::{is_pap, EBTriangle, Passport};
