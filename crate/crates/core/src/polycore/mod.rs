//! Exact univariate polynomial arithmetic over the rationals: evaluation,
//! calculus, Sturm-based root isolation, resultants and discriminants.

mod poly;
pub mod rational;
mod resultant;
mod roots;

pub use poly::Polynomial;
pub use rational::{int, parse_rational, pow, rat, to_f64, Rational};
pub use resultant::{discriminant, resultant};
pub use roots::{
    approximate_root, cauchy_bound, count_in_closed, isolate_real_roots, real_root_count,
    refine_root, refine_with_square_free, IsolatedRoot, SturmChain,
};

pub(crate) use roots::ser_rational;

pub fn eval(p: &Polynomial, x: &Rational) -> Rational {
    p.eval(x)
}

pub fn derivative(p: &Polynomial) -> Polynomial {
    p.derivative()
}

pub fn integrate_from_zero(p: &Polynomial) -> Polynomial {
    p.integrate_from_zero()
}
