//! Shared numerical machinery: quadrature, root finding, ODE stepping,
//! and compensated summation.

pub mod ode;
pub mod quad;
pub mod roots;
pub mod sum;

pub use ode::{Rk45, RkOptions};
pub use quad::{gauss_legendre, GaussLegendre};
pub use roots::{brent, expand_bracket, newton_bracketed};
pub use sum::{Kahan, TwoFloat};
