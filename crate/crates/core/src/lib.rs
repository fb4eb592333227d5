//! Exact representation-theoretic data and Mellin closed forms for the
//! analytic torsion of finite-volume hyperbolic manifolds X = Γ\Spin(d,1)/Spin(d).

pub mod branching;
pub mod cfunc;
pub mod cli;
pub mod error;
pub mod kostant;
pub mod liedata;
pub mod mellin;
pub mod plancherel;
pub mod poly;
pub mod quad;
pub mod rational;
pub mod special;
pub mod torsion;

pub use error::{Error, Result};
pub use liedata::{Parity, RankData, Role, Weight};
pub use poly::RatPoly;
pub use rational::Q;
