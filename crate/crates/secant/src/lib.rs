//! Exact computation of Euler (secant) numbers and their relatives.
//!
//! Everything in this crate is computed over arbitrary-precision integers
//! and rationals; there is no floating point anywhere. The same quantities
//! are produced by several independent algorithms and the crate's tests (and
//! the `verify` module) insist on bit-exact agreement between them.
//!
//! Module map:
//! - [`exact`]: big integers/rationals, binomials, the triangular table container
//! - [`series`]: truncated formal power series, the brute-force oracle substrate
//! - [`poly`]: dense univariate polynomials over the rationals
//! - [`central`]: central factorial polynomials and numbers, differences of nothing
//! - [`gcoeff`]: sech-power expansion coefficients and the secant derivative triangle
//! - [`euler`]: Euler (secant) numbers by five independent routes
//! - [`gen_euler`]: generalized Euler numbers by four routes
//! - [`verify`]: mechanical, exact verification of the identity catalogue

pub mod central;
pub mod euler;
pub mod exact;
pub mod gcoeff;
pub mod gen_euler;
pub mod poly;
pub mod series;
pub mod verify;

pub use central::FactorialTables;
pub use euler::{EulerMethod, EulerValue};
pub use exact::{Int, Rat, Triangle};
pub use gcoeff::{GTable, SternTable};
pub use gen_euler::{GenEulerMethod, GenEulerValue};
pub use poly::Polynomial;
pub use series::{ElemFn, PowerSeries};
pub use verify::{Counterexample, VerificationReport};
