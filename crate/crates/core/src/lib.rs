//! Exact computation of (mixed-Hodge-graded) cohomology tables for
//! multiplicity strata of symmetric powers of the projective line, with
//! independent verification against finite-field point counts.
//!
//! The crate is organised as a pipeline of small exact-arithmetic modules:
//!
//! * [`hodge`]: value-semantic algebra of graded vector spaces whose graded
//!   pieces are pure Hodge structures, plus E-polynomial extraction.
//! * [`plethysm`]: symmetric and exterior power functors, including the
//!   Koszul-signed symmetric power that computes compactly supported
//!   cohomology of symmetric products.
//! * [`spectral`]: bigraded spectral-sequence pages, admissibility analysis
//!   of differentials under position and Hodge-type constraints, and
//!   resolution to the abutment.
//! * [`catalog`]: closed-form cohomology tables and geometric fixtures
//!   (base spaces, configuration spaces, the diagonal conic).
//! * [`arith`]: exact point counting of strata over prime fields, zeta
//!   series of punctured lines, and Lagrange interpolation in `q`.
//! * [`motivic`]: E-polynomial classes of symmetric powers, configuration
//!   spaces and strata via the power-structure zeta function.
//! * [`consistency`]: trace-formula comparisons between claimed Hodge
//!   tables and counting polynomials, weight-window enforcement, minimal
//!   Hodge-structure predictions and finite-`n` conjecture checks.
//!
//! Everything is deterministic and exact; there is no floating point
//! anywhere in the crate.

pub mod arith;
pub mod catalog;
pub mod consistency;
pub mod hodge;
pub mod motivic;
pub mod plethysm;
pub mod spectral;
