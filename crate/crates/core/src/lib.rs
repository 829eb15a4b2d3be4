//! Exact reduction of absolutely convergent rational integrals over
//! semi-algebraic domains to volumes of compact semi-algebraic sets.
//!
//! The pipeline rewrites an integral I(S, P/Q) using only partitions of the
//! domain, algebraic changes of variables and hypograph lifts, producing a
//! compact set K with vol(K) = |I(S, P/Q)|:
//!
//! 1. [`semialg::sign_partition`] splits S by the sign of the integrand.
//! 2. [`projcharts::compactify_domain`] sends every unbounded region into the
//!    unit hypercube through projective chart changes.
//! 3. [`blowup2::resolve_poles_2d`] removes boundary poles of the integrand by
//!    iterated point blow-ups (dimension 2).
//! 4. [`hypograph::graph_set`] lifts each pole-free piece one dimension up as
//!    the region between the graph of the integrand and zero.
//! 5. [`diffvol::difference_set`] turns the difference of the positive and
//!    negative stacks into a single compact set via a Riemann-cube
//!    rearrangement.
//!
//! All set and integrand manipulation is exact over ℚ or a fixed real
//! quadratic extension ℚ(√n); floating point appears only in the
//! [`numeric`] oracle (outward-rounded intervals and Monte-Carlo estimates).

pub mod blowup2;
pub mod diffvol;
pub mod error;
pub mod exactnum;
pub mod hypograph;
pub mod numeric;
pub mod parse;
pub mod pipeline;
pub mod poly;
pub mod projcharts;
pub mod semialg;
pub mod trace;

pub use error::Error;
pub use exactnum::AlgNum;
pub use poly::{Poly, RatFunc};
pub use semialg::{BasicSet, IntegralPiece, SemiAlgSet, SignCondition};
