//! Time-frequency analysis on finite grids.
//!
//! The crate has two halves that check each other:
//!
//! * **Numerics** — [`tfr`] computes STFTs, tau-Wigner distributions and chirps
//!   on periodized grids; [`gabor`] builds Gabor frames, dual windows (via
//!   conjugate gradient on the frame operator) and modulation-norm estimates;
//!   [`spaces`] evaluates weighted discrete mixed-norm quasi-norms.
//! * **Decisions** — [`oracle`] decides, with exact rational arithmetic,
//!   whether tau-Wigner distributions and pseudodifferential operators are
//!   bounded between weighted modulation / Wiener-amalgam spaces, via sharp
//!   exponent conditions on discrete convolution and embedding inequalities.
//!
//! [`harness`] ties the halves together: it measures empirical best constants
//! of the bilinear sequence inequalities at increasing truncation and checks
//! that plateau-vs-growth agrees with the oracle's verdicts, and it runs the
//! closed-form identity suite for the transforms.

pub mod gabor;
pub mod harness;
pub mod oracle;
pub mod rational;
pub mod spaces;
pub mod tfr;

pub use oracle::{BmmQuery, BmwQuery, BpQuery, ConvQuery, Outcome, Verdict};
pub use rational::Rational;
pub use spaces::{Exponent, NestingOrder, PowerWeight, Sequence2D, SpaceSpec, Weight1D};
pub use tfr::{GridField2D, GridSignal};
