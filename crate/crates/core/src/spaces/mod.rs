//! Exponent arithmetic, power weights, and weighted discrete mixed-norm
//! quasi-norms on finitely supported sequences.

mod exponent;
mod norm;
mod sequence;
mod weight;

pub use exponent::Exponent;
pub use norm::{mixed_norm, mixed_norm_entries, sequence_norm_1d, NestingOrder, SpaceSpec};
pub use sequence::{Sequence1D, Sequence2D};
pub use weight::{
    bracket, weight_transform, PowerWeight, TransformedWeight, Weight1D, WeightTransform,
};
