//! Letter graphs, lettericity, and monotone and geometric grid classes of
//! permutations, together with the construction that turns a monotone
//! gridding and a lettering of the inversion graph into a geometric gridding.

pub mod graphs;
pub mod geometry;
pub mod gridding;
pub mod letters;
pub mod oracle;
pub mod perm;
pub mod pipeline;

pub use graphs::SimpleGraph;
pub use gridding::{GridMatrix, GriddedPermutation, SignedMatrix};
pub use letters::{Alphabet, Decoder, Letterization};
pub use perm::Permutation;
