//! Weights, Gel'fand–Tsetlin patterns and their statistics for `GL_n`.

pub mod enumerate;
pub mod error;
pub mod family;
pub mod lie;
pub mod pattern;
pub mod rational;
pub mod vector;
pub mod weight;

pub use enumerate::{enumerate_patterns, patterns_of_weight};
pub use error::GtError;
pub use family::{critical_points, EmbeddingWeightFamily};
pub use pattern::GTPattern;
pub use rational::Rational;
pub use vector::RepVector;
pub use weight::{interlaces, weyl_dim, Weight};
