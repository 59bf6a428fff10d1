//! Saliency-guided facial expression recognition at desk scale.
//!
//! The pipeline: optical-flow peak-frame detection over an expression
//! sequence, DCT image-signature saliency with 12x12 patch sampling, a small
//! convolutional feature extractor trainable under three SGD update rules and
//! three loss modes, and three swappable classification heads (softmax,
//! probabilistic decision forest, extreme learning machine) with a benchmark
//! harness comparing their per-image latency.
//!
//! Everything is deterministic under a seed: batching, weight init, and the
//! synthetic dataset all draw from the same fixed xoshiro-based [`numerics::Rng`].

pub mod bench;
pub mod bundle;
pub mod cli;
pub mod dataio;
pub mod error;
pub mod heads;
pub mod motion;
pub mod network;
pub mod numerics;
pub mod report;
pub mod saliency;
pub mod trainer;

pub use error::{Error, Result};
