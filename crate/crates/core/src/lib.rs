//! Multimodal latent-variable generative model with an energy-based prior
//! and short-run Langevin inference.
//!
//! The crate is organized around five pieces:
//!
//! - [`model`]: the generative model itself — an energy-tilted latent prior,
//!   per-modality Gaussian encoders aggregated as a mixture of experts, and
//!   per-modality decoders with unit-variance Gaussian observation noise.
//! - [`sampler`]: short-run Langevin dynamics over the latent space, used
//!   both cold (prior sampling) and warm-started from the variational
//!   posterior (posterior refinement).
//! - [`learning`]: the three per-group objectives (energy prior, generators,
//!   inference networks), their hand-derived gradients, and a joint training
//!   step driven by per-group Adam.
//! - [`synth`]: a deterministic linear-Gaussian multimodal dataset with a
//!   closed-form Bayes classifier, small enough that every statistical claim
//!   can be checked against an analytic oracle.
//! - [`eval`]: generation coherence, raw-feature Fréchet distance, and a
//!   KL-to-true-posterior diagnostic in the analytic (linear decoder) case.
//!
//! All numerics are `f64` with math routed through `libm`, so results are
//! bit-reproducible across platforms given the same seeds. The crate is
//! `no_std`-compatible (it only needs `alloc`); file formats and the CLI
//! live in the companion `mmeb-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod eval;
pub mod gradcheck;
pub mod learning;
pub mod linalg;
pub mod math;
pub mod model;
pub mod nn;
pub mod rng;
pub mod sampler;
pub mod synth;

pub use error::CoreError;
pub use linalg::Mat;
