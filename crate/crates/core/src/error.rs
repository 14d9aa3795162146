//! Error type shared by all core operations.

use alloc::string::String;
use core::fmt;

/// Errors produced by model, sampler, learning and evaluation operations.
#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// An input violated a shape or dimension contract.
    ShapeMismatch { context: &'static str, expected: usize, got: usize },
    /// A batch-level contract was violated (empty batch, missing labels, ...).
    Contract(&'static str),
    /// A value that must be finite was NaN or infinite.
    NonFinite { context: &'static str, detail: String },
    /// A Langevin chain produced a non-finite state or gradient.
    ChainDiverged { step: usize },
    /// The operation is only defined for a restricted model configuration.
    UnsupportedConfig(&'static str),
    /// A configuration value was out of its legal range.
    InvalidConfig(&'static str),
    /// A matrix that must be positive definite was not.
    NotPositiveDefinite(&'static str),
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::ShapeMismatch { context, expected, got } => {
                write!(f, "shape mismatch in {context}: expected {expected}, got {got}")
            }
            CoreError::Contract(msg) => write!(f, "contract violation: {msg}"),
            CoreError::NonFinite { context, detail } => {
                write!(f, "non-finite value in {context}: {detail}")
            }
            CoreError::ChainDiverged { step } => {
                write!(f, "langevin chain diverged at step {step}")
            }
            CoreError::UnsupportedConfig(msg) => write!(f, "unsupported configuration: {msg}"),
            CoreError::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            CoreError::NotPositiveDefinite(ctx) => {
                write!(f, "matrix not positive definite in {ctx}")
            }
        }
    }
}

impl core::error::Error for CoreError {}

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, CoreError>;
