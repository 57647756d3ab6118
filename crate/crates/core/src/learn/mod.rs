//! Minimal deterministic differentiable-tensor engine.
//!
//! Layer objects own their parameters and cache whatever the backward pass
//! needs. `forward` is deterministic; `backward` consumes the gradient of a
//! scalar loss with respect to the layer output and returns the gradient with
//! respect to the input, accumulating parameter gradients along the way.
//! Every layer is checkable against central finite differences via
//! [`gradcheck`].
//!
//! The engine is 64-bit throughout. A model instance is single-threaded
//! during training; distinct instances may train in parallel.

mod checkpoint;
mod gradcheck;
mod layers;
mod loss;
mod optim;
mod tensor;

pub use checkpoint::{read_checkpoint, write_checkpoint, CheckpointData, CHECKPOINT_MAGIC};
pub use gradcheck::{grad_check_layer, grad_check_loss, GradCheckReport};
pub use layers::{
    Conv1d, Conv2d, Dense, Flatten, Layer, MaxPool1d, MaxPool2d, Parameter, Relu, Sequential,
    Softmax, Upsample2d,
};
pub use loss::{cross_entropy, kl_divergence, mse_reconstruction, reparameterize, softmax};
pub use optim::{adam_step, Adam};
pub use tensor::Tensor;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LearnError {
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },
    #[error("label {label} out of range for {classes} classes")]
    LabelOutOfRange { label: usize, classes: usize },
    #[error("backward called before forward on {layer}")]
    BackwardBeforeForward { layer: &'static str },
    #[error("non-finite {what} in {context}")]
    NonFinite { what: &'static str, context: String },
    #[error("configuration error: {0}")]
    Config(String),
    #[error("checkpoint {path}: {reason}")]
    Checkpoint { path: String, reason: String },
    #[error("checkpoint I/O on {path}: {source}")]
    CheckpointIo {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
