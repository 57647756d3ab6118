//! Synthetic ground-penetrating-radar terrain classification toolkit.
//!
//! The pipeline runs end to end on a desktop machine:
//!
//! 1. [`physics`] — dielectric quantities, reflection coefficients, and
//!    two-way-travel-time conversions.
//! 2. [`simulate`] — forward-models labeled radargrams from layered-earth
//!    terrain profiles (the synthetic stand-in for field data).
//! 3. [`dataio`] — the bit-exact RGG1 radargram file format plus CSV and
//!    PPM emitters.
//! 4. [`preprocess`] — padding, stride slicing, band extraction, the frozen
//!    radargram-level train/test split, and normalization.
//! 5. [`learn`] — a minimal deterministic differentiable-tensor engine
//!    (layers, losses, Adam) with finite-difference verification.
//! 6. [`models`] — the classifier families (1D CNN, 2D CNN, deep-clustering
//!    VAE), their training protocols, and evaluation reports.
//! 7. [`experiments`] — seed-averaged studies: band ablation, time-series
//!    length curve, and the model comparison table.
//! 8. [`mapping`] — Dirichlet soft-count fusion of a simulated camera
//!    labeler with GPR track classifications into a semantic terrain map.
//!
//! Everything downstream of a seed is deterministic: reruns with identical
//! inputs produce byte-identical artifacts. With the default `parallel`
//! feature the data-parallel loops run on rayon; disabling it falls back to
//! sequential execution with identical outputs.

pub mod dataio;
pub mod exec;
pub mod experiments;
pub mod learn;
pub mod mapping;
pub mod models;
pub mod physics;
pub mod preprocess;
pub mod simulate;
