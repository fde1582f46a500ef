//! Robust generative video steganography.
//!
//! Secret bits are embedded by nudging the identity feature used during
//! face-swap-style frame generation; a learned extractor recovers them after
//! the frames have been distorted. The crate contains the full pipeline:
//! the learnable networks, a differentiable attacking layer used during
//! training, the loss functions, the training loop, a procedural avatar
//! dataset, and a robustness evaluation benchmark with an LSB baseline and
//! a steganalysis probe.

pub mod attack;
pub mod autodiff;
pub mod checkpoint;
pub mod error;
pub mod eval;
pub mod frame;
pub mod losses;
pub mod message;
pub mod networks;
pub mod nn;
pub mod rng;
pub mod toydata;
pub mod training;

pub use error::{Result, StegoError};
pub use frame::{FrameArray, VideoArray};
pub use message::{bit_accuracy, binarize, random_message, BitMessage};
pub use rng::RngState;
