//! Deterministic multi-party runtime: round clock, broadcast channel,
//! scoped random streams, parallel composition and cost metering.

mod context;
mod meter;
mod transcript;

pub use context::{derive_seed, run, ProtocolContext, RoundBuilder, RunOutput, DEFAULT_LAMBDA};
pub use meter::{as_player, CostMeter, CostReport};
pub use transcript::{Transcript, TranscriptEvent};
