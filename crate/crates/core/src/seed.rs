//! Deterministic seed derivation.
//!
//! Every source of randomness in a run is keyed off one master seed so that
//! re-running with the same configuration reproduces results byte for byte.
//! Stream constants keep sibling consumers (shot sampling vs. bootstrap
//! resampling) on disjoint streams even for adjacent iteration indices.

/// Stream tag for few-shot example sampling.
pub const STREAM_SHOTS: u64 = 0x5348;
/// Stream tag for bootstrap resampling of the test split.
pub const STREAM_BOOTSTRAP: u64 = 0x424f;
/// Stream tag for synthetic noise (mock backends).
pub const STREAM_NOISE: u64 = 0x4e4f;

/// SplitMix64 step; a fixed, platform-independent 64-bit mixer.
#[must_use]
pub fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives the seed for an independent stream from a master seed.
///
/// `derive_seed(m, a) == derive_seed(m, b)` only when `a == b`, up to mixer
/// collisions; distinct streams of one master never alias distinct masters of
/// one stream in practice.
#[must_use]
pub fn derive_seed(master: u64, stream: u64) -> u64 {
    splitmix64(master ^ splitmix64(stream.wrapping_add(0xA076_1D64_78BD_642F)))
}
