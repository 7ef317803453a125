//! Named random sub-streams derived from one master seed.
//!
//! Every random choice in the toolkit draws from a ChaCha8 stream selected by a
//! name such as `partition/chain-3` or `detector/run-7`, so results depend only on
//! the master seed and the name, never on scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

// FNV-1a, stable across platforms and releases
fn stream_id(name: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// RNG for the sub-stream `name` of `master`.
pub fn derive(master: u64, name: &str) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(stream_id(name));
    rng
}
