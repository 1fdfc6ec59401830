//! Seeded randomness.
//!
//! All sampling goes through ChaCha8 (rand_chacha 0.3 stream layout) seeded
//! from a `u64`; independent draws inside one computation use distinct
//! stream ids so that adding a consumer never shifts another one's values.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

pub const GENERATOR: &str = "chacha8/rand_chacha-0.3";

pub fn seeded(seed: u64, stream: u64) -> Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Stream ids used by the library. Kept in one place so they stay distinct.
pub mod streams {
    pub const ARRANGEMENT: u64 = 1;
    pub const OFFSETS: u64 = 2;
    pub const DEPENDENT: u64 = 3;
    pub const PERTURB: u64 = 4;
    pub const SECTION: u64 = 5;
    pub const GALE_POSITIVE: u64 = 6;
    pub const GALE_NEGATIVE: u64 = 7;
    pub const PLANAR: u64 = 8;
}
