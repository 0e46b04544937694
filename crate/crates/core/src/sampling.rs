//! Seeded random symmetric games.
//!
//! Game `i` of a run is drawn from its own ChaCha8 stream (`seed`, stream
//! `i`), so any partition of the index range across workers produces the
//! same games.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::SymmetricGame;

/// Name of the generator, recorded in reports.
pub const RNG_NAME: &str = "chacha8/stream-per-game";

/// Payoffs drawn i.i.d. uniform on `[low, high)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UniformPayoffs {
    pub low: f64,
    pub high: f64,
}

impl UniformPayoffs {
    pub fn new(low: f64, high: f64) -> Result<Self> {
        if !(low.is_finite() && high.is_finite() && low < high) {
            return Err(Error::InvalidBounds { low, high });
        }
        Ok(Self { low, high })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct GameSampler {
    seed: u64,
    dist: UniformPayoffs,
}

impl GameSampler {
    pub fn new(seed: u64, dist: UniformPayoffs) -> Self {
        Self { seed, dist }
    }

    pub fn distribution(&self) -> UniformPayoffs {
        self.dist
    }

    /// The `index`-th game of this run.
    pub fn game(&self, index: u64) -> SymmetricGame {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        let mut draw = || rng.random_range(self.dist.low..self.dist.high);
        let entries = [draw(), draw(), draw(), draw()];
        SymmetricGame::from_array(entries).expect("finite bounds give finite payoffs")
    }
}
