//! Deterministic pseudo-random streams for test corpora.
//!
//! A fixed 64-bit linear congruential generator so that any reimplementation
//! can reproduce the same operations from the same seed:
//!
//! ```text
//! state[0]   = seed
//! state[n+1] = state[n] * 6364136223846793005 + 1442695040888963407   (mod 2^64)
//! output[n]  = state[n+1] >> 33                                       (31 bits)
//! ```
//!
//! Draws consume exactly one output each. An integer coefficient in
//! `[-bound, bound]` is `output % (2*bound + 1) - bound`; an index in
//! `0..n` is `output % n`.

const MUL: u64 = 6364136223846793005;
const ADD: u64 = 1442695040888963407;

/// The documented linear congruential generator.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_output(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MUL).wrapping_add(ADD);
        self.state >> 33
    }

    /// Uniform-ish integer in `[-bound, bound]`; `bound >= 1`.
    pub fn next_coeff(&mut self, bound: u64) -> i64 {
        let m = 2 * bound + 1;
        (self.next_output() % m) as i64 - bound as i64
    }

    /// Index in `0..n`; `n >= 1`.
    pub fn next_index(&mut self, n: usize) -> usize {
        (self.next_output() % n as u64) as usize
    }
}
