//! Seeded, splittable random number generation.
//!
//! Every stochastic stage in this crate draws from a [`StreamRng`]
//! (xoshiro256** seeded through SplitMix64). Independent streams are derived
//! from a `(master_seed, stream_index)` pair, so Monte Carlo trials, attack
//! restarts, and per-coordinate noise draws are reproducible bit-for-bit
//! regardless of execution order or worker count. Gaussians come from
//! Box-Muller on the uniform stream: each draw consumes exactly two uniforms,
//! which keeps substreams aligned across implementations.

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output function.
#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for the `index`-th stream under `master_seed`.
///
/// This is the `(index + 1)`-th output of a SplitMix64 sequence seeded with
/// `master_seed`, computed in constant time.
#[inline]
pub fn stream_seed(master_seed: u64, index: u64) -> u64 {
    mix(master_seed.wrapping_add(GOLDEN_GAMMA.wrapping_mul(index.wrapping_add(1))))
}

/// xoshiro256** generator over a single derived stream.
#[derive(Debug, Clone)]
pub struct StreamRng {
    s: [u64; 4],
}

impl StreamRng {
    /// Seeds the state with four successive SplitMix64 outputs.
    pub fn from_seed(seed: u64) -> Self {
        let mut s = [0u64; 4];
        let mut x = seed;
        for slot in &mut s {
            x = x.wrapping_add(GOLDEN_GAMMA);
            *slot = mix(x);
        }
        // xoshiro state must not be all zero.
        if s == [0, 0, 0, 0] {
            s[0] = GOLDEN_GAMMA;
        }
        Self { s }
    }

    /// Generator for stream `index` under `master_seed`.
    pub fn derive(master_seed: u64, index: u64) -> Self {
        Self::from_seed(stream_seed(master_seed, index))
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.s;
        let result = s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        result
    }

    /// Uniform in `[0, 1)` using the top 53 bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    #[inline]
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Unbiased uniform integer in `[0, bound)` via rejection.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "next_below bound must be positive");
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }

    /// Standard normal via Box-Muller (cosine branch, two uniforms per draw).
    #[inline]
    pub fn gaussian(&mut self) -> f64 {
        // u1 in (0, 1] so the log is finite.
        let u1 = 1.0 - self.next_f64();
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }

    /// Fisher-Yates shuffle of `xs`, deterministic for a given stream state.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}
