/// Deterministic xoshiro256++ generator seeded through splitmix64.
///
/// Uses the reference constants (rotations 23/45, shift 17; splitmix64
/// increment 0x9E3779B97F4A7C15), so an equal seed yields a bit-identical
/// stream on every platform. Single-owner: all methods take `&mut self`.
#[derive(Debug, Clone)]
pub struct Rng {
    state: [u64; 4],
    seed: u64,
}

const SPLITMIX_INC: u64 = 0x9E3779B97F4A7C15;

fn splitmix64(x: &mut u64) -> u64 {
    *x = x.wrapping_add(SPLITMIX_INC);
    let mut z = *x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        let mut s = seed;
        let state = [
            splitmix64(&mut s),
            splitmix64(&mut s),
            splitmix64(&mut s),
            splitmix64(&mut s),
        ];
        Self { state, seed }
    }

    /// Independent stream derived from the same seed; `stream` tags the
    /// purpose (weight init, batching, ...) so consumers cannot collide.
    pub fn substream(seed: u64, stream: u64) -> Self {
        let mut s = stream;
        Self::new(seed ^ splitmix64(&mut s))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.state;
        let result = s[0]
            .wrapping_add(s[3])
            .rotate_left(23)
            .wrapping_add(s[0]);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        result
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn range_f64(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in [0, n). Lemire multiply-shift; n must be > 0.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "Rng::below(0)");
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i + 1);
            xs.swap(i, j);
        }
    }
}
