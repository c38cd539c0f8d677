/// xorshift64* generator seeded through one round of SplitMix64.
///
/// The stream is fully specified so random corpora can be regenerated by any
/// implementation:
///
/// ```text
/// seeding:   z = seed + 0x9E3779B97F4A7C15
///            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///            z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///            state = z ^ (z >> 31)          (0 is replaced by 0x9E3779B97F4A7C15)
/// next:      x ^= x >> 12; x ^= x << 25; x ^= x >> 27
///            output = x * 0x2545F4914F6CDD1D
/// uniform:   (next >> 11) * 2^-53           in [0, 1)
/// ```
///
/// All arithmetic wraps modulo 2^64.
#[derive(Debug, Clone)]
pub struct XorShift64Star {
    state: u64,
}

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let mut z = seed.wrapping_add(GOLDEN);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        Self { state: if z == 0 { GOLDEN } else { z } }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform index in `0..bound` by rejection.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}
