//! Seeded, platform-independent random sources.
//!
//! Every random draw in this crate comes from ChaCha8 (`rand_chacha`), keyed
//! by a 64-bit seed and a stream number. Sample `i` of a batch always uses
//! stream `i`, so batches can be evaluated in any order or in parallel and
//! still reproduce bit for bit on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::C64;
use crate::disc::{BidiscPoint, DiscAutomorphism};

/// Generator for sample `stream` under `seed`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// 64-bit FNV-1a, used to give every named suite its own key space.
pub fn fnv1a(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// Seed for a named consumer, derived from the user-facing seed.
pub fn derive_seed(seed: u64, name: &str) -> u64 {
    seed ^ fnv1a(name)
}

/// Uniform point of the open disc of the given radius (rejection from the square).
pub fn uniform_disc<R: Rng>(rng: &mut R, radius: f64) -> C64 {
    loop {
        let x = rng.gen_range(-1.0..1.0);
        let y = rng.gen_range(-1.0..1.0);
        let z = C64::new(x, y);
        if z.norm_sqr() < 1.0 {
            return z * radius;
        }
    }
}

pub fn uniform_bidisc<R: Rng>(rng: &mut R) -> BidiscPoint {
    BidiscPoint {
        z1: uniform_disc(rng, 1.0),
        z2: uniform_disc(rng, 1.0),
    }
}

/// Random automorphism with uniform angle and `alpha` uniform in the disc of
/// radius `alpha_radius`.
pub fn random_automorphism<R: Rng>(rng: &mut R, alpha_radius: f64) -> DiscAutomorphism {
    let theta = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    let alpha = uniform_disc(rng, alpha_radius);
    DiscAutomorphism::new(theta, alpha).expect("alpha radius below 1")
}

/// Uniform point of the real box `[-half, half]^4`, read as two complex numbers.
pub fn uniform_box<R: Rng>(rng: &mut R, half: f64) -> (C64, C64) {
    let mut r = || rng.gen_range(-half..half);
    let a = C64::new(r(), r());
    let b = C64::new(r(), r());
    (a, b)
}
