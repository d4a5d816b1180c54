//! Seeded operand generation and digests.
//!
//! Operands are drawn as 64-bit words and then repacked, so a given seed
//! yields the same integers at either limb width.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toom_core::{to_hex, Limb, Natural};

/// Repacks little-endian 64-bit words as limbs of `L`.
pub fn from_words<L: Limb>(words: &[u64]) -> Natural<L> {
    let per = 64 / L::BITS as usize;
    let mut limbs = Vec::with_capacity(words.len() * per);
    for &w in words {
        for k in 0..per {
            limbs.push(L::from_u64_lossy(w >> (k as u32 * L::BITS)));
        }
    }
    Natural::from_limbs(limbs)
}

/// A uniform `bits`-bit value with the top bit set; zero when `bits == 0`.
pub fn random_operand<L: Limb, R: RngCore>(rng: &mut R, bits: u64) -> Natural<L> {
    if bits == 0 {
        return Natural::zero();
    }
    let nwords = bits.div_ceil(64) as usize;
    let mut words: Vec<u64> = (0..nwords).map(|_| rng.next_u64()).collect();
    let top_bits = bits - 64 * (nwords as u64 - 1);
    let top = &mut words[nwords - 1];
    if top_bits < 64 {
        *top &= (1u64 << top_bits) - 1;
    }
    *top |= 1u64 << (top_bits - 1);
    from_words(&words)
}

/// A uniform value in `[0, 2^bits)`, top bit not forced.
pub fn random_below<L: Limb, R: RngCore>(rng: &mut R, bits: u64) -> Natural<L> {
    let len = rng.gen_range(0..=bits);
    random_operand(rng, len)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-size seed derived from the run seed; written to the CSV.
pub fn operand_seed(seed: u64, size_bits: u64) -> u64 {
    splitmix64(seed ^ splitmix64(size_bits))
}

/// The operand pair of one benchmark size.
pub fn operand_pair<L: Limb>(operand_seed: u64, size_bits: u64) -> (Natural<L>, Natural<L>) {
    let mut rng = ChaCha8Rng::seed_from_u64(operand_seed);
    let u = random_operand(&mut rng, size_bits);
    let v = random_operand(&mut rng, size_bits);
    (u, v)
}

/// 64-bit FNV-1a over the hexadecimal form, so it does not depend on the
/// limb width.
pub fn digest<L: Limb>(n: &Natural<L>) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    to_hex(n)
        .bytes()
        .fold(OFFSET, |h, b| (h ^ b as u64).wrapping_mul(PRIME))
}
