#![allow(dead_code)]

use num_bigint::{BigInt, BigUint, Sign};
use rand::Rng;
use toom_core::{Integer, Limb, Natural};

/// Uniform value with exactly `bits` bits (top bit set).
pub fn random_nat<L: Limb, R: Rng>(rng: &mut R, bits: u64) -> Natural<L> {
    if bits == 0 {
        return Natural::zero();
    }
    let limb_bits = L::BITS as u64;
    let n = bits.div_ceil(limb_bits) as usize;
    let mut limbs: Vec<L> = (0..n).map(|_| L::from_u64_lossy(rng.gen())).collect();
    let top_bits = bits - (n as u64 - 1) * limb_bits;
    let top = &mut limbs[n - 1];
    if top_bits < limb_bits {
        *top = *top & ((L::one() << top_bits as usize) - L::one());
    }
    *top = *top | (L::one() << (top_bits as usize - 1));
    Natural::from_limbs(limbs)
}

/// Uniform value below `2^bits` (top bit not forced).
pub fn random_below<L: Limb, R: Rng>(rng: &mut R, bits: u64) -> Natural<L> {
    let v: Natural<L> = random_nat(rng, bits + 1);
    v.extract_bits(0, bits)
}

pub fn random_int<L: Limb, R: Rng>(rng: &mut R, bits: u64) -> Integer<L> {
    let mag = random_below(rng, bits);
    Integer::from_parts(rng.gen(), mag)
}

pub fn to_big<L: Limb>(n: &Natural<L>) -> BigUint {
    let mut out = BigUint::default();
    for limb in n.limbs().iter().rev() {
        out = (out << L::BITS) + BigUint::from(limb.as_u128());
    }
    out
}

pub fn to_bigint<L: Limb>(n: &Integer<L>) -> BigInt {
    let sign = if n.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    };
    BigInt::from_biguint(sign, to_big(n.magnitude()))
}

pub fn from_big(b: &BigUint) -> Natural<u32> {
    Natural::from_limbs(b.to_u32_digits())
}

pub fn from_bigint(b: &BigInt) -> Integer<u32> {
    let (sign, mag) = b.to_u32_digits();
    Integer::from_parts(sign == Sign::Minus, Natural::from_limbs(mag))
}

/// Horner evaluation with the reference bignum.
pub fn eval_big(coeffs: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    coeffs
        .iter()
        .rev()
        .fold(BigInt::default(), |acc, c| acc * &x + c)
}

/// Coefficients of the product of two polynomials.
pub fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::default(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (k, y) in b.iter().enumerate() {
            out[i + k] += x * y;
        }
    }
    out
}

/// `0, 1, -1, 2, -2, ..., 2^(n-1), -2^(n-1)`.
pub fn signed_points(n: usize) -> Vec<i64> {
    let mut xs = vec![0];
    for j in 0..n {
        xs.push(1 << j);
        xs.push(-(1 << j));
    }
    xs
}

/// `0, 1, 2, 4, ..., 2^(n-1)`.
pub fn pow2_points(n: usize) -> Vec<i64> {
    std::iter::once(0)
        .chain((0..n).map(|j| 1i64 << j))
        .collect()
}
