//! Integers viewed as polynomials in `2^b`.
//!
//! An operand `u` becomes `U(x) = u_0 + u_1 x + ... + u_n x^n` with `b`-bit
//! blocks `u_k`, so that `u = U(2^b)`. Evaluation at the small points
//! `±2^j` reduces to shifts and additions, and recombination evaluates the
//! product polynomial back at `2^b`.

use crate::error::{Error, Result};
use crate::int::Integer;
use crate::limb::Limb;
use crate::limbs;
use crate::nat::Natural;

/// Block coefficients `u_0..u_n` of an operand, least significant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPoly<L: Limb = u32> {
    blocks: Vec<Natural<L>>,
    block_bits: u64,
}

impl<L: Limb> BlockPoly<L> {
    /// Wraps explicit blocks. All blocks but the last must be below `2^block_bits`.
    pub fn from_blocks(blocks: Vec<Natural<L>>, block_bits: u64) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidBlocks("no blocks"));
        }
        if block_bits == 0 {
            return Err(Error::InvalidBlocks("block width must be positive"));
        }
        let (_, low) = blocks.split_last().expect("nonempty");
        if low.iter().any(|c| c.bit_len() > block_bits) {
            return Err(Error::InvalidBlocks("block exceeds the block width"));
        }
        Ok(BlockPoly { blocks, block_bits })
    }

    pub fn blocks(&self) -> &[Natural<L>] {
        &self.blocks
    }

    pub fn block_bits(&self) -> u64 {
        self.block_bits
    }

    /// Degree bound `n`; there are `n + 1` blocks.
    pub fn degree(&self) -> usize {
        self.blocks.len() - 1
    }

    /// The blocks as signed coefficients, suitable for [`recombine`].
    pub fn to_coefficients(&self) -> Vec<Integer<L>> {
        self.blocks.iter().cloned().map(Integer::from).collect()
    }
}

/// The interpolation abscissas `0, 1, 2, 4, ..., 2^(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet<L: Limb = u32> {
    points: Vec<L>,
}

impl<L: Limb> PointSet<L> {
    /// `n + 1` points for a degree-`n` polynomial. Every point and its square
    /// must fit in one limb, i.e. `2(n - 1) < L::BITS`.
    pub fn powers_of_two(n: usize) -> Result<Self> {
        if n >= 2 && 2 * (n as u64 - 1) >= L::BITS as u64 {
            return Err(Error::InvalidProblem(
                "squared points do not fit in one limb",
            ));
        }
        let mut points = vec![L::zero()];
        points.extend((0..n).map(|j| L::one() << j));
        Ok(PointSet { points })
    }

    pub fn points(&self) -> &[L] {
        &self.points
    }

    pub fn degree(&self) -> usize {
        self.points.len() - 1
    }

    /// The points `x_k^2`.
    pub fn squared(&self) -> Self {
        PointSet {
            points: self.points.iter().map(|&x| x * x).collect(),
        }
    }

    /// Points as signed abscissas for the interpolation routines.
    pub fn abscissas(&self) -> Vec<i64> {
        self.points.iter().map(|x| x.as_u128() as i64).collect()
    }
}

/// Splits `u` into `blocks` blocks of `block_bits` bits each.
pub fn split<L: Limb>(u: &Natural<L>, blocks: usize, block_bits: u64) -> Result<BlockPoly<L>> {
    if blocks < 2 {
        return Err(Error::InvalidBlocks("need at least two blocks"));
    }
    if block_bits == 0 {
        return Err(Error::InvalidBlocks("block width must be positive"));
    }
    let capacity = blocks as u64 * block_bits;
    if u.bit_len() > capacity {
        return Err(Error::OperandTooLarge {
            bits: u.bit_len(),
            blocks,
            block_bits,
        });
    }
    let coeffs = if block_bits.is_multiple_of(L::BITS as u64) {
        // Limb-aligned blocks are plain slices of the limb vector.
        let per = (block_bits / L::BITS as u64) as usize;
        let src = u.limbs();
        (0..blocks)
            .map(|k| {
                let lo = (k * per).min(src.len());
                let hi = ((k + 1) * per).min(src.len());
                Natural::from_limbs(src[lo..hi].to_vec())
            })
            .collect()
    } else {
        (0..blocks)
            .map(|k| u.extract_bits(k as u64 * block_bits, block_bits))
            .collect()
    };
    Ok(BlockPoly {
        blocks: coeffs,
        block_bits,
    })
}

/// Horner evaluation of `Σ c_k X^k` at `X = 2^shift` using shifts only.
fn horner_pow2<'a, L: Limb>(
    coeffs: impl DoubleEndedIterator<Item = &'a Natural<L>>,
    shift: u64,
) -> Natural<L> {
    let mut acc: Vec<L> = Vec::new();
    for c in coeffs.rev() {
        let mut next = limbs::shl(&acc, shift);
        limbs::add_at(&mut next, c.limbs(), 0);
        limbs::trim(&mut next);
        acc = next;
    }
    Natural::from_limbs(acc)
}

/// `U(2^j)`.
pub fn eval_at_pow2<L: Limb>(p: &BlockPoly<L>, j: u32) -> Natural<L> {
    horner_pow2(p.blocks.iter(), j as u64)
}

/// `(U(2^j), U(-2^j))` from one pass over the even and odd parts.
pub fn eval_pair<L: Limb>(p: &BlockPoly<L>, j: u32) -> (Integer<L>, Integer<L>) {
    let even = horner_pow2(p.blocks.iter().step_by(2), 2 * j as u64);
    let odd = horner_pow2(p.blocks.iter().skip(1).step_by(2), 2 * j as u64).shl(j as u64);
    let even = Integer::from(even);
    let odd = Integer::from(odd);
    (&even + &odd, &even - &odd)
}

/// `W(2^b) = Σ w_k 2^(bk)` accumulated positionally; the total must be
/// nonnegative.
pub fn recombine<L: Limb>(coeffs: &[Integer<L>], block_bits: u64) -> Result<Natural<L>> {
    let mut pos: Vec<L> = Vec::new();
    let mut neg: Vec<L> = Vec::new();
    let limb_bits = L::BITS as u64;
    for (k, w) in coeffs.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let at = k as u64 * block_bits;
        let offset = (at / limb_bits) as usize;
        let target = if w.is_negative() { &mut neg } else { &mut pos };
        if at.is_multiple_of(limb_bits) {
            limbs::add_at(target, w.magnitude().limbs(), offset);
        } else {
            let shifted = limbs::shl(w.magnitude().limbs(), at % limb_bits);
            limbs::add_at(target, &shifted, offset);
        }
    }
    limbs::trim(&mut pos);
    limbs::trim(&mut neg);
    if limbs::cmp(&pos, &neg) == std::cmp::Ordering::Less {
        return Err(Error::NegativeResult);
    }
    let borrow = limbs::sub_assign(&mut pos, &neg);
    debug_assert!(!borrow);
    Ok(Natural::from_limbs(pos))
}
