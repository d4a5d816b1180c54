//! Arbitrary-precision natural numbers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::limb::Limb;
use crate::limbs;

/// A natural number stored as little-endian limbs with no high zero limb.
///
/// Zero is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Natural<L: Limb = u32> {
    limbs: Vec<L>,
}

impl<L: Limb> Natural<L> {
    pub fn zero() -> Self {
        Natural { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Natural {
            limbs: vec![L::one()],
        }
    }

    /// Builds a value from little-endian limbs, trimming high zeros.
    pub fn from_limbs(mut limbs: Vec<L>) -> Self {
        limbs::trim(&mut limbs);
        Natural { limbs }
    }

    pub fn from_u64(v: u64) -> Self {
        let mut limbs = Vec::new();
        let mut v = v as u128;
        while v != 0 {
            limbs.push(L::from_u64_lossy(v as u64));
            v >>= L::BITS;
        }
        Natural { limbs }
    }

    pub fn from_word(w: L) -> Self {
        Self::from_limbs(vec![w])
    }

    /// `2^k`.
    pub fn pow2(k: u64) -> Self {
        Natural::one().shl(k)
    }

    pub fn limbs(&self) -> &[L] {
        &self.limbs
    }

    pub fn into_limbs(self) -> Vec<L> {
        self.limbs
    }

    /// Number of limbs.
    pub fn len(&self) -> usize {
        self.limbs.len()
    }

    /// True for zero, which has no limbs.
    pub fn is_empty(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_normalized(&self) -> bool {
        self.limbs.last().is_none_or(|top| !top.is_zero())
    }

    pub fn bit_len(&self) -> u64 {
        limbs::bit_len(&self.limbs)
    }

    pub fn to_u64(&self) -> Option<u64> {
        if self.bit_len() > 64 {
            return None;
        }
        let mut v: u128 = 0;
        for (i, x) in self.limbs.iter().enumerate() {
            v |= x.as_u128() << (i as u32 * L::BITS);
        }
        Some(v as u64)
    }

    pub fn trailing_zeros(&self) -> Option<u64> {
        limbs::trailing_zeros(&self.limbs)
    }

    /// `self - rhs`; underflow is an error.
    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        if self.cmp(rhs) == Ordering::Less {
            return Err(Error::Underflow);
        }
        let mut out = self.limbs.clone();
        let borrow = limbs::sub_assign(&mut out, &rhs.limbs);
        debug_assert!(!borrow);
        Ok(Self::from_limbs(out))
    }

    /// `self * 2^bits`.
    pub fn shl(&self, bits: u64) -> Self {
        Self::from_limbs(limbs::shl(&self.limbs, bits))
    }

    /// `self / 2^bits`, requiring the dropped bits to be zero.
    pub fn shr_exact(&self, bits: u64) -> Result<Self> {
        if bits == 0 || self.is_zero() {
            return Ok(self.clone());
        }
        match self.trailing_zeros() {
            Some(tz) if tz >= bits => Ok(Self::from_limbs(limbs::shr(&self.limbs, bits))),
            _ => Err(Error::InexactShift { shift: bits }),
        }
    }

    /// `self >> bits`, discarding the low bits.
    pub fn shr_floor(&self, bits: u64) -> Self {
        Self::from_limbs(limbs::shr(&self.limbs, bits))
    }

    /// `self * 2^k`; a negative `k` is an exact right shift.
    pub fn shift(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            Ok(self.shl(k as u64))
        } else {
            self.shr_exact(k.unsigned_abs())
        }
    }

    /// The quadratic digit-by-digit product.
    pub fn mul_schoolbook(&self, rhs: &Self) -> Self {
        Self::from_limbs(limbs::mul_schoolbook(&self.limbs, &rhs.limbs))
    }

    pub fn mul_word(&self, w: L) -> Self {
        Self::from_limbs(limbs::mul_word(&self.limbs, w))
    }

    /// Quotient and remainder of division by a single nonzero word.
    pub fn div_rem_word(&self, d: L) -> Result<(Self, L)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut q = self.limbs.clone();
        let r = limbs::divrem_word(&mut q, d);
        Ok((Self::from_limbs(q), r))
    }

    /// `self / d` where `d` must divide `self`. A nonzero remainder is an error.
    pub fn div_exact_word(&self, d: L) -> Result<Self> {
        let (q, r) = self.div_rem_word(d)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision {
                divisor: d.as_u128(),
                remainder: r.as_u128(),
            });
        }
        Ok(q)
    }

    /// Bits `[start, start + len)` as a new value.
    pub fn extract_bits(&self, start: u64, len: u64) -> Self {
        let shifted = limbs::shr(&self.limbs, start);
        let full = (len / L::BITS as u64) as usize;
        let rem = (len % L::BITS as u64) as usize;
        let mut out: Vec<L> = shifted
            .into_iter()
            .take(full + (rem > 0) as usize)
            .collect();
        if rem > 0 && out.len() == full + 1 {
            out[full] = out[full] & ((L::one() << rem) - L::one());
        }
        Self::from_limbs(out)
    }
}

impl<L: Limb> Ord for Natural<L> {
    fn cmp(&self, other: &Self) -> Ordering {
        limbs::cmp(&self.limbs, &other.limbs)
    }
}

impl<L: Limb> PartialOrd for Natural<L> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<L: Limb> Add for &Natural<L> {
    type Output = Natural<L>;

    fn add(self, rhs: Self) -> Natural<L> {
        Natural::from_limbs(limbs::add(&self.limbs, &rhs.limbs))
    }
}

impl<L: Limb> Add for Natural<L> {
    type Output = Natural<L>;

    fn add(mut self, rhs: Self) -> Natural<L> {
        limbs::add_at(&mut self.limbs, &rhs.limbs, 0);
        self
    }
}

impl<L: Limb> From<u64> for Natural<L> {
    fn from(v: u64) -> Self {
        Natural::from_u64(v)
    }
}

impl<L: Limb> fmt::Debug for Natural<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 4 {
            write!(f, "Natural(0x{})", crate::radix::to_hex(self))
        } else {
            write!(f, "Natural({} bits)", self.bit_len())
        }
    }
}

impl<L: Limb> fmt::Display for Natural<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::radix::to_decimal(self))
    }
}
