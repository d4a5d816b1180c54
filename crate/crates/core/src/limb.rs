//! Machine words used as digits of multiprecision numbers.
//!
//! Every algorithm in this crate is generic over [`Limb`], so one computation
//! runs entirely in 32-bit or entirely in 64-bit words. The double-width type
//! carries products and the running remainder of word division.

use std::fmt::{Debug, Display, LowerHex};
use std::hash::Hash;

use num_traits::{PrimInt, Unsigned};

/// An unsigned machine word with a double-width companion type.
pub trait Limb:
    PrimInt + Unsigned + Debug + Display + LowerHex + Hash + Default + Send + Sync + 'static
{
    /// Unsigned type twice as wide as the limb.
    type Wide: PrimInt + Unsigned + Debug;

    /// Width in bits.
    const BITS: u32;

    /// Largest power of ten that fits in one limb.
    const DECIMAL_CHUNK: Self;

    /// Number of decimal digits in [`Limb::DECIMAL_CHUNK`] minus one.
    const DECIMAL_DIGITS: usize;

    /// Sum with carry in and carry out.
    fn adc(self, rhs: Self, carry: bool) -> (Self, bool);

    /// Difference with borrow in and borrow out.
    fn sbb(self, rhs: Self, borrow: bool) -> (Self, bool);

    /// `self + a * b + carry` as `(low, high)`. Never overflows the wide type.
    fn mac(self, a: Self, b: Self, carry: Self) -> (Self, Self);

    /// Divides the two-word value `hi:lo` by `d`, returning `(quotient, remainder)`.
    ///
    /// Requires `hi < d` so the quotient fits in one limb.
    fn div_wide(hi: Self, lo: Self, d: Self) -> (Self, Self);

    /// Truncating conversion from `u64`.
    fn from_u64_lossy(v: u64) -> Self;

    /// Zero-extending conversion to `u128`.
    fn as_u128(self) -> u128;
}

macro_rules! impl_limb {
    ($t:ty, $wide:ty, $chunk:expr, $digits:expr) => {
        impl Limb for $t {
            type Wide = $wide;

            const BITS: u32 = <$t>::BITS;
            const DECIMAL_CHUNK: Self = $chunk;
            const DECIMAL_DIGITS: usize = $digits;

            #[inline(always)]
            fn adc(self, rhs: Self, carry: bool) -> (Self, bool) {
                let (s, c1) = self.overflowing_add(rhs);
                let (s, c2) = s.overflowing_add(carry as $t);
                (s, c1 | c2)
            }

            #[inline(always)]
            fn sbb(self, rhs: Self, borrow: bool) -> (Self, bool) {
                let (d, b1) = self.overflowing_sub(rhs);
                let (d, b2) = d.overflowing_sub(borrow as $t);
                (d, b1 | b2)
            }

            #[inline(always)]
            fn mac(self, a: Self, b: Self, carry: Self) -> (Self, Self) {
                let t = (self as $wide) + (a as $wide) * (b as $wide) + (carry as $wide);
                (t as $t, (t >> <$t>::BITS) as $t)
            }

            #[inline(always)]
            fn div_wide(hi: Self, lo: Self, d: Self) -> (Self, Self) {
                debug_assert!(hi < d);
                let n = ((hi as $wide) << <$t>::BITS) | (lo as $wide);
                let d = d as $wide;
                ((n / d) as $t, (n % d) as $t)
            }

            #[inline(always)]
            fn from_u64_lossy(v: u64) -> Self {
                v as $t
            }

            #[inline(always)]
            fn as_u128(self) -> u128 {
                self as u128
            }
        }
    };
}

impl_limb!(u32, u64, 1_000_000_000, 9);
impl_limb!(u64, u128, 10_000_000_000_000_000_000, 19);
