//! Signed integers in sign-magnitude form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;
use crate::limb::Limb;
use crate::limbs;
use crate::nat::Natural;

/// Sign-magnitude integer. Zero is never negative, so derived equality is
/// value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Integer<L: Limb = u32> {
    negative: bool,
    magnitude: Natural<L>,
}

impl<L: Limb> Integer<L> {
    pub fn zero() -> Self {
        Integer {
            negative: false,
            magnitude: Natural::zero(),
        }
    }

    pub fn one() -> Self {
        Integer::from_i64(1)
    }

    pub fn from_parts(negative: bool, magnitude: Natural<L>) -> Self {
        let negative = negative && !magnitude.is_zero();
        Integer {
            negative,
            magnitude,
        }
    }

    pub fn from_i64(v: i64) -> Self {
        Self::from_parts(v < 0, Natural::from_u64(v.unsigned_abs()))
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn is_zero(&self) -> bool {
        self.magnitude.is_zero()
    }

    pub fn magnitude(&self) -> &Natural<L> {
        &self.magnitude
    }

    pub fn into_parts(self) -> (bool, Natural<L>) {
        (self.negative, self.magnitude)
    }

    /// The magnitude if the value is nonnegative.
    pub fn to_natural(&self) -> Option<Natural<L>> {
        (!self.negative).then(|| self.magnitude.clone())
    }

    /// Number of limbs in the magnitude.
    pub fn len(&self) -> usize {
        self.magnitude.len()
    }

    /// True for zero, which has no limbs.
    pub fn is_empty(&self) -> bool {
        self.magnitude.is_zero()
    }

    pub fn shl(&self, bits: u64) -> Self {
        Self::from_parts(self.negative, self.magnitude.shl(bits))
    }

    /// Exact division by `2^bits`.
    pub fn shr_exact(&self, bits: u64) -> Result<Self> {
        Ok(Self::from_parts(
            self.negative,
            self.magnitude.shr_exact(bits)?,
        ))
    }

    pub fn mul_word(&self, w: L) -> Self {
        Self::from_parts(self.negative, self.magnitude.mul_word(w))
    }

    /// Exact division by a single nonzero word.
    pub fn div_exact_word(&self, d: L) -> Result<Self> {
        Ok(Self::from_parts(
            self.negative,
            self.magnitude.div_exact_word(d)?,
        ))
    }

    fn add_signed(&self, rhs_negative: bool, rhs: &Natural<L>) -> Self {
        if self.negative == rhs_negative {
            return Self::from_parts(self.negative, &self.magnitude + rhs);
        }
        // Opposite signs: subtract the smaller magnitude from the larger.
        match self.magnitude.cmp(rhs) {
            Ordering::Equal => Self::zero(),
            Ordering::Greater => {
                let mut m = self.magnitude.limbs().to_vec();
                limbs::sub_assign(&mut m, rhs.limbs());
                Self::from_parts(self.negative, Natural::from_limbs(m))
            }
            Ordering::Less => {
                let mut m = rhs.limbs().to_vec();
                limbs::sub_assign(&mut m, self.magnitude.limbs());
                Self::from_parts(rhs_negative, Natural::from_limbs(m))
            }
        }
    }
}

impl<L: Limb> From<Natural<L>> for Integer<L> {
    fn from(n: Natural<L>) -> Self {
        Integer::from_parts(false, n)
    }
}

impl<L: Limb> Neg for Integer<L> {
    type Output = Integer<L>;

    fn neg(self) -> Integer<L> {
        let negative = !self.negative;
        Integer::from_parts(negative, self.magnitude)
    }
}

impl<L: Limb> Neg for &Integer<L> {
    type Output = Integer<L>;

    fn neg(self) -> Integer<L> {
        -self.clone()
    }
}

impl<L: Limb> Add for &Integer<L> {
    type Output = Integer<L>;

    fn add(self, rhs: Self) -> Integer<L> {
        self.add_signed(rhs.negative, &rhs.magnitude)
    }
}

impl<L: Limb> Sub for &Integer<L> {
    type Output = Integer<L>;

    fn sub(self, rhs: Self) -> Integer<L> {
        self.add_signed(!rhs.negative, &rhs.magnitude)
    }
}

/// Schoolbook product of the magnitudes with the usual sign rule.
impl<L: Limb> Mul for &Integer<L> {
    type Output = Integer<L>;

    fn mul(self, rhs: Self) -> Integer<L> {
        Integer::from_parts(
            self.negative != rhs.negative,
            self.magnitude.mul_schoolbook(&rhs.magnitude),
        )
    }
}

impl<L: Limb> Ord for Integer<L> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.negative, other.negative) {
            (false, true) => Ordering::Greater,
            (true, false) => Ordering::Less,
            (false, false) => self.magnitude.cmp(&other.magnitude),
            (true, true) => other.magnitude.cmp(&self.magnitude),
        }
    }
}

impl<L: Limb> PartialOrd for Integer<L> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<L: Limb> fmt::Debug for Integer<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        write!(f, "{:?}", self.magnitude)
    }
}

impl<L: Limb> fmt::Display for Integer<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        write!(f, "{}", self.magnitude)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type I = Integer<u32>;

    #[test]
    fn canonical_zero() {
        let z = &I::from_i64(3) + &I::from_i64(-3);
        assert!(!z.is_negative());
        assert_eq!(z, I::zero());
        assert_eq!(-I::zero(), I::zero());
        assert_eq!(I::from_parts(true, Natural::zero()), I::zero());
    }

    #[test]
    fn sign_rules() {
        assert_eq!(&I::from_i64(-2) * &I::from_i64(-3), I::from_i64(6));
        assert_eq!(&I::from_i64(2) * &I::from_i64(-3), I::from_i64(-6));
        assert_eq!(&I::from_i64(2) - &I::from_i64(5), I::from_i64(-3));
        assert_eq!(&I::from_i64(-2) - &I::from_i64(-5), I::from_i64(3));
        assert_eq!(&I::from_i64(-7) + &I::from_i64(5), I::from_i64(-2));
    }

    #[test]
    fn exact_word_division_keeps_sign() {
        assert_eq!(I::from_i64(-42).div_exact_word(7).unwrap(), I::from_i64(-6));
        assert_eq!(I::from_i64(-40).shr_exact(3).unwrap(), I::from_i64(-5));
        assert!(I::from_i64(-41).div_exact_word(7).is_err());
    }

    #[test]
    fn ordering() {
        let mut v: Vec<I> = [5, -3, 0, -10, 7].iter().map(|&x| I::from_i64(x)).collect();
        v.sort();
        let expect: Vec<I> = [-10, -3, 0, 5, 7].iter().map(|&x| I::from_i64(x)).collect();
        assert_eq!(v, expect);
    }
}
