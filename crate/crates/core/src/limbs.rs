//! Slice-level kernels on little-endian limb sequences.
//!
//! These operate on raw slices and never normalize; the `Natural` and
//! `Integer` wrappers are responsible for trimming high zero limbs.

use std::cmp::Ordering;

use crate::limb::Limb;

/// Drops high zero limbs.
#[inline]
pub fn trim<L: Limb>(v: &mut Vec<L>) {
    while let Some(&top) = v.last() {
        if top.is_zero() {
            v.pop();
        } else {
            break;
        }
    }
}

/// Compares two normalized limb sequences by value.
pub fn cmp<L: Limb>(a: &[L], b: &[L]) -> Ordering {
    if a.len() != b.len() {
        return a.len().cmp(&b.len());
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// `acc += src * BASE^offset`, growing `acc` as needed.
pub fn add_at<L: Limb>(acc: &mut Vec<L>, src: &[L], offset: usize) {
    if src.is_empty() {
        return;
    }
    let need = offset + src.len();
    if acc.len() < need {
        acc.resize(need, L::zero());
    }
    let mut carry = false;
    for (d, &s) in acc[offset..need].iter_mut().zip(src) {
        let (r, c) = d.adc(s, carry);
        *d = r;
        carry = c;
    }
    let mut i = need;
    while carry {
        if i == acc.len() {
            acc.push(L::one());
            break;
        }
        let (r, c) = acc[i].adc(L::zero(), true);
        acc[i] = r;
        carry = c;
        i += 1;
    }
}

/// `a + b` (unnormalized only if the inputs are).
pub fn add<L: Limb>(a: &[L], b: &[L]) -> Vec<L> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = Vec::with_capacity(long.len() + 1);
    out.extend_from_slice(long);
    add_at(&mut out, short, 0);
    out
}

/// `a -= b` in place; returns the final borrow. `b` may be shorter than `a`.
pub fn sub_assign<L: Limb>(a: &mut [L], b: &[L]) -> bool {
    debug_assert!(a.len() >= b.len());
    let mut borrow = false;
    for (d, &s) in a.iter_mut().zip(b) {
        let (r, c) = d.sbb(s, borrow);
        *d = r;
        borrow = c;
    }
    for d in a[b.len()..].iter_mut() {
        if !borrow {
            break;
        }
        let (r, c) = d.sbb(L::zero(), true);
        *d = r;
        borrow = c;
    }
    borrow
}

/// `dst[..src.len()] += src * w`; returns the carry limb out of the top.
#[inline]
pub fn addmul_word<L: Limb>(dst: &mut [L], src: &[L], w: L) -> L {
    let mut carry = L::zero();
    for (d, &s) in dst.iter_mut().zip(src) {
        let (lo, hi) = d.mac(s, w, carry);
        *d = lo;
        carry = hi;
    }
    carry
}

/// `src * w`.
pub fn mul_word<L: Limb>(src: &[L], w: L) -> Vec<L> {
    let mut out = vec![L::zero(); src.len() + 1];
    let top = addmul_word(&mut out[..src.len()], src, w);
    out[src.len()] = top;
    out
}

/// Quadratic product, row by row.
pub fn mul_schoolbook<L: Limb>(a: &[L], b: &[L]) -> Vec<L> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = vec![L::zero(); long.len() + short.len()];
    for (i, &w) in short.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let carry = addmul_word(&mut out[i..i + long.len()], long, w);
        out[i + long.len()] = carry;
    }
    out
}

/// Divides `a` by `d` in place, most significant limb first, and returns the
/// remainder.
pub fn divrem_word<L: Limb>(a: &mut [L], d: L) -> L {
    debug_assert!(!d.is_zero());
    let mut rem = L::zero();
    for x in a.iter_mut().rev() {
        let (q, r) = L::div_wide(rem, *x, d);
        *x = q;
        rem = r;
    }
    rem
}

/// `a << bits`.
pub fn shl<L: Limb>(a: &[L], bits: u64) -> Vec<L> {
    if a.is_empty() {
        return Vec::new();
    }
    let limb_shift = (bits / L::BITS as u64) as usize;
    let bit_shift = (bits % L::BITS as u64) as usize;
    let mut out = vec![L::zero(); limb_shift + a.len() + 1];
    if bit_shift == 0 {
        out[limb_shift..limb_shift + a.len()].copy_from_slice(a);
    } else {
        let back = L::BITS as usize - bit_shift;
        let mut prev = L::zero();
        for (i, &x) in a.iter().enumerate() {
            out[limb_shift + i] = (x << bit_shift) | (prev >> back);
            prev = x;
        }
        out[limb_shift + a.len()] = prev >> back;
    }
    out
}

/// `a >> bits`, discarding the low bits.
pub fn shr<L: Limb>(a: &[L], bits: u64) -> Vec<L> {
    let limb_shift = (bits / L::BITS as u64) as usize;
    if limb_shift >= a.len() {
        return Vec::new();
    }
    let bit_shift = (bits % L::BITS as u64) as usize;
    let src = &a[limb_shift..];
    if bit_shift == 0 {
        return src.to_vec();
    }
    let back = L::BITS as usize - bit_shift;
    let mut out = Vec::with_capacity(src.len());
    for i in 0..src.len() {
        let hi = if i + 1 < src.len() {
            src[i + 1] << back
        } else {
            L::zero()
        };
        out.push((src[i] >> bit_shift) | hi);
    }
    out
}

/// Number of trailing zero bits, or `None` for zero.
pub fn trailing_zeros<L: Limb>(a: &[L]) -> Option<u64> {
    a.iter()
        .position(|x| !x.is_zero())
        .map(|i| i as u64 * L::BITS as u64 + a[i].trailing_zeros() as u64)
}

/// Bit length of a normalized sequence.
pub fn bit_len<L: Limb>(a: &[L]) -> u64 {
    match a.last() {
        None => 0,
        Some(top) => a.len() as u64 * L::BITS as u64 - top.leading_zeros() as u64,
    }
}
