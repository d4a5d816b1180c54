//! Conversion between binary limbs and decimal or hexadecimal text.
//!
//! Decimal output peels off the largest power of ten that fits in a limb per
//! pass, so it is quadratic in the operand length.

use crate::error::{Error, Result};
use crate::limb::Limb;
use crate::limbs;
use crate::nat::Natural;

/// Exact base-10 representation without leading zeros.
pub fn to_decimal<L: Limb>(n: &Natural<L>) -> String {
    if n.is_zero() {
        return "0".to_string();
    }
    let mut work = n.limbs().to_vec();
    let mut chunks = Vec::with_capacity(work.len() * L::BITS as usize / 29 + 1);
    while !work.is_empty() {
        chunks.push(limbs::divrem_word(&mut work, L::DECIMAL_CHUNK));
        limbs::trim(&mut work);
    }
    let mut out = String::with_capacity(chunks.len() * L::DECIMAL_DIGITS);
    let mut iter = chunks.iter().rev();
    if let Some(top) = iter.next() {
        out.push_str(&top.to_string());
    }
    for c in iter {
        out.push_str(&format!("{:0width$}", c, width = L::DECIMAL_DIGITS));
    }
    out
}

/// Parses a string of decimal digits. Leading zeros are accepted.
pub fn parse_decimal<L: Limb>(s: &str) -> Result<Natural<L>> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not a decimal numeral: {s:?}")));
    }
    let bytes = s.as_bytes();
    let head = bytes.len() % L::DECIMAL_DIGITS;
    let mut acc: Vec<L> = Vec::new();
    let mut push_chunk = |chunk: &[u8], scale: L| {
        let mut value = L::zero();
        let ten = L::from_u64_lossy(10);
        for &b in chunk {
            value = value * ten + L::from_u64_lossy((b - b'0') as u64);
        }
        let mut next = limbs::mul_word(&acc, scale);
        limbs::add_at(&mut next, &[value], 0);
        limbs::trim(&mut next);
        acc = next;
    };
    if head > 0 {
        push_chunk(&bytes[..head], L::one());
    }
    for chunk in bytes[head..].chunks(L::DECIMAL_DIGITS) {
        push_chunk(chunk, L::DECIMAL_CHUNK);
    }
    Ok(Natural::from_limbs(acc))
}

/// Lowercase hexadecimal without prefix or leading zeros.
pub fn to_hex<L: Limb>(n: &Natural<L>) -> String {
    let Some((top, rest)) = n.limbs().split_last() else {
        return "0".to_string();
    };
    let width = L::BITS as usize / 4;
    let mut out = format!("{:x}", top);
    for limb in rest.iter().rev() {
        out.push_str(&format!("{:0width$x}", limb, width = width));
    }
    out
}

/// Parses hexadecimal digits (no prefix).
pub fn parse_hex<L: Limb>(s: &str) -> Result<Natural<L>> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_hexdigit()) {
        return Err(Error::Parse(format!("not a hexadecimal numeral: {s:?}")));
    }
    let per_limb = L::BITS as usize / 4;
    let bytes = s.as_bytes();
    let mut limbs = Vec::with_capacity(bytes.len() / per_limb + 1);
    for chunk in bytes.rchunks(per_limb) {
        let mut value = L::zero();
        for &b in chunk {
            let d = (b as char).to_digit(16).expect("checked above");
            value = (value << 4) | L::from_u64_lossy(d as u64);
        }
        limbs.push(value);
    }
    Ok(Natural::from_limbs(limbs))
}

/// Parses a decimal numeral, or a hexadecimal one with a `0x` prefix.
pub fn parse_numeral<L: Limb>(s: &str) -> Result<Natural<L>> {
    let s = s.trim();
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => parse_hex(hex),
        None => parse_decimal(s),
    }
}
