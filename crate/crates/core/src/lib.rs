//! Multiprecision multiplication by B-way Toom-Cook.
//!
//! Operands are split into `B` blocks, evaluated at `0` and `±2^j`, multiplied
//! pointwise, and the product polynomial is recovered by exact Newton
//! interpolation with the even-odd method before being recombined.
//!
//! Every algorithm is generic over the limb type. The aliases below fix the
//! default 32-bit limbs; the `*64` aliases use 64-bit limbs.
//!
//! ```
//! use toom_core::{parse_numeral, to_decimal, Nat, ToomConfig, ToomEngine};
//!
//! let a: Nat = parse_numeral("123456789012345678901234567890").unwrap();
//! let b: Nat = parse_numeral("987654321098765432109876543210").unwrap();
//! let engine = ToomEngine::recursive(ToomConfig::default(), 1);
//! let w = engine.multiply(&a, &b).unwrap();
//! assert_eq!(to_decimal(&w), "121932631137021795226185032733622923332237463801111263526900");
//! ```

pub mod engine;
pub mod error;
pub mod executor;
pub mod int;
pub mod interp;
pub mod limb;
pub mod limbs;
pub mod nat;
pub mod poly;
pub mod radix;

pub use engine::{
    alpha_exponent, block_bits_for, choose_plan, multiply, toom_once, toom_once_with_stats,
    verify_inner, CountingMultiplier, InnerMultiplier, Mode, RecursiveToom, Schoolbook, Split,
    TierTable, ToomConfig, ToomEngine, ToomPlan, ToomStats, DEFAULT_SCHOOLBOOK_THRESHOLD,
    MAX_BLOCKS,
};
pub use error::{Error, Result};
pub use executor::Executor;
pub use int::Integer;
pub use interp::{
    divided_differences, even_odd_interpolate, even_odd_split_values, interpolate,
    newton_to_monomial, CoeffVector, InterpProblem, WorkCount,
};
pub use limb::Limb;
pub use nat::Natural;
pub use poly::{eval_at_pow2, eval_pair, recombine, split, BlockPoly, PointSet};
pub use radix::{parse_decimal, parse_hex, parse_numeral, to_decimal, to_hex};

/// Natural number with 32-bit limbs.
pub type Nat = Natural<u32>;
/// Signed integer with 32-bit limbs.
pub type Int = Integer<u32>;
/// Natural number with 64-bit limbs.
pub type Nat64 = Natural<u64>;
/// Signed integer with 64-bit limbs.
pub type Int64 = Integer<u64>;
