//! Exact polynomial interpolation over the integers.
//!
//! Newton divided differences are computed in place, then converted to
//! monomial coefficients with a second in-place double loop. Every division
//! in the first loop is exact; a nonzero remainder is reported as an error
//! because it can only come from a wrong point value.
//!
//! The even-odd driver turns one degree-`2n` problem on `0, ±x_j` into two
//! degree-`n` problems on the squared abscissas, which halves the quadratic
//! interpolation work.

use crate::error::{Error, Result};
use crate::int::Integer;
use crate::limb::Limb;

/// Point values `y_k = p(x_k)` at distinct small abscissas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpProblem<L: Limb = u32> {
    xs: Vec<i64>,
    ys: Vec<Integer<L>>,
}

impl<L: Limb> InterpProblem<L> {
    pub fn new(xs: Vec<i64>, ys: Vec<Integer<L>>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::InvalidProblem("abscissa and value counts differ"));
        }
        if xs.is_empty() {
            return Err(Error::InvalidProblem("no points"));
        }
        for (i, a) in xs.iter().enumerate() {
            if xs[..i].contains(a) {
                return Err(Error::InvalidProblem("abscissas are not distinct"));
            }
        }
        Ok(InterpProblem { xs, ys })
    }

    pub fn xs(&self) -> &[i64] {
        &self.xs
    }

    pub fn ys(&self) -> &[Integer<L>] {
        &self.ys
    }

    pub fn degree(&self) -> usize {
        self.xs.len() - 1
    }
}

/// Monomial coefficients, index = power of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffVector<L: Limb = u32> {
    coeffs: Vec<Integer<L>>,
}

impl<L: Limb> CoeffVector<L> {
    pub fn new(coeffs: Vec<Integer<L>>) -> Self {
        CoeffVector { coeffs }
    }

    pub fn coeffs(&self) -> &[Integer<L>] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer<L>> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation at a small signed abscissa.
    pub fn eval(&self, x: i64) -> Integer<L> {
        let neg = x < 0;
        let mag = L::from_u64_lossy(x.unsigned_abs());
        debug_assert_eq!(mag.as_u128(), x.unsigned_abs() as u128);
        let mut acc = Integer::zero();
        for c in self.coeffs.iter().rev() {
            let scaled = acc.mul_word(mag);
            let scaled = if neg { -scaled } else { scaled };
            acc = &scaled + c;
        }
        acc
    }
}

/// Limb-level operation tally for the interpolation loops.
///
/// Each subtraction, multiplication by a word, shift or word division adds
/// the number of limbs it touches.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct WorkCount {
    pub limb_ops: u64,
}

impl WorkCount {
    fn add(&mut self, limbs: usize) {
        self.limb_ops += limbs.max(1) as u64;
    }
}

impl std::ops::Add for WorkCount {
    type Output = WorkCount;

    fn add(self, rhs: WorkCount) -> WorkCount {
        WorkCount {
            limb_ops: self.limb_ops + rhs.limb_ops,
        }
    }
}

/// `d = ±2^shift · odd` with the odd part in one limb.
#[derive(Debug, Clone, Copy)]
struct ExactDivisor<L> {
    negative: bool,
    shift: u32,
    odd: L,
}

impl<L: Limb> ExactDivisor<L> {
    fn new(d: i128) -> Result<Self> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        let mag = d.unsigned_abs();
        let shift = mag.trailing_zeros();
        let odd = mag >> shift;
        if odd > L::max_value().as_u128() {
            return Err(Error::AbscissaOutOfRange(d));
        }
        Ok(ExactDivisor {
            negative: d < 0,
            shift,
            odd: L::from_u64_lossy(odd as u64),
        })
    }

    fn divide(&self, v: &Integer<L>, work: &mut WorkCount) -> Result<Integer<L>> {
        let mut q = if self.shift > 0 {
            work.add(v.len());
            v.shr_exact(self.shift as u64)?
        } else {
            v.clone()
        };
        if self.odd != L::one() {
            work.add(q.len());
            q = q.div_exact_word(self.odd)?;
        }
        Ok(if self.negative { -q } else { q })
    }
}

/// `v * x` for a small signed `x`.
fn mul_small<L: Limb>(v: &Integer<L>, x: i64, work: &mut WorkCount) -> Result<Integer<L>> {
    let mag = x.unsigned_abs();
    if mag as u128 > L::max_value().as_u128() {
        return Err(Error::AbscissaOutOfRange(x as i128));
    }
    work.add(v.len());
    let p = if mag.is_power_of_two() {
        v.shl(mag.trailing_zeros() as u64)
    } else {
        v.mul_word(L::from_u64_lossy(mag))
    };
    Ok(if x < 0 { -p } else { p })
}

fn sub_counted<L: Limb>(a: &Integer<L>, b: &Integer<L>, work: &mut WorkCount) -> Integer<L> {
    work.add(a.len().max(b.len()));
    a - b
}

/// Newton divided differences `α_0..α_n`, computed in place.
pub fn divided_differences<L: Limb>(prob: &InterpProblem<L>) -> Result<Vec<Integer<L>>> {
    divided_differences_counted(prob, &mut WorkCount::default())
}

pub fn divided_differences_counted<L: Limb>(
    prob: &InterpProblem<L>,
    work: &mut WorkCount,
) -> Result<Vec<Integer<L>>> {
    let xs = &prob.xs;
    let n = prob.degree();
    let mut coeff = prob.ys.clone();
    for k in 1..=n {
        // Descending m keeps coeff[m - 1] at level k - 1 when it is read.
        for m in (k..=n).rev() {
            let div = ExactDivisor::<L>::new(xs[m] as i128 - xs[m - k] as i128)?;
            let diff = sub_counted(&coeff[m], &coeff[m - 1], work);
            coeff[m] = div.divide(&diff, work)?;
        }
    }
    Ok(coeff)
}

/// Converts Newton coefficients for `xs` into monomial coefficients, in place.
pub fn newton_to_monomial<L: Limb>(alphas: Vec<Integer<L>>, xs: &[i64]) -> Result<CoeffVector<L>> {
    newton_to_monomial_counted(alphas, xs, &mut WorkCount::default())
}

pub fn newton_to_monomial_counted<L: Limb>(
    alphas: Vec<Integer<L>>,
    xs: &[i64],
    work: &mut WorkCount,
) -> Result<CoeffVector<L>> {
    if alphas.len() != xs.len() {
        return Err(Error::InvalidProblem(
            "abscissa and coefficient counts differ",
        ));
    }
    let mut coeff = alphas;
    let n = coeff.len() - 1;
    for m in (0..n).rev() {
        if xs[m] == 0 {
            continue;
        }
        for k in m..n {
            let t = mul_small(&coeff[k + 1], xs[m], work)?;
            coeff[k] = sub_counted(&coeff[k], &t, work);
        }
    }
    Ok(CoeffVector::new(coeff))
}

/// Exact coefficient recovery: divided differences followed by the Newton to
/// monomial conversion.
pub fn interpolate<L: Limb>(prob: &InterpProblem<L>) -> Result<CoeffVector<L>> {
    interpolate_counted(prob, &mut WorkCount::default())
}

pub fn interpolate_counted<L: Limb>(
    prob: &InterpProblem<L>,
    work: &mut WorkCount,
) -> Result<CoeffVector<L>> {
    let alphas = divided_differences_counted(prob, work)?;
    newton_to_monomial_counted(alphas, &prob.xs, work)
}

/// `(W_e(x²), W_o(x²))` from `W(x)` and `W(-x)`.
pub fn even_odd_split_values<L: Limb>(
    w_plus: &Integer<L>,
    w_minus: &Integer<L>,
    x: L,
) -> Result<(Integer<L>, Integer<L>)> {
    split_values_counted(w_plus, w_minus, x, &mut WorkCount::default())
}

fn split_values_counted<L: Limb>(
    w_plus: &Integer<L>,
    w_minus: &Integer<L>,
    x: L,
    work: &mut WorkCount,
) -> Result<(Integer<L>, Integer<L>)> {
    if x.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let two = ExactDivisor::<L>::new(2)?;
    let two_x = ExactDivisor::<L>::new(2 * x.as_u128() as i128)?;
    work.add(w_plus.len().max(w_minus.len()));
    let we = two.divide(&(w_plus + w_minus), work)?;
    let wo = two_x.divide(&sub_counted(w_plus, w_minus, work), work)?;
    Ok((we, wo))
}

/// Interpolates a degree-`2n` product polynomial from `W(0)` and the pairs
/// `(W(x_j), W(-x_j), x_j)`, returning `w_0..w_2n`.
///
/// The even part `W_e` and the shifted odd part `X·W_o(X)` are each
/// interpolated on the squared abscissas `0, x_0², ..., x_{n-1}²`. With
/// `parallel` set, the two run on separate threads; the output is identical.
pub fn even_odd_interpolate<L: Limb>(
    values_at_zero: &Integer<L>,
    paired_values: &[(Integer<L>, Integer<L>, L)],
    n: usize,
    parallel: bool,
) -> Result<CoeffVector<L>> {
    even_odd_interpolate_counted(values_at_zero, paired_values, n, parallel).map(|(c, _)| c)
}

pub fn even_odd_interpolate_counted<L: Limb>(
    values_at_zero: &Integer<L>,
    paired_values: &[(Integer<L>, Integer<L>, L)],
    n: usize,
    parallel: bool,
) -> Result<(CoeffVector<L>, WorkCount)> {
    if paired_values.len() != n {
        return Err(Error::InvalidProblem(
            "expected one value pair per nonzero abscissa",
        ));
    }
    let mut work = WorkCount::default();
    let mut squares = vec![0i64];
    let mut even_ys = vec![values_at_zero.clone()];
    let mut odd_ys = vec![Integer::zero()];
    for (w_plus, w_minus, x) in paired_values {
        let xv = x.as_u128();
        let sq = xv * xv;
        if sq > L::max_value().as_u128() {
            return Err(Error::AbscissaOutOfRange(sq as i128));
        }
        let (we, wo) = split_values_counted(w_plus, w_minus, *x, &mut work)?;
        squares.push(sq as i64);
        even_ys.push(we);
        odd_ys.push(mul_small(&wo, sq as i64, &mut work)?);
    }
    let even = InterpProblem::new(squares.clone(), even_ys)?;
    let odd = InterpProblem::new(squares, odd_ys)?;

    let run = |p: &InterpProblem<L>| {
        let mut w = WorkCount::default();
        interpolate_counted(p, &mut w).map(|c| (c, w))
    };
    let (even_res, odd_res) = if parallel {
        std::thread::scope(|s| {
            let h = s.spawn(|| run(&odd));
            let e = run(&even);
            (e, h.join().expect("odd-part interpolation panicked"))
        })
    } else {
        (run(&even), run(&odd))
    };
    let (even_c, we) = even_res?;
    let (odd_c, wo) = odd_res?;
    work = work + we + wo;

    let mut odd_c = odd_c.into_coeffs();
    if !odd_c[0].is_zero() {
        return Err(Error::InvalidProblem(
            "odd part has a nonzero constant term",
        ));
    }
    let mut out = Vec::with_capacity(2 * n + 1);
    let mut odd_iter = odd_c.drain(1..);
    for e in even_c.into_coeffs() {
        out.push(e);
        if let Some(o) = odd_iter.next() {
            out.push(o);
        }
    }
    Ok((CoeffVector::new(out), work))
}
