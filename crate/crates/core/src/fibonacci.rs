//! Fibonacci polynomials and the Fibonacci basis of pure-parity polynomials.
//!
//! `f_0 = 0`, `f_1 = 1`, `f_{n+2} = z f_{n+1} + f_n`. For `m >= 0` the family
//! `f_{m+1}, f_{m-1}, f_{m-3}, ...` has leading coefficient 1 and degrees
//! `m, m-2, ...`, so every polynomial of degree `m` and parity `m` expands in
//! it with integer coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::poly::ZPoly;

/// The Fibonacci polynomial `f_n`, for any integer `n`.
///
/// Negative indices use `f_{-n} = (-1)^{n+1} f_n`.
pub fn fib(n: i64) -> ZPoly {
    let k = n.unsigned_abs();
    let mut prev = ZPoly::zero();
    let mut cur = ZPoly::one();
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &cur.shift() + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    if n < 0 && k % 2 == 0 {
        -cur
    } else {
        cur
    }
}

/// `[f_0, f_1, ..., f_n]`.
pub fn fib_table(n: usize) -> Vec<ZPoly> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(ZPoly::zero());
    if n >= 1 {
        table.push(ZPoly::one());
    }
    for i in 2..=n {
        let next = &table[i - 1].shift() + &table[i - 2];
        table.push(next);
    }
    table
}

/// Coefficients of `f_{m+1}` read off Pascal's triangle:
/// `[C(m-k, k)]` for `k = 0..=m/2`, the coefficient of `z^{m-2k}`.
pub fn fib_coeffs_binomial(m: usize) -> Vec<BigInt> {
    let m = m as i64;
    (0..=m / 2).map(|k| binomial(m - k, k)).collect()
}

/// Integer coefficients `t_i` with `p = sum_i t_i f_{m+1-2i}`, `m = deg p`,
/// found by eliminating the leading term repeatedly.
pub fn fib_expansion(p: &ZPoly) -> Result<Vec<BigInt>> {
    let (m, _) = p.pure_parity()?;
    let table = fib_table(m + 1);
    let mut rest = p.clone();
    let mut out = Vec::with_capacity(m / 2 + 1);
    for i in 0..=m / 2 {
        let t = rest.coeff(m - 2 * i).clone();
        if !t.is_zero() {
            rest = &rest - &table[m + 1 - 2 * i].scale(&t);
        }
        out.push(t);
    }
    debug_assert!(rest.is_zero());
    Ok(out)
}

/// A pure-parity polynomial written as
/// `leading * sum_i (-1)^i alpha_i f_{degree+1-2i}` with `alpha_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibBasisRep {
    pub degree: usize,
    pub leading: BigInt,
    pub alpha: Vec<BigRational>,
}

impl FibBasisRep {
    /// `leading * alpha_i`, which is always an integer for a valid representation.
    pub fn scaled_alpha(&self) -> Result<Vec<BigInt>> {
        self.alpha
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let v = a * BigRational::from_integer(self.leading.clone());
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::NonIntegralBasis {
                        index: i,
                        value: v.to_string(),
                    })
                }
            })
            .collect()
    }
}

pub fn to_fib_basis(p: &ZPoly) -> Result<FibBasisRep> {
    let expansion = fib_expansion(p)?;
    let leading = p.leading().expect("nonzero").clone();
    let denom = BigRational::from_integer(leading.clone());
    let alpha = expansion
        .into_iter()
        .enumerate()
        .map(|(i, t)| {
            let t = if i % 2 == 1 { -t } else { t };
            BigRational::from_integer(t) / &denom
        })
        .collect();
    Ok(FibBasisRep {
        degree: p.degree().expect("nonzero"),
        leading,
        alpha,
    })
}

pub fn from_fib_basis(rep: &FibBasisRep) -> Result<ZPoly> {
    if rep.leading.is_zero() {
        return Err(Error::ZeroLeading);
    }
    let expected = rep.degree / 2 + 1;
    if rep.alpha.len() != expected {
        return Err(Error::AlphaLength {
            degree: rep.degree,
            expected,
            found: rep.alpha.len(),
        });
    }
    if !rep.alpha[0].is_one() {
        return Err(Error::AlphaHead);
    }
    let scaled = rep.scaled_alpha()?;
    let table = fib_table(rep.degree + 1);
    let mut out = ZPoly::zero();
    for (i, s) in scaled.iter().enumerate() {
        let s = if i % 2 == 1 { -s } else { s.clone() };
        out = &out + &table[rep.degree + 1 - 2 * i].scale(&s);
    }
    Ok(out)
}
