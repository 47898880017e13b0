//! Dense univariate polynomials in `z` with arbitrary-precision integer
//! coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ParseError, Result};

/// Exponent parity of a nonzero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Mixed => "mixed",
        })
    }
}

/// Polynomial in `z` over the integers.
///
/// `coeffs[i]` is the coefficient of `z^i`. The highest stored coefficient
/// is nonzero; the zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        ZPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        ZPoly::new(vec![c])
    }

    /// `c * z^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::ZERO; k + 1];
        coeffs[k] = c;
        ZPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of `z^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> &BigInt {
        self.coeffs.get(k).unwrap_or(&BigInt::ZERO)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Exponent parity, `None` for the zero polynomial.
    pub fn parity(&self) -> Option<Parity> {
        let mut even = false;
        let mut odd = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if i % 2 == 0 {
                    even = true;
                } else {
                    odd = true;
                }
            }
        }
        match (even, odd) {
            (false, false) => None,
            (true, false) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            (true, true) => Some(Parity::Mixed),
        }
    }

    /// Degree and parity of a nonzero polynomial with pure parity.
    pub fn pure_parity(&self) -> Result<(usize, Parity)> {
        match self.parity() {
            None => Err(Error::ZeroPolynomial),
            Some(Parity::Mixed) => Err(Error::MixedParity),
            Some(parity) => Ok((self.coeffs.len() - 1, parity)),
        }
    }

    /// Multiplies by `z`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::ZERO);
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        ZPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Coefficients reduced into `{0, 1}`.
    pub fn mod2(&self) -> Self {
        ZPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    if c.is_odd() {
                        BigInt::one()
                    } else {
                        BigInt::ZERO
                    }
                })
                .collect(),
        )
    }

    /// Ascending comma-separated list including zeros, e.g. `1,0,-1`.
    pub fn to_coeff_list(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses the ascending coefficient-list syntax only.
    pub fn parse_coeff_list(input: &str) -> Result<Self, ParseError> {
        let mut coeffs = Vec::new();
        let mut offset = 0;
        for field in input.split(',') {
            let trimmed = field.trim();
            let lead = field.len() - field.trim_start().len();
            if trimmed.is_empty() {
                return Err(ParseError::new(input, offset + lead, "empty coefficient"));
            }
            let value = trimmed
                .parse::<BigInt>()
                .map_err(|_| ParseError::new(input, offset + lead, "expected an integer"))?;
            coeffs.push(value);
            offset += field.len() + 1;
        }
        Ok(ZPoly::new(coeffs))
    }
}

fn add_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        ZPoly::new(add_slices(&self.coeffs, &rhs.coeffs))
    }
}

impl Add for ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: ZPoly) -> ZPoly {
        &self + &rhs
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        -&self
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        self + &(-rhs)
    }
}

impl Sub for ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: ZPoly) -> ZPoly {
        &self - &rhs
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }
}

impl Mul for ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: ZPoly) -> ZPoly {
        &self * &rhs
    }
}

/// True iff every coefficient of `p - q` is even.
pub fn mod2_equal(p: &ZPoly, q: &ZPoly) -> bool {
    (p - q).coeffs.iter().all(|c| c.is_even())
}

/// Determinant of the link whose Conway polynomial is `p`: the modulus of
/// `p` evaluated at `z = 2i`.
///
/// Even `p` gives `|sum c_2k (-4)^k|`, odd `p` gives `2 |sum c_2k+1 (-4)^k|`.
pub fn determinant(p: &ZPoly) -> Result<BigInt> {
    let parity = match p.parity() {
        None => return Ok(BigInt::ZERO),
        Some(Parity::Mixed) => return Err(Error::MixedParity),
        Some(parity) => parity,
    };
    let start = if parity == Parity::Even { 0 } else { 1 };
    let mut sum = BigInt::ZERO;
    let mut power = BigInt::one();
    for c in p.coeffs.iter().skip(start).step_by(2) {
        sum += c * &power;
        power *= -4;
    }
    let sum = sum.abs();
    Ok(if parity == Parity::Even { sum } else { sum * 2 })
}

impl fmt::Display for ZPoly {
    /// Descending powers with implicit unit coefficients: `z^4+3z^2+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for ZPoly {
    type Err = ParseError;

    /// Accepts either an ascending coefficient list (`1,0,-1`) or the
    /// human form (`1 - z^2 - 3z^4 - z^6`).
    fn from_str(s: &str) -> Result<Self, ParseError> {
        if s.contains(',') {
            ZPoly::parse_coeff_list(s)
        } else {
            parse_human(s)
        }
    }
}

struct Cursor<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.input[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let input = self.input;
        (self.pos > start).then(|| &input[start..self.pos])
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.input, self.pos, message)
    }
}

fn parse_human(input: &str) -> Result<ZPoly, ParseError> {
    let mut cur = Cursor { input, pos: 0 };
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        let mut negative = false;
        match cur.peek() {
            None if first => return Err(cur.error("empty polynomial")),
            None => break,
            Some('+') => cur.bump(),
            Some('-') => {
                negative = true;
                cur.bump();
            }
            Some(_) if first => {}
            Some(c) => return Err(cur.error(format!("expected '+' or '-', found '{c}'"))),
        }
        first = false;
        cur.skip_ws();

        let number = cur.digits().map(|d| d.parse::<BigInt>().expect("digits"));
        cur.skip_ws();
        if number.is_some() && cur.peek() == Some('*') {
            cur.bump();
            cur.skip_ws();
            if cur.peek() != Some('z') {
                return Err(cur.error("expected 'z' after '*'"));
            }
        }
        let exponent = if cur.peek() == Some('z') {
            cur.bump();
            cur.skip_ws();
            if cur.peek() == Some('^') {
                cur.bump();
                cur.skip_ws();
                let digits = cur
                    .digits()
                    .ok_or_else(|| cur.error("expected an exponent"))?;
                digits
                    .parse::<usize>()
                    .map_err(|_| cur.error("exponent too large"))?
            } else {
                1
            }
        } else if number.is_some() {
            0
        } else {
            return Err(match cur.peek() {
                Some(c) => cur.error(format!("unexpected character '{c}'")),
                None => cur.error("expected a term"),
            });
        };
        let mut value = number.unwrap_or_else(BigInt::one);
        if negative {
            value = -value;
        }
        if coeffs.len() <= exponent {
            coeffs.resize(exponent + 1, BigInt::ZERO);
        }
        coeffs[exponent] += value;
    }
    Ok(ZPoly::new(coeffs))
}
