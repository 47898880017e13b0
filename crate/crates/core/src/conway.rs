//! Conway forms of two-bridge links and the Siebenmann recursion
//! `P_m = b_m z P_{m-1} + P_{m-2}`, `P_{-1} = 0`, `P_0 = 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, ParseError, Result};
use crate::poly::ZPoly;

/// Recursion parameters `b_1..b_m` of the Conway form
/// `C(2b_1, -2b_2, ..., (-1)^{m+1} 2b_m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoBridgeForm {
    params: Vec<BigInt>,
}

impl TwoBridgeForm {
    pub fn new(params: Vec<BigInt>) -> Result<Self> {
        if params.is_empty() {
            return Err(Error::EmptyForm);
        }
        if let Some(position) = params.iter().position(Zero::is_zero) {
            return Err(Error::ZeroParameter { position });
        }
        Ok(TwoBridgeForm { params })
    }

    pub fn from_i64s(params: &[i64]) -> Result<Self> {
        TwoBridgeForm::new(params.iter().map(|&b| BigInt::from(b)).collect())
    }

    /// Reads the literal Conway notation `C(e_1, ..., e_m)`; each entry must
    /// be even and nonzero, and `b_i = (-1)^{i+1} e_i / 2`.
    pub fn from_literal(entries: &[BigInt]) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyForm);
        }
        let mut params = Vec::with_capacity(entries.len());
        for (position, e) in entries.iter().enumerate() {
            if e.is_zero() || e.is_odd() {
                return Err(Error::BadLiteralEntry {
                    position,
                    value: e.to_string(),
                });
            }
            let half: BigInt = e / 2;
            params.push(if position % 2 == 0 { half } else { -half });
        }
        Ok(TwoBridgeForm { params })
    }

    pub fn to_literal(&self) -> Vec<BigInt> {
        self.params
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let twice: BigInt = b * 2;
                if i % 2 == 0 {
                    twice
                } else {
                    -twice
                }
            })
            .collect()
    }

    pub fn params(&self) -> &[BigInt] {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    /// Two-component link iff the length is odd.
    pub fn is_knot(&self) -> bool {
        self.params.len() % 2 == 0
    }

    /// Conway polynomial by the two-term recursion.
    pub fn conway_poly(&self) -> ZPoly {
        let mut prev = ZPoly::zero();
        let mut cur = ZPoly::one();
        for b in &self.params {
            let next = &cur.shift().scale(b) + &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    }

    /// The coefficient `c_{m-2k}` of `z^{m-2k}`.
    pub fn coefficient(&self, k: usize) -> Result<BigInt> {
        let m = self.len();
        if k > m / 2 {
            return Err(Error::IndexOutOfRange { k, max: m / 2 });
        }
        Ok(self.conway_poly().coeff(m - 2 * k).clone())
    }

    /// Sum of the monomials of [`monomial_set`] evaluated at this form.
    pub fn monomial_sum(&self, k: usize) -> Result<BigInt> {
        let m = self.len();
        if k > m / 2 {
            return Err(Error::IndexOutOfRange { k, max: m / 2 });
        }
        let mut total = BigInt::ZERO;
        for deleted in monomial_set(m, k)? {
            let mut keep = vec![true; m];
            for &i in &deleted {
                keep[i - 1] = false;
                keep[i] = false;
            }
            let term = self
                .params
                .iter()
                .zip(&keep)
                .filter(|(_, &kept)| kept)
                .fold(BigInt::one(), |acc, (b, _)| acc * b);
            total += term;
        }
        Ok(total)
    }

    /// Literal notation, e.g. `C(4,-2,2)`.
    pub fn literal_string(&self) -> String {
        let entries: Vec<String> = self.to_literal().iter().map(ToString::to_string).collect();
        format!("C({})", entries.join(","))
    }
}

/// Index sets `{i_1 < ... < i_k}` in `1..=m-1` with `i_h + 1 < i_{h+1}`.
///
/// Each index `i` removes the adjacent pair `b_i b_{i+1}` from `b_1 ... b_m`;
/// the surviving product is one monomial of the coefficient `c_{m-2k}`.
pub fn monomial_set(m: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    if m < 2 * k {
        return Err(Error::MonomialRange { m, k });
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    collect_sets(1, m, k, &mut current, &mut out);
    Ok(out)
}

fn collect_sets(
    start: usize,
    m: usize,
    k: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    let remaining = k - current.len();
    // the last pair needs i + 1 <= m; each further pair needs two more slots
    let mut i = start;
    while i + 2 * remaining - 1 <= m {
        current.push(i);
        collect_sets(i + 2, m, k, current, out);
        current.pop();
        i += 1;
    }
}

impl fmt::Display for TwoBridgeForm {
    /// Parameter syntax, e.g. `b=2,1,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(ToString::to_string).collect();
        write!(f, "b={}", params.join(","))
    }
}

impl FromStr for TwoBridgeForm {
    type Err = Error;

    /// Accepts `C(4,-2,2)` (literal entries) or `b=2,1,1` (parameters).
    fn from_str(s: &str) -> Result<Self> {
        let lead = s.len() - s.trim_start().len();
        let body = s.trim();
        let (list_start, list, literal) =
            if let Some(rest) = body.strip_prefix("C(").or_else(|| body.strip_prefix("c(")) {
                let close = rest
                    .find(')')
                    .ok_or_else(|| ParseError::new(s, s.len(), "missing ')'"))?;
                let tail = &rest[close + 1..];
                if !tail.trim().is_empty() {
                    let offset = lead + 2 + close + 1 + (tail.len() - tail.trim_start().len());
                    return Err(ParseError::new(s, offset, "unexpected text after ')'").into());
                }
                (lead + 2, &rest[..close], true)
            } else if let Some(rest) = body.strip_prefix("b=") {
                (lead + 2, rest, false)
            } else {
                return Err(ParseError::new(s, lead, "expected 'C(...)' or 'b=...'").into());
            };
        let values = parse_int_list(s, list_start, list)?;
        if literal {
            TwoBridgeForm::from_literal(&values)
        } else {
            TwoBridgeForm::new(values)
        }
    }
}

/// Comma-separated integers; `base` is the offset of `list` inside `input`.
pub(crate) fn parse_int_list(
    input: &str,
    base: usize,
    list: &str,
) -> Result<Vec<BigInt>, ParseError> {
    let mut values = Vec::new();
    let mut offset = base;
    for field in list.split(',') {
        let lead = field.len() - field.trim_start().len();
        let trimmed = field.trim();
        if trimmed.is_empty() {
            return Err(ParseError::new(input, offset + lead, "expected an integer"));
        }
        let value = trimmed.parse::<BigInt>().map_err(|_| {
            ParseError::new(
                input,
                offset + lead,
                format!("'{trimmed}' is not an integer"),
            )
        })?;
        values.push(value);
        offset += field.len() + 1;
    }
    Ok(values)
}
