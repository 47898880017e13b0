//! Alexander polynomials of two-bridge knots and links, the transforms to
//! and from Conway polynomials, and the Alexander-level criteria.
//!
//! A knot polynomial is stored in the symmetric alternating form
//! `a_0 - a_1 (t + t^-1) + a_2 (t^2 + t^-2) - ... + (-1)^n a_n (t^n + t^-n)`.
//! For a two-component link the same form is the Hosokawa factor, and the
//! Alexander polynomial is `(t^1/2 - t^-1/2)` times it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::binomial::binomial;
use crate::conway::parse_int_list;
use crate::error::{Error, Result};
use crate::fibonacci::{fib_expansion, fib_table};
use crate::obstructions::greatest_prime_divisor;
use crate::poly::{Parity, ZPoly};
use crate::verdict::{SieveReport, TestName, Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlexPoly {
    coeffs: Vec<BigInt>,
    link_factor: bool,
}

impl AlexPoly {
    /// `coeffs` is `a_0..a_n`; `a_n` must be nonzero.
    pub fn new(coeffs: Vec<BigInt>, link_factor: bool) -> Result<Self> {
        match coeffs.last() {
            Some(top) if !top.is_zero() => Ok(AlexPoly {
                coeffs,
                link_factor,
            }),
            _ => Err(Error::BadAlexander),
        }
    }

    pub fn from_i64s(coeffs: &[i64], link_factor: bool) -> Result<Self> {
        AlexPoly::new(
            coeffs.iter().map(|&a| BigInt::from(a)).collect(),
            link_factor,
        )
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonempty")
    }

    pub fn link_factor(&self) -> bool {
        self.link_factor
    }

    pub fn is_normalized(&self) -> bool {
        self.leading().is_positive()
    }

    /// Multiplies by `eps = +-1` so that `a_n > 0`; returns the result and `eps`.
    pub fn normalize(&self) -> (AlexPoly, i8) {
        if self.is_normalized() {
            (self.clone(), 1)
        } else {
            let coeffs = self.coeffs.iter().map(|a| -a).collect();
            (
                AlexPoly {
                    coeffs,
                    link_factor: self.link_factor,
                },
                -1,
            )
        }
    }

    /// Coefficients of `t^-n..t^n` of the symmetric factor.
    pub fn laurent_coeffs(&self) -> Vec<BigInt> {
        let n = self.degree();
        let mut out = vec![BigInt::ZERO; 2 * n + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            let signed = if k % 2 == 1 { -a } else { a.clone() };
            out[n + k] = signed.clone();
            out[n - k] = signed;
        }
        out
    }

    /// Comma-separated `a_0..a_n`.
    pub fn to_coeff_list(&self) -> String {
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for AlexPoly {
    /// `23 - 19(t+t^-1) + 9(t^2+t^-2) - (t^3+t^-3)`, wrapped in
    /// `(t^1/2-t^-1/2)(...)` when the link factor is set.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut body = String::new();
        for (k, a) in self.coeffs.iter().enumerate() {
            let signed = if k % 2 == 1 { -a } else { a.clone() };
            if signed.is_zero() {
                continue;
            }
            let mag = signed.abs();
            if body.is_empty() {
                if signed.is_negative() {
                    body.push('-');
                }
            } else {
                body.push_str(if signed.is_negative() { " - " } else { " + " });
            }
            match k {
                0 => body.push_str(&mag.to_string()),
                _ => {
                    if !mag.is_one() {
                        body.push_str(&mag.to_string());
                    }
                    if k == 1 {
                        body.push_str("(t+t^-1)");
                    } else {
                        body.push_str(&format!("(t^{k}+t^-{k})"));
                    }
                }
            }
        }
        if self.link_factor {
            write!(f, "(t^1/2-t^-1/2)({body})")
        } else {
            f.write_str(&body)
        }
    }
}

impl FromStr for AlexPoly {
    type Err = Error;

    /// Knot coefficient list `a_0,...,a_n`; set the link factor afterwards
    /// with [`AlexPoly::with_link_factor`].
    fn from_str(s: &str) -> Result<Self> {
        let values = parse_int_list(s, 0, s)?;
        AlexPoly::new(values, false)
    }
}

impl AlexPoly {
    pub fn with_link_factor(mut self, link_factor: bool) -> Self {
        self.link_factor = link_factor;
        self
    }
}

/// Knot Alexander coefficients from an even Conway polynomial via
/// `a_{n-j} = sum_{k=0}^{j} (-1)^{n-k} c_{n-k} C(2n-2k, j-k)`, where `c_i`
/// is the coefficient of `z^{2i}`. Returns the raw coefficients; apply
/// [`AlexPoly::normalize`] for `a_n > 0`.
pub fn conway_to_alexander(p: &ZPoly) -> Result<AlexPoly> {
    let (deg, parity) = p.pure_parity()?;
    if parity != Parity::Even {
        return Err(Error::WrongParity {
            expected: Parity::Even,
            found: parity,
        });
    }
    let n = deg / 2;
    let c = |i: usize| p.coeff(2 * i);
    let mut a = vec![BigInt::ZERO; n + 1];
    for j in 0..=n {
        let mut sum = BigInt::ZERO;
        for k in 0..=j {
            let term = c(n - k) * binomial((2 * n - 2 * k) as i64, (j - k) as i64);
            if (n - k) % 2 == 1 {
                sum -= term;
            } else {
                sum += term;
            }
        }
        a[n - j] = sum;
    }
    AlexPoly::new(a, false)
}

/// Conway polynomial of a knot Alexander polynomial through the Fibonacci
/// basis: `sum_k (-1)^k (a_k - a_{k+1}) f_{2k+1}` with `a_{n+1} = 0`.
///
/// This inverts [`conway_to_alexander`] exactly; a normalized input gives
/// `eps * p`.
pub fn alexander_to_conway(a: &AlexPoly) -> Result<ZPoly> {
    if a.link_factor {
        return Err(Error::LinkFactor);
    }
    let n = a.degree();
    let table = fib_table(2 * n + 1);
    let mut out = ZPoly::zero();
    for k in 0..=n {
        let next = a.coeffs.get(k + 1).cloned().unwrap_or_default();
        let mut diff = &a.coeffs[k] - next;
        if k % 2 == 1 {
            diff = -diff;
        }
        out = &out + &table[2 * k + 1].scale(&diff);
    }
    Ok(out)
}

/// Closed-form inverse
/// `c_{n-j} = sum_{k=0}^{j} (-1)^{n-k} a_{n-k} (2n-2k)/(2n-j-k) C(2n-j-k, 2n-2j)`,
/// returning `c_0..c_n` (coefficients of `z^0, z^2, ...`). The `k = j = n`
/// term is `a_0`. Used only as a cross-check.
pub fn fukuhara_inverse(a: &AlexPoly) -> Result<Vec<BigInt>> {
    if a.link_factor {
        return Err(Error::LinkFactor);
    }
    let n = a.degree();
    let mut c = vec![BigInt::ZERO; n + 1];
    for j in 0..=n {
        let mut sum = BigRational::zero();
        for k in 0..=j {
            let coeff = if 2 * n - j - k == 0 {
                BigRational::one()
            } else {
                BigRational::new(BigInt::from(2 * n - 2 * k), BigInt::from(2 * n - j - k))
                    * BigRational::from_integer(binomial(
                        (2 * n - j - k) as i64,
                        (2 * n - 2 * j) as i64,
                    ))
            };
            if !coeff.is_integer() {
                return Err(Error::NonIntegral {
                    j,
                    value: coeff.to_string(),
                });
            }
            let term = coeff.to_integer() * &a.coeffs[n - k];
            if (n - k) % 2 == 1 {
                sum -= BigRational::from_integer(term);
            } else {
                sum += BigRational::from_integer(term);
            }
        }
        if !sum.is_integer() {
            return Err(Error::NonIntegral {
                j,
                value: sum.to_string(),
            });
        }
        c[n - j] = sum.to_integer();
    }
    Ok(c)
}

/// Hosokawa factor of an odd (two-component link) Conway polynomial.
///
/// Expands `p = sum_h t_h f_{2h}` and substitutes
/// `f_{2h}(t^1/2 - t^-1/2) = (t^1/2 - t^-1/2) sum u_r` over `r <= h-1`,
/// `r = h-1 (mod 2)`, with `u_r = t^r + t^-r` and `u_0 = 1`.
pub fn link_conway_to_hosokawa(p: &ZPoly) -> Result<AlexPoly> {
    let (deg, parity) = p.pure_parity()?;
    if parity != Parity::Odd {
        return Err(Error::WrongParity {
            expected: Parity::Odd,
            found: parity,
        });
    }
    let expansion = fib_expansion(p)?;
    let n = (deg - 1) / 2;
    let mut u = vec![BigInt::ZERO; n + 1];
    for (i, t) in expansion.iter().enumerate() {
        // coefficient of f_{deg+1-2i} = f_{2h}
        let h = (deg + 1 - 2 * i) / 2;
        let mut r = (h - 1) % 2;
        while r < h {
            u[r] += t;
            r += 2;
        }
    }
    let a = u
        .into_iter()
        .enumerate()
        .map(|(r, x)| if r % 2 == 1 { -x } else { x })
        .collect();
    AlexPoly::new(a, true)
}

fn knot_only(a: &AlexPoly) -> Option<&'static str> {
    a.link_factor.then_some("applies to knots only")
}

fn normalized_knot_only(a: &AlexPoly) -> Option<&'static str> {
    knot_only(a).or((!a.is_normalized()).then_some("requires a_n > 0 (normalization declined)"))
}

/// Two-bridge knots have `a_0..a_k` odd and `a_{k+1}..a_n` even.
pub fn murasugi_mod2_test(a: &AlexPoly) -> Verdict {
    const TEST: TestName = TestName::MurasugiParity;
    if let Some(reason) = knot_only(a) {
        return Verdict::not_applicable(TEST, reason);
    }
    if a.coeffs[0].is_even() {
        return Verdict::fail(TEST, Witness::at(0), "a_0 is even");
    }
    let first_even = a
        .coeffs
        .iter()
        .position(Integer::is_even)
        .unwrap_or(a.coeffs.len());
    if let Some(j) = (first_even..a.coeffs.len()).find(|&j| a.coeffs[j].is_odd()) {
        return Verdict::fail(
            TEST,
            Witness::at(j),
            format!("a_{j} is odd after even a_{first_even}"),
        );
    }
    Verdict::pass(TEST, Witness::at(first_even - 1))
}

/// Hosokawa factors of two-bridge links are all even, or odd exactly at
/// `k, k-2, k-4, ...` for some `k`.
pub fn hosokawa_mod2_test(a: &AlexPoly) -> Verdict {
    const TEST: TestName = TestName::HosokawaParity;
    if !a.link_factor {
        return Verdict::not_applicable(TEST, "applies to two-component links only");
    }
    let odd: Vec<usize> = (0..a.coeffs.len())
        .filter(|&i| a.coeffs[i].is_odd())
        .collect();
    let Some(&top) = odd.last() else {
        return Verdict::pass(TEST, Witness::default());
    };
    let expected: Vec<usize> = (top % 2..=top).step_by(2).collect();
    if odd == expected {
        return Verdict::pass(TEST, Witness::at(top));
    }
    let bad = (0..=top)
        .find(|&i| a.coeffs[i].is_odd() != ((top - i) % 2 == 0))
        .expect("patterns differ");
    Verdict::fail(
        TEST,
        Witness::at(bad),
        format!("odd coefficients {odd:?} are not k, k-2, ... down from k={top}"),
    )
}

/// `a_0 = ... = a_k > a_{k+1} > ... > a_n > 0` for some `k`.
pub fn hartley_test(a: &AlexPoly) -> Verdict {
    const TEST: TestName = TestName::HartleyTrapezoid;
    if let Some(reason) = normalized_knot_only(a) {
        return Verdict::not_applicable(TEST, reason);
    }
    let c = &a.coeffs;
    let mut k = 0;
    while k + 1 < c.len() && c[k + 1] == c[k] {
        k += 1;
    }
    for j in k + 1..c.len() {
        if c[j] >= c[j - 1] {
            return Verdict::fail(
                TEST,
                Witness::compare_int(j, c[j - 1].clone(), c[j].clone()),
                format!("a_{j} does not drop below a_{}", j - 1),
            );
        }
    }
    Verdict::pass(TEST, Witness::at(k))
}

/// `2a_n - 1 <= a_{n-1} <= (4n-2)a_n + 1` and, for `1 <= j <= n`,
/// `a_{n-j} <= a_n sum_{k=0}^{j} C(2n-2k, j-k) C(2n-k, k)`.
pub fn ns_bounds_test(a: &AlexPoly) -> Verdict {
    const TEST: TestName = TestName::NakanishiSuketa;
    if let Some(reason) = normalized_knot_only(a) {
        return Verdict::not_applicable(TEST, reason);
    }
    let n = a.degree();
    if n == 0 {
        return Verdict::pass(TEST, Witness::default());
    }
    let an = a.leading();
    let below = &a.coeffs[n - 1];
    let lower = an * 2 - 1;
    if below < &lower {
        return Verdict::fail(
            TEST,
            Witness::compare_int(1, lower, below.clone()),
            format!("a_{} is below 2a_n - 1", n - 1),
        );
    }
    let upper = an * BigInt::from(4 * n - 2) + 1;
    if below > &upper {
        return Verdict::fail(
            TEST,
            Witness::compare_int(1, upper, below.clone()),
            format!("a_{} exceeds (4n-2)a_n + 1", n - 1),
        );
    }
    for j in 1..=n {
        let bound = an * ns_general_factor(n, j);
        let actual = &a.coeffs[n - j];
        if actual > &bound {
            return Verdict::fail(
                TEST,
                Witness::compare_int(j, bound, actual.clone()),
                format!("a_{} exceeds a_n * sum C(2n-2k, j-k) C(2n-k, k)", n - j),
            );
        }
    }
    Verdict::pass(TEST, Witness::default())
}

/// `sum_{k=0}^{j} C(2n-2k, j-k) C(2n-k, k)`.
pub fn ns_general_factor(n: usize, j: usize) -> BigInt {
    let (n, j) = (n as i64, j as i64);
    (0..=j)
        .map(|k| binomial(2 * n - 2 * k, j - k) * binomial(2 * n - k, k))
        .sum()
}

/// Bound on `a_{n-2}`: `(8n^2 - 16n + 10 + 2(n-2)/g) a_n + 2n - 1`. For
/// `g = 2` this is `(8n^2 - 15n + 8) a_n + 2n - 1`.
pub fn second_coefficient_bound(n: usize, an: &BigInt, g: &BigInt) -> BigRational {
    let n = BigInt::from(n);
    let base = BigInt::from(8) * &n * &n - BigInt::from(16) * &n + 10;
    let factor = BigRational::from_integer(base) + BigRational::new((&n - 2) * 2, g.clone());
    factor * BigRational::from_integer(an.clone()) + BigRational::from_integer(n * 2 - 1)
}

/// Bound on `a_{n-3}`:
/// `(2/3)(2n-3)(8n^2-24n+25) a_n + (3n-5)(2n-5)/g a_n + n(2n-3)`.
pub fn third_coefficient_bound(n: usize, an: &BigInt, g: &BigInt) -> BigRational {
    let n = BigInt::from(n);
    let an = BigRational::from_integer(an.clone());
    let main = BigRational::new(
        BigInt::from(2) * (&n * 2 - 3) * (BigInt::from(8) * &n * &n - BigInt::from(24) * &n + 25),
        BigInt::from(3),
    );
    let refined = BigRational::new((&n * 3 - 5) * (&n * 2 - 5), g.clone());
    (main + refined) * an + BigRational::from_integer(&n * (&n * 2 - 3))
}

/// Bounds on `a_{n-2}` (and `a_{n-3}` when `n >= 3`) for `a_n != 1`.
pub fn refined_ns_test(a: &AlexPoly) -> Verdict {
    const TEST: TestName = TestName::RefinedNakanishiSuketa;
    if let Some(reason) = normalized_knot_only(a) {
        return Verdict::not_applicable(TEST, reason);
    }
    let n = a.degree();
    if n < 2 {
        return Verdict::not_applicable(TEST, "requires n >= 2");
    }
    let an = a.leading();
    if an.is_one() {
        return Verdict::not_applicable(TEST, "requires a_n != 1");
    }
    let g = greatest_prime_divisor(an).expect("a_n is nonzero");
    let mut checks = vec![(2, second_coefficient_bound(n, an, &g))];
    if n >= 3 {
        checks.push((3, third_coefficient_bound(n, an, &g)));
    }
    for (j, bound) in checks {
        let actual = BigRational::from_integer(a.coeffs[n - j].clone());
        if actual > bound {
            return Verdict::fail(
                TEST,
                Witness::compare(j, bound, actual),
                format!("a_{} exceeds the bound with g = {g}", n - j),
            );
        }
    }
    Verdict::pass(TEST, Witness::default())
}

/// Conjectural: some split `k` leaves `a_0..a_k` convex and `a_k..a_n`
/// concave, where convex means `a_i >= (a_{i-1} + a_{i+1}) / 2`, i.e. the
/// second differences are `<= 0` up to `k` and `>= 0` after it. This is the
/// orientation implied by a trapezoidal Fibonacci-basis expansion.
pub fn convexity_test(a: &AlexPoly) -> Verdict {
    const TEST: TestName = TestName::Convexity;
    if let Some(reason) = normalized_knot_only(a) {
        return Verdict::not_applicable(TEST, reason);
    }
    let c = &a.coeffs;
    let n = a.degree();
    // second[i - 1] is the second difference centred at i, 1 <= i <= n-1
    let second: Vec<BigInt> = (1..n).map(|i| &c[i - 1] - &c[i] * 2 + &c[i + 1]).collect();
    let split = (0..=n).find(|&k| {
        (1..n).all(|i| {
            let s = &second[i - 1];
            if i < k {
                !s.is_positive()
            } else if i > k {
                !s.is_negative()
            } else {
                true
            }
        })
    });
    match split {
        Some(k) => Verdict::pass(TEST, Witness::at(k)),
        None => {
            let listed: Vec<String> = second.iter().map(ToString::to_string).collect();
            Verdict::fail(
                TEST,
                Witness::default(),
                format!(
                    "conjectural obstruction: no convex/concave split, second differences ({})",
                    listed.join(", ")
                ),
            )
        }
    }
}

/// Every applicable Alexander-level test. Knots: Murasugi parity, Hartley
/// trapezoid, Nakanishi-Suketa bounds, refined bounds, convexity
/// (conjecture). Links: Hosokawa parity.
pub fn alexander_sieve(a: &AlexPoly) -> SieveReport {
    if a.link_factor {
        SieveReport::new(vec![hosokawa_mod2_test(a)])
    } else {
        SieveReport::new(vec![
            murasugi_mod2_test(a),
            hartley_test(a),
            ns_bounds_test(a),
            refined_ns_test(a),
            convexity_test(a),
        ])
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::conway::TwoBridgeForm;
    use crate::fibonacci::fib;
    use crate::verdict::Outcome;

    fn p(c: &[i64]) -> ZPoly {
        ZPoly::from_i64s(c)
    }

    fn knot(a: &[i64]) -> AlexPoly {
        AlexPoly::from_i64s(a, false).unwrap()
    }

    fn link(a: &[i64]) -> AlexPoly {
        AlexPoly::from_i64s(a, true).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Laurent polynomials in `s = t^1/2`, keyed by exponent.
    type Laurent = BTreeMap<i64, BigInt>;

    fn laurent_mul(x: &Laurent, y: &Laurent) -> Laurent {
        let mut out = Laurent::new();
        for (i, a) in x {
            for (j, b) in y {
                *out.entry(i + j).or_default() += a * b;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// `p(s - 1/s)` by Horner's rule.
    fn substitute(p: &ZPoly) -> Laurent {
        let z: Laurent = [(1, BigInt::one()), (-1, -BigInt::one())].into();
        let mut acc = Laurent::new();
        for c in p.coeffs().iter().rev() {
            acc = laurent_mul(&acc, &z);
            *acc.entry(0).or_default() += c;
            acc.retain(|_, v| !v.is_zero());
        }
        acc
    }

    /// The symmetric factor as a Laurent polynomial in `s` (even exponents).
    fn symmetric(a: &AlexPoly) -> Laurent {
        let n = a.degree() as i64;
        let mut out = Laurent::new();
        for (i, c) in a.laurent_coeffs().into_iter().enumerate() {
            if !c.is_zero() {
                out.insert(2 * (i as i64 - n), c);
            }
        }
        out
    }

    #[test]
    fn transform_matches_direct_substitution() {
        for poly in [
            p(&[1, 0, 1]),
            p(&[1, 0, 8, 0, 3, 0, -1]),
            p(&[1, 0, -1]),
            p(&[-3, 0, 2, 0, 0, 0, 7]),
        ] {
            let a = conway_to_alexander(&poly).unwrap();
            assert_eq!(symmetric(&a), substitute(&poly), "{poly}");
        }
    }

    #[test]
    fn hosokawa_matches_direct_substitution() {
        let w: Laurent = [(1, BigInt::one()), (-1, -BigInt::one())].into();
        for poly in [
            fib(4),
            fib(6),
            p(&[0, 1]),
            p(&[0, 3, 0, 2]),
            p(&[0, -5, 0, 1, 0, 4]),
        ] {
            let a = link_conway_to_hosokawa(&poly).unwrap();
            assert!(a.link_factor());
            assert_eq!(laurent_mul(&w, &symmetric(&a)), substitute(&poly), "{poly}");
        }
    }

    #[test]
    fn conway_to_alexander_examples() {
        let raw = conway_to_alexander(&p(&[1, 0, 1])).unwrap();
        assert_eq!(raw.coeffs(), big(&[-1, -1]).as_slice());
        let (norm, eps) = raw.normalize();
        assert_eq!((norm.coeffs(), eps), (big(&[1, 1]).as_slice(), -1));

        let a = conway_to_alexander(&p(&[1, 0, 8, 0, 3, 0, -1])).unwrap();
        assert_eq!(a.coeffs(), big(&[23, 19, 9, 1]).as_slice());
        assert!(a.is_normalized());

        for n in 0..=15usize {
            let (a, _) = conway_to_alexander(&fib(2 * n as i64 + 1))
                .unwrap()
                .normalize();
            assert_eq!(a.coeffs(), vec![BigInt::one(); n + 1].as_slice());
        }
    }

    #[test]
    fn conway_to_alexander_rejects() {
        assert!(matches!(
            conway_to_alexander(&p(&[0, 1])),
            Err(Error::WrongParity {
                expected: Parity::Even,
                found: Parity::Odd
            })
        ));
        assert_eq!(conway_to_alexander(&p(&[1, 1])), Err(Error::MixedParity));
        assert_eq!(
            conway_to_alexander(&ZPoly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn alexander_to_conway_examples() {
        assert_eq!(
            alexander_to_conway(&knot(&[23, 19, 9, 1])).unwrap(),
            p(&[1, 0, 8, 0, 3, 0, -1])
        );
        for n in 0..=10usize {
            let ones = knot(&vec![1; n + 1]);
            let expected = if n % 2 == 0 {
                fib(2 * n as i64 + 1)
            } else {
                -fib(2 * n as i64 + 1)
            };
            assert_eq!(alexander_to_conway(&ones).unwrap(), expected);
        }
        assert_eq!(alexander_to_conway(&knot(&[1])).unwrap(), ZPoly::one());
        assert_eq!(alexander_to_conway(&link(&[1])), Err(Error::LinkFactor));
    }

    #[test]
    fn fukuhara_examples() {
        // normalized trefoil (1, 1) is -(1 + z^2)
        assert_eq!(fukuhara_inverse(&knot(&[1, 1])).unwrap(), big(&[-1, -1]));
        assert_eq!(fukuhara_inverse(&knot(&[-1, -1])).unwrap(), big(&[1, 1]));
        assert_eq!(
            fukuhara_inverse(&knot(&[23, 19, 9, 1])).unwrap(),
            big(&[1, 8, 3, -1])
        );
        assert_eq!(fukuhara_inverse(&knot(&[1])).unwrap(), big(&[1]));
        assert_eq!(fukuhara_inverse(&link(&[1])), Err(Error::LinkFactor));
    }

    #[test]
    fn hosokawa_examples() {
        let a = link_conway_to_hosokawa(&fib(4)).unwrap();
        assert_eq!(a.coeffs(), big(&[0, -1]).as_slice());
        let (a, eps) = a.normalize();
        assert_eq!((a.coeffs(), eps), (big(&[0, 1]).as_slice(), -1));

        let a = link_conway_to_hosokawa(&fib(6)).unwrap();
        assert_eq!(a.coeffs(), big(&[1, 0, 1]).as_slice());

        let a = link_conway_to_hosokawa(&p(&[0, 1])).unwrap();
        assert_eq!(a.coeffs(), big(&[1]).as_slice());

        assert!(link_conway_to_hosokawa(&p(&[1, 0, 1])).is_err());
    }

    #[test]
    fn murasugi_examples() {
        assert!(murasugi_mod2_test(&knot(&[23, 19, 9, 1])).is_pass());
        let v = murasugi_mod2_test(&knot(&[3, 2, 1]));
        assert_eq!((v.outcome, v.witness.k), (Outcome::Fail, Some(2)));
        let v = murasugi_mod2_test(&knot(&[1, 1, 2]));
        assert_eq!((v.outcome, v.witness.k), (Outcome::Pass, Some(1)));
        assert!(murasugi_mod2_test(&knot(&[2, 1])).is_fail());
        assert_eq!(
            murasugi_mod2_test(&link(&[1])).outcome,
            Outcome::NotApplicable
        );
    }

    #[test]
    fn hosokawa_parity_examples() {
        assert!(hosokawa_mod2_test(&link(&[0, 1])).is_pass());
        assert!(hosokawa_mod2_test(&link(&[1, 0, 1])).is_pass());
        assert!(hosokawa_mod2_test(&link(&[2, 4])).is_pass());
        assert!(hosokawa_mod2_test(&link(&[1, 1])).is_fail());
        assert!(hosokawa_mod2_test(&link(&[0, 1, 0, 2, 1])).is_fail());
        assert_eq!(
            hosokawa_mod2_test(&knot(&[1])).outcome,
            Outcome::NotApplicable
        );
    }

    #[test]
    fn hartley_examples() {
        let v = hartley_test(&knot(&[23, 19, 9, 1]));
        assert_eq!((v.outcome, v.witness.k), (Outcome::Pass, Some(0)));
        let v = hartley_test(&knot(&[1, 1, 1, 1]));
        assert_eq!((v.outcome, v.witness.k), (Outcome::Pass, Some(3)));
        assert!(hartley_test(&knot(&[5, 7, 1])).is_fail());
        assert!(hartley_test(&knot(&[5, 3, 3])).is_fail());
        assert_eq!(
            hartley_test(&knot(&[1, -1])).outcome,
            Outcome::NotApplicable
        );
    }

    #[test]
    fn ns_examples() {
        assert!(ns_bounds_test(&knot(&[23, 19, 9, 1])).is_pass());
        for n in 0..=8 {
            assert!(ns_bounds_test(&knot(&vec![1; n + 1])).is_pass());
        }
        let v = ns_bounds_test(&knot(&[25, 3]));
        assert_eq!(v.outcome, Outcome::Fail);
        assert_eq!(v.witness, Witness::compare_int(1, 7.into(), 25.into()));
        let v = ns_bounds_test(&knot(&[1, 3]));
        assert_eq!(v.witness, Witness::compare_int(1, 5.into(), 1.into()));
    }

    #[test]
    fn refined_ns_examples() {
        assert!(refined_ns_test(&knot(&[23, 13, 2])).is_pass());
        let v = refined_ns_test(&knot(&[24, 13, 2]));
        assert_eq!(v.outcome, Outcome::Fail);
        assert_eq!(v.witness.bound, Some(BigRational::from_integer(23.into())));
        assert_eq!(
            refined_ns_test(&knot(&[23, 19, 9, 1])).outcome,
            Outcome::NotApplicable
        );
        assert_eq!(
            refined_ns_test(&knot(&[3, 2])).outcome,
            Outcome::NotApplicable
        );
    }

    #[test]
    fn second_bound_matches_stated_form_at_g2() {
        for n in 2..30usize {
            for an in [2i64, 4, 6, 8] {
                let stated = BigInt::from(8 * n * n - 15 * n + 8) * an + (2 * n as i64 - 1);
                assert_eq!(
                    second_coefficient_bound(n, &an.into(), &2.into()),
                    BigRational::from_integer(stated)
                );
            }
        }
    }

    #[test]
    fn third_bound_matches_termwise_derivation() {
        // sum over k of C(2n-2k, 3-k) times the Conway-side bound on |c_{n-k}|
        for n in 3..20usize {
            for (an, g) in [(2i64, 2i64), (3, 3), (10, 5), (7, 7)] {
                let lead = BigInt::from(an);
                let g = BigInt::from(g);
                let mut total = BigRational::from_integer(binomial(2 * n as i64, 3))
                    * BigRational::from_integer(lead.clone());
                for k in 1..=3usize {
                    let conway = crate::obstructions::prime_refined_bound(2 * n, k, &lead, &g);
                    total += BigRational::from_integer(binomial(
                        2 * n as i64 - 2 * k as i64,
                        3 - k as i64,
                    )) * conway;
                }
                assert_eq!(third_coefficient_bound(n, &lead, &g), total, "n = {n}");
                // the g-free relaxation dominates for g >= 2
                let relaxed = BigRational::new(
                    BigInt::from(64 * n * n * n + 413 * n) - BigInt::from(270 * n * n + 225),
                    6.into(),
                ) * BigRational::from_integer(lead.clone())
                    + BigRational::from_integer(BigInt::from(n * (2 * n - 3)));
                assert!(third_coefficient_bound(n, &lead, &g) <= relaxed);
            }
        }
    }

    #[test]
    fn convexity_examples() {
        assert!(convexity_test(&knot(&[1, 1])).is_pass());
        assert!(convexity_test(&knot(&[23, 19, 9, 1])).is_pass());
        let v = convexity_test(&knot(&[11, 7, 5, 1]));
        assert!(v.is_fail());
        assert!(v.note.unwrap().ends_with("(2, -2)"));
        assert!(convexity_test(&knot(&[1, 1, 1, 1])).is_pass());
        assert!(convexity_test(&knot(&[10, 6, 3, 1])).is_pass());
        assert!(convexity_test(&knot(&[10, 9, 7, 2])).is_pass());
        assert_eq!(
            convexity_test(&knot(&[1, -1])).outcome,
            Outcome::NotApplicable
        );
    }

    #[test]
    fn sieve_examples() {
        let report = alexander_sieve(&knot(&[23, 19, 9, 1]));
        assert!(!report.obstructed());
        assert!(!report.conjectural_obstruction());

        let report = alexander_sieve(&knot(&[3, 2, 1]));
        assert!(report.get(TestName::MurasugiParity).unwrap().is_fail());
        assert!(report.obstructed());

        let report = alexander_sieve(&knot(&[1]));
        assert!(report.verdicts.iter().all(|v| v.outcome != Outcome::Fail));

        let report = alexander_sieve(&link(&[1, 0, 1]));
        assert_eq!(report.verdicts.len(), 1);
        assert!(!report.obstructed());
    }

    #[test]
    fn knot_families_attain_the_bounds() {
        // C(2,2,...,2): both upper bounds are equalities
        for n in 1..=8usize {
            let literal = vec![BigInt::from(2); 2 * n];
            let form = TwoBridgeForm::from_literal(&literal).unwrap();
            let (a, _) = conway_to_alexander(&form.conway_poly())
                .unwrap()
                .normalize();
            let an = a.leading().clone();
            assert_eq!(a.coeffs()[n - 1], &an * BigInt::from(4 * n - 2) + 1);
            for j in 1..=n {
                assert_eq!(
                    a.coeffs()[n - j],
                    &an * ns_general_factor(n, j),
                    "n = {n}, j = {j}"
                );
            }
        }
        // C(4,2,...,2): the a_{n-2} bound is an equality
        for n in 2..=8usize {
            let mut literal = vec![BigInt::from(2); 2 * n];
            literal[0] = BigInt::from(4);
            let form = TwoBridgeForm::from_literal(&literal).unwrap();
            let (a, _) = conway_to_alexander(&form.conway_poly())
                .unwrap()
                .normalize();
            let bound = second_coefficient_bound(n, a.leading(), &2.into());
            assert_eq!(BigRational::from_integer(a.coeffs()[n - 2].clone()), bound);
        }
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(
            knot(&[23, 19, 9, 1]).to_string(),
            "23 - 19(t+t^-1) + 9(t^2+t^-2) - (t^3+t^-3)"
        );
        assert_eq!(link(&[0, -1]).to_string(), "(t^1/2-t^-1/2)((t+t^-1))");
        assert_eq!(
            "23,19,9,1".parse::<AlexPoly>().unwrap(),
            knot(&[23, 19, 9, 1])
        );
        assert!(matches!("23,,1".parse::<AlexPoly>(), Err(Error::Parse(_))));
        assert_eq!("1,0".parse::<AlexPoly>(), Err(Error::BadAlexander));
    }
}
