//! Necessary conditions on the Conway polynomial of a two-bridge link.
//!
//! Each test maps a polynomial to a [`Verdict`]. A failing theorem-backed
//! test proves the polynomial is not the Conway polynomial of any two-bridge
//! link; passing every test proves nothing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::binomial::binomial;
use crate::conway::TwoBridgeForm;
use crate::error::{Error, Result};
use crate::fibonacci::{fib, to_fib_basis};
use crate::poly::{Parity, ZPoly};
use crate::verdict::{SieveReport, TestName, Verdict, Witness};

/// Index `D` with `conway_poly(form) = f_D (mod 2)`, from the parities of
/// the recursion parameters alone.
pub fn mod2_index(form: &TwoBridgeForm) -> u64 {
    mod2_index_from_parities(form.params().iter().map(|b| b.bit(0)))
}

/// Runs `e_0 = 1, D_0 = 1, e_{i+1} = -(-1)^{b_{i+1}} e_i, D_{i+1} = D_i + e_{i+1}`
/// over the given oddness flags and returns `|D_m|`.
pub fn mod2_index_from_parities(odd: impl IntoIterator<Item = bool>) -> u64 {
    let mut e: i64 = 1;
    let mut d: i64 = 1;
    for is_odd in odd {
        if !is_odd {
            e = -e;
        }
        d += e;
    }
    d.unsigned_abs()
}

/// Shared precondition of the Conway-level tests. Even polynomials must have
/// constant term +-1, as every knot Conway polynomial does.
fn precondition(p: &ZPoly) -> std::result::Result<(usize, Parity), String> {
    match p.pure_parity() {
        Err(Error::ZeroPolynomial) => Err("zero polynomial".into()),
        Err(_) => Err("mixed parity: not a link or knot Conway polynomial".into()),
        Ok((_, Parity::Even)) if !p.coeff(0).abs().is_one() => {
            Err("not a knot Conway polynomial: constant term must be +-1".into())
        }
        Ok(found) => Ok(found),
    }
}

/// `p` must be congruent mod 2 to a Fibonacci polynomial. The candidate is
/// forced: mod 2, `f_D` has degree `D - 1`.
pub fn mod2_fib_test(p: &ZPoly) -> Verdict {
    const TEST: TestName = TestName::Mod2Fibonacci;
    if let Err(reason) = precondition(p) {
        return Verdict::not_applicable(TEST, reason);
    }
    let reduced = p.mod2();
    let Some(d) = reduced.degree() else {
        return Verdict::pass(TEST, Witness::index(0));
    };
    let target = fib(d as i64 + 1).mod2();
    for k in 0..=d {
        if reduced.coeff(k) != target.coeff(k) {
            let mut witness = Witness::at(k);
            witness.d = Some(d as u64 + 1);
            return Verdict::fail(
                TEST,
                witness,
                format!("p mod 2 differs from f_{} mod 2 at z^{k}", d + 1),
            );
        }
    }
    Verdict::pass(TEST, Witness::index(d as u64 + 1))
}

/// `|c_{m-2k}| <= C(m-k, k) |c_m|` for every `k`; equality at some
/// `0 < k < m/2` forces equality at every `k`.
pub fn coefficient_bound_test(p: &ZPoly) -> Verdict {
    const TEST: TestName = TestName::CoefficientBound;
    let m = match precondition(p) {
        Ok((m, _)) => m,
        Err(reason) => return Verdict::not_applicable(TEST, reason),
    };
    let lead = p.coeff(m).abs();
    let half = m / 2;
    let sides: Vec<(BigInt, BigInt)> = (0..=half)
        .map(|k| {
            let bound = binomial((m - k) as i64, k as i64) * &lead;
            (bound, p.coeff(m - 2 * k).abs())
        })
        .collect();
    for (k, (bound, actual)) in sides.iter().enumerate() {
        if actual > bound {
            return Verdict::fail(
                TEST,
                Witness::compare_int(k, bound.clone(), actual.clone()),
                format!("|c_{}| exceeds C({}, {k}) |c_{m}|", m - 2 * k, m - k),
            );
        }
    }
    let trigger = (1..half).find(|&k| sides[k].0 == sides[k].1);
    if let Some(k0) = trigger {
        for (k, (bound, actual)) in sides.iter().enumerate() {
            if actual != bound {
                return Verdict::fail(
                    TEST,
                    Witness::compare_int(k, bound.clone(), actual.clone()),
                    format!("equality at k={k0} does not propagate to k={k}"),
                );
            }
        }
    }
    Verdict::pass(TEST, Witness::default())
}

/// Largest prime dividing `|n|`, or 1 when `|n| = 1`.
pub fn greatest_prime_divisor(n: &BigInt) -> Result<BigInt> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut rest = n.abs();
    let mut largest = BigInt::one();
    let mut d = BigInt::from(2);
    while &d * &d <= rest {
        if (&rest % &d).is_zero() {
            largest = d.clone();
            while (&rest % &d).is_zero() {
                rest /= &d;
            }
        }
        d += 1;
    }
    if rest > BigInt::one() {
        largest = rest;
    }
    Ok(largest)
}

/// Refined bound using the greatest prime divisor `g` of `c_m`:
/// `|c_{m-2k}| <= (C(m-k-1, k) + (C(m-k-1, k-1) - 1) / g) |c_m| + 1` for `k >= 1`.
pub fn prime_refined_bound(m: usize, k: usize, lead_abs: &BigInt, g: &BigInt) -> BigRational {
    let (m, k) = (m as i64, k as i64);
    let inner = BigRational::from_integer(binomial(m - k - 1, k))
        + BigRational::new(binomial(m - k - 1, k - 1) - 1, g.clone());
    inner * BigRational::from_integer(lead_abs.clone()) + BigRational::one()
}

pub fn prime_refined_bound_test(p: &ZPoly) -> Verdict {
    const TEST: TestName = TestName::PrimeRefinedBound;
    let m = match precondition(p) {
        Ok((m, _)) => m,
        Err(reason) => return Verdict::not_applicable(TEST, reason),
    };
    let lead = p.coeff(m).abs();
    let g = greatest_prime_divisor(&lead).expect("leading coefficient is nonzero");
    for k in 1..=m / 2 {
        let bound = prime_refined_bound(m, k, &lead, &g);
        let actual = BigRational::from_integer(p.coeff(m - 2 * k).abs());
        if actual > bound {
            return Verdict::fail(
                TEST,
                Witness::compare(k, bound, actual),
                format!("|c_{}| exceeds the bound with g = {g}", m - 2 * k),
            );
        }
    }
    Verdict::pass(TEST, Witness::default())
}

/// In the Fibonacci basis every `alpha_j` is nonnegative, and once some
/// `alpha_i` (`i > 0`) vanishes all later ones vanish.
pub fn fibonacci_sign_test(p: &ZPoly) -> Verdict {
    const TEST: TestName = TestName::FibonacciSign;
    if let Err(reason) = precondition(p) {
        return Verdict::not_applicable(TEST, reason);
    }
    let alpha = to_fib_basis(p).expect("precondition checked").alpha;
    match check_sign_pattern(&alpha) {
        Ok(()) => Verdict::pass(TEST, Witness::default()),
        Err((j, note)) => Verdict::fail(
            TEST,
            Witness::compare(j, BigRational::zero(), alpha[j].clone()),
            note,
        ),
    }
}

pub fn check_sign_pattern(alpha: &[BigRational]) -> std::result::Result<(), (usize, String)> {
    if let Some(j) = alpha.iter().position(Signed::is_negative) {
        return Err((j, format!("alpha_{j} is negative")));
    }
    if let Some(i) = (1..alpha.len()).find(|&i| alpha[i].is_zero()) {
        if let Some(j) = (i + 1..alpha.len()).find(|&j| !alpha[j].is_zero()) {
            return Err((j, format!("alpha_{i} = 0 but alpha_{j} != 0")));
        }
    }
    Ok(())
}

/// Weakly rising then weakly falling, all entries nonnegative. On failure
/// returns the first index that breaks the shape.
pub fn check_unimodal(alpha: &[BigRational]) -> std::result::Result<(), usize> {
    if let Some(j) = alpha.iter().position(Signed::is_negative) {
        return Err(j);
    }
    let mut falling = false;
    for j in 1..alpha.len() {
        if alpha[j] < alpha[j - 1] {
            falling = true;
        } else if falling && alpha[j] > alpha[j - 1] {
            return Err(j);
        }
    }
    Ok(())
}

/// Conjectural: the Fibonacci-basis coefficients form a trapezoid.
pub fn trapezoid_conjecture_test(p: &ZPoly) -> Verdict {
    const TEST: TestName = TestName::FibonacciTrapezoid;
    if let Err(reason) = precondition(p) {
        return Verdict::not_applicable(TEST, reason);
    }
    let alpha = to_fib_basis(p).expect("precondition checked").alpha;
    match check_unimodal(&alpha) {
        Ok(()) => Verdict::pass(TEST, Witness::default()),
        Err(j) => {
            let mut witness = Witness::at(j);
            witness.actual = Some(alpha[j].clone());
            Verdict::fail(
                TEST,
                witness,
                "conjectural obstruction: alpha is not unimodal",
            )
        }
    }
}

/// All Conway-level tests in fixed order: mod 2, coefficient bound, prime
/// refined bound, Fibonacci sign, trapezoid conjecture.
pub fn sieve(p: &ZPoly) -> SieveReport {
    SieveReport::new(vec![
        mod2_fib_test(p),
        coefficient_bound_test(p),
        prime_refined_bound_test(p),
        fibonacci_sign_test(p),
        trapezoid_conjecture_test(p),
    ])
}
