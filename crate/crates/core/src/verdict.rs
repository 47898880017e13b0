//! Structured outcomes of the obstruction tests.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

/// Every test the sieves know about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TestName {
    Mod2Fibonacci,
    CoefficientBound,
    PrimeRefinedBound,
    FibonacciSign,
    FibonacciTrapezoid,
    MurasugiParity,
    HosokawaParity,
    HartleyTrapezoid,
    NakanishiSuketa,
    RefinedNakanishiSuketa,
    Convexity,
}

/// Whether a failure proves an obstruction or is only conjectural evidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TestKind {
    Theorem,
    Conjecture,
}

impl TestName {
    pub fn as_str(self) -> &'static str {
        match self {
            TestName::Mod2Fibonacci => "mod2-fibonacci",
            TestName::CoefficientBound => "coefficient-bound",
            TestName::PrimeRefinedBound => "prime-refined-bound",
            TestName::FibonacciSign => "fibonacci-sign",
            TestName::FibonacciTrapezoid => "fibonacci-trapezoid",
            TestName::MurasugiParity => "murasugi-parity",
            TestName::HosokawaParity => "hosokawa-parity",
            TestName::HartleyTrapezoid => "hartley-trapezoid",
            TestName::NakanishiSuketa => "nakanishi-suketa",
            TestName::RefinedNakanishiSuketa => "refined-nakanishi-suketa",
            TestName::Convexity => "convexity",
        }
    }

    pub fn kind(self) -> TestKind {
        match self {
            TestName::FibonacciTrapezoid | TestName::Convexity => TestKind::Conjecture,
            _ => TestKind::Theorem,
        }
    }
}

impl fmt::Display for TestName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

/// Detail attached to a verdict. A failure always carries enough of it to
/// recheck the violated inequality by hand.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness {
    /// Offending index (`k`, `j`, an exponent or a basis index, per test).
    pub k: Option<usize>,
    pub bound: Option<BigRational>,
    pub actual: Option<BigRational>,
    /// Index `D` of the Fibonacci polynomial congruent mod 2.
    pub d: Option<u64>,
}

impl Witness {
    pub fn at(k: usize) -> Self {
        Witness {
            k: Some(k),
            ..Witness::default()
        }
    }

    pub fn compare(k: usize, bound: BigRational, actual: BigRational) -> Self {
        Witness {
            k: Some(k),
            bound: Some(bound),
            actual: Some(actual),
            d: None,
        }
    }

    pub fn compare_int(k: usize, bound: BigInt, actual: BigInt) -> Self {
        Witness::compare(
            k,
            BigRational::from_integer(bound),
            BigRational::from_integer(actual),
        )
    }

    pub fn index(d: u64) -> Self {
        Witness {
            d: Some(d),
            ..Witness::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub test: TestName,
    pub outcome: Outcome,
    pub witness: Witness,
    /// Explanation for failures, or the unmet precondition.
    pub note: Option<String>,
}

impl Verdict {
    pub fn pass(test: TestName, witness: Witness) -> Self {
        Verdict {
            test,
            outcome: Outcome::Pass,
            witness,
            note: None,
        }
    }

    pub fn fail(test: TestName, witness: Witness, note: impl Into<String>) -> Self {
        Verdict {
            test,
            outcome: Outcome::Fail,
            witness,
            note: Some(note.into()),
        }
    }

    pub fn not_applicable(test: TestName, reason: impl Into<String>) -> Self {
        Verdict {
            test,
            outcome: Outcome::NotApplicable,
            witness: Witness::default(),
            note: Some(reason.into()),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    pub fn kind(&self) -> TestKind {
        self.test.kind()
    }

    pub fn to_record(&self) -> VerdictRecord {
        VerdictRecord {
            test: self.test.as_str(),
            kind: self.kind(),
            outcome: self.outcome,
            witness_k: self.witness.k,
            bound: self.witness.bound.as_ref().map(ToString::to_string),
            actual: self.witness.actual.as_ref().map(ToString::to_string),
            d: self.witness.d,
            note: self.note.clone(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let outcome = match self.outcome {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::NotApplicable => "n/a",
        };
        let mut line = format!("{:<26} {:<5}", self.test.as_str(), outcome);
        if self.kind() == TestKind::Conjecture {
            line.push_str(" (conjecture)");
        }
        let w = &self.witness;
        if let Some(d) = w.d {
            line.push_str(&format!(" D={d}"));
        }
        if let Some(k) = w.k {
            line.push_str(&format!(" k={k}"));
        }
        if let Some(bound) = &w.bound {
            line.push_str(&format!(" bound={bound}"));
        }
        if let Some(actual) = &w.actual {
            line.push_str(&format!(" actual={actual}"));
        }
        if let Some(note) = &self.note {
            line.push_str(&format!(" [{note}]"));
        }
        f.write_str(line.trim_end())
    }
}

/// Flat serialized form of a verdict. Exact numbers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictRecord {
    pub test: &'static str,
    pub kind: TestKind,
    pub outcome: Outcome,
    pub witness_k: Option<usize>,
    pub bound: Option<String>,
    pub actual: Option<String>,
    #[serde(rename = "D")]
    pub d: Option<u64>,
    pub note: Option<String>,
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_record().serialize(serializer)
    }
}

/// Ordered verdicts from one sieve run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SieveReport {
    pub verdicts: Vec<Verdict>,
}

impl SieveReport {
    pub fn new(verdicts: Vec<Verdict>) -> Self {
        SieveReport { verdicts }
    }

    /// Some theorem-backed test failed: the input cannot be two-bridge.
    pub fn obstructed(&self) -> bool {
        self.verdicts
            .iter()
            .any(|v| v.is_fail() && v.kind() == TestKind::Theorem)
    }

    /// Some conjectural test failed.
    pub fn conjectural_obstruction(&self) -> bool {
        self.verdicts
            .iter()
            .any(|v| v.is_fail() && v.kind() == TestKind::Conjecture)
    }

    pub fn get(&self, test: TestName) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.test == test)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.is_fail())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_shape() {
        let v = Verdict::fail(
            TestName::CoefficientBound,
            Witness::compare_int(1, 3.into(), 5.into()),
            "too big",
        );
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "test": "coefficient-bound",
                "kind": "theorem",
                "outcome": "fail",
                "witness_k": 1,
                "bound": "3",
                "actual": "5",
                "D": null,
                "note": "too big"
            })
        );
    }

    #[test]
    fn conjecture_failures_do_not_obstruct() {
        let report = SieveReport::new(vec![
            Verdict::pass(TestName::Mod2Fibonacci, Witness::index(3)),
            Verdict::fail(TestName::FibonacciTrapezoid, Witness::at(2), "not unimodal"),
        ]);
        assert!(!report.obstructed());
        assert!(report.conjectural_obstruction());
    }
}
