//! Exhaustive generation of two-bridge forms by diagram crossing count,
//! continued-fraction invariants, and the census that runs every test over
//! the generated population.
//!
//! A form `b = (b_1..b_m)` has `sum 2|b_i|` crossings in its standard
//! diagram. Within a budget of `2N` there are `3^N - 1` forms.

use std::collections::HashSet;
use std::io::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::alexander::{
    alexander_sieve, alexander_to_conway, conway_to_alexander, link_conway_to_hosokawa,
};
use crate::conway::TwoBridgeForm;
use crate::error::{Error, Result};
use crate::fibonacci::fib_table;
use crate::obstructions::{mod2_index, sieve};
use crate::poly::{determinant, mod2_equal, ZPoly};
use crate::verdict::{Outcome, TestKind, Verdict, VerdictRecord};

/// Order of values within one slot: `1, -1, 2, -2, ...`.
fn next_value(x: i64) -> i64 {
    if x > 0 {
        -x
    } else {
        1 - x
    }
}

/// Depth-first, prefix-first walk over parameter vectors with
/// `sum |b_i| <= N`. A form precedes its extensions, and siblings follow
/// `1, -1, 2, -2, ...`.
#[derive(Clone, Debug)]
pub struct Forms {
    stack: Vec<i64>,
    remaining: u32,
    /// Entries below this depth are fixed.
    floor: usize,
    started: bool,
    done: bool,
}

impl Forms {
    fn new(half_budget: u32) -> Self {
        Forms {
            stack: Vec::new(),
            remaining: half_budget,
            floor: 0,
            started: false,
            done: half_budget == 0,
        }
    }

    /// Forms whose first parameter is `first`.
    fn with_first(first: i64, half_budget: u32) -> Self {
        let a = first.unsigned_abs() as u32;
        Forms {
            stack: vec![first],
            remaining: half_budget.saturating_sub(a),
            floor: 1,
            started: false,
            done: first == 0 || a > half_budget,
        }
    }

    fn current(&self) -> Vec<i64> {
        self.stack.clone()
    }
}

impl Iterator for Forms {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.stack.is_empty() {
                self.stack.push(1);
                self.remaining -= 1;
            }
            return Some(self.current());
        }
        if self.remaining >= 1 {
            self.stack.push(1);
            self.remaining -= 1;
            return Some(self.current());
        }
        while self.stack.len() > self.floor {
            let x = self.stack.pop().expect("nonempty");
            self.remaining += x.unsigned_abs() as u32;
            let v = next_value(x);
            if v.unsigned_abs() as u32 <= self.remaining {
                self.stack.push(v);
                self.remaining -= v.unsigned_abs() as u32;
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

fn half_budget(budget: u32) -> Result<u32> {
    if budget < 2 || budget % 2 == 1 {
        Err(Error::InvalidBudget(budget))
    } else {
        Ok(budget / 2)
    }
}

/// Every form with `sum 2|b_i| <= budget`, in deterministic order.
pub fn forms_up_to(budget: u32) -> Result<impl Iterator<Item = TwoBridgeForm>> {
    let n = half_budget(budget)?;
    Ok(Forms::new(n).map(|b| TwoBridgeForm::from_i64s(&b).expect("generated entries are nonzero")))
}

/// Reduced continued-fraction value `p/q` with `p >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    pub p: BigInt,
    pub q: BigInt,
}

/// `e_1 + 1/(e_2 + 1/(... + 1/e_m))` over the literal entries, by the
/// convergent recursion `h_i = e_i h_{i-1} + h_{i-2}`.
pub fn fraction_of(form: &TwoBridgeForm) -> Fraction {
    let (mut h, mut h_prev) = (BigInt::one(), BigInt::zero());
    let (mut k, mut k_prev) = (BigInt::zero(), BigInt::one());
    for e in form.to_literal() {
        let h_next = &e * &h + &h_prev;
        let k_next = &e * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
    let g = h.gcd(&k);
    let (mut p, mut q) = (h / &g, k / &g);
    if p.is_negative() {
        p = -p;
        q = -q;
    }
    Fraction { p, q }
}

/// `(p, min(q mod p, q^-1 mod p))`: identifies `q` with its inverse mod `p`.
pub fn canonical_key(f: &Fraction) -> Result<(BigInt, BigInt)> {
    if !f.p.is_positive() {
        return Err(Error::DegenerateFraction);
    }
    let egcd = f.q.extended_gcd(&f.p);
    if !egcd.gcd.is_one() {
        return Err(Error::NotCoprime {
            p: f.p.to_string(),
            q: f.q.to_string(),
        });
    }
    let q = f.q.mod_floor(&f.p);
    let inverse = egcd.x.mod_floor(&f.p);
    Ok((f.p.clone(), q.min(inverse)))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dedup {
    None,
    #[default]
    Fraction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusConfig {
    pub budget: u32,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    pub dedup: Dedup,
    /// Abort (with a partial report) rather than process more forms.
    pub max_forms: Option<u64>,
}

impl CensusConfig {
    pub fn new(budget: u32) -> Self {
        CensusConfig {
            budget,
            jobs: None,
            dedup: Dedup::Fraction,
            max_forms: None,
        }
    }
}

/// One failing verdict together with the form that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureRecord {
    pub form: String,
    pub literal: String,
    #[serde(flatten)]
    pub verdict: VerdictRecord,
}

impl FailureRecord {
    fn new(form: &TwoBridgeForm, verdict: VerdictRecord) -> Self {
        FailureRecord {
            form: form.to_string(),
            literal: form.literal_string(),
            verdict,
        }
    }

    /// A failed internal cross-check, reported like a theorem failure.
    fn consistency(form: &TwoBridgeForm, test: &'static str, note: String) -> Self {
        FailureRecord::new(
            form,
            VerdictRecord {
                test,
                kind: TestKind::Theorem,
                outcome: Outcome::Fail,
                witness_k: None,
                bound: None,
                actual: None,
                d: None,
                note: Some(note),
            },
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counters {
    pub knots: u64,
    pub links: u64,
    pub theorem_failures: u64,
    pub conjecture_failures: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub budget: u32,
    pub forms_generated: u64,
    /// Distinct canonical keys, when deduplication is on.
    pub classes: Option<u64>,
    pub verdict_failures: Vec<FailureRecord>,
    pub conjecture_failures: Vec<FailureRecord>,
    pub counters: Counters,
    /// Set when the form cap stopped the run early.
    pub partial: bool,
}

impl CensusReport {
    pub fn obstructed(&self) -> bool {
        !self.verdict_failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per failure, theorem failures first.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "form",
            "literal",
            "test",
            "kind",
            "witness_k",
            "bound",
            "actual",
            "D",
            "note",
        ])?;
        for f in self
            .verdict_failures
            .iter()
            .chain(&self.conjecture_failures)
        {
            let v = &f.verdict;
            let kind = match v.kind {
                TestKind::Theorem => "theorem",
                TestKind::Conjecture => "conjecture",
            };
            let opt = |x: Option<String>| x.unwrap_or_default();
            w.write_record([
                f.form.clone(),
                f.literal.clone(),
                v.test.to_string(),
                kind.to_string(),
                opt(v.witness_k.map(|k| k.to_string())),
                opt(v.bound.clone()),
                opt(v.actual.clone()),
                opt(v.d.map(|d| d.to_string())),
                opt(v.note.clone()),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Partial result for one slice of the population.
#[derive(Default)]
struct Partial {
    forms: u64,
    knots: u64,
    links: u64,
    keys: HashSet<(BigInt, BigInt)>,
    failures: Vec<FailureRecord>,
    conjectures: Vec<FailureRecord>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.forms += other.forms;
        self.knots += other.knots;
        self.links += other.links;
        self.keys.extend(other.keys);
        self.failures.extend(other.failures);
        self.conjectures.extend(other.conjectures);
        self
    }

    fn record(&mut self, form: &TwoBridgeForm, verdicts: &[Verdict]) {
        for v in verdicts.iter().filter(|v| v.is_fail()) {
            let rec = FailureRecord::new(form, v.to_record());
            match v.kind() {
                TestKind::Theorem => self.failures.push(rec),
                TestKind::Conjecture => self.conjectures.push(rec),
            }
        }
    }
}

/// Every check the census performs on one form.
fn examine(form: &TwoBridgeForm, fibs: &[ZPoly], dedup: Dedup, acc: &mut Partial) {
    let p = form.conway_poly();
    acc.forms += 1;

    let d = mod2_index(form);
    if !mod2_equal(&p, &fibs[d as usize]) {
        acc.failures.push(FailureRecord::consistency(
            form,
            "mod2-index",
            format!("conway polynomial {p} is not f_{d} mod 2"),
        ));
    }

    let fraction = fraction_of(form);
    let det = determinant(&p).expect("conway polynomials have pure parity");
    if fraction.p != det {
        acc.failures.push(FailureRecord::consistency(
            form,
            "determinant",
            format!("fraction numerator {} but determinant {det}", fraction.p),
        ));
    }
    if dedup == Dedup::Fraction {
        acc.keys
            .insert(canonical_key(&fraction).expect("form fractions are reduced and nonzero"));
    }

    acc.record(form, &sieve(&p).verdicts);

    let alex = if form.is_knot() {
        acc.knots += 1;
        let raw = conway_to_alexander(&p).expect("knot conway polynomials are even");
        if alexander_to_conway(&raw).as_ref() != Ok(&p) {
            acc.failures.push(FailureRecord::consistency(
                form,
                "alexander-round-trip",
                format!("alexander transform of {p} does not invert"),
            ));
        }
        raw
    } else {
        acc.links += 1;
        link_conway_to_hosokawa(&p).expect("link conway polynomials are odd")
    };
    let (alex, _) = alex.normalize();
    acc.record(form, &alexander_sieve(&alex).verdicts);
}

/// Runs both sieves and the internal cross-checks over every form within
/// the budget. Work is split by first parameter; results are merged in
/// enumeration order, so reports are identical for any thread count.
pub fn census(config: &CensusConfig) -> Result<CensusReport> {
    let n = half_budget(config.budget)?;
    let fibs = fib_table(n as usize + 2);

    // first parameters in enumeration order, with their subtree sizes 3^(N-|a|)
    let mut firsts = Vec::new();
    let mut planned: u64 = 0;
    let mut partial = false;
    let mut a: i64 = 1;
    while a.unsigned_abs() as u32 <= n {
        let size = 3u64.pow(n - a.unsigned_abs() as u32);
        if config.max_forms.is_some_and(|cap| planned + size > cap) {
            partial = true;
            break;
        }
        planned += size;
        firsts.push(a);
        a = next_value(a);
    }

    let run = || {
        firsts
            .par_iter()
            .map(|&first| {
                let mut acc = Partial::default();
                for b in Forms::with_first(first, n) {
                    let form = TwoBridgeForm::from_i64s(&b).expect("generated entries are nonzero");
                    examine(&form, &fibs, config.dedup, &mut acc);
                }
                acc
            })
            .collect::<Vec<_>>()
            .into_iter()
            .fold(Partial::default(), Partial::merge)
    };
    let total = match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };

    Ok(CensusReport {
        budget: config.budget,
        forms_generated: total.forms,
        classes: (config.dedup == Dedup::Fraction).then_some(total.keys.len() as u64),
        counters: Counters {
            knots: total.knots,
            links: total.links,
            theorem_failures: total.failures.len() as u64,
            conjecture_failures: total.conjectures.len() as u64,
        },
        verdict_failures: total.failures,
        conjecture_failures: total.conjectures,
        partial,
    })
}
