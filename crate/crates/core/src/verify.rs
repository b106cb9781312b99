//! Fixture store and cross-validation engine.
//!
//! The published tables and explicit cycles live as JSON files under
//! `fixtures/`, one per table, each row annotated with the section it was
//! transcribed from. Checks run the formula route against every row, add the
//! brute-force oracle wherever the modulus is small enough, and report every
//! disagreement.

use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::formulas::{classify_ratio, l_of};
use crate::graph::{cycle_period, l_bruteforce, oracle_cap, trajectory};
use crate::num_core::{is_prime, primes_up_to};
use crate::{Error, Result};

/// Rows above this modulus skip the oracle during fixture checks. Covers
/// every table entry except 65537², which gets a cycle_period spot check.
pub const ORACLE_CHECK_LIMIT: u64 = 200_000;

const PRIME_L: &str = include_str!("../fixtures/prime_l.json");
const COMPOSITE_L: &str = include_str!("../fixtures/composite_l.json");
const PRIME_SQUARE_L: &str = include_str!("../fixtures/prime_square_l.json");
const PRIME_POWER_L: &str = include_str!("../fixtures/prime_power_l.json");
const FERMAT: &str = include_str!("../fixtures/fermat.json");
const RATIO_CLASSES: &str = include_str!("../fixtures/ratio_classes.json");
const GOLDEN_CYCLES: &str = include_str!("../fixtures/golden_cycles.json");

pub const FIXTURE_NAMES: [&str; 7] = [
    "prime-L",
    "composite-L",
    "prime-square-L",
    "prime-power-L",
    "fermat",
    "ratio-classes",
    "golden-cycles",
];

#[derive(Debug, Clone, Deserialize)]
pub struct TableRow {
    pub m: u64,
    pub l: u64,
    pub note: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct PowerRow {
    pub p: u64,
    pub n: u32,
    pub l: u64,
    pub note: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct FermatRow {
    pub k: u32,
    pub p: u64,
    pub l_p: u64,
    pub l_p2: u64,
    pub note: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct RatioCase {
    pub k: u64,
    pub primes: Vec<u64>,
    pub note: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenCycle {
    pub m: u64,
    pub elements: Vec<u64>,
    pub note: String,
}

fn parse<T: serde::de::DeserializeOwned>(raw: &str) -> Vec<T> {
    serde_json::from_str(raw).expect("embedded fixture is valid json")
}

pub fn table_rows(name: &str) -> Result<Vec<TableRow>> {
    match name {
        "prime-L" => Ok(parse(PRIME_L)),
        "composite-L" => Ok(parse(COMPOSITE_L)),
        "prime-square-L" => Ok(parse(PRIME_SQUARE_L)),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

pub fn power_rows() -> Vec<PowerRow> {
    parse(PRIME_POWER_L)
}

pub fn fermat_rows() -> Vec<FermatRow> {
    parse(FERMAT)
}

pub fn ratio_cases() -> Vec<RatioCase> {
    parse(RATIO_CLASSES)
}

pub fn golden_cycles() -> Vec<GoldenCycle> {
    parse(GOLDEN_CYCLES)
}

#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct MismatchReport {
    pub descriptor: String,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub pass: bool,
}

impl MismatchReport {
    fn new(descriptor: impl Into<String>) -> Self {
        MismatchReport {
            descriptor: descriptor.into(),
            checked: 0,
            mismatches: Vec::new(),
            pass: true,
        }
    }

    fn push(&mut self, input: impl ToString, expected: impl ToString, got: impl ToString) {
        self.mismatches.push(Mismatch {
            input: input.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
        });
    }

    fn finish(mut self) -> Self {
        self.pass = self.mismatches.is_empty();
        self
    }
}

/// Checks one L value against the formula route, and against the oracle when
/// the modulus is within [`ORACLE_CHECK_LIMIT`].
fn check_l_row(report: &mut MismatchReport, m: u64, expected: u64, note: &str) {
    report.checked += 1;
    match l_of(m) {
        Ok(lv) if lv.value == expected => {}
        Ok(lv) => report.push(format!("{m} ({note})"), expected, lv.value),
        Err(e) => report.push(format!("{m} ({note})"), expected, format!("error: {e}")),
    }
    if m <= ORACLE_CHECK_LIMIT {
        match l_bruteforce(m) {
            Ok(v) if v == expected => {}
            Ok(v) => report.push(format!("{m} oracle ({note})"), expected, v),
            Err(e) => report.push(
                format!("{m} oracle ({note})"),
                expected,
                format!("error: {e}"),
            ),
        }
    }
}

/// Replays every fixture row for the named table and diffs it against the
/// computed values.
pub fn check_fixture(name: &str) -> Result<MismatchReport> {
    let mut report = MismatchReport::new(format!("fixture {name}"));
    match name {
        "prime-L" | "composite-L" | "prime-square-L" => {
            for row in table_rows(name)? {
                check_l_row(&mut report, row.m, row.l, &row.note);
            }
        }
        "prime-power-L" => {
            for row in power_rows() {
                check_l_row(&mut report, row.p.pow(row.n), row.l, &row.note);
            }
        }
        "fermat" => {
            for row in fermat_rows() {
                check_l_row(&mut report, row.p, row.l_p, &row.note);
                check_l_row(&mut report, row.p * row.p, row.l_p2, &row.note);
                match crate::formulas::fermat_l(row.k) {
                    Ok(lv) if lv.value == row.l_p => {}
                    other => report.push(
                        format!("fermat_l({})", row.k),
                        row.l_p,
                        format!("{other:?}"),
                    ),
                }
                match crate::formulas::fermat_l_square(row.k) {
                    Ok(lv) if lv.value == row.l_p2 => {}
                    other => report.push(
                        format!("fermat_l_square({})", row.k),
                        row.l_p2,
                        format!("{other:?}"),
                    ),
                }
                if row.p * row.p > ORACLE_CHECK_LIMIT {
                    // too big to enumerate: spot-check at the witness 65536
                    report.checked += 1;
                    let period = cycle_period(row.p - 1, row.p * row.p);
                    if period != row.l_p2 {
                        report.push(
                            format!("cycle_period({}, {})", row.p - 1, row.p * row.p),
                            row.l_p2,
                            period,
                        );
                    }
                }
            }
        }
        "ratio-classes" => {
            for case in ratio_cases() {
                report.checked += 1;
                let hi = *case.primes.last().expect("nonempty case");
                let computed: Vec<u64> = primes_up_to(hi)
                    .into_iter()
                    .filter_map(|p| {
                        classify_ratio(p)
                            .ok()
                            .filter(|r| r.k == case.k)
                            .map(|r| r.p)
                    })
                    .collect();
                if computed != case.primes {
                    report.push(
                        format!("k={} ({})", case.k, case.note),
                        format!("{:?}", case.primes),
                        format!("{computed:?}"),
                    );
                }
                for pair in case.primes.windows(2) {
                    if (pair[1] - pair[0]) % case.k != 0 {
                        report.push(
                            format!("k={} adjacent difference {}..{}", case.k, pair[0], pair[1]),
                            format!("difference divisible by {}", case.k),
                            pair[1] - pair[0],
                        );
                    }
                }
            }
        }
        "golden-cycles" => {
            for cyc in golden_cycles() {
                report.checked += 1;
                let start = cyc.elements[0];
                let got = trajectory(start, cyc.m, cyc.elements.len());
                let mut expected = cyc.elements.clone();
                expected.push(start);
                if got != expected {
                    report.push(
                        format!("trajectory({start}, {}) ({})", cyc.m, cyc.note),
                        format!("{expected:?}"),
                        format!("{got:?}"),
                    );
                }
            }
        }
        other => return Err(Error::UnknownFixture(other.to_string())),
    }
    Ok(report.finish())
}

/// Formula-vs-oracle agreement over [lo, hi]. Moduli are checked in parallel;
/// the aggregated report is deterministic (sorted by modulus).
pub fn sweep(lo: u64, hi: u64, use_oracle: bool) -> Result<MismatchReport> {
    if lo < 1 || lo > hi {
        return Err(Error::BadRange { lo, hi });
    }
    if use_oracle && hi > oracle_cap() {
        return Err(Error::CapExceeded {
            m: hi,
            cap: oracle_cap(),
        });
    }
    let mut found: Vec<(u64, Mismatch)> = (lo..=hi)
        .into_par_iter()
        .filter_map(|m| {
            let formula = match l_of(m) {
                Ok(lv) => lv.value,
                Err(e) => {
                    return Some((
                        m,
                        Mismatch {
                            input: m.to_string(),
                            expected: "formula value".into(),
                            got: format!("error: {e}"),
                        },
                    ))
                }
            };
            if !use_oracle {
                return None;
            }
            match l_bruteforce(m) {
                Ok(oracle) if oracle == formula => None,
                Ok(oracle) => Some((
                    m,
                    Mismatch {
                        input: m.to_string(),
                        expected: format!("oracle {oracle}"),
                        got: format!("formula {formula}"),
                    },
                )),
                Err(e) => Some((
                    m,
                    Mismatch {
                        input: m.to_string(),
                        expected: "oracle value".into(),
                        got: format!("error: {e}"),
                    },
                )),
            }
        })
        .collect();
    found.sort_by_key(|(m, _)| *m);

    let mut report = MismatchReport::new(format!(
        "sweep {lo}..={hi} ({})",
        if use_oracle { "formula vs oracle" } else { "formula only" }
    ));
    report.checked = (hi - lo + 1) as usize;
    report.mismatches = found.into_iter().map(|(_, mm)| mm).collect();
    Ok(report.finish())
}

/// Groups primes up to `limit` by their ratio class k.
pub fn classify_sweep(limit: u64) -> Result<BTreeMap<u64, Vec<u64>>> {
    if limit > 100_000 {
        return Err(Error::CapExceeded {
            m: limit,
            cap: 100_000,
        });
    }
    let mut groups: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for p in primes_up_to(limit) {
        let rec = classify_ratio(p)?;
        groups.entry(rec.k).or_default().push(p);
    }
    Ok(groups)
}

/// Checks classify_sweep output against each listed case of the ratio-class
/// fixture: prefix equality plus the adjacent-difference observation.
pub fn classify_report(limit: u64) -> Result<MismatchReport> {
    let groups = classify_sweep(limit)?;
    let mut report = MismatchReport::new(format!("classify limit={limit}"));
    for case in ratio_cases() {
        report.checked += 1;
        let listed: Vec<u64> = case.primes.iter().copied().filter(|&p| p <= limit).collect();
        let computed = groups.get(&case.k).cloned().unwrap_or_default();
        let prefix: Vec<u64> = computed.iter().copied().take(listed.len()).collect();
        if prefix != listed {
            report.push(
                format!("k={} ({})", case.k, case.note),
                format!("{listed:?}"),
                format!("{prefix:?}"),
            );
        }
        for pair in listed.windows(2) {
            if (pair[1] - pair[0]) % case.k != 0 {
                report.push(
                    format!("k={} adjacent difference {}..{}", case.k, pair[0], pair[1]),
                    format!("divisible by {}", case.k),
                    pair[1] - pair[0],
                );
            }
        }
    }
    Ok(report.finish())
}

/// Compares a b-file (`index value` lines, `#` comments) against l_prime of
/// the corresponding prime. `first_index` is the index the b-file assigns to
/// the first prime 2; index i maps to the (i − first_index + 1)-th prime.
pub fn oeis_compare(path: &Path, first_index: i64) -> Result<MismatchReport> {
    let text = std::fs::read_to_string(path)?;
    let mut report = MismatchReport::new(format!("b-file {}", path.display()));
    let mut prime: u64 = 1; // advanced incrementally; rows must be ascending
    let mut prime_ordinal: i64 = 0;
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let index: i64 = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::BFile {
                line: lineno,
                msg: "missing or non-integer index".into(),
            })?;
        let value: u64 = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::BFile {
                line: lineno,
                msg: "missing or non-integer value".into(),
            })?;
        if parts.next().is_some() {
            return Err(Error::BFile {
                line: lineno,
                msg: "trailing fields".into(),
            });
        }
        let n = index - first_index + 1;
        if n < 1 {
            return Err(Error::BFile {
                line: lineno,
                msg: format!("index {index} precedes the first prime under offset {first_index}"),
            });
        }
        if n <= prime_ordinal {
            return Err(Error::BFile {
                line: lineno,
                msg: "indices must be strictly increasing".into(),
            });
        }
        while prime_ordinal < n {
            prime += 1;
            while !is_prime(prime) {
                prime += 1;
            }
            prime_ordinal += 1;
        }
        report.checked += 1;
        let got = crate::formulas::l_prime(prime)?.value;
        if got != value {
            report.push(format!("index {index} (p={prime})"), value, got);
            break; // report the first divergence
        }
    }
    Ok(report.finish())
}
