//! Brute-force oracle over the functional graph of x ↦ x² mod m.
//!
//! Every residue has exactly one outgoing edge, so each component is a tree
//! hanging off a single cycle. [`enumerate_cycles`] visits every residue once
//! and reports the full cycle census; L(m) is the maximum cycle length.

use serde::Serialize;

use crate::num_core::mulmod;
use crate::{Error, Result};

/// Default ceiling on the visited array, in residues.
pub const DEFAULT_ORACLE_CAP: u64 = 1 << 26;

/// Environment override for the enumeration memory cap.
pub const ORACLE_CAP_ENV: &str = "SQCYCLE_ORACLE_CAP";

pub fn oracle_cap() -> u64 {
    std::env::var(ORACLE_CAP_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}

/// x² mod m.
pub fn step(x: u64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be at least 1");
    let x = x % m;
    mulmod(x, x, m)
}

/// The orbit [x, x², x⁴, …] of length max_steps + 1.
pub fn trajectory(x: u64, m: u64, max_steps: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(max_steps + 1);
    let mut cur = x % m.max(1);
    out.push(cur);
    for _ in 0..max_steps {
        cur = step(cur, m);
        out.push(cur);
    }
    out
}

/// Length of the unique cycle eventually reached from x, by Brent's
/// power-of-two teleporting race. Needs no visited array, so it works at
/// moduli far beyond the enumeration cap (e.g. 65537²).
pub fn cycle_period(x: u64, m: u64) -> u64 {
    let mut power = 1u64;
    let mut lam = 1u64;
    let mut tortoise = x % m.max(1);
    let mut hare = step(tortoise, m);
    while tortoise != hare {
        if power == lam {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = step(hare, m);
        lam += 1;
    }
    lam
}

/// One cycle of the squaring map. The representative is the smallest element
/// on the cycle; when present, `elements` follows the squaring orbit from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleRecord {
    pub representative: u64,
    pub length: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<u64>>,
}

/// Full cycle census of the squaring map mod m.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub modulus: u64,
    pub cycles: Vec<CycleRecord>,
    pub max_length: u64,
    pub on_cycle_count: u64,
}

/// Walks every residue exactly once: O(m) time, two byte-arrays of working
/// memory. Cycles come out ordered by representative, elements unpopulated.
pub fn enumerate_cycles(m: u64) -> Result<GraphSummary> {
    enumerate_cycles_with_cap(m, oracle_cap())
}

pub fn enumerate_cycles_with_cap(m: u64, cap: u64) -> Result<GraphSummary> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    if m > cap {
        return Err(Error::CapExceeded { m, cap });
    }
    let n = m as usize;
    let mut visited = vec![false; n];
    let mut in_path = vec![false; n];
    let mut cycles: Vec<CycleRecord> = Vec::new();

    let mut path: Vec<u64> = Vec::new();
    for start in 0..m {
        if visited[start as usize] {
            continue;
        }
        path.clear();
        let mut x = start;
        while !visited[x as usize] && !in_path[x as usize] {
            in_path[x as usize] = true;
            path.push(x);
            x = step(x, m);
        }
        if in_path[x as usize] && !visited[x as usize] {
            // closed back into the current walk: everything from the first
            // occurrence of x onward is a new cycle
            let pos = path.iter().position(|&v| v == x).expect("x is on path");
            let cyc = &path[pos..];
            let (min_idx, &rep) = cyc
                .iter()
                .enumerate()
                .min_by_key(|&(_, &v)| v)
                .expect("nonempty cycle");
            let _ = min_idx;
            cycles.push(CycleRecord {
                representative: rep,
                length: cyc.len() as u64,
                elements: None,
            });
        }
        for &v in &path {
            in_path[v as usize] = false;
            visited[v as usize] = true;
        }
    }

    cycles.sort_by_key(|c| c.representative);
    let max_length = cycles.iter().map(|c| c.length).max().unwrap_or(0);
    let on_cycle_count = cycles.iter().map(|c| c.length).sum();
    Ok(GraphSummary {
        modulus: m,
        cycles,
        max_length,
        on_cycle_count,
    })
}

impl CycleRecord {
    /// Walks the orbit from the representative to fill in `elements`.
    pub fn with_elements(mut self, m: u64) -> Self {
        let mut elems = Vec::with_capacity(self.length as usize);
        let mut x = self.representative;
        for _ in 0..self.length {
            elems.push(x);
            x = step(x, m);
        }
        debug_assert_eq!(x, self.representative);
        self.elements = Some(elems);
        self
    }
}

/// L(m) by full enumeration.
pub fn l_bruteforce(m: u64) -> Result<u64> {
    Ok(enumerate_cycles(m)?.max_length)
}

/// All cycles of maximum length, elements populated.
pub fn largest_cycles(m: u64) -> Result<Vec<CycleRecord>> {
    let summary = enumerate_cycles(m)?;
    Ok(summary
        .cycles
        .into_iter()
        .filter(|c| c.length == summary.max_length)
        .map(|c| c.with_elements(m))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num_core::{gcd, multiplicative_order};

    #[test]
    fn step_examples() {
        assert_eq!(step(322, 999), 787);
        assert_eq!(step(0, 17), 0);
        assert_eq!(step(88, 99), 22);
        assert_eq!(step(5, 1), 0);
    }

    #[test]
    fn trajectory_examples() {
        assert_eq!(
            trajectory(454, 999, 6),
            vec![454, 322, 787, 988, 121, 655, 454]
        );
        assert_eq!(trajectory(1, 50, 3), vec![1, 1, 1, 1]);
        let t = trajectory(4, 121, 20);
        assert_eq!(&t[..6], &[4, 16, 14, 75, 59, 93]);
        assert_eq!(t[20], 4);
        assert_eq!(t.len(), 21);
    }

    #[test]
    fn cycle_period_examples() {
        assert_eq!(cycle_period(70, 99), 4);
        assert_eq!(cycle_period(0, 50), 1);
        assert_eq!(cycle_period(65536, 4295098369), 32);
        assert_eq!(cycle_period(0, 1), 1);
        // from a tail node: 2 mod 99 falls into some cycle
        assert!(cycle_period(2, 99) >= 1);
    }

    #[test]
    fn enumerate_examples() {
        let s = enumerate_cycles(99).unwrap();
        assert_eq!(s.max_length, 4);
        let lens: Vec<u64> = s.cycles.iter().map(|c| c.length).collect();
        assert!(lens.contains(&2));
        assert!(s.cycles.iter().any(|c| c.representative == 22));
        assert!(s.cycles.iter().any(|c| c.representative == 25));

        let s2 = enumerate_cycles(2).unwrap();
        assert_eq!(s2.max_length, 1);
        assert_eq!(
            s2.cycles.iter().map(|c| c.representative).collect::<Vec<_>>(),
            vec![0, 1]
        );

        let s121 = enumerate_cycles(121).unwrap();
        assert_eq!(s121.max_length, 20);
        assert!(s121
            .cycles
            .iter()
            .filter(|c| c.length == 10)
            .map(|c| c.clone().with_elements(121))
            .any(|c| c.elements.unwrap().contains(&100)));
    }

    #[test]
    fn cap_rejection() {
        let err = enumerate_cycles_with_cap(1000, 100).unwrap_err();
        assert_eq!(err, Error::CapExceeded { m: 1000, cap: 100 });
        assert!(err.to_string().contains("100"));
    }

    #[test]
    fn l_bruteforce_examples() {
        assert_eq!(l_bruteforce(999).unwrap(), 6);
        assert_eq!(l_bruteforce(46).unwrap(), 10);
        assert_eq!(l_bruteforce(1).unwrap(), 1);
    }

    #[test]
    fn largest_cycles_examples() {
        let cycles = largest_cycles(999).unwrap();
        assert!(cycles.iter().all(|c| c.length == 6));
        let elems: Vec<&Vec<u64>> = cycles.iter().map(|c| c.elements.as_ref().unwrap()).collect();
        assert!(elems.iter().any(|e| e.contains(&454)));
        assert!(elems.iter().any(|e| e.contains(&445)));

        let c289 = largest_cycles(289).unwrap();
        assert!(c289
            .iter()
            .any(|c| c.elements.as_ref().unwrap().contains(&256)));

        let c4 = largest_cycles(4).unwrap();
        assert!(c4.iter().all(|c| c.length == 1));
    }

    #[test]
    fn cycle_membership_idempotence() {
        // x is on a cycle iff stepping cycle_period(x) times returns to x
        for m in [2u64, 9, 46, 99, 121, 289, 999] {
            let summary = enumerate_cycles(m).unwrap();
            let mut on_cycle = vec![false; m as usize];
            for c in summary.cycles {
                for e in c.with_elements(m).elements.unwrap() {
                    on_cycle[e as usize] = true;
                }
            }
            for x in 0..m {
                let p = cycle_period(x, m);
                let mut y = x;
                for _ in 0..p {
                    y = step(y, m);
                }
                assert_eq!(y == x, on_cycle[x as usize], "m={m} x={x}");
            }
        }
    }

    #[test]
    fn order_law_on_cycles() {
        // units on cycles have odd order, and the period is ord of 2 mod it
        for m in [9u64, 11, 99, 121, 289, 337, 999] {
            for c in enumerate_cycles(m).unwrap().cycles {
                for x in c.with_elements(m).elements.unwrap() {
                    if gcd(x, m) != 1 {
                        continue;
                    }
                    let ord = multiplicative_order(x, m).unwrap();
                    assert_eq!(ord % 2, 1, "m={m} x={x}");
                    assert_eq!(
                        cycle_period(x, m),
                        multiplicative_order(2, ord).unwrap(),
                        "m={m} x={x}"
                    );
                }
            }
        }
    }
}
