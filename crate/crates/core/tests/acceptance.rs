//! Acceptance suite: one test per exit criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see them.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use sqcycle::formulas::{
    bound_45_check, classify_ratio, fermat_l, fermat_l_square, l_of, theorem_43_check,
};
use sqcycle::graph::{cycle_period, enumerate_cycles, l_bruteforce, trajectory};
use sqcycle::num_core::{
    count_dth_roots_of_unity, euler_phi, fermat_index, fermat_prime, gcd, is_primitive_root,
    is_quadratic_residue, mod_pow, primes_up_to,
};
use sqcycle::verify::{
    check_fixture, classify_report, classify_sweep, golden_cycles, power_rows, sweep, table_rows,
};

fn pass(criterion: &str) {
    println!("PASS: {criterion}");
}

#[test]
fn criterion_01_prime_table() {
    let start = Instant::now();
    let rows = table_rows("prime-L").unwrap();
    assert_eq!(rows.len(), 39);
    for row in &rows {
        assert_eq!(l_of(row.m).unwrap().value, row.l, "L({})", row.m);
    }
    let spot: Vec<(u64, u64)> = vec![(23, 10), (107, 52), (167, 82)];
    for (p, l) in spot {
        assert_eq!(l_of(p).unwrap().value, l);
    }
    assert!(start.elapsed() < Duration::from_secs(1), "{:?}", start.elapsed());
    pass("criterion 1: prime table, 39 rows, < 1 s");
}

#[test]
fn criterion_02_composite_table() {
    let report = check_fixture("composite-L").unwrap();
    assert!(report.pass, "{:?}", report.mismatches);
    assert_eq!(l_of(46).unwrap().value, 10);
    assert_eq!(l_of(27).unwrap().value, 6);
    pass("criterion 2: composite table");
}

#[test]
fn criterion_03_prime_square_table() {
    let start = Instant::now();
    let rows = table_rows("prime-square-L").unwrap();
    for row in &rows {
        assert_eq!(l_of(row.m).unwrap().value, row.l, "L({})", row.m);
        assert_eq!(l_bruteforce(row.m).unwrap(), row.l, "oracle L({})", row.m);
    }
    assert_eq!(l_of(47 * 47).unwrap().value, 253);
    assert_eq!(l_of(107 * 107).unwrap().value, 2756);
    assert_eq!(l_of(167 * 167).unwrap().value, 6806);
    assert!(start.elapsed() < Duration::from_secs(10), "{:?}", start.elapsed());
    pass("criterion 3: prime-square table with oracle confirmation, < 10 s");
}

#[test]
fn criterion_04_prime_power_ladders() {
    for row in power_rows() {
        let m = row.p.pow(row.n);
        assert_eq!(
            l_of(m).unwrap().value,
            row.l,
            "L({}^{})",
            row.p,
            row.n
        );
        if m <= 200_000 {
            assert_eq!(l_bruteforce(m).unwrap(), row.l, "oracle L({}^{})", row.p, row.n);
        }
    }
    pass("criterion 4: prime-power ladders with brute-force confirmation");
}

#[test]
fn criterion_05_fermat_primes() {
    let start = Instant::now();
    for k in 0..5u32 {
        let p = fermat_prime(k).unwrap();
        assert_eq!(fermat_l(k).unwrap().value, 1);
        assert_eq!(l_of(p).unwrap().value, 1);
        assert_eq!(fermat_l_square(k).unwrap().value, 1 << (k + 1));
        assert_eq!(l_of(p * p).unwrap().value, 1 << (k + 1));
        if k < 4 {
            assert_eq!(l_bruteforce(p * p).unwrap(), 1 << (k + 1));
        }
    }
    // 65537²: formula plus the printed witness, no full enumeration
    assert_eq!(cycle_period(65536, 4295098369), 32);
    for cyc in golden_cycles() {
        if [289, 66049, 4295098369].contains(&cyc.m) {
            let mut expected = cyc.elements.clone();
            expected.push(cyc.elements[0]);
            assert_eq!(
                trajectory(cyc.elements[0], cyc.m, cyc.elements.len()),
                expected,
                "replay mod {}",
                cyc.m
            );
        }
    }
    assert!(start.elapsed() < Duration::from_secs(1), "{:?}", start.elapsed());
    pass("criterion 5: Fermat prime closed forms and printed cycles, < 1 s");
}

#[test]
fn criterion_06_golden_cycles() {
    let report = check_fixture("golden-cycles").unwrap();
    assert!(report.pass, "{:?}", report.mismatches);
    // the fixture must actually contain the advertised cycles
    let cycles = golden_cycles();
    assert_eq!(
        cycles.iter().filter(|c| c.m == 999 && c.elements.len() == 6).count(),
        2
    );
    assert!(cycles.iter().any(|c| c.m == 99 && c.elements.len() == 2));
    assert!(cycles.iter().any(|c| c.m == 99 && c.elements.len() == 4));
    assert!(cycles.iter().any(|c| c.m == 121 && c.elements.len() == 20));
    assert!(cycles.iter().any(|c| c.m == 121 && c.elements.len() == 10));
    pass("criterion 6: golden cycle trajectories, element for element");
}

#[test]
fn criterion_07_oracle_sweep() {
    let start = Instant::now();
    let report = sweep(1, 20000, true).unwrap();
    assert_eq!(report.checked, 20000);
    assert!(report.pass, "{:?}", report.mismatches);
    assert!(start.elapsed() < Duration::from_secs(60), "{:?}", start.elapsed());
    pass("criterion 7: formula = oracle for all m in [1, 20000], < 60 s");
}

#[test]
fn criterion_08_theorem_43() {
    let mut true_set = Vec::new();
    for p in primes_up_to(999).into_iter().skip(1) {
        if fermat_index(p).is_some() {
            continue;
        }
        let check = theorem_43_check(p).unwrap();
        assert_eq!(check.lhs, check.rhs, "p={p}");
        if check.lhs && p <= 167 {
            true_set.push(p);
        }
    }
    // within the published prime table, exactly these primes reach (p−3)/2
    assert_eq!(true_set, vec![7, 11, 23, 59, 107, 167]);
    pass("criterion 8: (p-3)/2 criterion equivalence for odd non-Fermat p < 1000");
}

#[test]
fn criterion_09_bound() {
    let mut equality = Vec::new();
    for p in primes_up_to(999) {
        assert!(bound_45_check(p).unwrap(), "p={p}");
        let rec = classify_ratio(p).unwrap();
        let is_equal = rec.l_p2 == (p - 1) * rec.l_p;
        assert_eq!(is_equal, rec.k == 1, "p={p}");
        if is_equal && p <= 360 {
            equality.push(p);
        }
    }
    assert_eq!(equality, vec![2, 3, 5, 29, 179, 293, 317]);
    pass("criterion 9: L(p^2) <= (p-1)L(p) for p < 1000, equality on case (1)");
}

#[test]
fn criterion_10_ratio_classification() {
    let report = classify_report(360).unwrap();
    assert_eq!(report.checked, 17);
    assert!(report.pass, "{:?}", report.mismatches);
    let groups = classify_sweep(360).unwrap();
    for k in [1u64, 2, 4, 6, 7, 8, 10, 12, 18, 20, 24, 40, 48, 50, 54, 110, 250] {
        assert!(groups.contains_key(&k), "missing class k={k}");
    }
    pass("criterion 10: all 17 ratio-class prefixes and difference observation");
}

#[test]
fn criterion_11_property_suites() {
    // quadratic nonresidues of a Fermat prime = its primitive roots
    for p in [17u64, 257] {
        for a in 1..p {
            assert_eq!(
                !is_quadratic_residue(a, p).unwrap(),
                is_primitive_root(a, p).unwrap(),
                "p={p} a={a}"
            );
        }
    }

    // root-of-unity counting vs brute enumeration for primitive-root moduli
    for m in 1..=2000u64 {
        if !sqcycle::num_core::has_primitive_root(m) {
            continue;
        }
        let phi = euler_phi(m).unwrap();
        for d in 1..=phi {
            if phi % d != 0 {
                continue;
            }
            let brute = (0..m)
                .filter(|&x| gcd(x, m) == 1 && mod_pow(x, d, m).unwrap() == 1 % m)
                .count() as u64;
            assert_eq!(
                brute,
                count_dth_roots_of_unity(d, m).unwrap(),
                "m={m} d={d}"
            );
        }
    }

    // multiplicativity of L over all coprime pairs up to 2000
    let cached: Vec<u64> = (0..=2000u64)
        .map(|m| if m == 0 { 0 } else { l_of(m).unwrap().value })
        .collect();
    (1..=2000u64).into_par_iter().for_each(|a| {
        for b in a + 1..=2000 {
            if gcd(a, b) != 1 {
                continue;
            }
            let lhs = l_of(a * b).unwrap().value;
            let rhs = sqcycle::num_core::lcm(cached[a as usize], cached[b as usize]).unwrap();
            assert_eq!(lhs, rhs, "a={a} b={b}");
        }
    });

    // some maximum cycle consists entirely of units
    for m in 1..=5000u64 {
        let summary = enumerate_cycles(m).unwrap();
        let ok = summary
            .cycles
            .iter()
            .filter(|c| c.length == summary.max_length)
            .map(|c| c.clone().with_elements(m))
            .any(|c| c.elements.unwrap().iter().all(|&x| gcd(x, m) == 1 || m == 1));
        assert!(ok, "m={m}");
    }

    pass("criterion 11: lemma set equality, root counting, multiplicativity, unit attainment");
}
