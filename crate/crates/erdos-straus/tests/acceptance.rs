//! Acceptance suite.  One test per criterion; each prints a single
//! pass/fail line (visible with `--nocapture`) and asserts it.

use std::collections::HashSet;
use std::time::Instant;

use erdos_straus::arith::{verify_decomposition, SpfTable};
use erdos_straus::family::{self, list_families, members_up_to};
use erdos_straus::solver::solve;
use erdos_straus::survey::{classify_range, coverage_from_records};
use erdos_straus::tame::{
    certificate_to_triple, find_tame, shift_certificate, SearchMode, Verdict,
};

fn report(name: &str, ok: bool, detail: &str) {
    println!(
        "criterion {name}: {} — {detail}",
        if ok { "pass" } else { "FAIL" }
    );
    assert!(ok, "criterion {name} failed: {detail}");
}

fn golden_list(raw: &str) -> Vec<u64> {
    raw.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.parse().expect("integer per line"))
        .collect()
}

#[test]
fn criterion_01_prime_census_2000() {
    let t0 = Instant::now();
    let spf = SpfTable::new(18 * 2000).unwrap();
    let records = classify_range(2000, 1, &spf).unwrap();
    let elapsed = t0.elapsed();
    let ok = records.len() == 591 && elapsed.as_secs() < 5;
    report(
        "1 (prime census m<=2000)",
        ok,
        &format!("{} primes in {elapsed:.2?}, expected 591 in <5s", records.len()),
    );
}

#[test]
fn criterion_02_tame_wild_census_2000() {
    let t0 = Instant::now();
    let spf = SpfTable::new(18 * 2000).unwrap();
    let records = classify_range(2000, 4, &spf).unwrap();
    let tame = records
        .iter()
        .filter(|r| matches!(r.verdict, Verdict::TamePrime(_)))
        .count();
    let wild: Vec<u64> = records
        .iter()
        .filter(|r| r.verdict == Verdict::WildPrime)
        .map(|r| r.m)
        .collect();
    let golden = golden_list(include_str!("../data/wild_m_2000.txt"));
    let elapsed = t0.elapsed();
    let ok = tame == 586 && wild == golden && elapsed.as_secs() < 30;
    report(
        "2 (tame/wild census m<=2000)",
        ok,
        &format!("{tame} tame, wild {wild:?} in {elapsed:.2?}; expected 586/{golden:?}"),
    );
}

#[test]
fn criterion_03_tame_wild_census_30000() {
    let t0 = Instant::now();
    let spf = SpfTable::new(18 * 30000).unwrap();
    let records = classify_range(30000, 4, &spf).unwrap();
    let wild: Vec<u64> = records
        .iter()
        .filter(|r| r.verdict == Verdict::WildPrime)
        .map(|r| r.m)
        .collect();
    let golden = golden_list(include_str!("../data/wild_m_30000.txt"));
    let elapsed = t0.elapsed();
    let ok = records.len() == 7185 && wild == golden && elapsed.as_secs() <= 300;
    report(
        "3 (tame/wild census m<=30000)",
        ok,
        &format!(
            "{} primes, {} wild in {elapsed:.2?}; expected 7185 primes, wild {golden:?}",
            records.len(),
            wild.len()
        ),
    );
}

#[test]
fn criterion_04_family_identity_grid() {
    let t0 = Instant::now();
    let rep = family::reconcile::reconcile();
    let checked: usize = rep.grid.iter().map(|r| r.checked).sum();
    let elapsed = t0.elapsed();
    let ok = rep.is_clean_grid() && checked > 0 && elapsed.as_secs() < 10;
    report(
        "4 (family identity grid)",
        ok,
        &format!("{checked} grid members verified across {} rows in {elapsed:.2?}", rep.grid.len()),
    );
}

#[test]
fn criterion_05_per_family_counts_2000() {
    // The published per-class lists, re-validated member by member.
    // The full class censuses are larger (the source curates overlaps
    // away); the published totals are the list lengths, and every listed
    // m must be in class with 24m+1 prime and tame — except the known
    // composite entry m = 579 on the 9 mod 10 list.
    let spf = SpfTable::new(18 * 2000).unwrap();
    let raw = include_str!("../data/published_class_lists.tsv");
    let expected: &[(&str, usize)] =
        &[("m4mod7", 79), ("m3mod5", 158), ("m6mod7", 72), ("m9mod10", 42)];
    let mut ok = true;
    let mut detail = String::new();
    for line in raw.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')) {
        let cols: Vec<&str> = line.split('\t').collect();
        let (label, residue, modulus): (&str, u64, u64) =
            (cols[0], cols[1].parse().unwrap(), cols[2].parse().unwrap());
        let ms: Vec<u64> = cols[4].split(',').map(|t| t.parse().unwrap()).collect();
        let want = expected.iter().find(|(l, _)| *l == label).unwrap().1;
        let mut good = ms.len() == want;
        for &m in &ms {
            if m % modulus != residue {
                good = false;
            }
            if label == "m9mod10" && m == 579 {
                // Known defective entry: 24*579+1 = 13897 = 13 * 1069.
                good &= !erdos_straus::is_prime(24 * m + 1);
                continue;
            }
            good &= erdos_straus::is_prime(24 * m + 1)
                && !find_tame(m, SearchMode::First, &spf).unwrap().is_empty();
        }
        ok &= good;
        detail.push_str(&format!("{label}:{}/{want} ", ms.len()));
    }
    report("5 (per-family counts m<=2000)", ok, detail.trim());
}

#[test]
fn criterion_06_worked_example_regression() {
    let rep = family::reconcile::reconcile();
    let corrected: Vec<&str> = rep.corrected_example_ids();
    // m must re-derive exactly for every example (the reconcile module
    // inverts the printed m when the printed multiplier is wrong, and
    // records the multiplier correction).
    let m_exact = rep
        .examples
        .iter()
        .all(|e| e.corrections.iter().all(|c| c.field != "m"));
    // n and n1 match the published values exactly except the known typos.
    let n_bad: Vec<&str> = rep
        .examples
        .iter()
        .filter(|e| e.corrections.iter().any(|c| c.field == "n"))
        .map(|e| e.id)
        .collect();
    let n1_bad: Vec<&str> = rep
        .examples
        .iter()
        .filter(|e| e.corrections.iter().any(|c| c.field == "n1"))
        .map(|e| e.id)
        .collect();
    // Desk-check prediction: at least these two printed denominators fail.
    let flags_predicted =
        corrected.contains(&"F4.3-1") && corrected.contains(&"F6.1-1");
    let ok = m_exact && n_bad == ["F6.7-1"] && n1_bad == ["F4.5-2"] && flags_predicted;
    report(
        "6 (worked-example regression)",
        ok,
        &format!(
            "{} examples, corrected: {corrected:?} (n typos {n_bad:?}, n1 typos {n1_bad:?})",
            rep.examples.len()
        ),
    );
}

#[test]
fn criterion_07_coverage_matches_expectations_file() {
    let spf = SpfTable::new(18 * 2000).unwrap();
    let records = classify_range(2000, 4, &spf).unwrap();
    let rep = coverage_from_records(2000, &records).unwrap();
    let expected = golden_list(include_str!("../data/uncovered_m_2000.txt"));
    let ok = rep.uncovered == expected;
    report(
        "7 (coverage of tame primes m<=2000)",
        ok,
        &format!(
            "uncovered = {:?}, expectations file lists {:?}",
            rep.uncovered, expected
        ),
    );
}

#[test]
fn criterion_08_members_appear_in_full_search() {
    let spf = SpfTable::new(18 * 2000).unwrap();
    let mut checked = 0;
    let mut ok = true;
    for desc in list_families() {
        for inst in members_up_to(desc, 2000) {
            if !erdos_straus::is_prime(inst.n) {
                continue;
            }
            let all = find_tame(inst.m, SearchMode::All, &spf).unwrap();
            if !all.contains(&inst.certificate()) {
                ok = false;
                eprintln!("missing from full search: {}", inst.label());
            }
            checked += 1;
        }
    }
    report(
        "8 (instances subset of full search)",
        ok && checked > 500,
        &format!("{checked} prime instances all found by the exhaustive certificate search"),
    );
}

#[test]
fn criterion_09_shift_property() {
    use rand::prelude::*;
    let spf = SpfTable::new(18 * 2000).unwrap();
    let records = classify_range(2000, 4, &spf).unwrap();
    let certs: Vec<_> = records
        .iter()
        .filter_map(|r| match r.verdict {
            Verdict::TamePrime(c) => Some(c),
            _ => None,
        })
        .collect();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut ok = true;
    for cert in certs.choose_multiple(&mut rng, 100) {
        for c in 1..=3 {
            let shifted = shift_certificate(cert, c).unwrap();
            let t = certificate_to_triple(&shifted).unwrap();
            ok &= verify_decomposition(shifted.n(), &t);
        }
    }
    report(
        "9 (certificate shift property)",
        ok,
        "100 sampled certificates shifted by 1..3 all re-verify",
    );
}

#[test]
fn criterion_10_full_solver_sweep() {
    let t0 = Instant::now();
    let mut wild_seen = HashSet::new();
    let mut ok = true;
    for n in 3..=20000u64 {
        match solve(n) {
            Ok(d) => {
                if !verify_decomposition(n, &d.triple) {
                    ok = false;
                    eprintln!("bad triple for n = {n}");
                }
                if d.steps
                    == vec![erdos_straus::solver::Rule::Exhaustive]
                {
                    wild_seen.insert(n);
                }
            }
            Err(e) => {
                ok = false;
                eprintln!("n = {n}: {e}");
            }
        }
    }
    let elapsed = t0.elapsed();
    ok &= elapsed.as_secs() < 60;
    report(
        "10 (full solver sweep 3..=20000)",
        ok,
        &format!(
            "all verified in {elapsed:.2?}; {} wild primes took the direct search",
            wild_seen.len()
        ),
    );
}
