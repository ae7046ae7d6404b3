//! Tame-solution search and wild-prime certification for `n = 24m + 1`.
//!
//! A *tame certificate* for prime `n = 24m + 1` is `(m, k, I1, I2)` with
//! `1 <= k <= 12m`, `I1 + I2 = 4k - 1`, and both summands dividing
//! `g = 6m + k`.  It yields the decomposition
//!
//! ```text
//! 4/n = 1/g + I1/(g n) + I2/(g n) = 1/g + 1/(g n / I1) + 1/(g n / I2)
//! ```
//!
//! and the search for one is a divisor-pair scan over the window
//! `k = 1 .. 12m`.  A prime with no certificate in the full window is
//! *wild*.  Composite `24m + 1` are out of scope here (the divisor
//! reduction is only valid for prime n); the full solver handles them by
//! multiplicative scaling.

use crate::arith::{divisors_of, is_prime, verify_decomposition, SolutionTriple, SpfTable};
use crate::error::Error;

/// Witness that `n = 24m+1` has a tame solution: `im1 + im2 = 4k - 1`
/// and both divide `6m + k`.  Normalized `im1 >= im2` so the derived
/// triple comes out ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct TameCertificate {
    pub m: u64,
    pub k: u64,
    pub im1: u64,
    pub im2: u64,
}

impl TameCertificate {
    /// Normalizing constructor: summand roles may be given in either
    /// order.
    pub fn new(m: u64, k: u64, a: u64, b: u64) -> Self {
        TameCertificate {
            m,
            k,
            im1: a.max(b),
            im2: a.min(b),
        }
    }

    pub fn n(&self) -> u64 {
        24 * self.m + 1
    }

    pub fn g(&self) -> u64 {
        6 * self.m + self.k
    }
}

/// Per-m verdict of the tame scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Verdict {
    Composite,
    TamePrime(TameCertificate),
    WildPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ClassificationRecord {
    pub m: u64,
    pub n: u64,
    pub verdict: Verdict,
    /// How far the k-window was scanned (12m on a wild verdict, the
    /// witnessing k on early exit).
    pub search_k_max: u64,
}

/// Expands a certificate into the decomposition it witnesses, verifying
/// the exact identity on the way out.
pub fn certificate_to_triple(cert: &TameCertificate) -> Result<SolutionTriple, Error> {
    let n = cert.n();
    let g = cert.g();
    let gn = g as u128 * n as u128;
    if cert.im1 == 0 || cert.im2 == 0 || gn % cert.im1 as u128 != 0 || gn % cert.im2 as u128 != 0 {
        return Err(Error::Domain(format!(
            "summands ({}, {}) do not divide {g}*{n}",
            cert.im1, cert.im2
        )));
    }
    let n2 = (gn / cert.im1 as u128) as u64;
    let n3 = (gn / cert.im2 as u128) as u64;
    let t = SolutionTriple::new(n, g, n2, n3)?;
    if !verify_decomposition(n, &t) {
        return Err(Error::BadDecomposition {
            n,
            n1: t.n1,
            n2: t.n2,
            n3: t.n3,
        });
    }
    Ok(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    First,
    All,
}

/// Divisor-pair scan for tame certificates of prime `n = 24m + 1`.
///
/// For each `k` in the window, `g = 6m + k` and the summand budget is
/// `d = 4k - 1`; every unordered divisor pair of `g` summing to `d`
/// yields a certificate.  `First` returns the earliest in (k, im2)
/// order, which the inner ascending-divisor loop produces naturally.
pub fn find_tame(m: u64, mode: SearchMode, spf: &SpfTable) -> Result<Vec<TameCertificate>, Error> {
    let n = 24 * m + 1;
    if !is_prime(n) {
        return Err(Error::Domain(format!(
            "n = {n} (m = {m}) is composite; tame search requires prime n"
        )));
    }
    if spf.limit() < 18 * m {
        return Err(Error::Range(format!(
            "sieve limit {} below 18m = {}",
            spf.limit(),
            18 * m
        )));
    }
    let mut out = Vec::new();
    for k in 1..=12 * m {
        let g = 6 * m + k;
        let d = 4 * k - 1;
        let divs = divisors_of(g, spf)?;
        for &d2 in &divs {
            // unordered pairs once: small summand first
            if 2 * d2 > d {
                break;
            }
            let d1 = d - d2;
            if d1 <= g && g % d1 == 0 {
                out.push(TameCertificate::new(m, k, d1, d2));
                if mode == SearchMode::First {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

/// Classifies a single m: composite n, tame prime (with first
/// certificate), or wild prime.  Wildness requires exhausting the whole
/// window; tame verdicts exit at the witnessing k.
pub fn classify(m: u64, spf: &SpfTable) -> Result<ClassificationRecord, Error> {
    let n = 24 * m + 1;
    if !is_prime(n) {
        return Ok(ClassificationRecord {
            m,
            n,
            verdict: Verdict::Composite,
            search_k_max: 0,
        });
    }
    let certs = find_tame(m, SearchMode::First, spf)?;
    Ok(match certs.first() {
        Some(&c) => ClassificationRecord {
            m,
            n,
            verdict: Verdict::TamePrime(c),
            search_k_max: c.k,
        },
        None => ClassificationRecord {
            m,
            n,
            verdict: Verdict::WildPrime,
            search_k_max: 12 * m,
        },
    })
}

/// All wild m up to `m_max`, ascending.
pub fn wild_primes(m_max: u64, spf: &SpfTable) -> Result<Vec<u64>, Error> {
    let mut out = Vec::new();
    for m in 1..=m_max {
        if let Verdict::WildPrime = classify(m, spf)?.verdict {
            out.push(m);
        }
    }
    Ok(out)
}

/// The lcm-shift: from one certificate, `m' = m + c * lcm(im1, im2)`
/// carries the same `(k, im1, im2)` and still satisfies the
/// decomposition identity for `n' = 24m' + 1` — whether or not `n'` is
/// prime.  One certificate thus solves a whole arithmetic progression.
pub fn shift_certificate(cert: &TameCertificate, c: i64) -> Result<TameCertificate, Error> {
    let g = gcd(cert.im1, cert.im2);
    let l = cert.im1 / g * cert.im2;
    let shifted = cert.m as i128 + c as i128 * l as i128;
    if shifted < 1 {
        return Err(Error::Domain(format!(
            "shifted m = {shifted} is not positive"
        )));
    }
    Ok(TameCertificate {
        m: shifted as u64,
        ..*cert
    })
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spf() -> SpfTable {
        SpfTable::new(40_000).unwrap()
    }

    #[test]
    fn triple_from_certificate() {
        let t = certificate_to_triple(&TameCertificate::new(3, 2, 5, 2)).unwrap();
        assert_eq!((t.n1, t.n2, t.n3), (20, 292, 730));
        assert_eq!(t.n, 73);

        let t = certificate_to_triple(&TameCertificate::new(4, 4, 14, 1)).unwrap();
        assert_eq!((t.n1, t.n2, t.n3), (28, 194, 2716));
    }

    #[test]
    fn large_scale_certificate() {
        // m = 1302: k = 32, summands 74 and 53.
        let t = certificate_to_triple(&TameCertificate::new(1302, 32, 74, 53)).unwrap();
        assert_eq!((t.n, t.n1, t.n2, t.n3), (31_249, 7844, 3_312_394, 4_624_852));
    }

    #[test]
    fn invalid_certificate_rejected() {
        assert!(certificate_to_triple(&TameCertificate::new(3, 2, 6, 1)).is_err());
    }

    #[test]
    fn first_certificates() {
        let s = spf();
        assert_eq!(
            find_tame(3, SearchMode::First, &s).unwrap(),
            vec![TameCertificate::new(3, 2, 5, 2)]
        );
        assert_eq!(
            find_tame(4, SearchMode::First, &s).unwrap(),
            vec![TameCertificate::new(4, 4, 14, 1)]
        );
        assert!(find_tame(1, SearchMode::First, &s).is_err()); // 25 composite
    }

    #[test]
    fn all_certificates_are_valid_and_unique() {
        let s = spf();
        for m in [3u64, 4, 8, 10, 13, 14, 18, 19] {
            let all = find_tame(m, SearchMode::All, &s).unwrap();
            assert!(!all.is_empty());
            let mut seen = std::collections::HashSet::new();
            for c in &all {
                assert_eq!(c.im1 + c.im2, 4 * c.k - 1);
                assert_eq!(c.g() % c.im1, 0);
                assert_eq!(c.g() % c.im2, 0);
                assert_eq!(gcd(c.im1, c.im2), 1, "prime n forces coprime summands");
                assert!(seen.insert(*c));
                certificate_to_triple(c).unwrap();
            }
        }
    }

    #[test]
    fn classify_verdicts() {
        let s = spf();
        assert_eq!(classify(5, &s).unwrap().verdict, Verdict::Composite);
        assert_eq!(
            classify(4, &s).unwrap().verdict,
            Verdict::TamePrime(TameCertificate::new(4, 4, 14, 1))
        );
        assert_eq!(classify(17, &s).unwrap().verdict, Verdict::WildPrime);
        assert_eq!(classify(17, &s).unwrap().search_k_max, 12 * 17);
    }

    #[test]
    fn wild_list_small() {
        let s = SpfTable::new(18 * 1000).unwrap();
        assert_eq!(wild_primes(100, &s).unwrap(), vec![17, 24]);
    }

    #[test]
    fn shift_examples() {
        let c = TameCertificate::new(3, 2, 5, 2);
        let up = shift_certificate(&c, 1).unwrap();
        assert_eq!(up.m, 13);
        let t = certificate_to_triple(&up).unwrap();
        assert_eq!(t.n, 313);
        assert_eq!(t.n1, 6 * 13 + 2);
        assert_eq!(shift_certificate(&c, 0).unwrap(), c);
        assert!(shift_certificate(&c, -1).is_err());
    }

    /// Independent oracle: plain double loop over d1 in 1..4k-2 instead
    /// of divisor enumeration.  Must agree with find_tame exactly.
    #[test]
    fn oracle_agreement_small_m() {
        let s = SpfTable::new(18 * 120).unwrap();
        for m in 1..=120u64 {
            if !is_prime(24 * m + 1) {
                continue;
            }
            let mut oracle = Vec::new();
            for k in 1..=12 * m {
                let g = 6 * m + k;
                let d = 4 * k - 1;
                for d1 in 1..d {
                    let d2 = d - d1;
                    if d1 >= d2 && g % d1 == 0 && g % d2 == 0 {
                        oracle.push(TameCertificate::new(m, k, d1, d2));
                    }
                }
            }
            let mut fast = find_tame(m, SearchMode::All, &s).unwrap();
            fast.sort_by_key(|c| (c.k, c.im2));
            oracle.sort_by_key(|c| (c.k, c.im2));
            assert_eq!(fast, oracle, "m={m}");
        }
    }
}
