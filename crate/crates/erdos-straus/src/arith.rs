//! Exact integer primitives: smallest-prime-factor sieve, deterministic
//! 64-bit primality, divisor enumeration, and the ground-truth identity
//! check `4/n = 1/n1 + 1/n2 + 1/n3` that everything else defers to.

use num_bigint::BigUint;

use crate::error::Error;

/// Smallest-prime-factor table for `2..=limit`.
///
/// Immutable after construction; shared read-only across workers.
pub struct SpfTable {
    limit: u64,
    spf: Vec<u32>,
}

impl SpfTable {
    /// Linear sieve: `spf[i]` is the least prime dividing `i`, so
    /// `spf[p] == p` exactly for primes.
    pub fn new(limit: u64) -> Result<Self, Error> {
        if limit < 2 {
            return Err(Error::Domain(format!("sieve limit {limit} below 2")));
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let least = spf[i];
            for &p in &primes {
                if p > least || (i as u64) * (p as u64) > limit {
                    break;
                }
                spf[i * p as usize] = p;
            }
        }
        Ok(SpfTable { limit, spf })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest prime factor of `x`, for `2 <= x <= limit`.
    pub fn spf(&self, x: u64) -> Result<u64, Error> {
        if x < 2 || x > self.limit {
            return Err(Error::Range(format!(
                "{x} outside sieve range 2..={}",
                self.limit
            )));
        }
        Ok(self.spf[x as usize] as u64)
    }

    pub fn is_prime(&self, x: u64) -> Result<bool, Error> {
        Ok(self.spf(x)? == x)
    }

    /// Prime factorization of `g` as (prime, exponent) pairs, ascending.
    pub fn factorize(&self, g: u64) -> Result<Vec<(u64, u32)>, Error> {
        if g < 2 || g > self.limit {
            return Err(Error::Range(format!(
                "{g} outside sieve range 2..={}",
                self.limit
            )));
        }
        let mut out: Vec<(u64, u32)> = Vec::new();
        let mut x = g as usize;
        while x > 1 {
            let p = self.spf[x] as u64;
            let mut e = 0u32;
            while x as u64 % p == 0 {
                x /= p as usize;
                e += 1;
            }
            out.push((p, e));
        }
        Ok(out)
    }
}

/// All divisors of `g`, ascending.
pub fn divisors_of(g: u64, spf: &SpfTable) -> Result<Vec<u64>, Error> {
    if g == 1 {
        return Ok(vec![1]);
    }
    let factors = spf.factorize(g)?;
    let mut divs: Vec<u64> = vec![1];
    for (p, e) in factors {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin over the full 64-bit range.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known
/// to be exact for all n < 3.3 * 10^24, so there are no probabilistic
/// false positives anywhere in u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A decomposition 4/n = 1/n1 + 1/n2 + 1/n3 in canonical ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct SolutionTriple {
    pub n: u64,
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
}

impl SolutionTriple {
    /// Canonicalizes component order; rejects zero components.
    pub fn new(n: u64, a: u64, b: u64, c: u64) -> Result<Self, Error> {
        if n == 0 || a == 0 || b == 0 || c == 0 {
            return Err(Error::Domain("zero component in solution triple".into()));
        }
        let mut d = [a, b, c];
        d.sort_unstable();
        Ok(SolutionTriple {
            n,
            n1: d[0],
            n2: d[1],
            n3: d[2],
        })
    }

    /// Scales every denominator by `p` (Eq-style multiplicativity: a
    /// solution for n yields one for p*n).
    pub fn scaled(&self, p: u64) -> SolutionTriple {
        SolutionTriple {
            n: self.n * p,
            n1: self.n1 * p,
            n2: self.n2 * p,
            n3: self.n3 * p,
        }
    }
}

/// Exact identity check: 4*n1*n2*n3 == n*(n1*n2 + n1*n3 + n2*n3).
///
/// Evaluated in 128-bit arithmetic; if any intermediate would overflow
/// (components beyond ~2^63) the check routes through arbitrary
/// precision, so the answer is exact for all inputs.
pub fn verify_decomposition(n: u64, t: &SolutionTriple) -> bool {
    let lhs = (4u128)
        .checked_mul(t.n1 as u128)
        .and_then(|x| x.checked_mul(t.n2 as u128))
        .and_then(|x| x.checked_mul(t.n3 as u128));
    let rhs = {
        let ab = t.n1 as u128 * t.n2 as u128;
        let ac = t.n1 as u128 * t.n3 as u128;
        let bc = t.n2 as u128 * t.n3 as u128;
        ab.checked_add(ac)
            .and_then(|x| x.checked_add(bc))
            .and_then(|x| x.checked_mul(n as u128))
    };
    match (lhs, rhs) {
        (Some(l), Some(r)) => l == r,
        _ => {
            let big = |x: u64| BigUint::from(x);
            let lhs = big(4) * big(t.n1) * big(t.n2) * big(t.n3);
            let rhs = big(n) * (big(t.n1) * big(t.n2) + big(t.n1) * big(t.n3) + big(t.n2) * big(t.n3));
            lhs == rhs
        }
    }
}

/// Identity check on raw components; zero components are a domain error.
pub fn verify_raw(n: u64, n1: u64, n2: u64, n3: u64) -> Result<bool, Error> {
    let t = SolutionTriple::new(n, n1, n2, n3)?;
    Ok(verify_decomposition(n, &t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spf_small_table() {
        let t = SpfTable::new(10).unwrap();
        let expect = [2u64, 3, 2, 5, 2, 7, 2, 3, 2];
        for (i, &e) in (2..=10).zip(expect.iter()) {
            assert_eq!(t.spf(i).unwrap(), e, "spf[{i}]");
        }
    }

    #[test]
    fn spf_known_values() {
        let t = SpfTable::new(540_000).unwrap();
        assert_eq!(t.spf(49).unwrap(), 7);
        assert_eq!(t.spf(540_000).unwrap(), 2);
    }

    #[test]
    fn spf_rejects_tiny_limit() {
        assert!(SpfTable::new(1).is_err());
    }

    #[test]
    fn spf_product_recovers_g() {
        let t = SpfTable::new(100_000).unwrap();
        for g in 2..=100_000u64 {
            let prod: u64 = t
                .factorize(g)
                .unwrap()
                .into_iter()
                .map(|(p, e)| p.pow(e))
                .product();
            assert_eq!(prod, g);
        }
    }

    #[test]
    fn divisors_examples() {
        let t = SpfTable::new(100).unwrap();
        assert_eq!(divisors_of(20, &t).unwrap(), vec![1, 2, 4, 5, 10, 20]);
        assert_eq!(divisors_of(19, &t).unwrap(), vec![1, 19]);
        assert_eq!(divisors_of(28, &t).unwrap(), vec![1, 2, 4, 7, 14, 28]);
        assert!(divisors_of(101, &t).is_err());
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(97));
        assert!(!is_prime(121));
        assert!(is_prime(31_249)); // 24*1302 + 1
        assert!(!is_prime(1));
        assert!(is_prime(2));
    }

    #[test]
    fn primality_agrees_with_sieve() {
        let t = SpfTable::new(1_000_000).unwrap();
        for n in 2..=1_000_000u64 {
            assert_eq!(is_prime(n), t.is_prime(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn verify_known_triples() {
        assert!(verify_raw(6, 3, 4, 12).unwrap());
        assert!(verify_raw(97, 28, 194, 2716).unwrap());
        assert!(!verify_raw(97, 28, 194, 2715).unwrap());
        assert!(verify_raw(0, 1, 1, 1).is_err());
        assert!(verify_raw(6, 0, 4, 12).is_err());
    }

    #[test]
    fn verify_big_inputs_route_through_bigint() {
        // Scale (3, 4, 12) for n = 6 by p large enough that the
        // cross-multiplied product 576 p^3 exceeds u128 while every
        // component still fits u64.
        let p = 1u64 << 60;
        let t = SolutionTriple::new(6, 3, 4, 12).unwrap().scaled(p);
        assert!(verify_decomposition(6 * p, &t));
        let bad = SolutionTriple::new(6 * p, 3 * p, 4 * p, 12 * p + 1).unwrap();
        assert!(!verify_decomposition(6 * p, &bad));
    }
}
