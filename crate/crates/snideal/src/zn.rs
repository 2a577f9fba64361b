//! Arithmetic fast path for classifying Z_n against a set of prime
//! cofactors, plus the factoring helpers it needs.
//!
//! With k the number of distinct primes of n and m the number of chosen
//! primes P, the classification is purely arithmetic: if m = k there are
//! no qualifying ideals; if m = k-1 every ideal disjoint from S qualifies;
//! if m <= k-2 (forcing k >= 3) there are again none. An ideal <d> is
//! disjoint from the closure of P exactly when d has a prime factor
//! outside P. The brute-force scanner cross-checks all of this.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::gcd;

pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ZnRegime {
    #[serde(rename = "NONE")]
    None,
    #[serde(rename = "ALL_DISJOINT")]
    AllDisjoint,
}

impl std::fmt::Display for ZnRegime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ZnRegime::None => write!(f, "NONE"),
            ZnRegime::AllDisjoint => write!(f, "ALL_DISJOINT"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ZnClassification {
    pub n: u64,
    pub cofactor_primes: Vec<u64>,
    pub distinct_primes: Vec<u64>,
    pub missing_primes: Vec<u64>,
    pub regime: ZnRegime,
    /// Generators (d mod n, so the zero ideal reads 0) of the qualifying
    /// ideals, ascending; empty under the NONE regime.
    pub generators: Vec<u64>,
}

/// Classifies Z_n relative to S = multiplicative closure of P, without
/// touching ring arithmetic.
pub fn zn_fast_classify(n: u64, cofactor_primes: &[u64]) -> Result<ZnClassification> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("modulus {n} must be at least 2")));
    }
    if cofactor_primes.is_empty() {
        return Err(Error::InvalidSpec("cofactor prime set is empty".into()));
    }
    let mut p_set: Vec<u64> = cofactor_primes.to_vec();
    p_set.sort_unstable();
    p_set.dedup();
    for &p in &p_set {
        if !is_prime(p) || n % p != 0 {
            return Err(Error::BadCofactor(p, n));
        }
    }
    let distinct_primes: Vec<u64> = factorize(n).into_iter().map(|(p, _)| p).collect();
    let missing_primes: Vec<u64> =
        distinct_primes.iter().copied().filter(|p| !p_set.contains(p)).collect();
    let regime = if missing_primes.len() == 1 { ZnRegime::AllDisjoint } else { ZnRegime::None };
    let mut generators = Vec::new();
    if regime == ZnRegime::AllDisjoint {
        for d in (1..=n).filter(|d| n % d == 0) {
            let mut rest = d;
            for &p in &p_set {
                while rest % p == 0 {
                    rest /= p;
                }
            }
            // rest > 1 means d keeps a prime outside P, so <d> misses S
            if rest > 1 {
                generators.push(d % n);
            }
        }
        generators.sort_unstable();
    }
    Ok(ZnClassification { n, cofactor_primes: p_set, distinct_primes, missing_primes, regime, generators })
}

fn validated_primes(n: u64, cofactor_primes: &[u64]) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("modulus {n} must be at least 2")));
    }
    if cofactor_primes.is_empty() {
        return Err(Error::InvalidSpec("cofactor prime set is empty".into()));
    }
    let mut p_set: Vec<u64> = cofactor_primes.to_vec();
    p_set.sort_unstable();
    p_set.dedup();
    for &p in &p_set {
        if !is_prime(p) || n % p != 0 {
            return Err(Error::BadCofactor(p, n));
        }
    }
    Ok(p_set)
}

/// Definitional scanner, kept independent of [`zn_fast_classify`]: builds
/// S as the monoid closure of P mod n, then for each divisor ideal <d>
/// disjoint from S asks whether some s in S defeats every violation.
///
/// The scan stays arithmetic. With g = gcd(a, d), the products falling in
/// <d> against a are exactly the multiples of d/g, s*a is nilpotent iff
/// rad/gcd(s, rad) divides a, and s*b lands in <d> for all such b iff
/// d/gcd(s, d) divides d/g. A pair (a, b) breaking s therefore exists iff
/// some divisor g < n of d has rad/gcd(s, rad) not dividing g and
/// d/gcd(s, d) not dividing d/g (take a = g, b = d/g).
///
/// Returns generators (d mod n, ascending) of the qualifying ideals.
pub fn zn_brute_force_sn(n: u64, cofactor_primes: &[u64]) -> Result<Vec<u64>> {
    let p_set = validated_primes(n, cofactor_primes)?;
    let rad: u64 = factorize(n).into_iter().map(|(p, _)| p).product();
    let mut in_s = vec![false; n as usize];
    let mut s_list: Vec<u64> = vec![1 % n];
    in_s[(1 % n) as usize] = true;
    let mut i = 0;
    while i < s_list.len() {
        let x = s_list[i];
        i += 1;
        for &p in &p_set {
            let y = x * p % n;
            if !in_s[y as usize] {
                in_s[y as usize] = true;
                s_list.push(y);
            }
        }
    }
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let mut out = Vec::new();
    'next_d: for &d in &divisors {
        if s_list.iter().any(|&s| s % d == 0) {
            continue; // <d> meets S
        }
        let divs_d: Vec<u64> = divisors.iter().copied().filter(|&g| d % g == 0 && g < n).collect();
        for &s in &s_list {
            let r_s = rad / gcd(s, rad);
            let d_s = d / gcd(s, d);
            let defeated = divs_d.iter().any(|&g| g % r_s != 0 && (d / g) % d_s != 0);
            if !defeated {
                out.push(d % n);
                continue 'next_d;
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::all_s_n_ideals;
    use crate::ideal::MultSet;
    use crate::ring::{Caps, FiniteRing};

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(1), []);
        assert_eq!(factorize(12), [(2, 2), (3, 1)]);
        assert_eq!(factorize(30), [(2, 1), (3, 1), (5, 1)]);
        assert_eq!(factorize(97), [(97, 1)]);
        assert!(is_prime(2) && is_prime(97) && !is_prime(1) && !is_prime(91));
    }

    #[test]
    fn frozen_classifications() {
        let c = zn_fast_classify(12, &[3]).unwrap();
        assert_eq!(c.regime, ZnRegime::AllDisjoint);
        assert_eq!(c.generators, [0, 2, 4, 6]);
        assert_eq!(c.missing_primes, [2]);

        assert_eq!(zn_fast_classify(8, &[2]).unwrap().regime, ZnRegime::None);
        assert_eq!(zn_fast_classify(12, &[2, 3]).unwrap().regime, ZnRegime::None);
        assert_eq!(zn_fast_classify(30, &[2]).unwrap().regime, ZnRegime::None);

        let c30 = zn_fast_classify(30, &[2, 3]).unwrap();
        assert_eq!(c30.regime, ZnRegime::AllDisjoint);
        assert_eq!(c30.missing_primes, [5]);
        // divisors keeping the factor 5
        assert_eq!(c30.generators, [0, 5, 10, 15]);
    }

    #[test]
    fn rejects_bad_cofactors() {
        assert!(matches!(zn_fast_classify(12, &[5]), Err(Error::BadCofactor(5, 12))));
        assert!(matches!(zn_fast_classify(12, &[4]), Err(Error::BadCofactor(4, 12))));
        assert!(zn_fast_classify(12, &[]).is_err());
        assert!(zn_fast_classify(1, &[2]).is_err());
        assert!(matches!(zn_brute_force_sn(12, &[5]), Err(Error::BadCofactor(5, 12))));
        assert!(zn_brute_force_sn(12, &[]).is_err());
    }

    #[test]
    fn scanner_frozen_and_large_n() {
        assert_eq!(zn_brute_force_sn(12, &[3]).unwrap(), [0, 2, 4, 6]);
        assert!(zn_brute_force_sn(8, &[2]).unwrap().is_empty());
        assert!(zn_brute_force_sn(30, &[2]).unwrap().is_empty());
        assert_eq!(zn_brute_force_sn(30, &[2, 3]).unwrap(), [0, 5, 10, 15]);
        // two-prime moduli past the ring-backed range
        for (n, p) in [(2000u64, 2u64), (2000, 5), (1998, 2), (1875, 3)] {
            let fast = zn_fast_classify(n, &[p]).unwrap();
            assert_eq!(zn_brute_force_sn(n, &[p]).unwrap(), fast.generators, "Z_{n} p={p}");
        }
        // four primes: nothing qualifies unless exactly one is left out
        assert!(zn_brute_force_sn(1980, &[2]).unwrap().is_empty());
        assert!(zn_brute_force_sn(1980, &[2, 3, 5, 11]).unwrap().is_empty());
        let two = zn_fast_classify(1980, &[2, 5, 11]).unwrap();
        assert_eq!(two.regime, ZnRegime::AllDisjoint);
        assert_eq!(zn_brute_force_sn(1980, &[2, 5, 11]).unwrap(), two.generators);
    }

    /// The arithmetic path must agree with the definitional scanner for
    /// every n and every nonempty prime subset.
    #[test]
    fn agrees_with_brute_force_up_to_150() {
        let caps = Caps::default();
        for n in 2u64..=150 {
            let primes: Vec<u64> = factorize(n).into_iter().map(|(p, _)| p).collect();
            let ring = FiniteRing::zn(n, &caps).unwrap();
            for mask in 1u32..(1 << primes.len()) {
                let p_set: Vec<u64> = primes
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &p)| p)
                    .collect();
                let fast = zn_fast_classify(n, &p_set).unwrap();
                let seed: Vec<usize> = p_set.iter().map(|&p| (p % n) as usize).collect();
                let s = MultSet::close(&ring, &seed).unwrap();
                let brute = all_s_n_ideals(&ring, &s, &caps).unwrap();
                let brute_gens: Vec<u64> = brute
                    .iter()
                    .map(|i| i.elements().iter().nth(1).unwrap_or(n as usize) as u64 % n)
                    .collect();
                let mut expect = fast.generators.clone();
                expect.sort_unstable_by_key(|&g| if g == 0 { 1 } else { n / g });
                assert_eq!(brute_gens, expect, "Z_{n} P={p_set:?}");
                let mut ring_gens = brute_gens.clone();
                ring_gens.sort_unstable();
                assert_eq!(
                    zn_brute_force_sn(n, &p_set).unwrap(),
                    ring_gens,
                    "arithmetic scanner Z_{n} P={p_set:?}"
                );
                match fast.regime {
                    ZnRegime::None => assert!(brute.is_empty(), "Z_{n} P={p_set:?}"),
                    ZnRegime::AllDisjoint => {
                        assert!(!brute.is_empty() || fast.generators.is_empty())
                    }
                }
            }
        }
    }
}
