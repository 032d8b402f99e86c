//! Segmented sieve of Eratosthenes.

use crate::error::{Error, Result};

/// Largest bound accepted by [`prime_sieve`].
pub const SIEVE_MAX: u64 = 100_000_000;

const SEGMENT: u64 = 1 << 18;

fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Primes in `lo..=hi`, ascending.
pub fn primes_in_range(lo: u64, hi: u64) -> Result<Vec<u64>> {
    if hi > SIEVE_MAX {
        return Err(Error::InvalidArgument(format!(
            "sieve bound {hi} exceeds {SIEVE_MAX}"
        )));
    }
    let lo = lo.max(2);
    if hi < lo {
        return Ok(Vec::new());
    }
    let base = small_primes(hi.isqrt());
    let mut out = Vec::new();
    let mut seg = vec![false; SEGMENT as usize];
    let mut start = lo;
    while start <= hi {
        let end = (start + SEGMENT - 1).min(hi);
        let len = (end - start + 1) as usize;
        seg[..len].fill(false);
        for &q in &base {
            if q * q > end {
                break;
            }
            let mut m = (start.div_ceil(q) * q).max(q * q);
            while m <= end {
                seg[(m - start) as usize] = true;
                m += q;
            }
        }
        out.extend(
            seg[..len]
                .iter()
                .enumerate()
                .filter(|(_, &c)| !c)
                .map(|(i, _)| start + i as u64),
        );
        start = end + 1;
    }
    Ok(out)
}

/// All primes `≤ bound`.
pub fn prime_sieve(bound: u64) -> Result<Vec<u64>> {
    primes_in_range(2, bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(prime_sieve(10).unwrap(), vec![2, 3, 5, 7]);
        assert!(prime_sieve(1).unwrap().is_empty());
        assert_eq!(prime_sieve(2).unwrap(), vec![2]);
        assert!(prime_sieve(SIEVE_MAX + 1).is_err());
    }

    #[test]
    fn segments_agree_with_simple_sieve() {
        let simple = small_primes(700_000);
        assert_eq!(prime_sieve(700_000).unwrap(), simple);
        let mid = primes_in_range(262_100, 262_200).unwrap();
        let expected: Vec<u64> = simple
            .into_iter()
            .filter(|&p| (262_100..=262_200).contains(&p))
            .collect();
        assert_eq!(mid, expected);
    }

    #[test]
    fn pi_of_a_million() {
        assert_eq!(prime_sieve(1_000_000).unwrap().len(), 78_498);
    }
}
