//! Sets of primes, possibly cofinite, and the arithmetic of `ρ`-parts.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation as `(p, exponent)` pairs in increasing order of `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
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

/// The primes dividing `n`, i.e. `π(n)`.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime_power(n: u64) -> bool {
    factorize(n).len() == 1
}

/// The largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// A set of primes. When `cofinite` is set the set is all primes except `primes`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeSet {
    primes: BTreeSet<u64>,
    cofinite: bool,
}

impl PrimeSet {
    pub fn empty() -> Self {
        PrimeSet {
            primes: BTreeSet::new(),
            cofinite: false,
        }
    }

    /// Every prime.
    pub fn all() -> Self {
        PrimeSet {
            primes: BTreeSet::new(),
            cofinite: true,
        }
    }

    pub fn finite<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self> {
        Ok(PrimeSet {
            primes: checked(primes)?,
            cofinite: false,
        })
    }

    /// All primes except the given ones.
    pub fn cofinite<I: IntoIterator<Item = u64>>(excluded: I) -> Result<Self> {
        Ok(PrimeSet {
            primes: checked(excluded)?,
            cofinite: true,
        })
    }

    /// Finite set from a literal list.
    ///
    /// Panics if an entry is not prime.
    pub fn of(primes: &[u64]) -> Self {
        Self::finite(primes.iter().copied()).expect("prime literal")
    }

    /// `ℙ ∖ excluded` from a literal list. Panics if an entry is not prime.
    pub fn all_but(excluded: &[u64]) -> Self {
        Self::cofinite(excluded.iter().copied()).expect("prime literal")
    }

    pub fn is_cofinite(&self) -> bool {
        self.cofinite
    }

    /// The finite list stored: members when finite, excluded primes when cofinite.
    pub fn listed(&self) -> &BTreeSet<u64> {
        &self.primes
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.contains(&p) != self.cofinite
    }

    pub fn complement(&self) -> Self {
        PrimeSet {
            primes: self.primes.clone(),
            cofinite: !self.cofinite,
        }
    }

    /// Whether the set has at least two primes. Cofinite sets always do.
    pub fn has_at_least_two(&self) -> bool {
        self.cofinite || self.primes.len() >= 2
    }

    /// `π ∩ primes` as a finite set.
    pub fn restrict(&self, primes: &[u64]) -> PrimeSet {
        PrimeSet {
            primes: primes.iter().copied().filter(|&p| self.contains(p)).collect(),
            cofinite: false,
        }
    }

    /// Members among `primes`, in the order given.
    pub fn members_of(&self, primes: &[u64]) -> Vec<u64> {
        primes.iter().copied().filter(|&p| self.contains(p)).collect()
    }

    /// Whether every prime divisor of `n` lies in the set.
    pub fn is_number(&self, n: u64) -> bool {
        prime_divisors(n).into_iter().all(|p| self.contains(p))
    }

    /// The largest divisor of `n` all of whose prime divisors lie in the set.
    pub fn part_of(&self, n: u64) -> u64 {
        factorize(n)
            .into_iter()
            .filter(|&(p, _)| self.contains(p))
            .map(|(p, e)| p.pow(e))
            .product()
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        match (self.cofinite, other.cofinite) {
            (false, false) => PrimeSet {
                primes: self.primes.union(&other.primes).copied().collect(),
                cofinite: false,
            },
            (true, true) => PrimeSet {
                primes: self.primes.intersection(&other.primes).copied().collect(),
                cofinite: true,
            },
            (true, false) => PrimeSet {
                primes: self.primes.difference(&other.primes).copied().collect(),
                cofinite: true,
            },
            (false, true) => other.union(self),
        }
    }

    pub fn with(&self, p: u64) -> PrimeSet {
        self.union(&PrimeSet::of(&[p]))
    }

    pub fn is_subset_of(&self, other: &PrimeSet) -> bool {
        match (self.cofinite, other.cofinite) {
            (false, _) => self.primes.iter().all(|&p| other.contains(p)),
            (true, true) => other.primes.iter().all(|p| self.primes.contains(p)),
            (true, false) => false,
        }
    }
}

fn checked<I: IntoIterator<Item = u64>>(primes: I) -> Result<BTreeSet<u64>> {
    let set: BTreeSet<u64> = primes.into_iter().collect();
    match set.iter().find(|&&p| !is_prime(p)) {
        Some(bad) => Err(Error::InvalidPrimeSet(format!("{bad} is not prime"))),
        None => Ok(set),
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = self
            .primes
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        if self.cofinite {
            if self.primes.is_empty() {
                write!(f, "P")
            } else {
                write!(f, "P-{{{list}}}")
            }
        } else {
            write!(f, "{{{list}}}")
        }
    }
}

/// The π-sweep for a group order: every subset `S` of `π(order)` together with `ℙ ∖ S`.
pub fn pi_sweep(order: u64) -> Vec<PrimeSet> {
    let primes = prime_divisors(order);
    let mut out = Vec::with_capacity(2 << primes.len());
    for mask in 0u32..(1 << primes.len()) {
        let subset: BTreeSet<u64> = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        out.push(PrimeSet {
            primes: subset.clone(),
            cofinite: false,
        });
        out.push(PrimeSet {
            primes: subset,
            cofinite: true,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parts() {
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(PrimeSet::of(&[2, 3]).part_of(60), 12);
        assert_eq!(PrimeSet::all_but(&[2, 3, 5]).part_of(60), 1);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert!(is_prime_power(8) && !is_prime_power(6) && !is_prime_power(1));
    }

    #[test]
    fn cofinite_membership() {
        let pi = PrimeSet::all_but(&[2, 3, 5]);
        assert!(!pi.contains(2) && pi.contains(7));
        assert!(pi.has_at_least_two());
        assert_eq!(pi.complement(), PrimeSet::of(&[2, 3, 5]));
        assert_eq!(pi.to_string(), "P-{2,3,5}");
        assert!(PrimeSet::of(&[7]).is_subset_of(&pi));
        assert!(!pi.is_subset_of(&PrimeSet::of(&[7])));
    }

    #[test]
    fn rejects_composites() {
        assert!(PrimeSet::finite([2, 4]).is_err());
    }

    #[test]
    fn sweep_size() {
        assert_eq!(pi_sweep(60).len(), 16);
        assert_eq!(pi_sweep(1), vec![PrimeSet::empty(), PrimeSet::all()]);
    }
}
