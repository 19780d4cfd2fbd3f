//! Ideals generated by the n products of d cyclically consecutive variables,
//! and their associated primes by direct combinatorial criterion.
//!
//! For a support tuple a_1 < … < a_s in 1..=n, extend cyclically by
//! a_{s+1} = a_1 + n and a_{s+2} = a_2 + n. The prime on those variables is
//! associated to the quotient exactly when, for every i = 1..s, the gap
//! a_{i+1} - a_i is at most d and the double gap a_{i+2} - a_i exceeds d.
//! The first family says every window of d consecutive vertices meets the
//! tuple (a transversal); the second forbids a removable member (minimality).
//! Tests equate the criterion's output with brute-force minimal transversals.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, PrimeSupport};
use crate::primes::PrimeList;

/// Default ceiling on n for the 2^n associated-prime enumeration.
pub const DEFAULT_ENUM_VARS: usize = 25;

/// Cycle length n and path length d with n > d >= 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleIdealSpec {
    n: usize,
    d: usize,
}

impl CycleIdealSpec {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if d < 2 || n <= d {
            return Err(Error::input(format!("requires n > d >= 2, got n={n}, d={d}")));
        }
        Ok(CycleIdealSpec { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The n squarefree degree-d generators x_i x_{i+1} … x_{i+d-1} with
    /// indices mod n. Distinct same-degree monomials, so already minimal.
    pub fn ideal(&self) -> MonomialIdeal {
        let gens: Vec<Monomial> = (0..self.n)
            .map(|start| {
                let mut exps = vec![0u32; self.n];
                for off in 0..self.d {
                    exps[(start + off) % self.n] = 1;
                }
                Monomial::new(exps)
            })
            .collect();
        MonomialIdeal::new(self.n, gens).expect("cycle generators are well formed")
    }

    /// The gap criterion on a strictly increasing tuple in 1..=n.
    pub fn is_assoc_prime(&self, tuple: &[usize]) -> Result<bool> {
        if tuple.is_empty() {
            return Err(Error::input("index tuple must be nonempty"));
        }
        if tuple.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input("index tuple must be strictly increasing"));
        }
        if tuple[0] < 1 || tuple[tuple.len() - 1] > self.n {
            return Err(Error::input(format!("indices must lie in 1..={}", self.n)));
        }
        let s = tuple.len();
        // Extended indices: b[s] wraps the first entry, b[s+1] the second.
        // For s = 1 the second wrap lands on a_1 + 2n.
        let mut b = tuple.to_vec();
        b.push(tuple[0] + self.n);
        b.push(b[1] + self.n);
        for i in 0..s {
            if b[i + 1] - b[i] > self.d || b[i + 2] - b[i] <= self.d {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All tuples passing the criterion, as a canonically ordered prime
    /// list. Scans 2^n subsets, refused above `limit` variables.
    pub fn assoc_primes_with_limit(&self, limit: usize) -> Result<PrimeList> {
        if self.n > limit || self.n >= u64::BITS as usize {
            return Err(Error::resource(format!(
                "enumeration scans 2^{} subsets, above the limit of 2^{limit}",
                self.n
            )));
        }
        let mut supports: Vec<Vec<usize>> = Vec::new();
        for mask in 1u64..1 << self.n {
            let tuple: Vec<usize> = (1..=self.n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
            if self.is_assoc_prime(&tuple)? {
                supports.push(tuple);
            }
        }
        supports.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let primes = supports
            .into_iter()
            .map(|vars| PrimeSupport::new(self.n, vars).expect("tuples are validated"))
            .collect();
        Ok(PrimeList::from_sorted(self.n, primes))
    }

    pub fn assoc_primes(&self) -> Result<PrimeList> {
        self.assoc_primes_with_limit(DEFAULT_ENUM_VARS)
    }

    /// Dimension of the quotient: n - ceil(n/d). The smallest transversal
    /// hits every d-window, needing ceil(n/d) vertices.
    pub fn dim(&self) -> usize {
        self.n - self.n.div_ceil(self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::e0_cycle;
    use crate::primes::{dim_profile, minimal_primes};
    use num_bigint::BigInt;

    fn spec(n: usize, d: usize) -> CycleIdealSpec {
        CycleIdealSpec::new(n, d).unwrap()
    }

    #[test]
    fn generator_construction() {
        let i = spec(3, 2).ideal();
        let expect = MonomialIdeal::new(
            3,
            vec![
                Monomial::new(vec![1, 1, 0]),
                Monomial::new(vec![0, 1, 1]),
                Monomial::new(vec![1, 0, 1]),
            ],
        )
        .unwrap();
        assert_eq!(i, expect);

        let i = spec(5, 3).ideal();
        let expect = MonomialIdeal::new(
            5,
            vec![
                Monomial::new(vec![1, 1, 1, 0, 0]),
                Monomial::new(vec![0, 1, 1, 1, 0]),
                Monomial::new(vec![0, 0, 1, 1, 1]),
                Monomial::new(vec![1, 0, 0, 1, 1]),
                Monomial::new(vec![1, 1, 0, 0, 1]),
            ],
        )
        .unwrap();
        assert_eq!(i, expect);

        for d in 2..=5 {
            for n in d + 1..=12 {
                let i = spec(n, d).ideal();
                assert_eq!(i.gens().len(), n);
                assert!(i.gens().iter().all(|g| g.is_squarefree() && g.degree() == d as u64));
            }
        }
        assert!(CycleIdealSpec::new(4, 4).is_err());
        assert!(CycleIdealSpec::new(3, 1).is_err());
    }

    #[test]
    fn criterion_spot_checks() {
        assert!(spec(5, 2).is_assoc_prime(&[1, 3, 5]).unwrap());
        assert!(spec(5, 2).is_assoc_prime(&[1, 2, 4]).unwrap());
        // 3 - 1 = 2 is not above d: vertex 2 is removable from the cover.
        assert!(!spec(6, 2).is_assoc_prime(&[1, 2, 3, 5]).unwrap());
        // A single vertex never covers every window when n > d.
        assert!(!spec(5, 2).is_assoc_prime(&[2]).unwrap());
        assert!(spec(6, 3).is_assoc_prime(&[1, 4]).unwrap());

        assert!(spec(5, 2).is_assoc_prime(&[]).is_err());
        assert!(spec(5, 2).is_assoc_prime(&[3, 2]).is_err());
        assert!(spec(5, 2).is_assoc_prime(&[0, 2]).is_err());
        assert!(spec(5, 2).is_assoc_prime(&[1, 6]).is_err());
    }

    #[test]
    fn enumeration_matches_transversals() {
        let list = spec(3, 2).assoc_primes().unwrap();
        let vars: Vec<&[usize]> = list.primes().iter().map(|p| p.vars()).collect();
        assert_eq!(vars, vec![&[1, 2][..], &[1, 3], &[2, 3]]);

        let list = spec(5, 2).assoc_primes().unwrap();
        assert_eq!(list.primes().len(), 5);
        assert!(list.primes().iter().all(|p| p.height() == 3));

        let list = spec(6, 3).assoc_primes().unwrap();
        assert!(list.primes().iter().any(|p| p.vars() == [1, 4]));

        for d in 2..=8 {
            for n in d + 1..=9 {
                let sp = spec(n, d);
                assert_eq!(
                    sp.assoc_primes().unwrap(),
                    minimal_primes(&sp.ideal()).unwrap(),
                    "n={n} d={d}"
                );
            }
        }
    }

    #[test]
    fn minimum_size_and_multiplicity() {
        for d in 2..=6 {
            for n in d + 1..=10 {
                let sp = spec(n, d);
                let list = sp.assoc_primes().unwrap();
                let want = n.div_ceil(d);
                assert_eq!(list.min_height(), want, "n={n} d={d}");
                // The evenly spaced witness always passes.
                let witness: Vec<usize> = (0..want).map(|i| 1 + i * d).collect();
                assert!(sp.is_assoc_prime(&witness).unwrap(), "witness for n={n} d={d}");
                let mu = list.primes().iter().filter(|p| p.height() == want).count();
                assert_eq!(BigInt::from(mu), e0_cycle(n as u64, d as u64).unwrap(), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn dimension_formula() {
        assert_eq!(spec(5, 2).dim(), 2);
        assert_eq!(spec(6, 3).dim(), 4);
        assert_eq!(spec(7, 2).dim(), 3);
        for d in 2..=6 {
            for n in d + 1..=10 {
                let sp = spec(n, d);
                assert_eq!(sp.dim(), dim_profile(&sp.ideal()).unwrap().d, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn colon_by_complement_recovers_each_prime() {
        for d in 2..=4 {
            for n in d + 1..=10 {
                let sp = spec(n, d);
                let ideal = sp.ideal();
                for p in sp.assoc_primes().unwrap().primes() {
                    let mut exps = vec![0u32; n];
                    for v in 1..=n {
                        if !p.vars().contains(&v) {
                            exps[v - 1] = 1;
                        }
                    }
                    let witness = Monomial::new(exps);
                    assert_eq!(
                        ideal.colon(&witness).unwrap(),
                        p.ideal(),
                        "n={n} d={d} prime {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_limit_guards() {
        let sp = spec(30, 2);
        assert!(matches!(sp.assoc_primes().unwrap_err(), Error::Resource(_)));
    }
}
