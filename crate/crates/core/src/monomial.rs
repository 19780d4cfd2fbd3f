//! Exact arithmetic on monomials and monomial ideals.
//!
//! A [`MonomialIdeal`] is always kept in canonical form: its generators form
//! an antichain under divisibility (the unique minimal generating set) and
//! are sorted by degree, then lexicographically with the `x1`-heaviest
//! exponent vector first. Two values compare equal iff they denote the same
//! ideal. The zero ideal is the empty generator set; the unit ideal is the
//! single generator `1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial as an exponent vector over `n` variables; entry `i` is the
/// exponent of `x_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_i` (1-based) in `n` variables.
    pub fn var(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable index {i} out of range 1..={n}");
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// 1-based indices of the variables occurring in this monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// `self / gcd(self, other)`, the factor of `self` not cancelled by `other`.
    pub fn div_by_gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - a.min(b))
                .collect(),
        }
    }

    /// Canonical generator order: by degree, then with the lexicographically
    /// larger exponent vector first (so `x1^2` precedes `x1*x2` precedes `x2^2`).
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Reduce a raw generator set to the divisibility antichain, sorted canonically.
pub(crate) fn antichain(mut raw: Vec<Monomial>) -> Vec<Monomial> {
    raw.sort_unstable_by(|a, b| a.canonical_cmp(b));
    raw.dedup();
    // After the graded sort, any divisor of a monomial sits strictly earlier.
    let mut kept: Vec<Monomial> = Vec::with_capacity(raw.len());
    for m in raw {
        if !kept.iter().any(|g| g.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

/// A monomial ideal in `n` variables, held by its minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize `raw` into a canonical ideal: drop every monomial divisible
    /// by another, dedupe, and sort. Rejects exponent vectors whose length is
    /// not `n`.
    pub fn new(n: usize, raw: Vec<Monomial>) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("ideal needs at least one variable"));
        }
        if let Some(bad) = raw.iter().find(|m| m.num_vars() != n) {
            return Err(Error::input(format!(
                "generator {bad} has {} exponents, expected {n}",
                bad.num_vars()
            )));
        }
        Ok(MonomialIdeal { n, gens: antichain(raw) })
    }

    /// Internal constructor for generator sets already known to be a sorted
    /// antichain of the right length.
    pub(crate) fn from_minimal_gens(n: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0].canonical_cmp(&w[1]) == Ordering::Less));
        debug_assert!(gens.iter().all(|g| g.num_vars() == n));
        MonomialIdeal { n, gens }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Proper means a strict subideal of the ring, i.e. not the unit ideal.
    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::input(format!(
                "variable count mismatch: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    fn check_compatible(&self, m: &Monomial) -> Result<()> {
        if m.num_vars() != self.n {
            return Err(Error::input(format!(
                "monomial has {} exponents, ideal has {} variables",
                m.num_vars(),
                self.n
            )));
        }
        Ok(())
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_compatible(m)?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// The colon ideal `self : f`, generated by `g / gcd(g, f)` over the
    /// generators `g`. Satisfies `m ∈ self : f ⇔ m·f ∈ self`.
    pub fn colon(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.check_compatible(f)?;
        let raw = self.gens.iter().map(|g| g.div_by_gcd(f)).collect();
        Ok(MonomialIdeal { n: self.n, gens: antichain(raw) })
    }

    /// Product ideal from pairwise products of generators.
    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.multiply_capped(other, DEFAULT_GENERATOR_CAP)
    }

    /// `multiply` with an explicit cap on the raw pairwise product count.
    pub fn multiply_capped(&self, other: &MonomialIdeal, cap: usize) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let raw_count = self.gens.len().saturating_mul(other.gens.len());
        if raw_count > cap {
            return Err(Error::resource(format!(
                "product would build {raw_count} generators (cap {cap})"
            )));
        }
        let mut raw = Vec::with_capacity(raw_count);
        for g in &self.gens {
            for h in &other.gens {
                raw.push(g.mul(h));
            }
        }
        Ok(MonomialIdeal { n: self.n, gens: antichain(raw) })
    }

    /// `self^s` by repeated multiplication; `s = 0` yields the unit ideal.
    pub fn power(&self, s: usize) -> Result<MonomialIdeal> {
        self.power_capped(s, DEFAULT_GENERATOR_CAP)
    }

    pub fn power_capped(&self, s: usize, cap: usize) -> Result<MonomialIdeal> {
        if s == 0 {
            return Ok(MonomialIdeal::unit(self.n));
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.multiply_capped(self, cap)?;
        }
        Ok(acc)
    }

    /// Intersection from pairwise least common multiples of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                raw.push(g.lcm(h));
            }
        }
        Ok(MonomialIdeal { n: self.n, gens: antichain(raw) })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for g in &self.gens {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Cap on the raw generator count built by `multiply`/`power` before
/// minimalization; power generator sets grow combinatorially.
pub const DEFAULT_GENERATOR_CAP: usize = 200_000;

/// A monomial prime `(x_{a_1}, …, x_{a_s})` given by its 1-based variable
/// indices, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSupport {
    n: usize,
    vars: Vec<usize>,
}

impl PrimeSupport {
    pub fn new(n: usize, vars: Vec<usize>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::input("prime support must be nonempty"));
        }
        if vars.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input("prime support indices must be strictly increasing"));
        }
        if vars[0] < 1 || *vars.last().unwrap() > n {
            return Err(Error::input(format!("prime support indices must lie in 1..={n}")));
        }
        Ok(PrimeSupport { n, vars })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// 1-based variable indices, strictly increasing.
    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    /// Height of the prime, i.e. the number of variables in its support.
    pub fn height(&self) -> usize {
        self.vars.len()
    }

    /// The prime as a monomial ideal generated by its variables.
    pub fn ideal(&self) -> MonomialIdeal {
        let gens = self.vars.iter().map(|&i| Monomial::var(i, self.n)).collect();
        MonomialIdeal::from_minimal_gens(self.n, antichain_of_vars(gens))
    }

    /// `P^s`, minimally generated by all monomials of degree exactly `s`
    /// supported on the prime's variables. `s = 0` yields the unit ideal.
    pub fn power(&self, s: usize) -> MonomialIdeal {
        if s == 0 {
            return MonomialIdeal::unit(self.n);
        }
        let mut gens = Vec::new();
        let mut exps = vec![0u32; self.n];
        fill_degree(&mut gens, &mut exps, &self.vars, 0, s as u32);
        MonomialIdeal::from_minimal_gens(self.n, antichain(gens))
    }
}

fn antichain_of_vars(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    // Distinct variables are already an antichain; only the order is needed.
    gens.sort_unstable_by(|a, b| a.canonical_cmp(b));
    gens
}

// Spread `remaining` among the positions `vars[from..]`, emitting one
// monomial per composition.
fn fill_degree(
    out: &mut Vec<Monomial>,
    exps: &mut Vec<u32>,
    vars: &[usize],
    from: usize,
    remaining: u32,
) {
    if from + 1 == vars.len() {
        exps[vars[from] - 1] = remaining;
        out.push(Monomial::new(exps.clone()));
        exps[vars[from] - 1] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[vars[from] - 1] = e;
        fill_degree(out, exps, vars, from + 1, remaining - e);
    }
    exps[vars[from] - 1] = 0;
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, &v) in self.vars.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{v}")?;
        }
        write!(f, ")")
    }
}

/// The `s`-th symbolic power of a squarefree ideal: the intersection of the
/// `s`-th powers of its minimal primes, which must be supplied (see
/// `primes::minimal_primes`).
pub fn symbolic_power(
    ideal: &MonomialIdeal,
    s: usize,
    primes: &[PrimeSupport],
) -> Result<MonomialIdeal> {
    if primes.is_empty() {
        return Err(Error::input("symbolic power needs a nonempty list of minimal primes"));
    }
    let mut acc = MonomialIdeal::unit(ideal.num_vars());
    for p in primes {
        if p.num_vars() != ideal.num_vars() {
            return Err(Error::input(format!(
                "prime support over {} variables, ideal has {}",
                p.num_vars(),
                ideal.num_vars()
            )));
        }
        acc = acc.intersect(&p.power(s))?;
    }
    Ok(acc)
}
