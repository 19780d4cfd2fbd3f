//! Exact Hilbert series of monomial quotients S/I, and everything read off
//! them: Hilbert function values, dimension, multiplicity.
//!
//! The series of S/I is represented as K(t)/(1-t)^n where K is the numerator
//! over the full ambient denominator. Quotients in the literature often carry
//! the reduced denominator (1-t)^d with d = dim S/I instead; the two agree
//! after multiplying numerator and denominator by (1-t)^{n-d}, which is why
//! [`SeriesProfile`] recovers d by counting how often (1-t) divides K
//! exactly.
//!
//! K is computed by pivot recursion. Splitting off a variable p occurring in
//! at least two generator supports gives the exact sequence
//! 0 -> S/(I:p)(-1) -> S/I -> S/(I+(p)) -> 0, hence
//! K(I) = K(I+(p)) + t*K(I:p); once supports are pairwise disjoint the
//! quotient is a complete intersection and K = prod(1 - t^deg g). The pivot
//! choice changes the recursion tree but not the result, and tests hold the
//! output fixed across pivot rules.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::formulas::binomial;
use crate::monomial::{antichain, Monomial, MonomialIdeal};

/// Recursion-node budget for one K-polynomial computation.
pub const DEFAULT_NODE_CAP: u64 = 10_000_000;

/// Budget on C(n+a-1, a) for brute-force degree-a enumeration.
pub const DEFAULT_ENUM_CAP: u64 = 100_000_000;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients; index = degree. Trailing zeros are stripped, so the zero
/// polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPolynomial {
    coeffs: Vec<BigInt>,
}

impl KPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        KPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        KPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        KPolynomial { coeffs: vec![BigInt::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// self += t^shift * other.
    fn add_shifted(&mut self, other: &KPolynomial, shift: usize) {
        if other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i + shift] += c;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// self * (1 - t^d). A degree-0 generator (the unit) makes the factor
    /// 1 - t^0 = 0, which is exactly the series of the zero ring.
    fn mul_one_minus_t_pow(&self, d: usize) -> KPolynomial {
        if d == 0 || self.is_zero() {
            return KPolynomial::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(self.coeffs.len() + d, BigInt::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + d] -= c;
        }
        KPolynomial::new(coeffs)
    }

    /// Factor out (1-t)^c with c maximal: returns (c, quotient). Division by
    /// (1-t) is the prefix-sum map, exact precisely when eval_one is zero,
    /// which is checked before each step; the quotient never evaluates to
    /// zero at 1.
    pub fn deflate_at_one(&self) -> (usize, KPolynomial) {
        let mut q = self.clone();
        let mut c = 0;
        while !q.is_zero() && q.eval_one().is_zero() {
            let mut prefix = BigInt::zero();
            let len = q.coeffs.len();
            let mut out = Vec::with_capacity(len - 1);
            for coeff in &q.coeffs[..len - 1] {
                prefix += coeff;
                out.push(prefix.clone());
            }
            q = KPolynomial::new(out);
            c += 1;
        }
        (c, q)
    }
}

/// Which shared variable the recursion splits on. All rules give the same
/// K-polynomial; they differ only in tree shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// Variable hitting the most generator supports, smallest index on ties.
    #[default]
    MostFrequent,
    /// Smallest-index variable in at least two supports.
    FirstShared,
    /// Largest-index variable in at least two supports.
    LastShared,
}

struct Engine {
    n: usize,
    rule: PivotRule,
    cap: u64,
    nodes: u64,
}

impl Engine {
    fn pick_pivot(&self, freq: &[u32]) -> Option<usize> {
        match self.rule {
            PivotRule::MostFrequent => {
                let (j, &f) = freq.iter().enumerate().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))?;
                (f >= 2).then_some(j)
            }
            PivotRule::FirstShared => freq.iter().position(|&f| f >= 2),
            PivotRule::LastShared => freq.iter().rposition(|&f| f >= 2),
        }
    }

    fn k_rec(&mut self, gens: Vec<Monomial>) -> Result<KPolynomial> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::resource(format!(
                "series recursion exceeded {} nodes; raise the cap to continue",
                self.cap
            )));
        }
        let mut freq = vec![0u32; self.n];
        for g in &gens {
            for (i, &e) in g.exponents().iter().enumerate() {
                if e > 0 {
                    freq[i] += 1;
                }
            }
        }
        let Some(j) = self.pick_pivot(&freq) else {
            // Pairwise disjoint supports: complete intersection.
            let mut k = KPolynomial::one();
            for g in &gens {
                k = k.mul_one_minus_t_pow(g.degree() as usize);
            }
            return Ok(k);
        };

        // Generators containing x_j become redundant once x_j is adjoined;
        // the rest are untouched, so the left branch is already an antichain.
        let mut left: Vec<Monomial> = gens.iter().filter(|g| g.exponents()[j] == 0).cloned().collect();
        left.push(Monomial::var(j + 1, self.n));

        // Colon by x_j drops one from each exponent of x_j; the result can
        // fail to be an antichain and is re-minimalized.
        let right = antichain(
            gens.iter()
                .map(|g| {
                    let mut e = g.exponents().to_vec();
                    if e[j] > 0 {
                        e[j] -= 1;
                    }
                    Monomial::new(e)
                })
                .collect(),
        );

        let mut k = self.k_rec(left)?;
        let kr = self.k_rec(right)?;
        k.add_shifted(&kr, 1);
        Ok(k)
    }
}

/// Numerator of the Hilbert series of S/I over (1-t)^n. The zero ideal gives
/// 1; the unit ideal is rejected.
pub fn k_polynomial(ideal: &MonomialIdeal) -> Result<KPolynomial> {
    k_polynomial_with(ideal, PivotRule::default(), DEFAULT_NODE_CAP)
}

pub fn k_polynomial_with(ideal: &MonomialIdeal, rule: PivotRule, cap: u64) -> Result<KPolynomial> {
    if !ideal.is_proper() {
        return Err(Error::input("unit ideal has no Hilbert series numerator"));
    }
    let mut engine = Engine { n: ideal.num_vars(), rule, cap, nodes: 0 };
    engine.k_rec(ideal.gens().to_vec())
}

/// Numerator, vanishing order c of (1-t), dimension d = n - c, and
/// multiplicity e0 = deflated numerator at t = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesProfile {
    pub n: usize,
    pub numerator: KPolynomial,
    pub vanishing_order: usize,
    pub d: usize,
    pub e0: BigInt,
}

pub fn series_profile(ideal: &MonomialIdeal) -> Result<SeriesProfile> {
    series_profile_with(ideal, PivotRule::default(), DEFAULT_NODE_CAP)
}

pub fn series_profile_with(
    ideal: &MonomialIdeal,
    rule: PivotRule,
    cap: u64,
) -> Result<SeriesProfile> {
    if ideal.is_zero() {
        return Err(Error::input("zero ideal: S/I is the full ring, no finite profile"));
    }
    let numerator = k_polynomial_with(ideal, rule, cap)?;
    let (c, deflated) = numerator.deflate_at_one();
    let d = ideal
        .num_vars()
        .checked_sub(c)
        .ok_or_else(|| Error::internal("numerator vanishing order exceeds variable count"))?;
    let e0 = deflated.eval_one();
    if e0 < BigInt::one() {
        return Err(Error::internal(format!(
            "multiplicity must be positive for a proper nonzero ideal, got {e0}"
        )));
    }
    Ok(SeriesProfile { n: ideal.num_vars(), numerator, vanishing_order: c, d, e0 })
}

/// Coefficient of t^a in k(t)/(1-t)^n: sum of K_i * C(n-1+a-i, n-1).
pub fn hilbert_value(k: &KPolynomial, n: usize, a: u64) -> BigInt {
    let mut h = BigInt::zero();
    for (i, c) in k.coeffs().iter().enumerate() {
        let i = i as u64;
        if i > a {
            break;
        }
        h += c * binomial(n as u64 - 1 + a - i, (n as u64 - 1) as i64);
    }
    h
}

/// Dimension over the field of the degree-a part of S/I.
pub fn hilbert_function(ideal: &MonomialIdeal, a: u64) -> Result<BigInt> {
    let k = k_polynomial(ideal)?;
    Ok(hilbert_value(&k, ideal.num_vars(), a))
}

/// Independent count of the same dimension: enumerate every degree-a
/// exponent vector and test membership literally. Guarded by a cap on
/// C(n+a-1, a).
pub fn brute_force_hilbert_function(ideal: &MonomialIdeal, a: u64) -> Result<u64> {
    brute_force_hilbert_function_capped(ideal, a, DEFAULT_ENUM_CAP)
}

pub fn brute_force_hilbert_function_capped(
    ideal: &MonomialIdeal,
    a: u64,
    cap: u64,
) -> Result<u64> {
    if !ideal.is_proper() {
        return Err(Error::input("unit ideal: nothing to enumerate"));
    }
    let n = ideal.num_vars();
    let space = binomial(n as u64 + a - 1, a as i64);
    if space > BigInt::from(cap) {
        return Err(Error::resource(format!(
            "degree-{a} enumeration needs {space} candidates (cap {cap})"
        )));
    }
    let gens: Vec<&[u32]> = ideal.gens().iter().map(|g| g.exponents()).collect();
    let mut exps = vec![0u32; n];
    fn rec(gens: &[&[u32]], exps: &mut Vec<u32>, pos: usize, left: u32, count: &mut u64) {
        if pos + 1 == exps.len() {
            exps[pos] = left;
            let outside = !gens.iter().any(|g| g.iter().zip(exps.iter()).all(|(a, b)| a <= b));
            if outside {
                *count += 1;
            }
            exps[pos] = 0;
            return;
        }
        for e in 0..=left {
            exps[pos] = e;
            rec(gens, exps, pos + 1, left - e, count);
        }
        exps[pos] = 0;
    }
    let mut count = 0;
    rec(&gens, &mut exps, 0, a as u32, &mut count);
    Ok(count)
}

/// Hilbert function values H(a_lo), …, H(a_hi). The window must span at
/// least d + 2 values so a degree-(d-1) polynomial is overdetermined on it;
/// past the numerator degree the d-th finite differences of the returned
/// values vanish and the (d-1)-th are constantly e0.
pub fn hilbert_polynomial_window(
    ideal: &MonomialIdeal,
    a_lo: u64,
    a_hi: u64,
) -> Result<Vec<BigInt>> {
    let k = k_polynomial(ideal)?;
    let (c, _) = k.deflate_at_one();
    let d = ideal
        .num_vars()
        .checked_sub(c)
        .ok_or_else(|| Error::internal("numerator vanishing order exceeds variable count"))?;
    if a_hi < a_lo || a_hi - a_lo < d as u64 + 2 {
        return Err(Error::input(format!(
            "window too small: need a_hi - a_lo >= d + 2 = {}",
            d + 2
        )));
    }
    let n = ideal.num_vars();
    Ok((a_lo..=a_hi).map(|a| hilbert_value(&k, n, a)).collect())
}
