//! Closed-form multiplicity values and the counting sets that certify them.
//!
//! Two families of formulas live here. For an arbitrary squarefree monomial
//! ideal with dimension data (n, d, mu), the multiplicity of S/I^s is
//! `mu * C(n-d+s-1, s-1)` ([`e0_power_formula`]). For the ideal generated by
//! the n products of d cyclically consecutive variables (see
//! [`crate::cycles`]), writing n = kd + r with 1 <= r <= d, the multiplicity
//! is `d*C(k+d-r, k) - C(k+d-r, k+1)` ([`e0_cycle`]) and picks up the factor
//! `C(k+s, s-1)` for the s-th power ([`e0_cycle_power`]).
//!
//! The enumerators [`enumerate_u`], [`enumerate_w`], [`enumerate_v`] list the
//! bounded integer tuples whose counts the formulas compress; tests equate
//! list lengths with the binomial expressions, so the identities are checked
//! by exhaustion rather than re-derivation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient with the convention C(a, b) = 0 for b < 0 or b > a.
/// The out-of-range zero matters: [`e0_cycle`] evaluates C(k+d-r, k+1) which
/// vanishes exactly when r = d.
pub fn binomial(a: u64, b: i64) -> BigInt {
    if b < 0 || b as u64 > a {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(a), BigInt::from(b))
}

/// mu * C(n-d+s-1, s-1): multiplicity of S/I^s from the dimension d of S/I,
/// the count mu of top-dimensional minimal primes, and the exponent s.
pub fn e0_power_formula(n: u64, d: u64, mu: &BigInt, s: u64) -> Result<BigInt> {
    if d >= n {
        return Err(Error::input(format!("requires 0 <= d < n, got d={d}, n={n}")));
    }
    if mu < &BigInt::one() {
        return Err(Error::input(format!("requires mu >= 1, got {mu}")));
    }
    if s == 0 {
        return Err(Error::input("requires s >= 1"));
    }
    Ok(mu * binomial(n - d + s - 1, (s - 1) as i64))
}

/// The decomposition n = kd + r with k >= 1 and 1 <= r <= d; unique, and
/// r = d exactly when d divides n. Note k + 1 = ceil(n/d).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleParams {
    pub n: u64,
    pub d: u64,
    pub k: u64,
    pub r: u64,
}

pub fn cycle_params(n: u64, d: u64) -> Result<CycleParams> {
    if d < 2 || n <= d {
        return Err(Error::input(format!("requires n > d >= 2, got n={n}, d={d}")));
    }
    let mut r = n % d;
    if r == 0 {
        r = d;
    }
    let k = (n - r) / d;
    debug_assert!(k >= 1 && k * d + r == n);
    Ok(CycleParams { n, d, k, r })
}

/// d*C(k+d-r, k) - C(k+d-r, k+1) with n = kd + r: the multiplicity of the
/// quotient by the d-consecutive-products ideal on n cyclic variables.
pub fn e0_cycle(n: u64, d: u64) -> Result<BigInt> {
    let p = cycle_params(n, d)?;
    let top = p.k + p.d - p.r;
    Ok(BigInt::from(p.d) * binomial(top, p.k as i64) - binomial(top, (p.k + 1) as i64))
}

/// e0_cycle(n, d) * C(k+s, s-1): multiplicity of the s-th power of the same
/// ideal. At s = 1 the extra factor is C(k+1, 0) = 1.
pub fn e0_cycle_power(n: u64, d: u64, s: u64) -> Result<BigInt> {
    if s == 0 {
        return Err(Error::input("requires s >= 1"));
    }
    let p = cycle_params(n, d)?;
    Ok(e0_cycle(n, d)? * binomial(p.k + s, (s - 1) as i64))
}

/// All tuples of the given length with entries in 0..=cap summing to total,
/// in lexicographic order.
pub fn bounded_tuples(len: usize, cap: u32, total: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    fn rec(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, pos: usize, cap: u32, left: u64) {
        let slots = (cur.len() - pos) as u64;
        if left > slots * cap as u64 {
            return;
        }
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        let emax = left.min(cap as u64) as u32;
        for e in 0..=emax {
            cur[pos] = e;
            rec(out, cur, pos + 1, cap, left - e as u64);
        }
        cur[pos] = 0;
    }
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut out, &mut cur, 0, cap, total);
    out
}

/// C(d+k, d): the number of tuples (c_1,…,c_{k+1}) with 0 <= c_i <= d and
/// sum k*d. Complementing entries against d bijects them with the weak
/// compositions of d into k+1 parts.
pub fn count_u(k: u64, d: u64) -> BigInt {
    binomial(d + k, d as i64)
}

/// The tuples counted by [`count_u`]: length k+1, entries in 0..=d, sum k*d.
pub fn enumerate_u(k: usize, d: u32) -> Vec<Vec<u32>> {
    bounded_tuples(k + 1, d, k as u64 * d as u64)
}

/// Tuples (b_1,…,b_k) with b_i <= d and sum (k-1)d + r + s, for 1 <= r <= d
/// and 0 <= s <= d-r. The sum forces every b_i >= r+s, so subtracting r+s
/// entrywise bijects the list with [`enumerate_u`]\(k-1, d-r-s).
pub fn enumerate_w(k: usize, d: u32, r: u32, s: u32) -> Result<Vec<Vec<u32>>> {
    if k < 1 {
        return Err(Error::input("requires k >= 1"));
    }
    if r < 1 || r > d {
        return Err(Error::input(format!("requires 1 <= r <= d, got r={r}, d={d}")));
    }
    if s > d - r {
        return Err(Error::input(format!("requires s <= d-r, got s={s}, d-r={}", d - r)));
    }
    let total = (k as u64 - 1) * d as u64 + r as u64 + s as u64;
    Ok(bounded_tuples(k, d, total))
}

/// Tuples (a_1, b_1,…,b_k) with a_1 >= 1, 1 <= b_i <= d, sum of b at least
/// (k-1)d + r, and a_1 + sum of b at most kd + r. Their count equals
/// [`e0_cycle`]\(kd + r, d); the b_i are at least 1 because they stand for
/// gaps between strictly increasing indices.
pub fn enumerate_v(k: usize, d: u32, r: u32) -> Result<Vec<(u32, Vec<u32>)>> {
    if k < 1 {
        return Err(Error::input("requires k >= 1"));
    }
    if r < 1 || r > d {
        return Err(Error::input(format!("requires 1 <= r <= d, got r={r}, d={d}")));
    }
    let b_min = (k as u64 - 1) * d as u64 + r as u64;
    let total_max = k as u64 * d as u64 + r as u64;
    let mut out = Vec::new();
    // Reuse the bounded enumerator on b_i - 1 so entries run over 1..=d.
    for shifted in bounded_sum_range(k, d - 1, b_min.saturating_sub(k as u64), total_max - k as u64)
    {
        let b: Vec<u32> = shifted.iter().map(|&e| e + 1).collect();
        let b_sum: u64 = b.iter().map(|&e| e as u64).sum();
        debug_assert!(b_sum >= b_min);
        let a1_max = total_max - b_sum;
        for a1 in 1..=a1_max as u32 {
            out.push((a1, b.clone()));
        }
    }
    Ok(out)
}

// Tuples with entries in 0..=cap and sum in lo..=hi, lexicographic.
fn bounded_sum_range(len: usize, cap: u32, lo: u64, hi: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for total in lo..=hi {
        out.extend(bounded_tuples(len, cap, total));
    }
    // Lexicographic order across the whole list, not per sum stratum.
    out.sort_unstable();
    out
}
