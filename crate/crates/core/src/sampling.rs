//! Seeded random inputs for verification sweeps. Callers own the RNG, so a
//! fixed seed pins the whole case list.

use rand::Rng;

use crate::monomial::{Monomial, MonomialIdeal};

/// A nonzero proper squarefree ideal on exactly `n` variables: between 1 and
/// `max_gens` generators, each a uniform nonempty subset of the variables.
/// Minimalization may merge generators but never empties the set.
pub fn random_squarefree_ideal<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_gens: usize,
) -> MonomialIdeal {
    assert!((1..64).contains(&n), "sampling supports 1..=63 variables");
    assert!(max_gens >= 1);
    let count = rng.random_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| {
            let mask = rng.random_range(1..1u64 << n);
            Monomial::new((0..n).map(|i| (mask >> i & 1) as u32).collect())
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("generated exponent vectors have length n")
}
