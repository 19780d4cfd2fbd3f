//! Minimal primes of squarefree monomial ideals, and the dimension data
//! derived from them.
//!
//! A prime containing a squarefree monomial ideal must contain a variable of
//! each generator, so the minimal primes are exactly the minimal transversals
//! (vertex covers) of the generator-support hypergraph. The search branches
//! on an uncovered generator and bans already-tried variables in sibling
//! branches, so every minimal transversal is reached exactly once; a final
//! pairwise subset filter removes the non-minimal leaves the search can
//! still emit.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, PrimeSupport};

#[cfg(not(feature = "wide"))]
pub(crate) type MaskWord = u64;
#[cfg(feature = "wide")]
pub(crate) type MaskWord = u128;

/// Hard cap on the ambient variable count: supports are held in one machine
/// word. The `wide` feature doubles it.
pub const MAX_VARS: usize = MaskWord::BITS as usize;

/// The minimal primes of a squarefree monomial ideal, canonically ordered by
/// height, then lexicographically on variable indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeList {
    n: usize,
    primes: Vec<PrimeSupport>,
}

impl PrimeList {
    pub(crate) fn from_sorted(n: usize, primes: Vec<PrimeSupport>) -> Self {
        debug_assert!(primes.windows(2).all(|w| {
            (w[0].height(), w[0].vars()) < (w[1].height(), w[1].vars())
        }));
        PrimeList { n, primes }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn primes(&self) -> &[PrimeSupport] {
        &self.primes
    }

    pub fn min_height(&self) -> usize {
        self.primes.iter().map(PrimeSupport::height).min().unwrap_or(0)
    }
}

/// Dimension d of S/I, the count mu of minimal primes of that dimension, and
/// the common height n - d those primes share.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimProfile {
    pub d: usize,
    pub mu: u64,
    pub height: usize,
}

fn require_squarefree_input(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::input("zero ideal: no minimal primes to list"));
    }
    if !ideal.is_proper() {
        return Err(Error::input("unit ideal: no primes contain it"));
    }
    if !ideal.is_squarefree() {
        return Err(Error::input("generators must be squarefree"));
    }
    if ideal.num_vars() > MAX_VARS {
        return Err(Error::input(format!(
            "{} variables exceeds the {MAX_VARS}-variable support mask",
            ideal.num_vars()
        )));
    }
    Ok(())
}

fn support_mask(exps: &[u32]) -> MaskWord {
    let mut m: MaskWord = 0;
    for (i, &e) in exps.iter().enumerate() {
        if e > 0 {
            m |= 1 << i;
        }
    }
    m
}

// Depth-first enumeration of transversals of `edges`. Branching on the first
// uncovered edge and banning earlier-tried variables in later branches makes
// every minimal transversal appear exactly once among the leaves.
fn search(edges: &[MaskWord], cover: MaskWord, banned: MaskWord, found: &mut Vec<MaskWord>) {
    match edges.iter().find(|&&e| e & cover == 0) {
        None => found.push(cover),
        Some(&e) => {
            let mut remaining = e & !banned;
            let mut tried: MaskWord = 0;
            while remaining != 0 {
                let v = remaining & remaining.wrapping_neg();
                search(edges, cover | v, banned | tried, found);
                tried |= v;
                remaining &= !v;
            }
        }
    }
}

/// All minimal primes of a nonzero proper squarefree monomial ideal.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<PrimeList> {
    require_squarefree_input(ideal)?;
    let n = ideal.num_vars();
    let edges: Vec<MaskWord> = ideal.gens().iter().map(|g| support_mask(g.exponents())).collect();
    debug_assert!(edges.iter().all(|&e| e != 0));

    let mut found = Vec::new();
    search(&edges, 0, 0, &mut found);

    // Keep inclusion-minimal covers only. Any non-minimal leaf strictly
    // contains some minimal transversal, which the search also emitted.
    found.sort_unstable_by_key(|m| m.count_ones());
    let mut minimal: Vec<MaskWord> = Vec::new();
    for cand in found {
        if !minimal.iter().any(|&kept| kept | cand == cand) {
            minimal.push(cand);
        }
    }

    let mut primes: Vec<PrimeSupport> = minimal
        .into_iter()
        .map(|m| {
            let vars: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).map(|i| i + 1).collect();
            PrimeSupport::new(n, vars).expect("search yields nonempty in-range supports")
        })
        .collect();
    primes.sort_unstable_by(|a, b| {
        a.height().cmp(&b.height()).then_with(|| a.vars().cmp(b.vars()))
    });
    Ok(PrimeList { n, primes })
}

/// Dimension of S/I and the count of top-dimensional primes. Embedded primes
/// cannot occur for squarefree ideals, so the minimum transversal size gives
/// the height directly.
pub fn dim_profile(ideal: &MonomialIdeal) -> Result<DimProfile> {
    let list = minimal_primes(ideal)?;
    let height = list.min_height();
    let mu = list.primes().iter().filter(|p| p.height() == height).count() as u64;
    Ok(DimProfile { d: ideal.num_vars() - height, mu, height })
}

/// Intersection of the minimum-height minimal primes: the components that
/// carry the multiplicity. Higher-height components are dropped and cannot
/// change e0.
pub fn unmixed_part(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let list = minimal_primes(ideal)?;
    let h = list.min_height();
    let mut acc = MonomialIdeal::unit(ideal.num_vars());
    for p in list.primes().iter().filter(|p| p.height() == h) {
        acc = acc.intersect(&p.ideal())?;
    }
    Ok(acc)
}

impl DimProfile {
    /// mu as an arbitrary-precision integer, the form the formulas take.
    pub fn mu_bigint(&self) -> BigInt {
        BigInt::from(self.mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{symbolic_power, Monomial};
    use proptest::prelude::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec())).collect()).unwrap()
    }

    fn supports(list: &PrimeList) -> Vec<Vec<usize>> {
        list.primes().iter().map(|p| p.vars().to_vec()).collect()
    }

    /// Exhaustive oracle: all inclusion-minimal subsets of 1..=n meeting
    /// every generator support.
    fn brute_minimal_transversals(i: &MonomialIdeal) -> Vec<Vec<usize>> {
        let n = i.num_vars();
        let edges: Vec<Vec<usize>> = i.gens().iter().map(|g| g.support()).collect();
        let mut covers: Vec<u32> = (0u32..1 << n)
            .filter(|&set| edges.iter().all(|e| e.iter().any(|&v| set >> (v - 1) & 1 == 1)))
            .collect();
        covers.sort_unstable_by_key(|c| c.count_ones());
        let mut minimal: Vec<u32> = Vec::new();
        for c in covers {
            if !minimal.iter().any(|&m| m | c == c) {
                minimal.push(c);
            }
        }
        let mut out: Vec<Vec<usize>> = minimal
            .into_iter()
            .map(|m| (1..=n).filter(|&v| m >> (v - 1) & 1 == 1).collect())
            .collect();
        out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn principal_edge() {
        let list = minimal_primes(&ideal(2, &[&[1, 1]])).unwrap();
        assert_eq!(supports(&list), vec![vec![1], vec![2]]);
        let p = dim_profile(&ideal(2, &[&[1, 1]])).unwrap();
        assert_eq!((p.d, p.mu, p.height), (1, 2, 1));
    }

    #[test]
    fn triangle_primes() {
        let t = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let list = minimal_primes(&t).unwrap();
        assert_eq!(supports(&list), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let p = dim_profile(&t).unwrap();
        assert_eq!((p.d, p.mu), (1, 3));
        assert_eq!(unmixed_part(&t).unwrap(), t);
    }

    #[test]
    fn five_cycle_covers() {
        let c5 = ideal(
            5,
            &[&[1, 1, 0, 0, 0], &[0, 1, 1, 0, 0], &[0, 0, 1, 1, 0], &[0, 0, 0, 1, 1], &[1, 0, 0, 0, 1]],
        );
        let list = minimal_primes(&c5).unwrap();
        assert_eq!(
            supports(&list),
            vec![vec![1, 2, 4], vec![1, 3, 4], vec![1, 3, 5], vec![2, 3, 5], vec![2, 4, 5]]
        );
        let p = dim_profile(&c5).unwrap();
        assert_eq!((p.d, p.mu), (2, 5));
    }

    #[test]
    fn maximal_ideal_profile() {
        for n in 1..=5 {
            let gens: Vec<Vec<u32>> = (0..n)
                .map(|i| {
                    let mut e = vec![0u32; n];
                    e[i] = 1;
                    e
                })
                .collect();
            let refs: Vec<&[u32]> = gens.iter().map(|g| g.as_slice()).collect();
            let m = ideal(n, &refs);
            let p = dim_profile(&m).unwrap();
            assert_eq!((p.d, p.mu, p.height), (0, 1, n));
        }
    }

    #[test]
    fn mixed_heights_unmixed_part() {
        // Heights 1 and 2; only the height-1 component survives.
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let list = minimal_primes(&i).unwrap();
        assert_eq!(supports(&list), vec![vec![2], vec![1, 3]]);
        assert_eq!(unmixed_part(&i).unwrap(), ideal(3, &[&[0, 1, 0]]));

        // Both primes height 2; the ideal is its own unmixed part.
        let j = ideal(3, &[&[1, 1, 0], &[0, 0, 1]]);
        let lj = minimal_primes(&j).unwrap();
        assert_eq!(supports(&lj), vec![vec![1, 3], vec![2, 3]]);
        assert_eq!(unmixed_part(&j).unwrap(), j);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(minimal_primes(&MonomialIdeal::zero(3)), Err(Error::Input(_))));
        assert!(matches!(minimal_primes(&MonomialIdeal::unit(3)), Err(Error::Input(_))));
        assert!(matches!(minimal_primes(&ideal(2, &[&[2, 0]])), Err(Error::Input(_))));
        let wide = MonomialIdeal::new(MAX_VARS + 1, vec![Monomial::var(1, MAX_VARS + 1)]).unwrap();
        assert!(matches!(minimal_primes(&wide), Err(Error::Input(_))));
    }

    fn arb_squarefree_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
        proptest::collection::vec(proptest::collection::vec(0u32..=1, n), 1..6).prop_map(
            move |gens| {
                MonomialIdeal::new(n, gens.into_iter().map(Monomial::new).collect()).unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn matches_exhaustive_transversal_oracle(i in arb_squarefree_ideal(6)) {
            prop_assume!(!i.is_zero() && i.is_proper());
            let list = minimal_primes(&i).unwrap();
            prop_assert_eq!(supports(&list), brute_minimal_transversals(&i));
        }

        #[test]
        fn covers_are_sound_and_minimal(i in arb_squarefree_ideal(7)) {
            prop_assume!(!i.is_zero() && i.is_proper());
            let list = minimal_primes(&i).unwrap();
            let edges: Vec<Vec<usize>> = i.gens().iter().map(|g| g.support()).collect();
            for p in list.primes() {
                let vars = p.vars();
                prop_assert!(edges.iter().all(|e| e.iter().any(|v| vars.contains(v))));
                for drop in vars {
                    let rest: Vec<usize> = vars.iter().copied().filter(|v| v != drop).collect();
                    prop_assert!(
                        edges.iter().any(|e| e.iter().all(|v| !rest.contains(v))),
                        "dropping x{drop} from {:?} keeps it a cover",
                        vars
                    );
                }
            }
        }

        #[test]
        fn intersection_of_minimal_primes_recovers_ideal(i in arb_squarefree_ideal(5)) {
            prop_assume!(!i.is_zero() && i.is_proper());
            let list = minimal_primes(&i).unwrap();
            let mut acc = MonomialIdeal::unit(5);
            for p in list.primes() {
                acc = acc.intersect(&p.ideal()).unwrap();
            }
            prop_assert_eq!(acc, i);
        }

        #[test]
        fn ordinary_power_sits_inside_symbolic(i in arb_squarefree_ideal(4), s in 1usize..4) {
            prop_assume!(!i.is_zero() && i.is_proper());
            let list = minimal_primes(&i).unwrap();
            let sym = symbolic_power(&i, s, list.primes()).unwrap();
            for g in i.power(s).unwrap().gens() {
                prop_assert!(sym.contains(g).unwrap());
            }
        }
    }
}
