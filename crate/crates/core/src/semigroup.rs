//! Numerical semigroups by additive sieve: membership, Frobenius number,
//! conductor, gap set and genus.
//!
//! For a gcd-1 generating set the Frobenius number is smaller than
//! `g_min * g_max`: any residue class mod `g_min` is hit by a sum of fewer
//! than `g_min` generators (Cayley-graph diameter of a cyclic group), so a
//! coin-problem sieve over `[0, g_min * g_max + g_max]` sees every gap.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::limits;
use crate::sumset::{gcd, NormalForm};

/// A numerical semigroup `<g_1, ..., g_k>` with gcd 1, with all of its
/// classical invariants precomputed.
///
/// The degenerate semigroup of the natural numbers has `frobenius = -1` and
/// `conductor = 0`, which makes the small-elements window `[0, c-2]` empty
/// exactly when the corresponding curve point is non-singular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    membership: BitSet,
    frobenius: i64,
    conductor: u64,
    gaps: Vec<u64>,
}

impl NumericalSemigroup {
    /// Sieve the semigroup generated by `gens`. Rejects empty input, zero
    /// generators, and generating sets whose gcd is not 1.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::NoGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let g = generators.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }

        let g_min = generators[0];
        let g_max = *generators.last().expect("nonempty");
        let window = g_min
            .checked_mul(g_max)
            .and_then(|w| w.checked_add(g_max))
            .ok_or(Error::Overflow("sieve window"))?;
        limits::check_bitmap_budget("semigroup sieve", window + 1, 1)?;

        let width = (window + 1) as usize;
        let mut member = BitSet::new(width);
        member.set(0);
        for x in 1..width {
            for &gen in &generators {
                let gen = gen as usize;
                if gen <= x && member.get(x - gen) {
                    member.set(x);
                    break;
                }
            }
        }

        let mut frobenius: i64 = -1;
        let mut gaps = Vec::new();
        for x in 0..width {
            if !member.get(x) {
                gaps.push(x as u64);
                frobenius = x as i64;
            }
        }
        debug_assert!(frobenius < (g_min * g_max) as i64);
        let conductor = (frobenius + 1) as u64;

        // keep membership over [0, conductor + g_max]
        let keep = (conductor + g_max + 1) as usize;
        let mut membership = BitSet::new(keep);
        for x in member.iter_ones().take_while(|&x| x < keep) {
            membership.set(x);
        }

        Ok(NumericalSemigroup {
            generators,
            membership,
            frobenius,
            conductor,
            gaps,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Largest non-member, or -1 when the semigroup is all of the naturals.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// First element from which every integer is a member.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn contains(&self, x: u64) -> bool {
        if x >= self.conductor {
            return true;
        }
        self.membership.get(x as usize)
    }

    /// Members in `[0, conductor - 2]`; empty when the conductor is 0.
    pub fn small_elements(&self) -> Vec<u64> {
        if self.conductor <= 1 {
            return Vec::new();
        }
        (0..=self.conductor - 2)
            .filter(|&x| self.contains(x))
            .collect()
    }
}

/// Semigroup of the curve germ at the left point: `<a_2, ..., a_n>`.
pub fn left_semigroup(a: &NormalForm) -> Result<NumericalSemigroup> {
    NumericalSemigroup::from_generators(&a.elements()[1..])
}

/// Semigroup of the curve germ at the right point:
/// `<a_n - a_{n-1}, ..., a_n - a_2, a_n>`.
pub fn right_semigroup(a: &NormalForm) -> Result<NumericalSemigroup> {
    let els = a.elements();
    let a_n = a.a_n();
    let mut gens: Vec<u64> = els[1..els.len() - 1].iter().map(|&ai| a_n - ai).collect();
    gens.push(a_n);
    NumericalSemigroup::from_generators(&gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sumset::RawSet;
    use std::collections::BTreeSet;

    fn nf(v: &[u64]) -> NormalForm {
        RawSet::new(v.to_vec()).unwrap().normalize().unwrap()
    }

    /// Independent membership oracle: saturate {0} under generator addition.
    fn closure_members(gens: &[u64], bound: u64) -> BTreeSet<u64> {
        let mut members = BTreeSet::from([0u64]);
        let mut frontier = vec![0u64];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = x + g;
                if y <= bound && members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        members
    }

    #[test]
    fn germ_semigroup_examples() {
        let s = NumericalSemigroup::from_generators(&[2, 4, 5, 7]).unwrap();
        assert_eq!(s.gaps(), &[1, 3]);
        assert_eq!(s.genus(), 2);
        assert_eq!(s.conductor(), 4);
        assert_eq!(s.small_elements(), vec![0, 2]);

        let s = NumericalSemigroup::from_generators(&[2, 3, 5, 7]).unwrap();
        assert_eq!(s.gaps(), &[1]);
        assert_eq!(s.genus(), 1);
        assert_eq!(s.conductor(), 2);
        assert_eq!(s.small_elements(), vec![0]);
    }

    #[test]
    fn naturals_degenerate_correctly() {
        let s = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert_eq!(s.gaps(), &[] as &[u64]);
        assert_eq!(s.genus(), 0);
        assert_eq!(s.conductor(), 0);
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.small_elements(), Vec::<u64>::new());
        assert!(s.contains(0) && s.contains(123456));
    }

    #[test]
    fn sieved_invariants_for_7_8_9_10() {
        let s = NumericalSemigroup::from_generators(&[7, 8, 9, 10]).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 3, 4, 5, 6, 11, 12, 13]);
        assert_eq!(s.genus(), 9);
        assert_eq!(s.conductor(), 14);
        assert_eq!(s.small_elements(), vec![0, 7, 8, 9, 10]);
    }

    #[test]
    fn rejects_bad_generators() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]).unwrap_err(),
            Error::NoGenerators
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3]).unwrap_err(),
            Error::ZeroGenerator
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]).unwrap_err(),
            Error::GcdNotOne(2)
        );
    }

    #[test]
    fn left_and_right_semigroups() {
        let a = nf(&[0, 2, 4, 5, 7]);
        let left = left_semigroup(&a).unwrap();
        assert_eq!(left.generators(), &[2, 4, 5, 7]);
        assert_eq!(left.genus(), 2);
        let right = right_semigroup(&a).unwrap();
        assert_eq!(right.generators(), &[2, 3, 5, 7]);
        assert_eq!(right.genus(), 1);

        // a_2 = 1 makes the left germ smooth
        let b = nf(&[0, 1, 3, 4]);
        assert_eq!(left_semigroup(&b).unwrap().genus(), 0);
        assert_eq!(right_semigroup(&b).unwrap().genus(), 0);

        // right semigroup of {0,7,8,9,10} contains 1
        let c = nf(&[0, 7, 8, 9, 10]);
        let right = right_semigroup(&c).unwrap();
        assert_eq!(right.generators(), &[1, 2, 3, 10]);
        assert_eq!(right.genus(), 0);
        assert_eq!(left_semigroup(&c).unwrap().genus(), 9);
    }

    #[test]
    fn membership_matches_closure_oracle() {
        // every gcd-1 subset of {1..15}
        for mask in 1u32..(1 << 15) {
            let gens: Vec<u64> = (0..15)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| i as u64 + 1)
                .collect();
            if gens.iter().fold(0, |g, &x| gcd(g, x)) != 1 {
                continue;
            }
            let s = NumericalSemigroup::from_generators(&gens).unwrap();
            let bound = s.conductor() + gens.last().unwrap() + 5;
            let oracle = closure_members(&gens, bound);
            for x in 0..=bound {
                assert_eq!(s.contains(x), oracle.contains(&x), "gens {gens:?} at {x}");
            }
        }
    }

    #[test]
    fn genus_equals_conductor_minus_members_below() {
        // exhaustive over gcd-1 subsets of {1..14}, plus all coprime pairs up to 20
        let mut cases: Vec<Vec<u64>> = Vec::new();
        for mask in 1u32..(1 << 14) {
            let gens: Vec<u64> = (0..14)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| i as u64 + 1)
                .collect();
            if gens.iter().fold(0, |g, &x| gcd(g, x)) == 1 {
                cases.push(gens);
            }
        }
        for a in 1..=20u64 {
            for b in a + 1..=20 {
                if gcd(a, b) == 1 {
                    cases.push(vec![a, b]);
                }
            }
        }
        for gens in cases {
            let s = NumericalSemigroup::from_generators(&gens).unwrap();
            let below = (0..s.conductor()).filter(|&x| s.contains(x)).count() as u64;
            assert_eq!(s.genus(), s.conductor() - below, "gens {gens:?}");
            // additive closure within the stored window
            let top = s.conductor() + s.generators().last().unwrap();
            let members: Vec<u64> = (0..=top).filter(|&x| s.contains(x)).collect();
            for &x in &members {
                for &y in &members {
                    if x + y <= top {
                        assert!(s.contains(x + y), "gens {gens:?}: {x}+{y}");
                    }
                }
            }
        }
    }

    #[test]
    fn sylvester_pair_frobenius() {
        // F(a, b) = ab - a - b for coprime pairs
        for (a, b) in [(2u64, 3u64), (3, 5), (4, 7), (5, 12), (7, 11)] {
            let s = NumericalSemigroup::from_generators(&[a, b]).unwrap();
            assert_eq!(s.frobenius(), (a * b - a - b) as i64);
        }
    }
}
