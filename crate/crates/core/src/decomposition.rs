//! Asymptotic structure of `sA`: for large `s` the sumset splits as
//! `C_1 ⊔ [c_1, s*a_n - c_2] ⊔ (s*a_n - C_2)` where `c_i` is the conductor of
//! the germ semigroup at each end and `C_i` its small elements. This module
//! tests the split bit-for-bit at a given fold and computes the exact
//! stabilization threshold.

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::hilbert::hilbert_from_table;
use crate::semigroup::{left_semigroup, right_semigroup, NumericalSemigroup};
use crate::sumset::{GrowthTable, NormalForm, SumsetImage};

/// Why a decomposition failed at some fold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionDefect {
    /// `c_1 > s*a_n - c_2`: the middle interval is not yet well-formed.
    IntervalEmpty,
    /// The three blocks are well-formed but their union is not `sA`.
    SetMismatch,
}

/// The three-block split of `sA` at one fold, valid or not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub s: u64,
    /// Conductor of the left germ semigroup.
    pub c1: u64,
    /// Conductor of the right germ semigroup.
    pub c2: u64,
    /// Small elements of the left semigroup, `Γ_1 ∩ [0, c_1 - 2]`.
    pub small1: Vec<u64>,
    /// Small elements of the right semigroup, `Γ_2 ∩ [0, c_2 - 2]`.
    pub small2: Vec<u64>,
    /// `[c_1, s*a_n - c_2]` when well-formed.
    pub middle: Option<(u64, u64)>,
    /// The mirrored block `s*a_n - C_2`, ascending.
    pub right_block: Vec<u64>,
    pub valid: bool,
    pub reason: Option<DecompositionDefect>,
    /// `|sA|` at this fold.
    pub cardinality: u64,
}

impl Decomposition {
    /// Human-readable `{0,2} ⊔ [4,33] ⊔ {35}` form.
    pub fn render(&self) -> String {
        let blocks = [
            render_set(&self.small1),
            match self.middle {
                Some((lo, hi)) => format!("[{lo},{hi}]"),
                None => "(empty interval)".to_string(),
            },
            render_set(&self.right_block),
        ];
        blocks.join(" ⊔ ")
    }
}

fn render_set(v: &[u64]) -> String {
    if v.is_empty() {
        "∅".to_string()
    } else {
        let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        format!("{{{}}}", inner.join(","))
    }
}

/// Certificate for the least fold from which the decomposition is valid.
///
/// `sigma_formula = max(1, r, ceil((c_1 + c_2) / a_n))`: beyond that fold the
/// sumset is contained in `Γ_1 ∩ (s*a_n - Γ_2)`, whose cardinality is the
/// polynomial value, so validity is equivalent to table/polynomial agreement.
/// The empirical value cross-validates the formula on every instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationCertificate {
    pub sigma_empirical: u64,
    pub sigma_formula: u64,
    /// Inclusive fold range scanned.
    pub window: (u64, u64),
}

fn decomposition_at(
    a: &NormalForm,
    image: &SumsetImage,
    g1: &NumericalSemigroup,
    g2: &NumericalSemigroup,
) -> Decomposition {
    let s = image.s();
    let top = image.max();
    let c1 = g1.conductor();
    let c2 = g2.conductor();
    let small1 = g1.small_elements();
    let small2 = g2.small_elements();
    // mirrored elements below zero can only occur in the interval-empty case
    let right_block: Vec<u64> = small2
        .iter()
        .rev()
        .filter(|&&x| x <= top)
        .map(|&x| top - x)
        .collect();
    debug_assert_eq!(a.a_n() * s, top);

    let (middle, valid, reason) = if c1 + c2 > top {
        (None, false, Some(DecompositionDefect::IntervalEmpty))
    } else {
        let lo = c1;
        let hi = top - c2;
        let mut expected = BitSet::new((top + 1) as usize);
        for &x in &small1 {
            expected.set(x as usize);
        }
        expected.set_range(lo as usize, hi as usize);
        for &x in &right_block {
            expected.set(x as usize);
        }
        if &expected == image.bits() {
            (Some((lo, hi)), true, None)
        } else {
            (
                Some((lo, hi)),
                false,
                Some(DecompositionDefect::SetMismatch),
            )
        }
    };

    Decomposition {
        s,
        c1,
        c2,
        small1,
        small2,
        middle,
        right_block,
        valid,
        reason,
        cardinality: image.card(),
    }
}

/// Test the three-block split of `sA` at fold `s >= 1`.
pub fn decompose_at(a: &NormalForm, s: u64) -> Result<Decomposition> {
    if s == 0 {
        return Err(Error::ZeroFold);
    }
    let image = a.sumset(s)?;
    let g1 = left_semigroup(a)?;
    let g2 = right_semigroup(a)?;
    Ok(decomposition_at(a, &image, &g1, &g2))
}

/// Compute the stabilization threshold with both the empirical scan and the
/// closed-form certificate.
pub fn stabilization_threshold(a: &NormalForm) -> Result<StabilizationCertificate> {
    let g1 = left_semigroup(a)?;
    let g2 = right_semigroup(a)?;
    let rho = crate::hilbert::rho_bound(a);
    let table = a.growth_table(rho)?;
    let hd = hilbert_from_table(a, &table)?;
    let formula = sigma_formula(hd.r, g1.conductor(), g2.conductor(), a.a_n());

    let hi = rho.max(formula) + 4;
    let images = a.image_sequence(hi)?;
    let mut sigma_empirical = hi + 1;
    for s in (1..=hi).rev() {
        if decomposition_at(a, &images[s as usize], &g1, &g2).valid {
            sigma_empirical = s;
        } else {
            break;
        }
    }
    Ok(StabilizationCertificate {
        sigma_empirical,
        sigma_formula: formula,
        window: (1, hi),
    })
}

pub(crate) fn sigma_formula(r: u64, c1: u64, c2: u64, a_n: u64) -> u64 {
    1u64.max(r).max((c1 + c2).div_ceil(a_n))
}

/// The identity `delta_i = c_i - |C_i|` for both germs, with the pieces
/// exposed for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinementReport {
    pub delta1: u64,
    pub c1: u64,
    pub small1_count: u64,
    pub delta2: u64,
    pub c2: u64,
    pub small2_count: u64,
    pub ok: bool,
}

/// Check `delta_i = c_i - |C_i|`, with the deltas coming from the semigroup
/// gap counts independently of the decomposition.
pub fn verify_refinement(a: &NormalForm) -> Result<RefinementReport> {
    let g1 = left_semigroup(a)?;
    let g2 = right_semigroup(a)?;
    let s1 = g1.small_elements().len() as u64;
    let s2 = g2.small_elements().len() as u64;
    let ok = g1.genus() == g1.conductor() - s1 && g2.genus() == g2.conductor() - s2;
    Ok(RefinementReport {
        delta1: g1.genus(),
        c1: g1.conductor(),
        small1_count: s1,
        delta2: g2.genus(),
        c2: g2.conductor(),
        small2_count: s2,
        ok,
    })
}

/// Shared-table variant used by the verification suite.
pub(crate) fn stabilization_from(
    a: &NormalForm,
    images: &[SumsetImage],
    table: &GrowthTable,
    g1: &NumericalSemigroup,
    g2: &NumericalSemigroup,
) -> Result<StabilizationCertificate> {
    let hd = hilbert_from_table(a, table)?;
    let formula = sigma_formula(hd.r, g1.conductor(), g2.conductor(), a.a_n());
    let hi = images.len() as u64 - 1;
    let mut sigma_empirical = hi + 1;
    for s in (1..=hi).rev() {
        if decomposition_at(a, &images[s as usize], g1, g2).valid {
            sigma_empirical = s;
        } else {
            break;
        }
    }
    Ok(StabilizationCertificate {
        sigma_empirical,
        sigma_formula: formula,
        window: (1, hi),
    })
}

pub(crate) fn decomposition_with(
    a: &NormalForm,
    image: &SumsetImage,
    g1: &NumericalSemigroup,
    g2: &NumericalSemigroup,
) -> Decomposition {
    decomposition_at(a, image, g1, g2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sumset::RawSet;

    fn nf(v: &[u64]) -> NormalForm {
        RawSet::new(v.to_vec()).unwrap().normalize().unwrap()
    }

    #[test]
    fn five_fold_decomposition_of_the_running_example() {
        let d = decompose_at(&nf(&[0, 2, 4, 5, 7]), 5).unwrap();
        assert!(d.valid);
        assert_eq!(d.c1, 4);
        assert_eq!(d.small1, vec![0, 2]);
        assert_eq!(d.c2, 2);
        assert_eq!(d.small2, vec![0]);
        assert_eq!(d.middle, Some((4, 33)));
        assert_eq!(d.right_block, vec![35]);
        assert_eq!(d.render(), "{0,2} ⊔ [4,33] ⊔ {35}");
        // cardinality identity
        assert_eq!(
            d.cardinality,
            5 * 7 + 1 - (d.c1 - d.small1.len() as u64) - (d.c2 - d.small2.len() as u64)
        );
    }

    #[test]
    fn progressions_decompose_at_one() {
        let d = decompose_at(&nf(&[0, 1, 2, 3]), 1).unwrap();
        assert!(d.valid);
        assert_eq!(d.small1, Vec::<u64>::new());
        assert_eq!(d.middle, Some((0, 3)));
        assert_eq!(d.right_block, Vec::<u64>::new());
        assert_eq!(d.render(), "∅ ⊔ [0,3] ⊔ ∅");
    }

    #[test]
    fn one_fold_decomposition_can_already_be_valid() {
        let d = decompose_at(&nf(&[0, 2, 4, 5, 7]), 1).unwrap();
        assert!(d.valid);
        assert_eq!(d.middle, Some((4, 5)));
        assert_eq!(d.render(), "{0,2} ⊔ [4,5] ⊔ {7}");
    }

    #[test]
    fn macaulay_set_fails_at_one() {
        // 1A = {0,1,3,4} but the blocks predict [0,4]
        let d = decompose_at(&nf(&[0, 1, 3, 4]), 1).unwrap();
        assert!(!d.valid);
        assert_eq!(d.reason, Some(DecompositionDefect::SetMismatch));
        assert!(decompose_at(&nf(&[0, 1, 3, 4]), 2).unwrap().valid);
    }

    #[test]
    fn zero_fold_rejected() {
        assert_eq!(
            decompose_at(&nf(&[0, 1, 2]), 0).unwrap_err(),
            Error::ZeroFold
        );
    }

    #[test]
    fn interval_empty_reason_code() {
        // {0, 2, 21}: c1 = 20, c2 = 360, so the middle interval needs
        // s * 21 >= 380, i.e. s >= 19.
        let a = nf(&[0, 2, 21]);
        let d = decompose_at(&a, 1).unwrap();
        assert!(!d.valid);
        assert_eq!(d.reason, Some(DecompositionDefect::IntervalEmpty));
        assert_eq!(d.middle, None);
    }

    #[test]
    fn stabilization_examples() {
        let c = stabilization_threshold(&nf(&[0, 2, 4, 5, 7])).unwrap();
        assert_eq!(c.sigma_empirical, 1);
        assert_eq!(c.sigma_formula, 1);

        let c = stabilization_threshold(&nf(&[0, 1, 2])).unwrap();
        assert_eq!(c.sigma_empirical, 1);
        assert_eq!(c.sigma_formula, 1);

        let c = stabilization_threshold(&nf(&[0, 1, 3, 4])).unwrap();
        assert_eq!(c.sigma_empirical, 2);
        assert_eq!(c.sigma_formula, 2);
    }

    #[test]
    fn refinement_identity_examples() {
        let r = verify_refinement(&nf(&[0, 2, 4, 5, 7])).unwrap();
        assert!(r.ok);
        assert_eq!((r.delta1, r.c1, r.small1_count), (2, 4, 2));
        assert_eq!((r.delta2, r.c2, r.small2_count), (1, 2, 1));

        let r = verify_refinement(&nf(&[0, 1, 3, 4])).unwrap();
        assert!(r.ok);
        assert_eq!((r.delta1, r.c1, r.small1_count), (0, 0, 0));

        let r = verify_refinement(&nf(&[0, 7, 8, 9, 10])).unwrap();
        assert!(r.ok);
        assert_eq!((r.delta1, r.c1, r.small1_count), (9, 14, 5));
    }
}
