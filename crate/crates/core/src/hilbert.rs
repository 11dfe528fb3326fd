//! Hilbert data of the monomial projective curve attached to a normalized
//! set: the asymptotic polynomial `a_n * s + 1 - delta_1 - delta_2`, the
//! index from which the growth table agrees with it, the singularity orders
//! of the two torus-fixed points, and the combinatorial regularity bounds.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::semigroup::{left_semigroup, right_semigroup};
use crate::sumset::{GrowthTable, NormalForm};

/// Asymptotic data of the growth table.
///
/// `|sA| = hp_slope * s + hp_const` for all `s >= r`, and `r <= rho`. The
/// index `r` is always computed by a descending scan of the growth table
/// against the polynomial, never taken from a closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// Degree of the curve, `a_n`.
    pub hp_slope: u64,
    /// `1 - delta_1 - delta_2`.
    pub hp_const: i64,
    /// Least `s_0` with `|sA| = hp_slope * s + hp_const` for all `s >= s_0`.
    pub r: u64,
    /// Combinatorial regularity bound `rho(A)`; agreement is certified for
    /// all `s >= rho`.
    pub rho: u64,
}

impl HilbertData {
    /// Polynomial value `hp_slope * s + hp_const`.
    pub fn hp(&self, s: u64) -> i64 {
        self.hp_slope as i64 * s as i64 + self.hp_const
    }
}

/// Singularity orders of the two torus-fixed points and the arithmetic genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityReport {
    /// Gap count of `<a_2, ..., a_n>`.
    pub delta1: u64,
    /// Gap count of `<a_n - a_{n-1}, ..., a_n - a_2, a_n>`.
    pub delta2: u64,
    /// The left point is non-singular iff `a_2 = 1`.
    pub smooth1: bool,
    /// The right point is non-singular iff `a_n - a_{n-1} = 1`.
    pub smooth2: bool,
    /// Arithmetic genus `delta1 + delta2`.
    pub pa: u64,
}

/// Regularity bound `rho(A) = 1 + max over i < j of (gap_i + gap_j)`, the
/// largest sum of two consecutive differences at distinct positions.
///
/// For `n = 2` the pair maximum is empty and the single-gap convention
/// `rho = 1 + 2 * (a_2 - a_1)` applies (equal to 3 on a normal form).
pub fn rho_bound(a: &NormalForm) -> u64 {
    let gaps = a.gaps();
    if gaps.len() == 1 {
        return 1 + 2 * gaps[0];
    }
    let mut top = [0u64; 2];
    for g in gaps {
        if g >= top[0] {
            top[1] = top[0];
            top[0] = g;
        } else if g > top[1] {
            top[1] = g;
        }
    }
    1 + top[0] + top[1]
}

pub fn singularity_report(a: &NormalForm) -> Result<SingularityReport> {
    let delta1 = left_semigroup(a)?.genus();
    let delta2 = right_semigroup(a)?.genus();
    let els = a.elements();
    Ok(SingularityReport {
        delta1,
        delta2,
        smooth1: els[1] == 1,
        smooth2: a.a_n() - els[els.len() - 2] == 1,
        pa: delta1 + delta2,
    })
}

pub fn hilbert_polynomial(a: &NormalForm) -> Result<HilbertData> {
    let rho = rho_bound(a);
    let table = a.growth_table(rho)?;
    hilbert_from_table(a, &table)
}

/// Same as [`hilbert_polynomial`] but reusing a growth table that reaches at
/// least `rho(A)`.
pub(crate) fn hilbert_from_table(a: &NormalForm, table: &GrowthTable) -> Result<HilbertData> {
    let rho = rho_bound(a);
    let sing = singularity_report(a)?;
    let hp_slope = a.a_n();
    let hp_const = 1 - sing.pa as i64;
    debug_assert!(table.len() as u64 > rho);
    let hp = |s: u64| hp_slope as i64 * s as i64 + hp_const;
    debug_assert_eq!(table.value(rho) as i64, hp(rho));
    let mut r = rho;
    while r > 0 && table.value(r - 1) as i64 == hp(r - 1) {
        r -= 1;
    }
    Ok(HilbertData {
        hp_slope,
        hp_const,
        r,
        rho,
    })
}

/// Sharper regularity bound `1 + max gap`, available only when both points
/// are smooth (the curve has no other candidate singularities).
pub fn smooth_reg_bound(a: &NormalForm) -> Result<Option<u64>> {
    let sing = singularity_report(a)?;
    if sing.smooth1 && sing.smooth2 {
        Ok(Some(1 + a.gaps().into_iter().max().expect("n >= 2")))
    } else {
        Ok(None)
    }
}

/// Exponent pairs `(a_n - a_i, a_i)` of the parameterization
/// `X_i -> u^(a_n - a_i) v^(a_i)`.
pub fn parameterization(a: &NormalForm) -> Vec<(u64, u64)> {
    let a_n = a.a_n();
    a.elements().iter().map(|&ai| (a_n - ai, ai)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsViolation {
    pub s: u64,
    pub card: u64,
    pub lower: u64,
    pub upper: u128,
}

/// Result of checking `s(n-1) + 1 <= |sA| <= C(s+n-1, s)` for all
/// `0 <= s <= s_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub checked_to: u64,
    pub violation: Option<BoundsViolation>,
}

impl BoundsReport {
    pub fn ok(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn bounds_check(a: &NormalForm, s_max: u64) -> Result<BoundsReport> {
    let table = a.growth_table(s_max)?;
    let n = a.n() as u64;
    for s in 0..=s_max {
        let card = table.value(s);
        let lower = s * (n - 1) + 1;
        let upper = binomial_saturating(s + n - 1, s);
        if (card as u128) < lower as u128 || card as u128 > upper {
            return Ok(BoundsReport {
                checked_to: s_max,
                violation: Some(BoundsViolation {
                    s,
                    card,
                    lower,
                    upper,
                }),
            });
        }
    }
    Ok(BoundsReport {
        checked_to: s_max,
        violation: None,
    })
}

/// `C(n, k)` with saturation far above any sumset cardinality.
pub(crate) fn binomial_saturating(n: u64, k: u64) -> u128 {
    const CAP: u128 = 1 << 90;
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 1..=k {
        c = c * (n - k + i) as u128 / i as u128;
        if c > CAP {
            return CAP;
        }
    }
    c
}
