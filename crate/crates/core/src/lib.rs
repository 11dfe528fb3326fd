//! Exact arithmetic for iterated sumsets of finite integer sets and the
//! invariant suite of the associated monomial projective curve.
//!
//! Given a finite set `A` of non-negative integers in normal form
//! (`0 = a_1 < a_2 < ... < a_n`, `gcd(a_2, ..., a_n) = 1`), the crate
//! computes:
//!
//! - iterated sumsets `sA` and the growth table `|sA|` ([`sumset`]);
//! - the germ semigroups at the two ends of the curve
//!   `(u:v) -> (u^(a_n - a_i) v^(a_i))_i`, with Frobenius number, conductor,
//!   gaps and genus ([`semigroup`]);
//! - the asymptotic polynomial `a_n s + 1 - delta_1 - delta_2` of the growth
//!   table, the regularity index, the singularity report and the
//!   combinatorial regularity bounds ([`hilbert`]);
//! - the three-block decomposition of `sA` with its exact stabilization
//!   threshold ([`decomposition`]);
//! - binomial membership and canonical minimal generators of the curve's
//!   defining ideal via fiber-graph components ([`ideal`]);
//! - executable theorem checks and a per-set verification suite
//!   ([`theorems`]), a family-sweep driver ([`sweep`]), and a full JSON/text
//!   report ([`report`]).
//!
//! All operations are pure functions on immutable values and safe to call
//! concurrently.

pub mod bits;
pub mod decomposition;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod limits;
pub mod report;
pub mod semigroup;
pub mod sumset;
pub mod sweep;
pub mod theorems;

pub use decomposition::{
    decompose_at, stabilization_threshold, verify_refinement, Decomposition, DecompositionDefect,
    StabilizationCertificate,
};
pub use error::{Error, Result};
pub use hilbert::{
    bounds_check, hilbert_polynomial, parameterization, rho_bound, singularity_report,
    smooth_reg_bound, HilbertData, SingularityReport,
};
pub use ideal::{
    binomial_in_ideal, default_degree_cap, fiber, minimal_generators, verify_ideal, Binomial,
    Fiber, GeneratorSet, IdealGenerator,
};
pub use report::{analyze, AnalysisOptions, AnalysisReport};
pub use semigroup::{left_semigroup, right_semigroup, NumericalSemigroup};
pub use sumset::{GrowthTable, NormalForm, RawSet, SumsetImage};
pub use sweep::{enumerate_sets, run_sweep, SweepConfig, SweepOutcome, SweepRow, CSV_HEADER};
pub use theorems::{
    bermejo_bound, cm_test, lev_check, rigidity_classifier, verify_suite, verify_suite_with,
    CheckSelection, RigidityReport, SuiteReport, TheoremReport,
};
