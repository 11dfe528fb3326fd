//! Desk-scale resource limits. Everything here exists so that oversized
//! inputs fail with a clear error instead of exhausting memory.

use crate::error::{Error, Result};

/// Largest element a normalized set may contain.
pub const MAX_NORMALIZED_ELEMENT: u64 = 1 << 20;

/// Default cap on bitmap allocations, in bytes.
pub const DEFAULT_MEMORY_BUDGET: u64 = 256 * 1024 * 1024;

/// Total monomials a single ideal computation may enumerate.
pub const MAX_FIBER_MONOMIALS: u64 = 4_000_000;

/// Total sets a single sweep may enumerate.
pub const MAX_SWEEP_SETS: u64 = 500_000;

/// Current bitmap budget in bytes. `MONOCURVE_MEMORY_BUDGET` overrides the
/// default.
pub fn memory_budget_bytes() -> u64 {
    std::env::var("MONOCURVE_MEMORY_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MEMORY_BUDGET)
}

/// Check that an allocation of `bits` bits (possibly double-buffered) fits
/// the budget.
pub(crate) fn check_bitmap_budget(what: &'static str, bits: u64, buffers: u64) -> Result<()> {
    let bytes = bits
        .div_ceil(8)
        .checked_mul(buffers)
        .ok_or(Error::Overflow("bitmap size"))?;
    let budget = memory_budget_bytes();
    if bytes > budget {
        return Err(Error::ResourceLimit {
            what,
            required: bytes,
            budget,
        });
    }
    Ok(())
}
