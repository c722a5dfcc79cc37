//! Memory budgeting for the dense DP tables.
//!
//! Every table builder computes its exact allocation up front and refuses to
//! allocate past the caller's byte budget, so an oversized instance fails
//! fast with a diagnostic instead of thrashing the machine.

use thiserror::Error;

/// Default ceiling on the table bytes a single solve may allocate (1 GiB).
/// The CLI overrides it via the `CLCS_MEMORY_BUDGET` environment variable.
pub const DEFAULT_MEMORY_BUDGET: usize = 1 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("DP tables need {required} bytes but the memory budget is {budget} bytes")]
pub struct CapacityError {
    pub required: usize,
    pub budget: usize,
}

/// Exact byte cost of a dense table with the given dimensions, or `None` on
/// overflow (which by itself already exceeds any real budget).
pub(crate) fn table_bytes(dims: &[usize], cell_size: usize) -> Option<usize> {
    dims.iter()
        .try_fold(cell_size, |acc, &d| acc.checked_mul(d))
}

/// Check a (possibly overflowed) byte requirement against the budget.
pub(crate) fn check_budget(required: Option<usize>, budget: usize) -> Result<usize, CapacityError> {
    match required {
        Some(r) if r <= budget => Ok(r),
        Some(r) => Err(CapacityError {
            required: r,
            budget,
        }),
        None => Err(CapacityError {
            required: usize::MAX,
            budget,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn byte_cost_is_exact() {
        assert_eq!(table_bytes(&[3, 4, 5], 8), Some(480));
        assert_eq!(table_bytes(&[], 16), Some(16));
        assert_eq!(table_bytes(&[usize::MAX, 2], 8), None);
    }

    #[test]
    fn budget_check() {
        assert_eq!(check_budget(Some(100), 100), Ok(100));
        assert_eq!(
            check_budget(Some(101), 100),
            Err(CapacityError {
                required: 101,
                budget: 100
            })
        );
        assert!(check_budget(None, usize::MAX).is_err());
    }
}
