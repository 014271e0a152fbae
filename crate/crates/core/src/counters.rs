//! Per-thread instrumentation of scalar work.
//!
//! Every rational addition, subtraction, multiplication and division bumps a
//! thread-local counter, as does every minor evaluation. [`measure`] reports
//! the difference across a closure so nested measurements compose.

use std::cell::Cell;

thread_local! {
    static SCALAR_OPS: Cell<u64> = const { Cell::new(0) };
    static MINOR_EVALS: Cell<u64> = const { Cell::new(0) };
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    /// Rational additions, subtractions, multiplications and divisions.
    pub scalar_ops: u64,
    /// Calls to [`crate::compounds::minor`].
    pub minor_evals: u64,
}

#[inline]
pub(crate) fn bump_scalar() {
    SCALAR_OPS.with(|c| c.set(c.get().wrapping_add(1)));
}

#[inline]
pub(crate) fn bump_minor() {
    MINOR_EVALS.with(|c| c.set(c.get().wrapping_add(1)));
}

fn snapshot() -> OpCounts {
    OpCounts {
        scalar_ops: SCALAR_OPS.with(Cell::get),
        minor_evals: MINOR_EVALS.with(Cell::get),
    }
}

/// Runs `f` and returns its result with the work it performed on this thread.
pub fn measure<T>(f: impl FnOnce() -> T) -> (T, OpCounts) {
    let before = snapshot();
    let out = f();
    let after = snapshot();
    (
        out,
        OpCounts {
            scalar_ops: after.scalar_ops.wrapping_sub(before.scalar_ops),
            minor_evals: after.minor_evals.wrapping_sub(before.minor_evals),
        },
    )
}
