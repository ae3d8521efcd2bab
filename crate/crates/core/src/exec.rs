//! Execution mode shared by the solver, the checkers, and table generation.
//!
//! `Sequential` is fully deterministic, including witnesses and node counts.
//! `Parallel` fans data-parallel loops out over rayon and is only used where
//! the result is scheduling-independent (optimum sizes, boolean presence
//! queries, independent table cells). With the `parallel` feature disabled
//! the `Parallel` mode degrades to the sequential path.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

impl ExecMode {
    /// True when parallel execution is both requested and compiled in.
    #[inline]
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == ExecMode::Parallel
    }

    /// Mode for a requested worker count: one worker means sequential.
    pub fn for_workers(workers: usize) -> ExecMode {
        if workers == 1 {
            ExecMode::Sequential
        } else {
            ExecMode::Parallel
        }
    }
}
