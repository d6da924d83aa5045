//! Degree-truncated rewriting for `ℂQ/𝔦`: completion, normal forms, graded
//! dimensions, and the associated graded ideal `gr 𝔦`.

mod graded;
mod system;

pub use graded::{
    gr_ideal, is_gradable, minimal_relation_counts, GrIdealReport, GradabilityReport,
};
pub use system::{RewriteSystem, Rule};

/// Completes `p` up to `degree_bound`.
pub fn complete(p: &crate::ncalg::Presentation, degree_bound: usize) -> crate::Result<RewriteSystem> {
    RewriteSystem::complete(p, degree_bound)
}
