//! Spec-file parsing, reports and plot rendering behind the `bicurve` binary.

pub mod input;
pub mod render;
pub mod report;
