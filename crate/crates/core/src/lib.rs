//! Machine computation of 2-primary stable stems.
//!
//! The pipeline mirrors the standard machine approach: compute the Adams
//! $E_2$-page by minimal resolution over the Steenrod algebra, lift the
//! resolution to the Brown-Peterson world and run a Curtis-table reduction to
//! obtain the algebraic Novikov spectral sequence (equivalently, the Adams
//! spectral sequence for the cofiber of τ), transfer differentials to the
//! sphere, solve hidden τ extensions with the long exact sequence of the
//! cofiber, and assemble stem groups, Kervaire-Milnor groups and charts.

pub mod f2;
pub mod steenrod;
pub mod resolution;
pub mod oracle;
pub mod bp;
pub mod ledger;
pub mod homotopy;
pub mod charts;
pub mod cli;

pub use f2::{F2Matrix, F2Vector, ZModMatrix};
