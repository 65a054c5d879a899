//! Independent reference implementations used as test oracles.
//!
//! Everything in this module is deliberately written against different
//! presentations than the main code paths: products are checked against
//! Adem-relation rewriting in the admissible basis, and Ext dimensions are
//! checked against the cobar complex of the dual Steenrod algebra and
//! against the lambda algebra. None of it shares code with the resolution
//! engine beyond the generic GF(2) matrix kernel.

pub mod adem;
pub mod cobar;
pub mod lambda;
