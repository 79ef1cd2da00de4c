//! Exact-arithmetic engine for finitely presented braided monoidal linear
//! categories, categories enriched over them, and module tensor categories.

pub mod category;
pub mod report;
pub mod scalar;
pub mod base;
pub mod fixtures;
pub mod enriched;
pub mod mates;
pub mod modtens;
pub mod equivalence;
pub mod grading;
pub mod io;
