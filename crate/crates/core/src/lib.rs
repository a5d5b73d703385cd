//! Quotient sets `A⁻¹A` in finite groups and the structure of sets whose
//! quotient set is smaller than `5/3 |A|`.

pub mod algebra;
pub mod census;
pub mod check;
pub mod classify;
pub mod cli;
pub mod error;
pub mod group;
pub mod set;
pub mod subgroup;

pub use error::{Error, Result};
pub use group::{build_group, ElementId, GroupTable};
pub use set::ElemSet;
