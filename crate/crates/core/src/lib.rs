pub mod chambers;
pub mod error;
pub mod feasibility;
pub mod flag;
pub mod git;
pub mod laurent;
pub mod multiplicity;
pub mod principal;
pub mod report;
pub mod rootsys;
pub mod selftest;
pub mod weyl;

pub use error::{Error, Result};
pub use flag::FlagVariety;
pub use principal::PrincipalElement;
pub use rootsys::{CartanType, Family, RationalWeight, RootSystem, SimpleType, Weight};
pub use weyl::{ElementId, WeylGroup, DEFAULT_WEYL_GUARD};
