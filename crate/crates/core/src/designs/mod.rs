//! Spreads, building sets and the difference sets assembled from them.

pub mod building;
pub mod gf2m;
pub mod spread;

pub use building::{
    assemble_difference_set, construct_building_sets, construct_with_poly, decompose_difference_set,
    full_translate_coefficients, quotient_building_sets, sum_identity_check, verify_building_sets,
    BuildingSetFamily, Construction, Decomposition, DifferenceSetJson, FamilyJson, Provenance,
    QuotientFamily, SubgroupJson, SumIdentityReport, SylowType, VerifyReport, Violation,
};
pub use gf2m::Gf2m;
pub use spread::{check_spread, gf2m_spread, SpreadCheck, SpreadFamily};
