//! Transversals with restricted character sums: classification into
//! types I and II, the structural lemmas as checkers, and exhaustive
//! search oracles.

pub mod classify;
pub mod lemmas;
mod lift;
pub mod oracle;

pub use classify::{
    classify_transversal, orthogonality_of, spread_orthogonality_check, type_i_complete,
    type_i_fast, type_i_structure_report, ClassificationReport, OrthogonalityReport, TypeI,
    TypeII, TypeIStructure,
};
pub use lemmas::{cong_restrict, cz43_check, eg_find_order2, extract_coset_e2, CongReport, Cz43Report};
pub use lift::{brute_force_transversals, half_modulus_transversals, LiftOutcome};
pub use oracle::{
    ei_ej_sweep, oracle_size, oracle_z43, z43_normalized, BranchResult, SearchReport, SweepOptions,
    Z43Options,
};

use crate::characters::{all_sums_exact, norm_sq_two_group};
use crate::error::Result;
use crate::group::ElementSet;

/// `|chi(E)| in {|E|/2, 0}` for every nonprincipal character, exactly.
pub fn has_half_modulus(e: &ElementSet) -> Result<bool> {
    let target = (e.len() * e.len() / 4) as i64;
    let norms = norm_sq_two_group(e)?;
    Ok(norms[1..]
        .iter()
        .all(|&x| x == Some(0) || (e.len().is_multiple_of(2) && x == Some(target))))
}

/// `l` divides the real and imaginary part of every `chi(E)`.
pub fn all_sums_divisible(e: &ElementSet, l: i64) -> Result<bool> {
    Ok(all_sums_exact(e)?
        .iter()
        .all(|z| z.re % l == 0 && z.im % l == 0))
}
