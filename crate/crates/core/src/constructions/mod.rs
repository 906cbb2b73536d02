//! Builders for the explicit linear maps and presented spaces this toolkit
//! certifies: the fixed (quartic-independent) maps on the degree-1 and
//! degree-2 pieces of the P³ coordinate ring, the quartic-dependent towers of
//! section spaces on a surface, and the integer dimension tables tying the
//! surface and curve counts together.
//!
//! Every builder returns plain [`LinearMap`]s / [`Subquotient`]s over
//! canonical bases, so each claimed kernel, injectivity, or surjectivity can
//! be certified downstream. Builders validate their own shape arithmetic and
//! report degenerate inputs via [`SpaceError`] instead of producing
//! meaningless output.

pub mod fixed;
pub mod on_surface;
pub mod tables;

pub use fixed::{
    antisymmetrize_first_two, build_g, build_g_on, build_h, build_h1, build_r, delta1, identity_v2,
    RVariant,
};
pub use on_surface::{
    build_h2, build_k1, build_v, build_v_from, euler_sections, euler_tower, hom_f_o5,
    hom_f_o5_exact, hom_f_o5_map, hom_m_m4, EulerTower, HomFO5,
};
pub use tables::{pushforward_identity, thm_main_obstruction, w_table, WRow, WTable};

use crate::spaces::{graded_piece, RingSpec, Space, SpaceError};

/// The degree-1 piece of a ring as a [`Space`] (dimension 4 for the rings
/// handled here).
pub(crate) fn piece_space(ring: &RingSpec, d: i64) -> Result<Space, SpaceError> {
    Ok(Space::graded(&graded_piece(ring, d)?))
}
