//! Gadget constructions: clause gadgets, the crossover gadget, the
//! path-and-clause graphs encoding monotone CNFs, their planarization, the
//! resulting family of pairwise nonequivalent planar graphs, and
//! pathwidth certificates for all of it.

pub mod cleaning;
pub mod family;
pub mod gadgets;
pub mod gphi;

pub use cleaning::generate_cleaning_schedule;
pub use family::{build_member, build_planar_family, FamilyMember, FAMILY_LIMIT};
pub use gadgets::{
    clause_gadget, crossover_gadget, ClauseGadget, CrossoverGadget, CrossoverTerminals,
    CROSSOVER_SHIFT, CROSSOVER_SIZE, CROSSOVER_TABLE,
};
pub use gphi::{
    build_g_phi, planarize_crossing, planarize_g_phi, ConstructionPlan, Drawing, DrawingEntry,
    GadgetPlacement,
};
