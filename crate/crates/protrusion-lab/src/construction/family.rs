//! The family of pairwise nonequivalent planar boundaried graphs: one
//! member per non-constant monotone Boolean function.

use crate::construction::gphi::{build_g_phi_with_plan, planarize_g_phi, ConstructionPlan, Drawing};
use crate::error::{Error, Result};
use crate::graph::BoundariedGraph;
use crate::monotone::{enumerate_monotone_functions, monotone_to_cnf, MonotoneBoolFunction, MonotoneCnf};

/// Largest boundary size for family construction.
pub const FAMILY_LIMIT: usize = 3;

#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub function: MonotoneBoolFunction,
    pub cnf: MonotoneCnf,
    /// the unplanarized path-and-clause graph
    pub g_phi: BoundariedGraph,
    pub drawing: Drawing,
    /// the planarized graph
    pub graph: BoundariedGraph,
    pub plan: ConstructionPlan,
}

/// Build the planarized member for one non-constant monotone function.
pub fn build_member(t: usize, f: &MonotoneBoolFunction) -> Result<FamilyMember> {
    let cnf = monotone_to_cnf(f)?;
    let (g_phi, drawing, plan) = build_g_phi_with_plan(t, &cnf)?;
    let graph = planarize_g_phi(&g_phi, &drawing)?;
    Ok(FamilyMember {
        function: *f,
        cnf,
        g_phi,
        drawing,
        graph,
        plan,
    })
}

/// One planar graph per non-constant monotone function of `t` variables,
/// ordered by truth table: `M(t) - 2` members.
pub fn build_planar_family(t: usize) -> Result<Vec<FamilyMember>> {
    if t == 0 || t > FAMILY_LIMIT {
        return Err(Error::BoundaryTooLarge {
            what: "planar family construction",
            t,
            limit: FAMILY_LIMIT,
        });
    }
    enumerate_monotone_functions(t)?
        .iter()
        .filter(|f| !f.is_constant())
        .map(|f| build_member(t, f))
        .collect()
}
