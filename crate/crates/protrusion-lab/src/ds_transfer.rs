//! Carrying the nonequivalent planar family to Dominating Set.
//!
//! The triangle transform turns vertex covers into dominating sets: for a
//! graph without isolated vertices the minimum vertex cover equals the
//! minimum dominating set of the transformed graph. Applying it to the
//! planar Independent Set family yields a planar Dominating Set family
//! whose members are separated by glued transformed indicator graphs.

use crate::construction::family::{build_planar_family, FamilyMember};
use crate::error::{Error, Result};
use crate::graph::BoundariedGraph;
use crate::oracle::{min_dominating_set, min_vertex_cover};

/// Check the classic reduction on one graph: `vc(G) = ds(triangle(G))`.
/// The identity needs every vertex to have a neighbor.
pub fn verify_vc_equals_ds(g: &BoundariedGraph) -> Result<bool> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(min_vertex_cover(g)? == min_dominating_set(&g.triangle_transform())?)
}

/// A Dominating Set family member: the transformed graph plus the
/// Independent Set member it came from.
#[derive(Debug, Clone)]
pub struct DsFamilyMember {
    pub source: FamilyMember,
    pub graph: BoundariedGraph,
}

/// The transformed family: one planar graph per non-constant monotone
/// function.
pub fn build_ds_family(t: usize) -> Result<Vec<DsFamilyMember>> {
    let family = build_planar_family(t)?;
    Ok(family
        .into_iter()
        .map(|member| {
            let graph = member.graph.triangle_transform();
            DsFamilyMember {
                source: member,
                graph,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SubsetMask;
    use crate::metrics::planarity::is_planar;

    #[test]
    fn vc_equals_ds_on_small_graphs() {
        let edge = BoundariedGraph::new(2, [(0, 1)], vec![0]).unwrap();
        assert!(verify_vc_equals_ds(&edge).unwrap());
        let k3 = BoundariedGraph::new(3, [(0, 1), (1, 2), (0, 2)], vec![0]).unwrap();
        assert!(verify_vc_equals_ds(&k3).unwrap());
        let with_isolated = BoundariedGraph::new(3, [(0, 1)], vec![0]).unwrap();
        assert!(matches!(
            verify_vc_equals_ds(&with_isolated),
            Err(Error::IsolatedVertex(2))
        ));
    }

    #[test]
    fn vc_equals_ds_on_random_graphs() {
        let mut state = 0x5eedu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut verified = 0;
        while verified < 40 {
            let n = 2 + (next() % 7) as u32;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 100 < 45 {
                        edges.push((u, v));
                    }
                }
            }
            let g = BoundariedGraph::new(n, edges, vec![0]).unwrap();
            if g.has_isolated_vertex() {
                continue;
            }
            assert!(verify_vc_equals_ds(&g).unwrap());
            verified += 1;
        }
    }

    #[test]
    fn ds_family_members_are_planar_and_isolated_free() {
        let family = build_ds_family(2).unwrap();
        assert_eq!(family.len(), 4);
        for member in &family {
            assert!(is_planar(&member.graph));
            assert!(!member.graph.has_isolated_vertex());
            // boundary stays an independent set after the transform
            assert!(member.graph.boundary_is_independent());
        }
    }

    #[test]
    fn transform_commutes_with_gluing_on_independent_boundaries() {
        // triangle(G1 + G2) = triangle(G1) + triangle(G2) whenever both
        // boundaries are independent sets
        let family = build_planar_family(2).unwrap();
        for member in family.iter().take(2) {
            for s in SubsetMask::all(2) {
                let indicator = BoundariedGraph::indicator(s);
                let lhs = member.graph.glue(&indicator).unwrap().triangle_transform();
                let rhs = member
                    .graph
                    .triangle_transform()
                    .glue(&indicator.triangle_transform())
                    .unwrap();
                assert!(lhs.boundary_isomorphic(&rhs), "subset {:?}", s);
            }
        }
    }
}
