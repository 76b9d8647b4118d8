//! Realize any representative function as a boundaried graph.
//!
//! The construction: boundary vertices `v_1..v_t`, a pendant partner `u_i`
//! per label, and for each subset `S` with `f(S) > 0` a set `V_S` of `f(S)`
//! false twins adjacent to `u_i` for labels in `S`, to `v_i` for labels
//! outside `S`, and to every vertex of every other twin set. The normalized
//! boundary function of the result is exactly `f`.

use crate::equivalence::RepresentativeFunction;
use crate::error::Result;
use crate::graph::{BoundariedGraph, SubsetMask};
use crate::oracle::{boundary_function, normalize};

/// Build the graph realizing `f`. Twin sets are laid out in ascending mask
/// order with consecutive ids, so output is deterministic.
pub fn realize_function(f: &RepresentativeFunction) -> BoundariedGraph {
    let t = f.t();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    // boundary v_i = i-1, partner u_i = t + i - 1
    for i in 0..t as u32 {
        edges.push((i, t as u32 + i));
    }
    let mut twin_sets: Vec<(SubsetMask, Vec<u32>)> = Vec::new();
    let mut next = 2 * t as u32;
    for s in SubsetMask::all(t) {
        let size = f.value(s);
        if size == 0 {
            continue;
        }
        let members: Vec<u32> = (0..size).map(|k| next + k).collect();
        next += size;
        for &w in &members {
            for i in 1..=t {
                if s.contains_label(i) {
                    edges.push((t as u32 + (i - 1) as u32, w)); // u_i
                } else {
                    edges.push(((i - 1) as u32, w)); // v_i
                }
            }
            for (_, previous) in &twin_sets {
                for &p in previous {
                    edges.push((p, w));
                }
            }
        }
        twin_sets.push((s, members));
    }
    BoundariedGraph::new(next, edges, (0..t as u32).collect())
        .expect("realization is always a valid graph")
}

/// Full verification loop: realize `f`, compute its boundary function with
/// the oracle, normalize, and compare pointwise.
pub fn verify_realization(f: &RepresentativeFunction) -> Result<bool> {
    let g = realize_function(f);
    let measured = normalize(&boundary_function(&g)?)?;
    Ok(measured.values() == f.values())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::{enumerate_representative_functions, equivalent, Equivalence};
    use crate::oracle::boundary_function;

    #[test]
    fn zero_function_gives_pendant_matching() {
        let f = RepresentativeFunction::new(1, vec![0, 0]).unwrap();
        let g = realize_function(&f);
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn singleton_function_example() {
        let f = RepresentativeFunction::new(1, vec![0, 1]).unwrap();
        let g = realize_function(&f);
        assert_eq!(g.n(), 3);
        // twin vertex adjacent to u_1 only
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        let bf = boundary_function(&g).unwrap();
        assert_eq!(bf.values(), &[1, 2]);
        assert!(verify_realization(&f).unwrap());
    }

    #[test]
    fn unnormalized_values_are_t_plus_f() {
        for t in 1..=2 {
            for f in enumerate_representative_functions(t).unwrap() {
                let g = realize_function(&f);
                let bf = boundary_function(&g).unwrap();
                for (m, &v) in bf.values().iter().enumerate() {
                    assert_eq!(v, t as u32 + f.values()[m], "t={t} mask={m}");
                }
            }
        }
    }

    #[test]
    fn all_small_functions_verify() {
        for t in 1..=2 {
            for f in enumerate_representative_functions(t).unwrap() {
                assert!(verify_realization(&f).unwrap(), "t={t} f={:?}", f.values());
            }
        }
    }

    #[test]
    fn vertex_count_formula() {
        for f in enumerate_representative_functions(2).unwrap() {
            let g = realize_function(&f);
            let total: u32 = f.values().iter().sum();
            assert_eq!(g.n(), 4 + total);
            assert!(!g.has_isolated_vertex());
        }
    }

    #[test]
    fn distinct_functions_give_nonequivalent_graphs() {
        let fns = enumerate_representative_functions(2).unwrap();
        let graphs: Vec<_> = fns.iter().map(realize_function).collect();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                match equivalent(&graphs[i], &graphs[j]).unwrap() {
                    Equivalence::Nonequivalent { .. } => {}
                    Equivalence::Equivalent { .. } => {
                        panic!("functions {i} and {j} collided")
                    }
                }
            }
        }
    }

    #[test]
    fn exchange_bound_holds_for_enumerated_functions() {
        // f(S') - |S' \ S| <= f(S) for all pairs; the realization proof
        // depends on it
        for t in 1..=3.min(crate::equivalence::ENUMERATION_LIMIT) {
            for f in enumerate_representative_functions(t).unwrap() {
                let n = 1u64 << t;
                for s in 0..n {
                    for sp in 0..n {
                        let diff = (sp & !s).count_ones();
                        assert!(
                            f.values()[sp as usize] as i64 - diff as i64
                                <= f.values()[s as usize] as i64
                        );
                    }
                }
            }
        }
    }
}
