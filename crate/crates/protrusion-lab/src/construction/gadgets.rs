//! The clause gadget and the crossover gadget.
//!
//! The clause gadget is a chain of triangles whose maximum independent sets
//! encode clause satisfaction through which terminal they pick. The
//! crossover gadget is a fixed 22-vertex planar graph that replaces one
//! edge crossing while shifting the independent-set optimum by exactly
//! nine; its constrained-optimum table is validated the first time it is
//! requested, and a corrupted table refuses to load.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::BoundariedGraph;
use crate::metrics::planarity::is_planar_edges;
use crate::oracle::constrained_max_independent_set;

/// Chain of `k` triangles with path endpoints; terminal `v_i` in each
/// triangle is the vertex that encodes "clause satisfied by literal i".
#[derive(Debug, Clone)]
pub struct ClauseGadget {
    pub k: usize,
    pub n: u32,
    pub edges: Vec<(u32, u32)>,
    pub v_start: u32,
    pub v_end: u32,
    /// terminal `v_i` per literal position, 1-based positions at index 0..k
    pub terminals: Vec<u32>,
    /// triangles `(u_i, v_i, w_i)` in chain order
    pub triangles: Vec<(u32, u32, u32)>,
}

/// Build the clause gadget of size `k >= 1`: triangles `{u_i, v_i, w_i}`
/// chained by `{w_i, u_{i+1}}`, with pendant `v_start` before `u_1` and
/// `v_end` after `w_k`.
pub fn clause_gadget(k: usize) -> ClauseGadget {
    assert!(k >= 1, "clause gadget needs at least one literal");
    let v_start = 0u32;
    let mut edges = Vec::new();
    let mut terminals = Vec::new();
    let mut triangles = Vec::new();
    for i in 0..k as u32 {
        let u = 3 * i + 1;
        let v = 3 * i + 2;
        let w = 3 * i + 3;
        edges.push((u, v));
        edges.push((v, w));
        edges.push((u, w));
        if i == 0 {
            edges.push((v_start, u));
        } else {
            edges.push((w - 3, u));
        }
        terminals.push(v);
        triangles.push((u, v, w));
    }
    let v_end = 3 * k as u32 + 1;
    edges.push((3 * k as u32, v_end));
    ClauseGadget {
        k,
        n: v_end + 1,
        edges,
        v_start,
        v_end,
        terminals,
        triangles,
    }
}

impl ClauseGadget {
    /// Standalone boundaried view (boundary is the start vertex; the labels
    /// play no role in the gadget's own optima).
    pub fn to_graph(&self) -> BoundariedGraph {
        BoundariedGraph::new(self.n, self.edges.iter().copied(), vec![self.v_start])
            .expect("clause gadget is a valid graph")
    }
}

/// Vertex ids of the crossover gadget's four terminals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossoverTerminals {
    pub v: u32,
    pub u: u32,
    pub v_prime: u32,
    pub u_prime: u32,
}

/// The fixed 22-vertex planar crossover gadget.
#[derive(Debug, Clone)]
pub struct CrossoverGadget {
    pub n: u32,
    pub edges: Vec<(u32, u32)>,
    pub terminals: CrossoverTerminals,
}

/// The constrained-optimum contract: entry `[j][i]` is the maximum size of
/// an independent set using exactly `i` of `{v, v'}` and `j` of `{u, u'}`.
pub const CROSSOVER_TABLE: [[u32; 3]; 3] = [[7, 8, 8], [8, 9, 9], [7, 8, 9]];

/// Number of vertices the gadget adds per planarized crossing.
pub const CROSSOVER_SIZE: u32 = 22;
/// Optimum shift per planarized crossing.
pub const CROSSOVER_SHIFT: u32 = 9;

const TERMINALS: CrossoverTerminals = CrossoverTerminals {
    v: 18,
    u: 19,
    v_prime: 20,
    u_prime: 21,
};

fn crossover_edges() -> Vec<(u32, u32)> {
    let CrossoverTerminals {
        v,
        u,
        v_prime,
        u_prime,
    } = TERMINALS;
    let mut edges = vec![
        // coupling core: two bridged triangles plus the u-axis triangle
        (0, 1),
        (0, 2),
        (1, 2),
        (3, 4),
        (3, 5),
        (4, 5),
        (2, 5),
        (6, 7),
        (6, 8),
        (7, 8),
        // stabilizer triangles and path
        (9, 10),
        (9, 11),
        (10, 11),
        (12, 13),
        (12, 14),
        (13, 14),
        (15, 16),
        (16, 17),
    ];
    let spokes: [(u32, &[u32]); 4] = [
        (v, &[0, 3, 8, 16]),
        (u, &[0, 1, 6, 9]),
        (v_prime, &[1, 4]),
        (u_prime, &[3, 4, 7, 8, 12]),
    ];
    for (t, members) in spokes {
        for &x in members {
            edges.push((x, t));
        }
    }
    edges
}

fn build_and_validate() -> Result<CrossoverGadget> {
    let gadget = CrossoverGadget {
        n: CROSSOVER_SIZE,
        edges: crossover_edges(),
        terminals: TERMINALS,
    };
    if gadget.n != 22 {
        return Err(Error::GadgetValidation("vertex count is not 22".into()));
    }
    if !is_planar_edges(gadget.n as usize, &gadget.edges) {
        return Err(Error::GadgetValidation("gadget is not planar".into()));
    }
    let table = gadget.constrained_table()?;
    if table != CROSSOVER_TABLE {
        return Err(Error::GadgetValidation(format!(
            "constrained optima {table:?} do not match the contract {CROSSOVER_TABLE:?}"
        )));
    }
    // for every choice of one v-side and one u-side terminal there is a
    // maximum independent set of size nine avoiding both
    let g = gadget.to_graph();
    let t = gadget.terminals;
    for v_star in [t.v, t.v_prime] {
        for u_star in [t.u, t.u_prime] {
            let best = constrained_max_independent_set(&g, &[], &[v_star, u_star])?
                .expect("no forced vertices");
            if best != 9 {
                return Err(Error::GadgetValidation(format!(
                    "no size-9 independent set avoiding terminals {v_star} and {u_star}"
                )));
            }
        }
    }
    Ok(gadget)
}

/// The crossover gadget, validated on first use against its table, its
/// planarity, and the avoid-any-terminal-pair property.
pub fn crossover_gadget() -> Result<CrossoverGadget> {
    static VALIDATED: OnceLock<std::result::Result<CrossoverGadget, String>> = OnceLock::new();
    match VALIDATED.get_or_init(|| build_and_validate().map_err(|e| e.to_string())) {
        Ok(g) => Ok(g.clone()),
        Err(msg) => Err(Error::GadgetValidation(msg.clone())),
    }
}

impl CrossoverGadget {
    pub fn to_graph(&self) -> BoundariedGraph {
        BoundariedGraph::new(self.n, self.edges.iter().copied(), vec![self.terminals.v])
            .expect("crossover gadget is a valid graph")
    }

    /// Recompute the constrained-optimum table from scratch with the exact
    /// solver: entry `[j][i]` constrains `|X ∩ {v,v'}| = i`, `|X ∩ {u,u'}| = j`.
    pub fn constrained_table(&self) -> Result<[[u32; 3]; 3]> {
        let g = self.to_graph();
        let t = self.terminals;
        let v_pair = [t.v, t.v_prime];
        let u_pair = [t.u, t.u_prime];
        let mut table = [[0u32; 3]; 3];
        for (j, row) in table.iter_mut().enumerate() {
            for (i, cell) in row.iter_mut().enumerate() {
                let mut best: Option<u32> = None;
                for vs in choices(&v_pair, i) {
                    for us in choices(&u_pair, j) {
                        let mut include = vs.clone();
                        include.extend(&us);
                        let mut exclude: Vec<u32> = v_pair
                            .iter()
                            .chain(u_pair.iter())
                            .copied()
                            .filter(|x| !include.contains(x))
                            .collect();
                        exclude.dedup();
                        if let Some(val) =
                            constrained_max_independent_set(&g, &include, &exclude)?
                        {
                            best = Some(best.map_or(val, |b: u32| b.max(val)));
                        }
                    }
                }
                *cell = best.ok_or_else(|| {
                    Error::GadgetValidation(format!(
                        "no feasible set for table entry i={i}, j={j}"
                    ))
                })?;
            }
        }
        Ok(table)
    }
}

fn choices(pair: &[u32; 2], count: usize) -> Vec<Vec<u32>> {
    match count {
        0 => vec![vec![]],
        1 => vec![vec![pair[0]], vec![pair[1]]],
        _ => vec![vec![pair[0], pair[1]]],
    }
}

/// Two-rover sweep of one crossover copy's interior, assuming cleaners are
/// parked on all four terminals. Cleans every interior edge and every
/// terminal spoke; ends with no rovers left inside. Matches the fixed
/// gadget layout, so it is validated together with the gadget data.
pub fn interior_sweep(base: u32) -> Vec<crate::metrics::search::Move> {
    use crate::metrics::search::Move::{Place, Remove, Slide};
    let v = |x: u32| base + x;
    vec![
        // bridged-triangle core {0,1,2} - {3,4,5}
        Place { v: v(2) },
        Place { v: v(0) },
        Slide {
            from: v(0),
            to: v(1),
        },
        Remove { v: v(1) },
        Slide {
            from: v(2),
            to: v(5),
        },
        Place { v: v(3) },
        Slide {
            from: v(5),
            to: v(4),
        },
        Remove { v: v(3) },
        Remove { v: v(4) },
        // u-axis triangle {6,7,8}
        Place { v: v(6) },
        Place { v: v(7) },
        Slide {
            from: v(7),
            to: v(8),
        },
        Remove { v: v(6) },
        Remove { v: v(8) },
        // stabilizer triangle {9,10,11}
        Place { v: v(9) },
        Place { v: v(10) },
        Slide {
            from: v(10),
            to: v(11),
        },
        Remove { v: v(9) },
        Remove { v: v(11) },
        // stabilizer triangle {12,13,14}
        Place { v: v(12) },
        Place { v: v(13) },
        Slide {
            from: v(13),
            to: v(14),
        },
        Remove { v: v(12) },
        Remove { v: v(14) },
        // stabilizer path {15,16,17}
        Place { v: v(15) },
        Slide {
            from: v(15),
            to: v(16),
        },
        Slide {
            from: v(16),
            to: v(17),
        },
        Remove { v: v(17) },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{pathwidth_exact, planarity::is_planar};
    use crate::oracle::max_independent_set;

    #[test]
    fn clause_gadget_shape() {
        let c1 = clause_gadget(1);
        assert_eq!(c1.n, 5);
        assert_eq!(c1.edges.len(), 5);
        for k in 1..=5 {
            let c = clause_gadget(k);
            assert_eq!(c.n as usize, 3 * k + 2);
            assert_eq!(c.edges.len(), 4 * k + 1);
        }
    }

    #[test]
    fn clause_gadget_optimum_is_k_plus_2() {
        for k in 1..=5 {
            let g = clause_gadget(k).to_graph();
            assert_eq!(max_independent_set(&g).unwrap(), k as u32 + 2);
        }
    }

    #[test]
    fn clause_gadget_terminal_structure() {
        // every maximum independent set contains a terminal, and for each i
        // some maximum set has v_i as its only terminal
        for k in 1..=4 {
            let c = clause_gadget(k);
            let g = c.to_graph();
            let opt = max_independent_set(&g).unwrap();
            let without_terminals =
                constrained_max_independent_set(&g, &[], &c.terminals).unwrap();
            assert!(without_terminals.unwrap() < opt, "k={k}");
            for (i, &vi) in c.terminals.iter().enumerate() {
                let others: Vec<u32> = c
                    .terminals
                    .iter()
                    .copied()
                    .filter(|&x| x != vi)
                    .collect();
                let exclusive =
                    constrained_max_independent_set(&g, &[vi], &others).unwrap();
                assert_eq!(exclusive, Some(opt), "k={k} terminal {i}");
            }
        }
    }

    #[test]
    fn clause_gadget_is_planar_with_pathwidth_two() {
        for k in 1..=4 {
            let g = clause_gadget(k).to_graph();
            assert!(is_planar(&g));
            assert_eq!(pathwidth_exact(&g).unwrap(), 2, "k={k}");
        }
    }

    #[test]
    fn crossover_gadget_validates() {
        let gadget = crossover_gadget().unwrap();
        assert_eq!(gadget.n, 22);
        assert!(is_planar(&gadget.to_graph()));
        assert_eq!(gadget.constrained_table().unwrap(), CROSSOVER_TABLE);
    }

    #[test]
    fn crossover_overall_optimum_is_nine() {
        let gadget = crossover_gadget().unwrap();
        assert_eq!(max_independent_set(&gadget.to_graph()).unwrap(), 9);
    }

    #[test]
    fn interior_sweep_cleans_gadget_with_two_rovers() {
        use crate::metrics::search::{simulate_mixed_search, CleaningSchedule, Move};
        let gadget = crossover_gadget().unwrap();
        let g = gadget.to_graph();
        let t = gadget.terminals;
        let mut moves = vec![
            Move::Place { v: t.v },
            Move::Place { v: t.u },
            Move::Place { v: t.v_prime },
            Move::Place { v: t.u_prime },
        ];
        moves.extend(interior_sweep(0));
        moves.extend([
            Move::Remove { v: t.v },
            Move::Remove { v: t.u },
            Move::Remove { v: t.v_prime },
            Move::Remove { v: t.u_prime },
        ]);
        let out = simulate_mixed_search(&g, &CleaningSchedule { moves }).unwrap();
        assert!(out.cleaned);
        assert_eq!(out.recontaminations, 0);
        // four parked terminals plus at most two rovers
        assert!(out.max_cleaners <= 6, "peak {}", out.max_cleaners);
    }

    #[test]
    fn crossover_fits_in_a_crossing() {
        // terminals must embed on the outer face in the cyclic order
        // v, u, v', u': model the crossing by four stubs a, c, b, d wired
        // a-v, v'-b, c-u, u'-d inside a surrounding 4-cycle a-c-b-d
        let gadget = crossover_gadget().unwrap();
        let t = gadget.terminals;
        let n = gadget.n;
        let (a, c, b, d) = (n, n + 1, n + 2, n + 3);
        let mut edges = gadget.edges.clone();
        edges.extend([
            (a, t.v),
            (t.v_prime, b),
            (c, t.u),
            (t.u_prime, d),
            (a, c),
            (c, b),
            (b, d),
            (d, a),
        ]);
        assert!(is_planar_edges(n as usize + 4, &edges));
    }
}
