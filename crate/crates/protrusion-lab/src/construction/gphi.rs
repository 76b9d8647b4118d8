//! The path-and-clause construction and its planarization.
//!
//! For a monotone CNF over `t` variables with `m` clauses, the graph
//! consists of `t` horizontal paths of `2m` vertices (boundary = first
//! vertex of each path) and one clause gadget per clause, whose terminals
//! attach to even-numbered path vertices. Drawn with paths stacked top to
//! bottom and gadgets above, each terminal edge crosses exactly the path
//! edges above its target; replacing every crossing with a crossover gadget
//! copy yields the planar version.

use serde::{Deserialize, Serialize};

use crate::construction::gadgets::{
    clause_gadget, crossover_gadget, CrossoverGadget, CROSSOVER_SIZE,
};
use crate::error::{Error, Result};
use crate::graph::BoundariedGraph;
use crate::monotone::MonotoneCnf;

/// One planarization step: remove the two named edges and wire a fresh
/// crossover copy in their place. Orientation convention: `terminal_edge =
/// (a, b)` attaches `a` to the gadget's `v` and `b` to `v'`; `path_edge =
/// (c, d)` attaches `c` to `u` and `d` to `u'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingEntry {
    pub terminal_edge: (u32, u32),
    pub path_edge: (u32, u32),
}

/// The crossing structure of the prescribed layout, in processing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Drawing {
    pub crossings: Vec<DrawingEntry>,
}

/// Where one crossover copy ended up in the planarized graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetPlacement {
    /// 0-based clause index
    pub clause: usize,
    /// 0-based literal position within the clause (sorted by descending
    /// variable)
    pub literal: usize,
    /// 1-based crossed path
    pub path: usize,
    /// first vertex id of the 22-vertex block
    pub base: u32,
}

impl GadgetPlacement {
    pub fn v(&self) -> u32 {
        self.base + 18
    }
    pub fn u(&self) -> u32 {
        self.base + 19
    }
    pub fn v_prime(&self) -> u32 {
        self.base + 20
    }
    pub fn u_prime(&self) -> u32 {
        self.base + 21
    }
}

/// One literal of one clause: its variable, its terminal vertex in the
/// clause gadget, and the crossover copies its terminal edge passes
/// through, ordered top to bottom (path 1 first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiteralPlan {
    pub variable: usize,
    pub terminal: u32,
    pub chain: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClausePlan {
    pub v_start: u32,
    pub v_end: u32,
    /// triangles `(u_i, v_i, w_i)` in chain order
    pub triangles: Vec<(u32, u32, u32)>,
    /// literals sorted by descending variable
    pub literals: Vec<LiteralPlan>,
}

/// Everything the cleaning-schedule generator needs to know about how a
/// planarized construction was laid out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionPlan {
    pub t: usize,
    pub m: usize,
    /// `path_vertex[i][c]` is the id of the `c`-th vertex (0-based column)
    /// on path `i+1`
    pub path_vertex: Vec<Vec<u32>>,
    pub clauses: Vec<ClausePlan>,
    pub gadgets: Vec<GadgetPlacement>,
}

impl ConstructionPlan {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plan serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Build the unplanarized graph for a monotone CNF, together with the
/// crossing list of the prescribed drawing. The drawing's entries are in
/// the exact order `planarize` consumes them, and later entries refer to
/// vertices of crossover copies inserted by earlier ones.
pub fn build_g_phi(t: usize, cnf: &MonotoneCnf) -> Result<(BoundariedGraph, Drawing)> {
    let (graph, drawing, _) = build_g_phi_with_plan(t, cnf)?;
    Ok((graph, drawing))
}

pub(crate) fn build_g_phi_with_plan(
    t: usize,
    cnf: &MonotoneCnf,
) -> Result<(BoundariedGraph, Drawing, ConstructionPlan)> {
    if cnf.t() != t {
        return Err(Error::BoundaryMismatch {
            left: t,
            right: cnf.t(),
        });
    }
    if cnf.clauses().is_empty() || cnf.clauses().iter().any(|c| c.is_empty()) {
        return Err(Error::InvalidDocument(
            "construction needs a CNF with at least one nonempty clause".into(),
        ));
    }
    let m = cnf.clauses().len();
    let cols = 2 * m;
    let path_vertex: Vec<Vec<u32>> = (0..t)
        .map(|i| (0..cols).map(|c| (i * cols + c) as u32).collect())
        .collect();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for path in &path_vertex {
        for w in path.windows(2) {
            edges.push((w[0], w[1]));
        }
    }
    let boundary: Vec<u32> = path_vertex.iter().map(|p| p[0]).collect();

    let mut next = (t * cols) as u32;
    let mut clauses = Vec::with_capacity(m);
    for (ci, clause) in cnf.clauses().iter().enumerate() {
        // literals sorted by descending variable so terminal edges to lower
        // paths leave from further left and never cross each other
        let mut vars: Vec<usize> = clause.labels().collect();
        vars.sort_unstable_by(|a, b| b.cmp(a));
        let gadget = clause_gadget(vars.len());
        let base = next;
        next += gadget.n;
        for &(a, b) in &gadget.edges {
            edges.push((base + a, base + b));
        }
        let mut literals = Vec::with_capacity(vars.len());
        for (j, &var) in vars.iter().enumerate() {
            let terminal = base + gadget.terminals[j];
            let target = path_vertex[var - 1][2 * ci + 1];
            edges.push((terminal, target));
            literals.push(LiteralPlan {
                variable: var,
                terminal,
                chain: Vec::new(),
            });
        }
        clauses.push(ClausePlan {
            v_start: base + gadget.v_start,
            v_end: base + gadget.v_end,
            triangles: gadget
                .triangles
                .iter()
                .map(|&(u, v, w)| (base + u, base + v, base + w))
                .collect(),
            literals,
        });
    }

    let graph = BoundariedGraph::new(next, edges, boundary)?;

    // crossing list: for clause i and literal j (descending variables),
    // the terminal edge to path l(j) crosses the column-2i path edges of
    // every path above the target, processed top to bottom. Each crossing
    // will consume 22 fresh ids, so the current piece endpoints of both the
    // terminal edge and the path edges are predictable now.
    let mut crossings = Vec::new();
    let mut gadgets = Vec::new();
    let mut insert_base = next;
    // rightmost piece of each path's column gap: starts at the original
    // left endpoint
    for (ci, plan) in clauses.iter_mut().enumerate() {
        let mut gap_left: Vec<u32> = (0..t).map(|i| path_vertex[i][2 * ci]).collect();
        for (j, lit) in plan.literals.iter_mut().enumerate() {
            let target_path = lit.variable;
            let mut upper = lit.terminal;
            for crossed in 1..target_path {
                let entry = DrawingEntry {
                    terminal_edge: (upper, path_vertex[target_path - 1][2 * ci + 1]),
                    path_edge: (gap_left[crossed - 1], path_vertex[crossed - 1][2 * ci + 1]),
                };
                crossings.push(entry);
                let placement = GadgetPlacement {
                    clause: ci,
                    literal: j,
                    path: crossed,
                    base: insert_base,
                };
                lit.chain.push(gadgets.len());
                gadgets.push(placement);
                upper = placement.v_prime();
                gap_left[crossed - 1] = placement.u_prime();
                insert_base += CROSSOVER_SIZE;
            }
        }
    }

    let plan = ConstructionPlan {
        t,
        m,
        path_vertex,
        clauses,
        gadgets,
    };
    Ok((graph, Drawing { crossings }, plan))
}

/// Replace one crossing with a fresh crossover-gadget copy whose vertices
/// take ids `g.n()..g.n()+22`.
pub fn planarize_crossing(g: &BoundariedGraph, entry: &DrawingEntry) -> Result<BoundariedGraph> {
    let gadget = crossover_gadget()?;
    splice(g, entry, &gadget)
}

fn splice(
    g: &BoundariedGraph,
    entry: &DrawingEntry,
    gadget: &CrossoverGadget,
) -> Result<BoundariedGraph> {
    let (a, b) = entry.terminal_edge;
    let (c, d) = entry.path_edge;
    for (x, y) in [(a, b), (c, d)] {
        if !g.has_edge(x, y) {
            return Err(Error::MissingEdge(x, y));
        }
    }
    let base = g.n();
    let mut edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(x, y)| {
            (x, y) != (a.min(b), a.max(b)) && (x, y) != (c.min(d), c.max(d))
        })
        .collect();
    for &(x, y) in &gadget.edges {
        edges.push((base + x, base + y));
    }
    let t = gadget.terminals;
    edges.push((a, base + t.v));
    edges.push((base + t.v_prime, b));
    edges.push((c, base + t.u));
    edges.push((base + t.u_prime, d));
    BoundariedGraph::new(base + gadget.n, edges, g.boundary().to_vec())
}

/// Apply the whole drawing, one crossing at a time.
pub fn planarize_g_phi(g: &BoundariedGraph, drawing: &Drawing) -> Result<BoundariedGraph> {
    let gadget = crossover_gadget()?;
    let mut current = g.clone();
    for entry in &drawing.crossings {
        current = splice(&current, entry, &gadget)?;
    }
    Ok(current)
}
