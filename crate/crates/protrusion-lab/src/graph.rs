//! Boundaried graphs and the operations that combine them.
//!
//! A `t`-boundaried graph is a finite simple graph together with an injective
//! labeling of `t` distinct boundary vertices. Two graphs with the same
//! boundary size can be glued by identifying equally-labeled boundary
//! vertices. Everything downstream (boundary functions, equivalence classes,
//! gadget constructions) is built on top of the types in this module.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of the boundary labels `{1..t}`, stored as a bitmask with bit
/// `i-1` set iff label `i` is in the subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask {
    t: usize,
    bits: u64,
}

impl SubsetMask {
    pub fn new(t: usize, bits: u64) -> Result<Self> {
        if t == 0 || t > 63 || bits >= (1u64 << t) {
            return Err(Error::InvalidMask { bits, t });
        }
        Ok(SubsetMask { t, bits })
    }

    pub fn empty(t: usize) -> Self {
        SubsetMask { t, bits: 0 }
    }

    pub fn full(t: usize) -> Self {
        SubsetMask {
            t,
            bits: (1u64 << t) - 1,
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// True iff label `i` (1-based) is in the subset.
    pub fn contains_label(&self, label: usize) -> bool {
        debug_assert!(label >= 1 && label <= self.t);
        self.bits >> (label - 1) & 1 == 1
    }

    pub fn is_subset_of(&self, other: &SubsetMask) -> bool {
        self.bits & !other.bits == 0
    }

    /// Iterate over the 1-based labels in the subset.
    pub fn labels(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.t).filter(|&i| self.contains_label(i))
    }

    /// All `2^t` subsets in ascending mask order.
    pub fn all(t: usize) -> impl Iterator<Item = SubsetMask> {
        (0..(1u64 << t)).map(move |bits| SubsetMask { t, bits })
    }
}

/// A simple graph on vertices `0..n` with an injective labeling of `t`
/// boundary vertices; `boundary[i-1]` holds the vertex labeled `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundariedGraph {
    n: u32,
    edges: Vec<(u32, u32)>,
    boundary: Vec<u32>,
}

impl BoundariedGraph {
    /// Build a boundaried graph, validating all invariants. Edges may be
    /// given in any order and orientation; duplicates are collapsed.
    pub fn new(
        n: u32,
        edges: impl IntoIterator<Item = (u32, u32)>,
        boundary: Vec<u32>,
    ) -> Result<Self> {
        let t = boundary.len();
        if t == 0 || t as u32 > n {
            return Err(Error::InvalidBoundary);
        }
        let distinct: BTreeSet<u32> = boundary.iter().copied().collect();
        if distinct.len() != t {
            return Err(Error::InvalidBoundary);
        }
        for &b in &boundary {
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(BoundariedGraph {
            n,
            edges: set.into_iter().collect(),
            boundary,
        })
    }

    /// Edgeless graph whose vertices are exactly the boundary `0..t`.
    pub fn edgeless_boundary(t: usize) -> Self {
        BoundariedGraph {
            n: t as u32,
            edges: Vec::new(),
            boundary: (0..t as u32).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> usize {
        self.boundary.len()
    }

    /// Edges as sorted `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Boundary vertices in label order; entry `i-1` is the vertex labeled `i`.
    pub fn boundary(&self) -> &[u32] {
        &self.boundary
    }

    /// Vertex labeled `i` (1-based).
    pub fn labeled(&self, i: usize) -> u32 {
        self.boundary[i - 1]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.n as usize];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        adj
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_boundary(&self, v: u32) -> bool {
        self.boundary.contains(&v)
    }

    /// True iff no two boundary vertices are adjacent.
    pub fn boundary_is_independent(&self) -> bool {
        self.boundary
            .iter()
            .enumerate()
            .all(|(i, &u)| self.boundary[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.isolated_vertex().is_some()
    }

    pub fn isolated_vertex(&self) -> Option<u32> {
        let mut seen = vec![false; self.n as usize];
        for &(u, v) in &self.edges {
            seen[u as usize] = true;
            seen[v as usize] = true;
        }
        seen.iter().position(|&s| !s).map(|v| v as u32)
    }

    /// Glue `self` and `other` by identifying equally-labeled boundary
    /// vertices. Vertices of `self` keep their ids; non-boundary vertices of
    /// `other` are appended in order, so results are reproducible.
    pub fn glue(&self, other: &BoundariedGraph) -> Result<BoundariedGraph> {
        let t = self.t();
        if other.t() != t {
            return Err(Error::BoundaryMismatch {
                left: t,
                right: other.t(),
            });
        }
        let mut map = vec![u32::MAX; other.n as usize];
        for i in 0..t {
            map[other.boundary[i] as usize] = self.boundary[i];
        }
        let mut next = self.n;
        for v in 0..other.n {
            if map[v as usize] == u32::MAX {
                map[v as usize] = next;
                next += 1;
            }
        }
        let mut edges: BTreeSet<(u32, u32)> = self.edges.iter().copied().collect();
        for &(u, v) in &other.edges {
            let (a, b) = (map[u as usize], map[v as usize]);
            edges.insert((a.min(b), a.max(b)));
        }
        Ok(BoundariedGraph {
            n: next,
            edges: edges.into_iter().collect(),
            boundary: self.boundary.clone(),
        })
    }

    /// The indicator graph `I_S`: boundary vertices `0..t`, and every label
    /// outside `S` becomes the center of a star with two fresh leaves.
    pub fn indicator(s: SubsetMask) -> BoundariedGraph {
        let t = s.t();
        let mut edges = Vec::new();
        let mut next = t as u32;
        for i in 1..=t {
            if !s.contains_label(i) {
                let center = (i - 1) as u32;
                edges.push((center, next));
                edges.push((center, next + 1));
                next += 2;
            }
        }
        BoundariedGraph {
            n: next,
            edges,
            boundary: (0..t as u32).collect(),
        }
    }

    /// For every edge `{u, v}`, add a fresh vertex adjacent to exactly `u`
    /// and `v`, turning each edge into a triangle. Boundary is unchanged.
    pub fn triangle_transform(&self) -> BoundariedGraph {
        let mut edges = self.edges.clone();
        let mut next = self.n;
        for &(u, v) in &self.edges {
            edges.push((u, next));
            edges.push((v, next));
            next += 1;
        }
        BoundariedGraph::new(next, edges, self.boundary.clone())
            .expect("triangle transform preserves validity")
    }

    /// Induced subgraph on `keep` (boundary restricted to kept vertices must
    /// be re-specified by the caller); used internally by solvers.
    pub(crate) fn induced_edges(&self, keep: &[bool]) -> Vec<(u32, u32)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| keep[u as usize] && keep[v as usize])
            .collect()
    }

    /// Boundary-preserving isomorphism: a bijection of vertices mapping
    /// equally-labeled boundary vertices to each other and edges to edges.
    /// Exact backtracking; intended for the small graphs in this crate.
    pub fn boundary_isomorphic(&self, other: &BoundariedGraph) -> bool {
        if self.n != other.n
            || self.t() != other.t()
            || self.edges.len() != other.edges.len()
        {
            return false;
        }
        let n = self.n as usize;
        let adj_a = adjacency_sets(self);
        let adj_b = adjacency_sets(other);
        let deg = |adj: &[BTreeSet<u32>], v: usize| adj[v].len();

        let mut map = vec![u32::MAX; n];
        let mut used = vec![false; n];
        for i in 0..self.t() {
            let (a, b) = (self.boundary[i] as usize, other.boundary[i] as usize);
            if deg(&adj_a, a) != deg(&adj_b, b) {
                return false;
            }
            map[a] = b as u32;
            used[b] = true;
        }
        // consistency among already-mapped boundary pairs
        for i in 0..self.t() {
            for j in i + 1..self.t() {
                let e_a = self.has_edge(self.boundary[i], self.boundary[j]);
                let e_b = other.has_edge(other.boundary[i], other.boundary[j]);
                if e_a != e_b {
                    return false;
                }
            }
        }
        let free: Vec<usize> = (0..n).filter(|&v| map[v] == u32::MAX).collect();
        backtrack(&free, 0, &mut map, &mut used, &adj_a, &adj_b)
    }

    /// Lexicographically minimal upper-triangle adjacency encoding over all
    /// permutations of the non-boundary vertices (boundary order is fixed).
    /// Distinct canonical forms = distinct boundaried graphs.
    pub fn canonical_code(&self) -> Vec<u64> {
        let n = self.n as usize;
        let boundary: Vec<usize> = self.boundary.iter().map(|&b| b as usize).collect();
        let mut non_boundary: Vec<usize> =
            (0..n).filter(|v| !boundary.contains(v)).collect();
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in &self.edges {
            adj[u as usize][v as usize] = true;
            adj[v as usize][u as usize] = true;
        }
        let mut best: Option<Vec<u64>> = None;
        permute(&mut non_boundary, 0, &mut |perm| {
            let order: Vec<usize> = boundary.iter().copied().chain(perm.iter().copied()).collect();
            let code = encode_order(&adj, &order);
            if best.as_ref().map_or(true, |b| code < *b) {
                best = Some(code);
            }
        });
        best.expect("at least one permutation")
    }

    /// Graph JSON document per the crate's wire format.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphDoc {
            t: self.t(),
            n: self.n,
            boundary: self.boundary.clone(),
            edges: self.edges.clone(),
        })
        .expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<BoundariedGraph> {
        let doc: GraphDoc = serde_json::from_str(text)?;
        if doc.t != doc.boundary.len() {
            return Err(Error::InvalidDocument(format!(
                "t = {} but boundary lists {} vertices",
                doc.t,
                doc.boundary.len()
            )));
        }
        for &(u, v) in &doc.edges {
            if u >= v {
                return Err(Error::InvalidDocument(format!(
                    "edge [{u}, {v}] violates the u < v requirement"
                )));
            }
        }
        BoundariedGraph::new(doc.n, doc.edges, doc.boundary)
    }

    /// DOT export with boundary vertices annotated.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph g {\n");
        for v in 0..self.n {
            if let Some(i) = self.boundary.iter().position(|&b| b == v) {
                writeln!(
                    out,
                    "  {v} [shape=doublecircle,label=\"b{}\"];",
                    i + 1
                )
                .unwrap();
            } else {
                writeln!(out, "  {v};").unwrap();
            }
        }
        for &(u, v) in &self.edges {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    t: usize,
    n: u32,
    boundary: Vec<u32>,
    edges: Vec<(u32, u32)>,
}

fn adjacency_sets(g: &BoundariedGraph) -> Vec<BTreeSet<u32>> {
    let mut adj = vec![BTreeSet::new(); g.n as usize];
    for &(u, v) in g.edges() {
        adj[u as usize].insert(v);
        adj[v as usize].insert(u);
    }
    adj
}

fn backtrack(
    free: &[usize],
    idx: usize,
    map: &mut Vec<u32>,
    used: &mut Vec<bool>,
    adj_a: &[BTreeSet<u32>],
    adj_b: &[BTreeSet<u32>],
) -> bool {
    if idx == free.len() {
        return true;
    }
    let a = free[idx];
    for b in 0..map.len() {
        if used[b] || adj_a[a].len() != adj_b[b].len() {
            continue;
        }
        // every already-mapped neighbor of a must map into N(b), and
        // non-neighbors must not
        let ok = (0..map.len()).all(|x| {
            let mx = map[x];
            if mx == u32::MAX {
                return true;
            }
            adj_a[a].contains(&(x as u32)) == adj_b[b].contains(&mx)
        });
        if !ok {
            continue;
        }
        map[a] = b as u32;
        used[b] = true;
        if backtrack(free, idx + 1, map, used, adj_a, adj_b) {
            return true;
        }
        map[a] = u32::MAX;
        used[b] = false;
    }
    false
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

fn encode_order(adj: &[Vec<bool>], order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut code = vec![0u64; (n * (n - 1) / 2 + 63) / 64];
    let mut bit = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            if adj[order[i]][order[j]] {
                code[bit / 64] |= 1u64 << (bit % 64);
            }
            bit += 1;
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> BoundariedGraph {
        BoundariedGraph::new(3, [(0, 1), (1, 2)], vec![0]).unwrap()
    }

    #[test]
    fn rejects_self_loop_and_bad_boundary() {
        assert!(BoundariedGraph::new(2, [(0, 0)], vec![0]).is_err());
        assert!(BoundariedGraph::new(2, [(0, 1)], vec![]).is_err());
        assert!(BoundariedGraph::new(2, [(0, 1)], vec![0, 0]).is_err());
        assert!(BoundariedGraph::new(2, [(0, 1)], vec![2]).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = BoundariedGraph::new(2, [(0, 1), (1, 0)], vec![0, 1]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn glue_identity_case() {
        // gluing the edgeless boundary-only graph is the identity up to
        // boundary-preserving isomorphism
        let g = path3();
        let id = BoundariedGraph::edgeless_boundary(1);
        let glued = g.glue(&id).unwrap();
        assert!(glued.boundary_isomorphic(&g));
    }

    #[test]
    fn glue_collapses_parallel_edges() {
        let e = BoundariedGraph::new(2, [(0, 1)], vec![0, 1]).unwrap();
        let glued = e.glue(&e).unwrap();
        assert_eq!(glued.n(), 2);
        assert_eq!(glued.edges().len(), 1);
    }

    #[test]
    fn glue_mismatched_boundaries_rejected() {
        let a = BoundariedGraph::edgeless_boundary(1);
        let b = BoundariedGraph::edgeless_boundary(2);
        assert!(matches!(
            a.glue(&b),
            Err(Error::BoundaryMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn indicator_shapes() {
        // S = B: a single isolated boundary vertex
        let i_full = BoundariedGraph::indicator(SubsetMask::full(1));
        assert_eq!(i_full.n(), 1);
        assert_eq!(i_full.edges().len(), 0);

        // t=2, S={1}: label 2 gets two leaves
        let s = SubsetMask::new(2, 0b01).unwrap();
        let g = BoundariedGraph::indicator(s);
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), &[(1, 2), (1, 3)]);

        // S = empty: 3t vertices, 2t edges
        for t in 1..=4 {
            let g = BoundariedGraph::indicator(SubsetMask::empty(t));
            assert_eq!(g.n() as usize, 3 * t);
            assert_eq!(g.edges().len(), 2 * t);
        }
    }

    #[test]
    fn triangle_transform_counts() {
        let e = BoundariedGraph::new(2, [(0, 1)], vec![0]).unwrap();
        let tri = e.triangle_transform();
        assert_eq!(tri.n(), 3);
        assert_eq!(tri.edges().len(), 3);

        let empty = BoundariedGraph::edgeless_boundary(3);
        assert_eq!(empty.triangle_transform(), empty);

        let p3 = BoundariedGraph::new(3, [(0, 1), (1, 2)], vec![0]).unwrap();
        let t = p3.triangle_transform();
        assert_eq!(t.n(), 5);
        assert_eq!(t.edges().len(), 6);
    }

    #[test]
    fn canonical_code_separates_and_merges() {
        // same graph with non-boundary vertices renamed
        let a = BoundariedGraph::new(3, [(0, 1)], vec![0]).unwrap();
        let b = BoundariedGraph::new(3, [(0, 2)], vec![0]).unwrap();
        assert_eq!(a.canonical_code(), b.canonical_code());
        let c = BoundariedGraph::new(3, [(1, 2)], vec![0]).unwrap();
        assert_ne!(a.canonical_code(), c.canonical_code());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let g = path3();
        let text = g.to_json();
        let back = BoundariedGraph::from_json(&text).unwrap();
        assert_eq!(g, back);
        assert!(BoundariedGraph::from_json(
            r#"{"t":1,"n":2,"boundary":[0],"edges":[[1,0]]}"#
        )
        .is_err());
    }

    #[test]
    fn dot_marks_boundary() {
        let g = path3();
        let dot = g.to_dot();
        assert!(dot.contains("0 [shape=doublecircle,label=\"b1\"];"));
        assert!(dot.contains("0 -- 1;"));
    }

    #[test]
    fn boundary_isomorphism_respects_labels() {
        // two labeled edges with swapped labels are NOT boundary-isomorphic
        // once the structure differs relative to the labels
        let a = BoundariedGraph::new(3, [(0, 2)], vec![0, 1]).unwrap();
        let b = BoundariedGraph::new(3, [(1, 2)], vec![0, 1]).unwrap();
        assert!(!a.boundary_isomorphic(&b));
        let c = BoundariedGraph::new(3, [(0, 2)], vec![0, 1]).unwrap();
        assert!(a.boundary_isomorphic(&c));
    }
}
