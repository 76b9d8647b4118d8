//! Left-right planarity test.
//!
//! Boolean planarity via the LR criterion: orient the graph by DFS, compute
//! lowpoints and nesting depths, then check that the back edges can be
//! partitioned into two non-conflicting sides using a stack of conflict
//! pairs. Boundary labels play no role here.

use crate::graph::BoundariedGraph;

/// True iff the graph admits a planar embedding.
pub fn is_planar(g: &BoundariedGraph) -> bool {
    is_planar_edges(g.n() as usize, g.edges())
}

pub fn is_planar_edges(n: usize, edges: &[(u32, u32)]) -> bool {
    if n <= 4 || edges.len() < 9 {
        return true;
    }
    if edges.len() > 3 * n - 6 {
        return false;
    }
    Lr::new(n, edges).run()
}

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq, Eq)]
struct Interval {
    low: usize,  // edge index or NONE
    high: usize, // edge index or NONE
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: NONE,
        high: NONE,
    };
    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy)]
struct ConflictPair {
    l: Interval,
    r: Interval,
}

struct Lr {
    n: usize,
    // directed edges (u, v); index e^2 conventions: each undirected edge
    // appears once, oriented during dfs1
    src: Vec<usize>,
    dst: Vec<usize>,
    adj: Vec<Vec<usize>>, // vertex -> incident edge indices
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    oriented: Vec<bool>,
    visited: Vec<bool>,
    // testing phase
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
    eref: Vec<usize>,
}

impl Lr {
    fn new(n: usize, edges: &[(u32, u32)]) -> Self {
        let m = edges.len();
        let mut adj = vec![Vec::new(); n];
        let mut src = Vec::with_capacity(m);
        let mut dst = Vec::with_capacity(m);
        for (i, &(u, v)) in edges.iter().enumerate() {
            src.push(u as usize);
            dst.push(v as usize);
            adj[u as usize].push(i);
            adj[v as usize].push(i);
        }
        Lr {
            n,
            src,
            dst,
            adj,
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            oriented: vec![false; m],
            visited: vec![false; n],
            stack: Vec::new(),
            stack_bottom: vec![NONE; m],
            lowpt_edge: vec![NONE; m],
            eref: vec![NONE; m],
        }
    }

    fn other(&self, e: usize, v: usize) -> usize {
        if self.src[e] == v {
            self.dst[e]
        } else {
            self.src[e]
        }
    }

    fn run(&mut self) -> bool {
        // phase 1: orientation
        for root in 0..self.n {
            if !self.visited[root] {
                self.height[root] = 0;
                self.visited[root] = true;
                self.dfs1(root);
            }
        }
        // sort adjacency by nesting depth; keep only outgoing edges
        let mut ordered: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for e in 0..self.src.len() {
            ordered[self.src[e]].push(e);
        }
        for list in ordered.iter_mut() {
            list.sort_by_key(|&e| self.nesting[e]);
        }
        // phase 2: testing
        let mut roots = Vec::new();
        for v in 0..self.n {
            if self.parent_edge[v] == NONE {
                roots.push(v);
            }
        }
        for root in roots {
            if !self.dfs2(root, &ordered) {
                return false;
            }
        }
        true
    }

    fn dfs1(&mut self, root: usize) {
        // iterative to keep stack usage bounded
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&(v, i)) = stack.last() {
            if i >= self.adj[v].len() {
                stack.pop();
                // fold this vertex's parent edge lowpoints into grandparent
                if let Some(&(u, _)) = stack.last() {
                    let e = self.parent_edge[v];
                    let pe = self.parent_edge[u];
                    self.finish_edge(e, u, pe);
                }
                continue;
            }
            stack.last_mut().unwrap().1 += 1;
            let e = self.adj[v][i];
            if self.oriented[e] || e == self.parent_edge[v] {
                continue;
            }
            let w = self.other(e, v);
            // orient as v -> w
            self.src[e] = v;
            self.dst[e] = w;
            self.oriented[e] = true;
            self.lowpt[e] = self.height[v];
            self.lowpt2[e] = self.height[v];
            if !self.visited[w] {
                self.visited[w] = true;
                self.parent_edge[w] = e;
                self.height[w] = self.height[v] + 1;
                stack.push((w, 0));
            } else {
                self.lowpt[e] = self.height[w];
                let pe = self.parent_edge[v];
                self.finish_edge(e, v, pe);
            }
        }
    }

    /// Set nesting depth of `e` (out of `v`) and fold into parent edge `pe`.
    fn finish_edge(&mut self, e: usize, v: usize, pe: usize) {
        self.nesting[e] = 2 * self.lowpt[e] as i64;
        if self.lowpt2[e] < self.height[v] {
            self.nesting[e] += 1; // chordal
        }
        if pe != NONE {
            if self.lowpt[e] < self.lowpt[pe] {
                self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                self.lowpt[pe] = self.lowpt[e];
            } else if self.lowpt[e] > self.lowpt[pe] {
                self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
            } else {
                self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
            }
        }
    }

    fn dfs2(&mut self, root: usize, ordered: &[Vec<usize>]) -> bool {
        // explicit stack: (vertex, next-edge-position)
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&(v, i)) = stack.last() {
            let e = self.parent_edge[v];
            if i < ordered[v].len() {
                stack.last_mut().unwrap().1 += 1;
                let ei = ordered[v][i];
                self.stack_bottom[ei] = self.stack.len();
                if ei == self.parent_edge[self.dst[ei]] {
                    stack.push((self.dst[ei], 0));
                } else {
                    // back edge
                    self.lowpt_edge[ei] = ei;
                    self.stack.push(ConflictPair {
                        l: Interval::EMPTY,
                        r: Interval { low: ei, high: ei },
                    });
                    if !self.after_subtree(v, ei, e, i == 0) {
                        return false;
                    }
                }
                continue;
            }
            stack.pop();
            if e != NONE {
                let u = self.src[e];
                self.trim_back_edges(u);
                if self.lowpt[e] < self.height[u] {
                    // e has a return edge: remember reference
                    if let Some(top) = self.stack.last() {
                        let hl = top.l.high;
                        let hr = top.r.high;
                        self.eref[e] = if hl != NONE
                            && (hr == NONE || self.lowpt[hl] > self.lowpt[hr])
                        {
                            hl
                        } else {
                            hr
                        };
                    }
                }
                // integrate e into parent frame
                let (up, pos) = *stack.last().unwrap();
                if !self.after_subtree(up, e, self.parent_edge[up], pos == 1) {
                    return false;
                }
            }
        }
        true
    }

    /// After handling outgoing edge `ei` of `v` (with parent edge `e`),
    /// integrate its constraints. `first` says whether ei was the first
    /// outgoing edge.
    fn after_subtree(&mut self, v: usize, ei: usize, e: usize, first: bool) -> bool {
        if self.lowpt[ei] < self.height[v] {
            // ei has a return edge
            if first {
                if e != NONE {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                }
            } else if !self.add_constraints(ei, e) {
                return false;
            }
        }
        true
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair {
            l: Interval::EMPTY,
            r: Interval::EMPTY,
        };
        // merge return edges of ei into p.r
        loop {
            let mut q = match self.stack.pop() {
                Some(q) => q,
                None => return false,
            };
            if !q.l.is_empty() {
                std::mem::swap(&mut q.l, &mut q.r);
            }
            if !q.l.is_empty() {
                return false; // not planar
            }
            if self.lowpt[q.r.low] > self.lowpt[e] {
                // merge intervals
                if p.r.is_empty() {
                    p.r.high = q.r.high;
                } else {
                    self.eref[p.r.low] = q.r.high;
                }
                p.r.low = q.r.low;
            } else {
                // align
                self.eref[q.r.low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of previous siblings into p.l
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.l, ei) || self.conflicting(&top.r, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.r, ei) {
                std::mem::swap(&mut q.l, &mut q.r);
            }
            if self.conflicting(&q.r, ei) {
                return false; // not planar
            }
            // merge interval below lowpt(ei) into p.r
            if p.r.low != NONE {
                self.eref[p.r.low] = q.r.high;
            }
            if q.r.low != NONE {
                p.r.low = q.r.low;
            }
            if p.l.is_empty() {
                p.l.high = q.l.high;
            } else {
                self.eref[p.l.low] = q.l.high;
            }
            p.l.low = q.l.low;
        }
        if !(p.l.is_empty() && p.r.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.l.is_empty() {
            return self.lowpt[p.r.low];
        }
        if p.r.is_empty() {
            return self.lowpt[p.l.low];
        }
        self.lowpt[p.l.low].min(self.lowpt[p.r.low])
    }

    fn trim_back_edges(&mut self, u: usize) {
        // drop entire conflict pairs
        while let Some(top) = self.stack.last() {
            if self.lowest(top) == self.height[u] {
                self.stack.pop();
            } else {
                break;
            }
        }
        // trim one conflict pair
        if let Some(mut p) = self.stack.pop() {
            while p.l.high != NONE && self.dst[p.l.high] == u {
                p.l.high = self.eref[p.l.high];
            }
            if p.l.high == NONE && p.l.low != NONE {
                self.eref[p.l.low] = p.r.low;
                p.l.low = NONE;
            }
            while p.r.high != NONE && self.dst[p.r.high] == u {
                p.r.high = self.eref[p.r.high];
            }
            if p.r.high == NONE && p.r.low != NONE {
                self.eref[p.r.low] = p.l.low;
                p.r.low = NONE;
            }
            self.stack.push(p);
        }
    }
}
