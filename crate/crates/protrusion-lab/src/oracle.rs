//! Exact solvers for Independent Set, Vertex Cover and Dominating Set, and
//! the boundary functions computed from them. Every other module treats the
//! values produced here as ground truth, so the solvers favor simplicity and
//! cross-checkability over raw speed: branch-and-bound with elementary
//! reductions, plus a plain exhaustive second oracle for small graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BoundariedGraph, SubsetMask};

/// Largest graph the branch-and-bound independent-set solver accepts.
pub const IS_SOLVER_LIMIT: usize = 320;
/// Largest graph the branch-and-bound dominating-set solver accepts.
pub const DS_SOLVER_LIMIT: usize = 220;
/// Largest graph the exhaustive subset-enumeration oracles accept.
pub const EXHAUSTIVE_LIMIT: usize = 24;

/// Size of a maximum independent set, exact.
pub fn max_independent_set(g: &BoundariedGraph) -> Result<u32> {
    let n = g.n() as usize;
    if n > IS_SOLVER_LIMIT {
        return Err(Error::CapacityExceeded {
            what: "independent-set solver",
            n,
            limit: IS_SOLVER_LIMIT,
        });
    }
    let bg = BitGraph::from_edges(n, g.edges());
    let mut full = vec![u64::MAX; bg.w];
    trim(&mut full, n);
    Ok(mis(&bg, full))
}

/// Size of a minimum vertex cover; the complement of a maximum independent
/// set, computed that way.
pub fn min_vertex_cover(g: &BoundariedGraph) -> Result<u32> {
    Ok(g.n() - max_independent_set(g)?)
}

/// Size of a minimum dominating set, exact.
pub fn min_dominating_set(g: &BoundariedGraph) -> Result<u32> {
    let n = g.n() as usize;
    if n > DS_SOLVER_LIMIT {
        return Err(Error::CapacityExceeded {
            what: "dominating-set solver",
            n,
            limit: DS_SOLVER_LIMIT,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let bg = BitGraph::from_edges(n, g.edges());
    let mut closed = bg.rows.clone();
    for v in 0..n {
        closed[v * bg.w + v / 64] |= 1u64 << (v % 64);
    }
    let w = bg.w;
    let mut need = vec![u64::MAX; w];
    trim(&mut need, n);

    // greedy cover for the initial upper bound
    let mut best = greedy_ds(&closed, w, n, &need);
    let mut ds = DsSearch {
        closed: &closed,
        w,
        n,
        best: &mut best,
    };
    ds.solve(need, 0);
    Ok(best)
}

/// Maximum independent set subject to forced and forbidden vertices:
/// the largest independent `X` with `include` contained in `X` and `X`
/// avoiding `exclude`. Returns `None` when `include` is not independent.
pub fn constrained_max_independent_set(
    g: &BoundariedGraph,
    include: &[u32],
    exclude: &[u32],
) -> Result<Option<u32>> {
    let n = g.n() as usize;
    if n > IS_SOLVER_LIMIT {
        return Err(Error::CapacityExceeded {
            what: "independent-set solver",
            n,
            limit: IS_SOLVER_LIMIT,
        });
    }
    for (i, &a) in include.iter().enumerate() {
        for &b in &include[i + 1..] {
            if g.has_edge(a, b) {
                return Ok(None);
            }
        }
    }
    let bg = BitGraph::from_edges(n, g.edges());
    let mut rem = vec![u64::MAX; bg.w];
    trim(&mut rem, n);
    for &v in exclude {
        clear_bit(&mut rem, v as usize);
    }
    for &v in include {
        clear_bit(&mut rem, v as usize);
        for (i, word) in bg.row(v as usize).iter().enumerate() {
            rem[i] &= !word;
        }
    }
    Ok(Some(include.len() as u32 + mis(&bg, rem)))
}

/// Maximum independent set by exhaustive subset enumeration; the second
/// oracle used to cross-validate the branch-and-bound solver.
pub fn max_independent_set_exhaustive(g: &BoundariedGraph) -> Result<u32> {
    let n = g.n() as usize;
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::CapacityExceeded {
            what: "exhaustive independent-set oracle",
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }
    let mut best = 0;
    for set in 0u32..(1u32 << n) {
        if set.count_ones() <= best {
            continue;
        }
        let mut ok = true;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & set != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            best = set.count_ones();
        }
    }
    Ok(best)
}

/// Minimum dominating set by enumeration in increasing size; second oracle.
pub fn min_dominating_set_exhaustive(g: &BoundariedGraph) -> Result<u32> {
    let n = g.n() as usize;
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::CapacityExceeded {
            what: "exhaustive dominating-set oracle",
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let mut closed = vec![0u32; n];
    for v in 0..n {
        closed[v] |= 1 << v;
    }
    for &(u, v) in g.edges() {
        closed[u as usize] |= 1 << v;
        closed[v as usize] |= 1 << u;
    }
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best = n as u32;
    for set in 0u32..(1u32 << n) {
        if set.count_ones() >= best {
            continue;
        }
        let mut covered = 0u32;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            covered |= closed[v];
        }
        if covered == full {
            best = set.count_ones();
        }
    }
    Ok(best)
}

/// The boundary function of a graph: for every subset `S` of boundary
/// labels, the maximum size of an independent set whose boundary
/// intersection lies within `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryFunction {
    t: usize,
    values: Vec<u32>,
}

impl BoundaryFunction {
    pub fn new(t: usize, values: Vec<u32>) -> Result<Self> {
        if t == 0 || values.len() != 1 << t {
            return Err(Error::InvalidFunction(format!(
                "expected 2^{t} values, got {}",
                values.len()
            )));
        }
        Ok(BoundaryFunction { t, values })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, s: SubsetMask) -> u32 {
        self.values[s.bits() as usize]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: BoundaryFunction = serde_json::from_str(text)?;
        BoundaryFunction::new(f.t, f.values)
    }
}

/// Compute the boundary function by one constrained solve per subset:
/// delete the boundary vertices outside `S` and solve the remainder.
pub fn boundary_function(g: &BoundariedGraph) -> Result<BoundaryFunction> {
    let t = g.t();
    let n = g.n() as usize;
    if n > IS_SOLVER_LIMIT {
        return Err(Error::CapacityExceeded {
            what: "independent-set solver",
            n,
            limit: IS_SOLVER_LIMIT,
        });
    }
    let bg = BitGraph::from_edges(n, g.edges());
    let mut values = Vec::with_capacity(1 << t);
    for s in SubsetMask::all(t) {
        let mut rem = vec![u64::MAX; bg.w];
        trim(&mut rem, n);
        for i in 1..=t {
            if !s.contains_label(i) {
                let v = g.labeled(i) as usize;
                rem[v / 64] &= !(1u64 << (v % 64));
            }
        }
        values.push(mis(&bg, rem));
    }
    BoundaryFunction::new(t, values)
}

/// Shift a boundary function so its empty-set value is zero.
pub fn normalize(f: &BoundaryFunction) -> Result<BoundaryFunction> {
    let base = f.values[0];
    let mut values = Vec::with_capacity(f.values.len());
    for (mask, &v) in f.values.iter().enumerate() {
        if v < base {
            return Err(Error::InvalidFunction(format!(
                "value {v} at mask {mask} is below the empty-set value {base}"
            )));
        }
        values.push(v - base);
    }
    BoundaryFunction::new(f.t, values)
}

// ---------------------------------------------------------------------------
// bitset machinery shared by the solvers
// ---------------------------------------------------------------------------

pub(crate) struct BitGraph {
    pub n: usize,
    pub w: usize,
    pub rows: Vec<u64>,
}

impl BitGraph {
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        let w = (n + 63) / 64;
        let mut rows = vec![0u64; n.max(1) * w];
        for &(u, v) in edges {
            let (u, v) = (u as usize, v as usize);
            rows[u * w + v / 64] |= 1u64 << (v % 64);
            rows[v * w + u / 64] |= 1u64 << (u % 64);
        }
        BitGraph { n, w, rows }
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.w..(v + 1) * self.w]
    }
}

#[inline]
fn trim(set: &mut [u64], n: usize) {
    let w = set.len();
    if n % 64 != 0 && w > 0 {
        set[w - 1] &= (1u64 << (n % 64)) - 1;
    }
    for word in set.iter_mut().skip((n + 63) / 64) {
        *word = 0;
    }
}

#[inline]
fn popcount(set: &[u64]) -> u32 {
    set.iter().map(|w| w.count_ones()).sum()
}

#[inline]
fn test_bit(set: &[u64], v: usize) -> bool {
    set[v / 64] >> (v % 64) & 1 == 1
}

#[inline]
fn clear_bit(set: &mut [u64], v: usize) {
    set[v / 64] &= !(1u64 << (v % 64));
}

#[inline]
fn deg_in(bg: &BitGraph, set: &[u64], v: usize) -> u32 {
    bg.row(v)
        .iter()
        .zip(set.iter())
        .map(|(a, b)| (a & b).count_ones())
        .sum()
}

fn for_each_bit(set: &[u64], mut f: impl FnMut(usize)) {
    for (i, &word) in set.iter().enumerate() {
        let mut w = word;
        while w != 0 {
            let b = w.trailing_zeros() as usize;
            f(i * 64 + b);
            w &= w - 1;
        }
    }
}

fn first_bit(set: &[u64]) -> Option<usize> {
    for (i, &word) in set.iter().enumerate() {
        if word != 0 {
            return Some(i * 64 + word.trailing_zeros() as usize);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// maximum independent set: branch and bound
// ---------------------------------------------------------------------------

/// Alpha of the subgraph induced by `rem`.
fn mis(bg: &BitGraph, mut rem: Vec<u64>) -> u32 {
    let mut gained = 0u32;

    // reductions that never require branching
    loop {
        let mut changed = false;
        let mut v_iter = rem.clone();
        // take all isolated and degree-1 vertices, and degree-2 vertices
        // whose two neighbors are adjacent
        let mut done = false;
        for_each_bit(&v_iter, |v| {
            if done || !test_bit(&rem, v) {
                return;
            }
            let d = deg_in(bg, &rem, v);
            let take = match d {
                0 | 1 => true,
                2 => {
                    let mut nbrs = [0usize; 2];
                    let mut k = 0;
                    let row = bg.row(v);
                    for (i, (a, b)) in row.iter().zip(rem.iter()).enumerate() {
                        let mut word = a & b;
                        while word != 0 {
                            nbrs[k] = i * 64 + word.trailing_zeros() as usize;
                            word &= word - 1;
                            k += 1;
                        }
                    }
                    test_bit(bg.row(nbrs[0]), nbrs[1])
                }
                _ => false,
            };
            if take {
                gained += 1;
                clear_bit(&mut rem, v);
                for (i, word) in bg.row(v).iter().enumerate() {
                    rem[i] &= !word;
                }
                changed = true;
                done = true; // restart the scan; rem changed under us
            }
        });
        v_iter.clear();
        if !changed {
            break;
        }
    }

    if popcount(&rem) == 0 {
        return gained;
    }

    // split into connected components
    let comps = components(bg, &rem);
    if comps.len() > 1 {
        return gained + comps.into_iter().map(|c| mis_component(bg, c)).sum::<u32>();
    }
    gained + mis_component(bg, rem)
}

fn mis_component(bg: &BitGraph, rem: Vec<u64>) -> u32 {
    // after the reductions above, a max-degree-2 component is a chordless
    // cycle of length >= 4
    let cnt = popcount(&rem);
    let mut max_deg = 0;
    let mut branch_v = usize::MAX;
    for_each_bit(&rem, |v| {
        let d = deg_in(bg, &rem, v);
        if d > max_deg {
            max_deg = d;
            branch_v = v;
        }
    });
    if max_deg <= 2 {
        return cnt / 2;
    }

    // include branch_v
    let mut with_v = rem.clone();
    clear_bit(&mut with_v, branch_v);
    for (i, word) in bg.row(branch_v).iter().enumerate() {
        with_v[i] &= !word;
    }
    let a_in = 1 + mis(bg, with_v);

    // exclude branch_v, with a clique-cover bound to prune
    let mut without_v = rem;
    clear_bit(&mut without_v, branch_v);
    if clique_cover_bound(bg, &without_v) <= a_in {
        return a_in;
    }
    a_in.max(mis(bg, without_v))
}

/// Greedy clique cover; its size is an upper bound on alpha.
fn clique_cover_bound(bg: &BitGraph, rem: &[u64]) -> u32 {
    let mut cliques: Vec<Vec<u64>> = Vec::new();
    let mut bound = 0u32;
    for_each_bit(rem, |v| {
        let row = bg.row(v);
        for clique in cliques.iter_mut() {
            // v joins if adjacent to every clique member
            let all_adjacent = clique
                .iter()
                .zip(row.iter())
                .all(|(c, r)| c & !r == 0);
            if all_adjacent {
                clique[v / 64] |= 1u64 << (v % 64);
                return;
            }
        }
        let mut fresh = vec![0u64; bg.w];
        fresh[v / 64] |= 1u64 << (v % 64);
        cliques.push(fresh);
        bound += 1;
    });
    bound
}

fn components(bg: &BitGraph, rem: &[u64]) -> Vec<Vec<u64>> {
    let mut left = rem.to_vec();
    let mut out = Vec::new();
    while let Some(start) = first_bit(&left) {
        let mut comp = vec![0u64; bg.w];
        let mut frontier = vec![start];
        comp[start / 64] |= 1u64 << (start % 64);
        clear_bit(&mut left, start);
        while let Some(v) = frontier.pop() {
            let row = bg.row(v);
            for i in 0..bg.w {
                let mut word = row[i] & left[i];
                while word != 0 {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    let u = i * 64 + b;
                    comp[i] |= 1u64 << b;
                    clear_bit(&mut left, u);
                    frontier.push(u);
                }
            }
        }
        out.push(comp);
    }
    out
}

// ---------------------------------------------------------------------------
// minimum dominating set: branch and bound over candidate dominators
// ---------------------------------------------------------------------------

fn greedy_ds(closed: &[u64], w: usize, n: usize, need0: &[u64]) -> u32 {
    let mut need = need0.to_vec();
    let mut count = 0;
    while popcount(&need) > 0 {
        let mut best_v = 0;
        let mut best_cover = 0;
        for v in 0..n {
            let cover: u32 = closed[v * w..(v + 1) * w]
                .iter()
                .zip(need.iter())
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            if cover > best_cover {
                best_cover = cover;
                best_v = v;
            }
        }
        for i in 0..w {
            need[i] &= !closed[best_v * w + i];
        }
        count += 1;
    }
    count
}

struct DsSearch<'a> {
    closed: &'a [u64],
    w: usize,
    n: usize,
    best: &'a mut u32,
}

impl DsSearch<'_> {
    fn row(&self, v: usize) -> &[u64] {
        &self.closed[v * self.w..(v + 1) * self.w]
    }

    /// Lower bound: greedily pick undominated vertices and discard everything
    /// any of their potential dominators could cover; each pick costs one.
    fn lower_bound(&self, need: &[u64]) -> u32 {
        let mut remaining = need.to_vec();
        let mut lb = 0;
        while let Some(x) = first_bit(&remaining) {
            lb += 1;
            let dominators = self.row(x).to_vec();
            let mut covered = vec![0u64; self.w];
            for_each_bit(&dominators, |d| {
                for (c, r) in covered.iter_mut().zip(self.row(d).iter()) {
                    *c |= r;
                }
            });
            for (r, c) in remaining.iter_mut().zip(covered.iter()) {
                *r &= !c;
            }
        }
        lb
    }

    fn solve(&mut self, need: Vec<u64>, chosen: u32) {
        if popcount(&need) == 0 {
            if chosen < *self.best {
                *self.best = chosen;
            }
            return;
        }
        if chosen + 1 >= *self.best {
            return;
        }
        if chosen + self.lower_bound(&need) >= *self.best {
            return;
        }
        // branch on the undominated vertex with fewest potential dominators
        let mut pick = usize::MAX;
        let mut pick_deg = u32::MAX;
        let needc = need.clone();
        for_each_bit(&needc, |x| {
            let d = popcount(self.row(x));
            if d < pick_deg {
                pick_deg = d;
                pick = x;
            }
        });
        let mut cands: Vec<usize> = Vec::with_capacity(pick_deg as usize);
        for_each_bit(self.row(pick), |d| cands.push(d));
        // try better-covering candidates first
        cands.sort_by_key(|&d| {
            std::cmp::Reverse(
                self.row(d)
                    .iter()
                    .zip(need.iter())
                    .map(|(a, b)| (a & b).count_ones())
                    .sum::<u32>(),
            )
        });
        for d in cands {
            let mut next = need.clone();
            for (x, r) in next.iter_mut().zip(self.row(d).iter()) {
                *x &= !r;
            }
            self.solve(next, chosen + 1);
        }
        let _ = self.n;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BoundariedGraph;

    fn cycle(k: u32) -> BoundariedGraph {
        BoundariedGraph::new(k, (0..k).map(|i| (i, (i + 1) % k)), vec![0]).unwrap()
    }

    fn complete(k: u32) -> BoundariedGraph {
        let edges = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)));
        BoundariedGraph::new(k, edges, vec![0]).unwrap()
    }

    #[test]
    fn mis_basics() {
        let edgeless = BoundariedGraph::new(7, [], vec![0]).unwrap();
        assert_eq!(max_independent_set(&edgeless).unwrap(), 7);
        assert_eq!(max_independent_set(&complete(5)).unwrap(), 1);
        assert_eq!(max_independent_set(&cycle(5)).unwrap(), 2);
        assert_eq!(min_vertex_cover(&cycle(5)).unwrap(), 3);
        let edge = BoundariedGraph::new(2, [(0, 1)], vec![0]).unwrap();
        assert_eq!(min_vertex_cover(&edge).unwrap(), 1);
    }

    #[test]
    fn ds_basics() {
        // star with k leaves is dominated by its center
        let star = BoundariedGraph::new(6, (1..6).map(|i| (0, i)), vec![0]).unwrap();
        assert_eq!(min_dominating_set(&star).unwrap(), 1);
        let tri = BoundariedGraph::new(3, [(0, 1), (1, 2), (0, 2)], vec![0]).unwrap();
        assert_eq!(min_dominating_set(&tri).unwrap(), 1);
        // triangle transform of the path a-b-c
        let p3 = BoundariedGraph::new(3, [(0, 1), (1, 2)], vec![0]).unwrap();
        assert_eq!(min_dominating_set(&p3.triangle_transform()).unwrap(), 1);
        assert_eq!(min_dominating_set(&cycle(6)).unwrap(), 2);
    }

    #[test]
    fn boundary_function_examples() {
        // single isolated boundary vertex
        let one = BoundariedGraph::new(1, [], vec![0]).unwrap();
        let f = boundary_function(&one).unwrap();
        assert_eq!(f.values(), &[0, 1]);

        // star with boundary center and two leaves (the indicator I_empty)
        let i_empty = BoundariedGraph::indicator(SubsetMask::empty(1));
        let f = boundary_function(&i_empty).unwrap();
        assert_eq!(f.values(), &[2, 2]);
    }

    #[test]
    fn glue_of_indicators_matches_star_count() {
        // glue(I_empty, I_empty) at t=1 gives the 5-vertex star: alpha = 4
        let i = BoundariedGraph::indicator(SubsetMask::empty(1));
        let star = i.glue(&i).unwrap();
        assert_eq!(star.n(), 5);
        assert_eq!(max_independent_set(&star).unwrap(), 4);
    }

    #[test]
    fn normalize_shifts_to_zero() {
        let f = BoundaryFunction::new(1, vec![2, 2]).unwrap();
        assert_eq!(normalize(&f).unwrap().values(), &[0, 0]);
        let f = BoundaryFunction::new(1, vec![0, 1]).unwrap();
        assert_eq!(normalize(&f).unwrap().values(), &[0, 1]);
        let bad = BoundaryFunction::new(1, vec![2, 1]).unwrap();
        assert!(normalize(&bad).is_err());
    }

    #[test]
    fn solvers_agree_with_exhaustive_on_random_graphs() {
        // deterministic xorshift so the test is reproducible
        let mut state = 0x12345678u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for round in 0..60 {
            let n = 3 + (next() % 8) as u32;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 100 < 40 {
                        edges.push((u, v));
                    }
                }
            }
            let g = BoundariedGraph::new(n, edges, vec![0]).unwrap();
            assert_eq!(
                max_independent_set(&g).unwrap(),
                max_independent_set_exhaustive(&g).unwrap(),
                "IS mismatch on round {round}"
            );
            assert_eq!(
                min_dominating_set(&g).unwrap(),
                min_dominating_set_exhaustive(&g).unwrap(),
                "DS mismatch on round {round}"
            );
        }
    }

    #[test]
    fn duality_holds() {
        let g = cycle(9);
        assert_eq!(
            min_vertex_cover(&g).unwrap() + max_independent_set(&g).unwrap(),
            g.n()
        );
    }

    #[test]
    fn capacity_errors() {
        let big = BoundariedGraph::new(400, [], vec![0]).unwrap();
        assert!(matches!(
            max_independent_set(&big),
            Err(Error::CapacityExceeded { .. })
        ));
        assert!(matches!(
            max_independent_set_exhaustive(&cycle(25)),
            Err(Error::CapacityExceeded { .. })
        ));
    }
}
