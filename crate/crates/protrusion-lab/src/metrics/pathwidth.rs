//! Exact pathwidth by dynamic programming over vertex subsets.
//!
//! Pathwidth equals the vertex separation number: the minimum over vertex
//! orderings of the maximum, over prefixes, of the number of prefix vertices
//! with a neighbor outside the prefix. `f(S) = min over v in S of
//! max(f(S - v), boundary(S))` gives an `O(2^n * n)` table.

use crate::error::{Error, Result};
use crate::graph::BoundariedGraph;

/// Largest graph the subset DP accepts (2^24 table entries).
pub const PATHWIDTH_LIMIT: usize = 24;

pub fn pathwidth_exact(g: &BoundariedGraph) -> Result<u32> {
    let n = g.n() as usize;
    if n > PATHWIDTH_LIMIT {
        return Err(Error::CapacityExceeded {
            what: "pathwidth dynamic program",
            n,
            limit: PATHWIDTH_LIMIT,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut f = vec![u8::MAX; 1usize << n];
    f[0] = 0;
    for s in 1u32..=full {
        // boundary size of s: vertices in s with a neighbor outside s
        let outside = full & !s;
        let mut boundary = 0u8;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & outside != 0 {
                boundary += 1;
            }
        }
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let prev = f[(s & !(1 << v)) as usize];
            let cand = prev.max(boundary);
            if cand < best {
                best = cand;
            }
        }
        f[s as usize] = best;
    }
    Ok(f[full as usize] as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BoundariedGraph;

    fn g(n: u32, edges: &[(u32, u32)]) -> BoundariedGraph {
        BoundariedGraph::new(n, edges.iter().copied(), vec![0]).unwrap()
    }

    #[test]
    fn paths_have_pathwidth_one() {
        for n in 2..=6u32 {
            let edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            assert_eq!(pathwidth_exact(&g(n, &edges)).unwrap(), 1);
        }
    }

    #[test]
    fn complete_graphs() {
        for k in 2..=6u32 {
            let edges: Vec<(u32, u32)> =
                (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
            assert_eq!(pathwidth_exact(&g(k, &edges)).unwrap(), k - 1);
        }
    }

    #[test]
    fn cycles_have_pathwidth_two() {
        for k in 3..=8u32 {
            let edges: Vec<(u32, u32)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            assert_eq!(pathwidth_exact(&g(k, &edges)).unwrap(), 2);
        }
    }

    #[test]
    fn star_has_pathwidth_one() {
        let edges: Vec<(u32, u32)> = (1..7).map(|i| (0, i)).collect();
        assert_eq!(pathwidth_exact(&g(7, &edges)).unwrap(), 1);
    }

    #[test]
    fn caterpillar_vs_subdivided_star() {
        // the height-2 binary tree is a caterpillar: pathwidth 1
        let tree = [(0u32, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)];
        assert_eq!(pathwidth_exact(&g(7, &tree)).unwrap(), 1);
        // the subdivided star K_{1,3} is the smallest non-caterpillar tree
        let spider = [(0u32, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)];
        assert_eq!(pathwidth_exact(&g(7, &spider)).unwrap(), 2);
    }

    #[test]
    fn capacity_error() {
        let big = BoundariedGraph::new(30, [], vec![0]).unwrap();
        assert!(pathwidth_exact(&big).is_err());
    }

    #[test]
    fn grid_pathwidth() {
        // 3x3 grid has pathwidth 3
        let mut edges = Vec::new();
        for r in 0..3u32 {
            for c in 0..3u32 {
                let v = r * 3 + c;
                if c + 1 < 3 {
                    edges.push((v, v + 1));
                }
                if r + 1 < 3 {
                    edges.push((v, v + 3));
                }
            }
        }
        assert_eq!(pathwidth_exact(&g(9, &edges)).unwrap(), 3);
    }
}
