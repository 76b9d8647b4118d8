//! Mixed search game simulator.
//!
//! Edges start contaminated. A cleaner placed on a vertex, slid along an
//! edge, or meeting another cleaner across an edge cleans it; after every
//! move, any clean edge reachable from a contaminated edge through
//! cleaner-free vertices is recontaminated. A schedule that ends with every
//! edge clean certifies that the peak cleaner count upper-bounds pathwidth.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::BoundariedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Move {
    Place { v: u32 },
    Remove { v: u32 },
    Slide { from: u32, to: u32 },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleaningSchedule {
    pub moves: Vec<Move>,
}

impl CleaningSchedule {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("schedule serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Result of simulating a schedule to completion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    /// Every edge clean after the final move.
    pub cleaned: bool,
    /// Peak number of simultaneous cleaners.
    pub max_cleaners: u32,
    /// Number of edge recontamination events (each edge reverting once per
    /// move counts one event).
    pub recontaminations: u32,
}

/// Run the schedule against the graph. Moves are validated as simulated;
/// the first illegal move aborts with its index.
pub fn simulate_mixed_search(
    g: &BoundariedGraph,
    schedule: &CleaningSchedule,
) -> Result<SearchOutcome> {
    let n = g.n() as usize;
    let adj = g.adjacency();
    let edge_index = |u: u32, v: u32| -> Option<usize> {
        let key = (u.min(v), u.max(v));
        g.edges().binary_search(&key).ok()
    };
    let m = g.edges().len();
    let mut clean = vec![false; m];
    let mut cleaner = vec![false; n];
    let mut count: u32 = 0;
    let mut peak: u32 = 0;
    let mut recontaminations: u32 = 0;

    for (index, mv) in schedule.moves.iter().copied().enumerate() {
        let illegal = |reason: String| Error::IllegalMove { index, reason };
        match mv {
            Move::Place { v } => {
                if v >= g.n() {
                    return Err(illegal(format!("vertex {v} out of range")));
                }
                if cleaner[v as usize] {
                    return Err(illegal(format!("vertex {v} already holds a cleaner")));
                }
                cleaner[v as usize] = true;
                count += 1;
            }
            Move::Remove { v } => {
                if v >= g.n() || !cleaner[v as usize] {
                    return Err(illegal(format!("no cleaner on vertex {v}")));
                }
                cleaner[v as usize] = false;
                count -= 1;
            }
            Move::Slide { from, to } => {
                if from >= g.n() || !cleaner[from as usize] {
                    return Err(illegal(format!("no cleaner on vertex {from}")));
                }
                let e = edge_index(from, to)
                    .ok_or_else(|| illegal(format!("no edge {{{from}, {to}}}")))?;
                cleaner[from as usize] = false;
                if cleaner[to as usize] {
                    // cleaners merge; net count drops
                    count -= 1;
                } else {
                    cleaner[to as usize] = true;
                }
                clean[e] = true;
            }
        }
        peak = peak.max(count);

        // an edge whose endpoints both hold cleaners becomes clean
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if cleaner[u as usize] && cleaner[v as usize] {
                clean[e] = true;
            }
        }

        // recontamination: spread from contaminated edges through
        // cleaner-free vertices
        let mut exposed = vec![false; n];
        let mut queue = Vec::new();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if !clean[e] {
                for w in [u, v] {
                    if !cleaner[w as usize] && !exposed[w as usize] {
                        exposed[w as usize] = true;
                        queue.push(w);
                    }
                }
            }
        }
        while let Some(w) = queue.pop() {
            for &x in &adj[w as usize] {
                let e = edge_index(w, x).expect("adjacency lists match edges");
                if clean[e] {
                    clean[e] = false;
                    recontaminations += 1;
                }
                if !cleaner[x as usize] && !exposed[x as usize] {
                    exposed[x as usize] = true;
                    queue.push(x);
                }
            }
        }
    }

    Ok(SearchOutcome {
        cleaned: clean.iter().all(|&c| c),
        max_cleaners: peak,
        recontaminations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u32) -> BoundariedGraph {
        BoundariedGraph::new(n, (0..n - 1).map(|i| (i, i + 1)), vec![0]).unwrap()
    }

    #[test]
    fn single_edge_cleaned_by_slide() {
        let g = path(2);
        let sched = CleaningSchedule {
            moves: vec![Move::Place { v: 0 }, Move::Slide { from: 0, to: 1 }],
        };
        let out = simulate_mixed_search(&g, &sched).unwrap();
        assert!(out.cleaned);
        assert_eq!(out.max_cleaners, 1);
        assert_eq!(out.recontaminations, 0);
    }

    #[test]
    fn path_cleaned_with_two_cleaners() {
        // a-b-c: Place(a), Place(b), Remove(a), Slide(b->c)
        let g = path(3);
        let sched = CleaningSchedule {
            moves: vec![
                Move::Place { v: 0 },
                Move::Place { v: 1 },
                Move::Remove { v: 0 },
                Move::Slide { from: 1, to: 2 },
            ],
        };
        let out = simulate_mixed_search(&g, &sched).unwrap();
        assert!(out.cleaned);
        assert_eq!(out.max_cleaners, 2);
        assert_eq!(out.recontaminations, 0);
    }

    #[test]
    fn premature_removal_recontaminates() {
        // a-b-c: Place(a), Slide(a->b), Remove(b), Place(b), Slide(b->c)
        // loses the a-b edge when b is vacated, and again when b is vacated
        // by the final slide
        let g = path(3);
        let sched = CleaningSchedule {
            moves: vec![
                Move::Place { v: 0 },
                Move::Slide { from: 0, to: 1 },
                Move::Remove { v: 1 },
                Move::Place { v: 1 },
                Move::Slide { from: 1, to: 2 },
            ],
        };
        let out = simulate_mixed_search(&g, &sched).unwrap();
        assert!(!out.cleaned);
        assert!(out.recontaminations >= 1);
    }

    #[test]
    fn illegal_moves_report_index() {
        let g = path(2);
        let sched = CleaningSchedule {
            moves: vec![Move::Place { v: 0 }, Move::Place { v: 0 }],
        };
        match simulate_mixed_search(&g, &sched) {
            Err(Error::IllegalMove { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected illegal move, got {other:?}"),
        }
        let sched = CleaningSchedule {
            moves: vec![Move::Place { v: 0 }, Move::Slide { from: 0, to: 0 }],
        };
        assert!(simulate_mixed_search(&g, &sched).is_err());
    }

    #[test]
    fn meeting_cleaners_clean_an_edge() {
        let g = path(2);
        let sched = CleaningSchedule {
            moves: vec![Move::Place { v: 0 }, Move::Place { v: 1 }],
        };
        let out = simulate_mixed_search(&g, &sched).unwrap();
        assert!(out.cleaned);
        assert_eq!(out.max_cleaners, 2);
    }

    #[test]
    fn schedule_json_round_trip() {
        let sched = CleaningSchedule {
            moves: vec![
                Move::Place { v: 3 },
                Move::Slide { from: 3, to: 4 },
                Move::Remove { v: 4 },
            ],
        };
        let text = sched.to_json();
        assert!(text.contains("\"op\":\"place\""));
        assert!(text.contains("\"op\":\"slide\""));
        assert_eq!(CleaningSchedule::from_json(&text).unwrap(), sched);
    }
}
