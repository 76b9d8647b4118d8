//! Boundaried graphs and the equivalence-class machinery for Independent
//! Set and Dominating Set.
//!
//! A `t`-boundaried graph carries `t` labeled boundary vertices and can be
//! glued onto any other graph with the same boundary size. Two graphs are
//! equivalent when swapping one for the other shifts the optimum of every
//! glued host by the same constant. This crate implements that theory
//! end to end and machine-checks it:
//!
//! - [`graph`]: boundaried graphs, gluing, indicator graphs, the triangle
//!   transform, boundary-preserving isomorphism and canonical forms;
//! - [`oracle`]: exact IS/VC/DS solvers and boundary functions, the ground
//!   truth everything else is checked against;
//! - [`equivalence`]: representative functions, the equivalence test, the
//!   0/1 derived encoding and all enumeration;
//! - [`monotone`]: monotone Boolean functions, their CNFs, and Dedekind
//!   numbers;
//! - [`synthesis`]: building a graph whose normalized boundary function is
//!   any prescribed representative function;
//! - [`metrics`]: planarity, exact pathwidth, and the mixed search game;
//! - [`construction`]: clause and crossover gadgets, the planar family of
//!   pairwise nonequivalent graphs, and cleaning-schedule generation;
//! - [`ds_transfer`]: carrying the family to Dominating Set via the
//!   triangle transform;
//! - [`counting`]: boundaried planar graph counting and the critical-size
//!   lower-bound arithmetic.
//!
//! The `examples/` directory has one runnable example per capability; the
//! `protrusion-lab` binary exposes the same operations as subcommands.

pub mod cli;
pub mod construction;
pub mod counting;
pub mod ds_transfer;
pub mod equivalence;
pub mod error;
pub mod graph;
pub mod metrics;
pub mod monotone;
pub mod oracle;
pub mod synthesis;

pub use error::{Error, Result};
pub use graph::{BoundariedGraph, SubsetMask};
