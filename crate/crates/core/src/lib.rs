//! Solvers for the three-dimensional layers-of-maxima problem.
//!
//! A point `p` dominates `q` when every coordinate of `p` is greater than or
//! equal to the corresponding coordinate of `q`. Layer 1 of a point set is
//! its maxima set (the points nobody dominates); layer `i` is the maxima set
//! of what remains after peeling layers `1..i`.
//!
//! Three solvers are provided, all producing identical layer assignments:
//!
//! * [`oracle::layers_bruteforce`] — quadratic peeling; the ground truth.
//! * [`baseline::sweep_solve`] — plane sweep over descending `z` that keeps
//!   one staircase per layer and locates each point by binary search over
//!   staircase index.
//! * [`fastsolver::fast_solve`] — the same sweep, but point location goes
//!   through a ray-shooting tree over a small family of auxiliary staircases,
//!   so the heavy dynamic structure sees only a fraction of the updates.
//!
//! The crate is `no_std` (with `alloc`); all geometry is integer-only.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod auxstairs;
pub mod baseline;
pub mod fastsolver;
pub mod geom;
pub mod oracle;
pub mod ordset;
pub mod rankspace;
pub mod rayshoot;
pub mod staircase;

pub use fastsolver::{fast_solve, FastConfig, Metrics};
pub use geom::{dominates, Point2, Point3};
pub use oracle::{layers_bruteforce, LayerAssignment};
pub use ordset::Backend;
pub use rankspace::{layers_pullback, to_rank_space, RankMap};
