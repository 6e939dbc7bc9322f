//! Reference sweep-plane solver. The plane moves from high z to low z; at
//! each level every point is first located among the per-layer staircases
//! (binary search over staircase index), and only then are the staircases
//! updated in ascending x order.

use crate::geom::{Point2, Point3};
use crate::oracle::LayerAssignment;
use crate::ordset::Backend;
use crate::staircase::StaircaseFamily;
use alloc::vec::Vec;

/// Sweep state: the staircases of the projections of all points with
/// `p.z > current_z`, layer by layer.
#[derive(Debug)]
pub struct SweepState {
    pub family: StaircaseFamily,
    pub current_z: u32,
}

/// Smallest staircase index that is at-or-below `p` (p on the staircase
/// counts), or `len + 1` when `p` is below every staircase. A staircase
/// whose x extent ends left of `p.x` is "not above" as well, which resolves
/// the no-staircase-below case through the rightmost points.
pub fn locate_binary(family: &StaircaseFamily, p: Point2) -> u32 {
    let n = family.len() as u32;
    // `is_above` is monotone in the index: staircases with smaller index lie
    // strictly higher and extend at least as far right.
    let (mut lo, mut hi) = (1u32, n + 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if family.stair(mid).is_above(p) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Points grouped by equal z, descending; each group sorted by ascending x.
pub(crate) fn z_levels(points: &[Point3]) -> Vec<Vec<Point3>> {
    let mut sorted: Vec<Point3> = points.to_vec();
    sorted.sort_by(|a, b| b.z.cmp(&a.z).then(a.x.cmp(&b.x)).then(a.id.cmp(&b.id)));
    let mut levels: Vec<Vec<Point3>> = Vec::new();
    for p in sorted {
        match levels.last_mut() {
            Some(level) if level[0].z == p.z => level.push(p),
            _ => levels.push(alloc::vec![p]),
        }
    }
    levels
}

/// Sweep solver over rank-space points (coordinates in `[1, n]`).
pub fn sweep_solve(points: &[Point3]) -> LayerAssignment {
    sweep_solve_with(points, Backend::Det)
}

pub fn sweep_solve_with(points: &[Point3], backend: Backend) -> LayerAssignment {
    let n = points.len();
    if n == 0 {
        return LayerAssignment::empty();
    }
    let max_x = points.iter().map(|p| p.x).max().unwrap_or(0);
    let mut state = SweepState { family: StaircaseFamily::new(backend, max_x + 1), current_z: u32::MAX };
    let mut layer = alloc::vec![0u32; n];
    let mut num_layers = 0u32;
    for level in z_levels(points) {
        state.current_z = level[0].z;
        // locate everything at this level before touching any staircase
        let mut located: Vec<(Point3, u32)> = level
            .iter()
            .map(|p| (*p, locate_binary(&state.family, p.project())))
            .collect();
        // updates in ascending x order
        located.sort_by_key(|(p, _)| (p.x, p.id));
        for (p, i) in located {
            layer[p.id as usize] = i;
            num_layers = num_layers.max(i);
            if i as usize > state.family.len() {
                debug_assert_eq!(i as usize, state.family.len() + 1);
                state.family.push_new(p.project());
            } else {
                state.family.replace(i, p.project());
            }
        }
    }
    LayerAssignment { layer, num_layers }
}
