//! Reduction to rank space: per-axis replacement of coordinates by their
//! ranks + 1, giving coordinates in `[1, n]` while preserving dominance.
//! Equal coordinates on an axis are ordered by input id, so the reduced
//! instance always has per-axis-distinct coordinates and every solver sees
//! the same order.

use crate::geom::Point3;
use crate::oracle::LayerAssignment;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmptyInput;

impl fmt::Display for EmptyInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank-space reduction needs at least one point")
    }
}

impl core::error::Error for EmptyInput {}

/// Sorted original coordinates per axis; `inverse[axis][rank-1]` is the
/// original coordinate of that rank.
#[derive(Clone, Debug)]
pub struct RankMap {
    pub inverse: [Vec<u32>; 3],
}

impl RankMap {
    pub fn n(&self) -> usize {
        self.inverse[0].len()
    }

    /// Original coordinate carried by `rank` on `axis` (0 = x, 1 = y, 2 = z).
    pub fn original(&self, axis: usize, rank: u32) -> u32 {
        self.inverse[axis][rank as usize - 1]
    }
}

fn axis_ranks(points: &[Point3], coord: impl Fn(&Point3) -> u32) -> (Vec<u32>, Vec<u32>) {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by_key(|&i| (coord(&points[i]), points[i].id));
    let mut rank_of = alloc::vec![0u32; points.len()];
    let mut inverse = Vec::with_capacity(points.len());
    for (pos, &i) in order.iter().enumerate() {
        rank_of[i] = pos as u32 + 1;
        inverse.push(coord(&points[i]));
    }
    (rank_of, inverse)
}

/// Maps each point to its per-axis ranks (+1). Output coordinates are a
/// permutation of `1..=n` on every axis; ids are preserved.
pub fn to_rank_space(points: &[Point3]) -> Result<(Vec<Point3>, RankMap), EmptyInput> {
    if points.is_empty() {
        return Err(EmptyInput);
    }
    let (rx, ix) = axis_ranks(points, |p| p.x);
    let (ry, iy) = axis_ranks(points, |p| p.y);
    let (rz, iz) = axis_ranks(points, |p| p.z);
    let reduced = points
        .iter()
        .enumerate()
        .map(|(i, p)| Point3 { x: rx[i], y: ry[i], z: rz[i], id: p.id })
        .collect();
    Ok((reduced, RankMap { inverse: [ix, iy, iz] }))
}

/// Translates a layer assignment on the reduced points back to the original
/// points. Layer numbers are untouched; ids already agree, so this only
/// checks coverage.
pub fn layers_pullback(assign: LayerAssignment, map: &RankMap) -> LayerAssignment {
    debug_assert_eq!(assign.layer.len(), map.n());
    assign
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{dominates, dominates_ranked};
    use crate::oracle::layers_bruteforce;
    use proptest::prelude::*;

    fn pts(raw: &[(u32, u32, u32)]) -> Vec<Point3> {
        raw.iter().enumerate().map(|(i, &(x, y, z))| Point3::new(x, y, z, i as u32)).collect()
    }

    #[test]
    fn rank_examples() {
        let (r, _) = to_rank_space(&pts(&[(10, 100, 5), (7, 2, 9)])).unwrap();
        assert_eq!((r[0].x, r[0].y, r[0].z), (2, 2, 1));
        assert_eq!((r[1].x, r[1].y, r[1].z), (1, 1, 2));

        let (r, _) = to_rank_space(&pts(&[(1, 1, 1)])).unwrap();
        assert_eq!((r[0].x, r[0].y, r[0].z), (1, 1, 1));

        // duplicates: index tie-break
        let (r, _) = to_rank_space(&pts(&[(5, 5, 5), (5, 5, 5)])).unwrap();
        assert_eq!((r[0].x, r[0].y, r[0].z), (1, 1, 1));
        assert_eq!((r[1].x, r[1].y, r[1].z), (2, 2, 2));

        assert_eq!(to_rank_space(&[]).unwrap_err(), EmptyInput);
    }

    #[test]
    fn inverse_restores_coordinates() {
        let points = pts(&[(10, 100, 5), (7, 2, 9), (7, 50, 9)]);
        let (reduced, map) = to_rank_space(&points).unwrap();
        for (orig, red) in points.iter().zip(&reduced) {
            assert_eq!(map.original(0, red.x), orig.x);
            assert_eq!(map.original(1, red.y), orig.y);
            assert_eq!(map.original(2, red.z), orig.z);
        }
    }

    proptest! {
        /// With per-axis-distinct coordinates, dominance is preserved
        /// exactly; in general it matches the ranked (id tie-broken) order.
        /// Output coordinates are a permutation of 1..=n per axis.
        #[test]
        fn reduction_preserves_order(raw in proptest::collection::vec((1u32..50, 1u32..50, 1u32..50), 1..24)) {
            let points = pts(&raw);
            let (reduced, _) = to_rank_space(&points).unwrap();
            let n = points.len() as u32;
            for axis in [(|p: &Point3| p.x) as fn(&Point3) -> u32, |p| p.y, |p| p.z] {
                let mut ranks: Vec<u32> = reduced.iter().map(axis).collect();
                ranks.sort_unstable();
                prop_assert_eq!(ranks, (1..=n).collect::<Vec<_>>());
            }
            for a in &points {
                for b in &points {
                    let ra = reduced[a.id as usize];
                    let rb = reduced[b.id as usize];
                    prop_assert_eq!(dominates(ra, rb), dominates_ranked(*a, *b));
                }
            }
        }

        /// Peeling commutes with the reduction.
        #[test]
        fn oracle_commutes_with_reduction(raw in proptest::collection::vec((1u32..40, 1u32..40, 1u32..40), 1..20)) {
            let points = pts(&raw);
            let direct = layers_bruteforce(&points);
            let (reduced, map) = to_rank_space(&points).unwrap();
            let pulled = layers_pullback(layers_bruteforce(&reduced), &map);
            prop_assert_eq!(direct.layer, pulled.layer);
        }
    }
}
