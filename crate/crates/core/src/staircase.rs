//! Staircases: the boundary of the region dominated by a 2D point set,
//! stored as horizontal segments only. Vertical connectors between
//! consecutive steps are implicit.
//!
//! A staircase for maxima points `p_1, ..., p_k` (x ascending, y descending)
//! has segments `[(0, y_1)-(x_1, y_1)], [(x_1, y_2)-(x_2, y_2)], ...`: each
//! segment's right endpoint is a live maxima point and consecutive segments
//! tile the x axis contiguously from 0 to the rightmost point.

use crate::geom::Point2;
use crate::ordset::{Backend, OrdMap};
use alloc::vec::Vec;
use core::fmt;

/// Horizontal staircase segment. `uid` is unique over a run so that segment
/// lineage can be tracked across replace operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub left: u32,
    pub right: u32,
    pub y: u32,
    /// Index of the staircase holding the segment; [`DUMMY_INDEX`] marks the
    /// ray-shoot tree's bottom sentinel.
    pub sindex: u32,
    pub uid: u64,
}

/// Sentinel `sindex` for the ray-shoot tree's dummy bottom segment.
pub const DUMMY_INDEX: u32 = u32::MAX;

impl Segment {
    pub fn covers(&self, x: u32) -> bool {
        self.left <= x && x <= self.right
    }

    pub fn left_endpoint(&self) -> Point2 {
        Point2::new(self.left, self.y)
    }

    pub fn right_endpoint(&self) -> Point2 {
        Point2::new(self.right, self.y)
    }
}

/// A point dominates a segment when it dominates the segment's left
/// endpoint (and with it some point of the segment).
pub fn point_dominates_segment(p: Point2, s: &Segment) -> bool {
    p.x >= s.left && p.y >= s.y
}

/// Monotone counter handing out segment identities.
#[derive(Debug, Default)]
pub struct UidGen {
    next: u64,
}

impl UidGen {
    pub fn new() -> Self {
        UidGen { next: 0 }
    }

    pub fn next(&mut self) -> u64 {
        let u = self.next;
        self.next += 1;
        u
    }
}

/// Probe failure: the staircase ends left of the queried x.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotCovered;

impl fmt::Display for NotCovered {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "staircase ends left of the queried x")
    }
}

impl core::error::Error for NotCovered {}

/// One staircase: segments keyed by left endpoint in a bounded-universe
/// ordered map (the endpoint search structure used by probes).
#[derive(Clone, Debug)]
pub struct Staircase {
    index: u32,
    segs: OrdMap<Segment>,
    /// Cached x of the rightmost point (right endpoint of the last segment).
    extent: u32,
    len: usize,
}

impl Staircase {
    /// Staircase with one segment `(0, q.y)-(q.x, q.y)`; the vertical tail
    /// down to `(q.x, 0)` is implicit.
    pub fn new(q: Point2, index: u32, backend: Backend, x_universe: u32, uids: &mut UidGen) -> Self {
        let mut segs = OrdMap::new(backend, x_universe);
        let seg = Segment { left: 0, right: q.x, y: q.y, sindex: index, uid: uids.next() };
        segs.insert(0, seg);
        Staircase { index, segs, extent: q.x, len: 1 }
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// x of the rightmost point `m_i` (whose y is 0 conceptually).
    pub fn rightmost_x(&self) -> u32 {
        self.extent
    }

    pub fn segments(&self) -> Vec<Segment> {
        let mut out = Vec::with_capacity(self.len);
        self.segs.for_each(|_, s| out.push(*s));
        out
    }

    pub fn first(&self) -> Segment {
        *self.segs.min().expect("staircase is never empty").1
    }

    pub fn last(&self) -> Segment {
        *self.segs.max().expect("staircase is never empty").1
    }

    pub fn segment_at_left(&self, left: u32) -> Option<&Segment> {
        self.segs.get(left)
    }

    /// Segment covering `x` plus whether the staircase is at-or-below the
    /// probe point there. At a shared endpoint the right (lower) segment
    /// wins.
    pub fn probe(&self, p: Point2) -> Result<(Segment, bool), NotCovered> {
        let seg = self.segment_covering(p.x).ok_or(NotCovered)?;
        Ok((seg, seg.y <= p.y))
    }

    /// Segment whose closed interval contains `x`, preferring the right
    /// segment at shared boundaries.
    pub fn segment_covering(&self, x: u32) -> Option<Segment> {
        let (_, s) = self.segs.pred(x)?;
        if s.right >= x {
            Some(*s)
        } else {
            None
        }
    }

    /// Height of the staircase boundary at `x`, taking the upper level at
    /// shared boundaries; `None` right of the staircase's extent.
    pub fn height_at(&self, x: u32) -> Option<u32> {
        if x > self.extent {
            return None;
        }
        match self.segs.pred_strict(x) {
            Some((_, s)) if s.right >= x => Some(s.y),
            _ => self.segs.pred(x).map(|(_, s)| s.y),
        }
    }

    /// True when the staircase boundary at `p.x` is strictly above `p.y`
    /// (segment heights only; beyond the extent the staircase is not above).
    pub fn is_above(&self, p: Point2) -> bool {
        match self.segment_covering(p.x) {
            Some(s) => s.y > p.y,
            None => false,
        }
    }

    /// Inserts `q` as a maxima point: removes every segment whose left
    /// endpoint `q` dominates, truncates the partially covered one, and adds
    /// at most two segments. No-op when `q` is already dominated by (or on)
    /// the staircase.
    pub fn replace(&mut self, q: Point2, uids: &mut UidGen) -> ReplaceOutcome {
        // Dominated-or-equal guard against the upper level at connectors.
        if let Some(h) = self.height_at(q.x) {
            if q.y <= h {
                return ReplaceOutcome::default();
            }
        }
        let mut out = ReplaceOutcome::default();
        // Removal run: segments with left <= q.x and y <= q.y, scanned from
        // the covering position leftwards.
        let mut run_left = None;
        let mut cursor = self.segs.pred(q.x).map(|(k, _)| k);
        while let Some(k) = cursor {
            let s = *self.segs.get(k).expect("cursor key is present");
            if s.y > q.y {
                break;
            }
            run_left = Some(k);
            out.removed.push(s);
            cursor = self.segs.pred_strict(k).map(|(k, _)| k);
        }
        out.removed.reverse();
        for s in &out.removed {
            self.segs.remove(s.left);
            self.len -= 1;
        }
        let attach = match run_left {
            Some(k) => match self.segs.pred(k) {
                Some((_, prev)) => prev.right,
                None => 0,
            },
            // Nothing removed: q lies right of the staircase and below its
            // last step, so the new segment attaches at the extent.
            None => self.extent,
        };
        debug_assert!(attach < q.x, "guard leaves q strictly above/right of the boundary");
        let ending = Segment { left: attach, right: q.x, y: q.y, sindex: self.index, uid: uids.next() };
        self.segs.insert(ending.left, ending);
        self.len += 1;
        out.inserted.push(ending);
        if let Some(last) = out.removed.last() {
            if last.right > q.x {
                let rem =
                    Segment { left: q.x, right: last.right, y: last.y, sindex: self.index, uid: uids.next() };
                self.segs.insert(rem.left, rem);
                self.len += 1;
                out.inserted.push(rem);
            }
        }
        self.extent = self.last().right;
        out
    }

    /// Fact 2 check: segment y levels strictly decrease left to right and
    /// segments tile `[0, extent]` contiguously.
    pub fn check_monotone(&self) -> bool {
        let segs = self.segments();
        if segs.is_empty() || segs[0].left != 0 {
            return false;
        }
        for w in segs.windows(2) {
            if w[0].right != w[1].left || w[0].y <= w[1].y {
                return false;
            }
        }
        segs.last().map(|s| s.right == self.extent).unwrap_or(false)
            && segs.iter().all(|s| s.left < s.right)
    }
}

/// Segments removed and inserted by one [`Staircase::replace`].
#[derive(Clone, Debug, Default)]
pub struct ReplaceOutcome {
    pub removed: Vec<Segment>,
    pub inserted: Vec<Segment>,
}

impl ReplaceOutcome {
    pub fn is_noop(&self) -> bool {
        self.removed.is_empty() && self.inserted.is_empty()
    }

    /// x range in which the staircase boundary changed.
    pub fn touched_range(&self) -> Option<(u32, u32)> {
        let all = self.removed.iter().chain(self.inserted.iter());
        let mut lo = u32::MAX;
        let mut hi = 0;
        let mut any = false;
        for s in all {
            lo = lo.min(s.left);
            hi = hi.max(s.right);
            any = true;
        }
        any.then_some((lo, hi))
    }
}

/// The family of per-layer staircases maintained by a sweep, ordered by
/// index (1-based). Staircases never cross: at any common x a smaller index
/// lies strictly higher.
#[derive(Clone, Debug)]
pub struct StaircaseFamily {
    stairs: Vec<Staircase>,
    backend: Backend,
    x_universe: u32,
    uids: UidGen,
}

impl StaircaseFamily {
    pub fn new(backend: Backend, x_universe: u32) -> Self {
        StaircaseFamily { stairs: Vec::new(), backend, x_universe, uids: UidGen::new() }
    }

    pub fn len(&self) -> usize {
        self.stairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stairs.is_empty()
    }

    /// 1-based access.
    pub fn stair(&self, index: u32) -> &Staircase {
        &self.stairs[index as usize - 1]
    }

    pub fn stair_mut(&mut self, index: u32) -> &mut Staircase {
        &mut self.stairs[index as usize - 1]
    }

    /// Appends staircase number `len+1` holding just `q`.
    pub fn push_new(&mut self, q: Point2) -> u32 {
        let index = self.stairs.len() as u32 + 1;
        let st = Staircase::new(q, index, self.backend, self.x_universe, &mut self.uids);
        self.stairs.push(st);
        index
    }

    pub fn replace(&mut self, index: u32, q: Point2) -> ReplaceOutcome {
        let st = &mut self.stairs[index as usize - 1];
        st.replace(q, &mut self.uids)
    }

    /// Fact 1 audit: probing all staircases at `x` gives strictly decreasing
    /// heights with increasing index, among staircases covering `x`.
    pub fn check_noncrossing_at(&self, x: u32) -> bool {
        let mut prev: Option<u32> = None;
        for st in &self.stairs {
            if let Some(s) = st.segment_covering(x) {
                if let Some(p) = prev {
                    if s.y >= p {
                        return false;
                    }
                }
                prev = Some(s.y);
            }
        }
        true
    }

    /// Extent nesting: rightmost points move left as the index grows (weakly;
    /// strictly in rank space).
    pub fn check_extent_nesting(&self) -> bool {
        self.stairs.windows(2).all(|w| w[0].rightmost_x() >= w[1].rightmost_x())
    }
}
