//! Points and the dominance relation.

/// An input point. Coordinates are positive integers; `id` is the 0-based
/// index of the point in the input and is unique within an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Point3 {
    pub x: u32,
    pub y: u32,
    pub z: u32,
    pub id: u32,
}

impl Point3 {
    pub fn new(x: u32, y: u32, z: u32, id: u32) -> Self {
        Point3 { x, y, z, id }
    }

    /// Projection onto the sweep plane.
    pub fn project(&self) -> Point2 {
        Point2 { x: self.x, y: self.y }
    }
}

/// A point on the sweep plane. `x = 0` and `y = 0` are representable so that
/// staircase left endpoints `(0, y)` and rightmost points `(x, 0)` fit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub x: u32,
    pub y: u32,
}

impl Point2 {
    pub fn new(x: u32, y: u32) -> Self {
        Point2 { x, y }
    }
}

/// Componentwise `>=` dominance. A point dominates itself.
pub fn dominates(p: Point3, q: Point3) -> bool {
    p.x >= q.x && p.y >= q.y && p.z >= q.z
}

/// Dominance under the rank-space order: coordinate ties are broken by input
/// id, so `axis p > axis q` iff `(p.axis, p.id) > (q.axis, q.id)`
/// lexicographically. On inputs with per-axis-distinct coordinates this is
/// exactly [`dominates`]; with ties it matches what every solver sees after
/// rank-space reduction. Reflexive like `dominates`.
pub fn dominates_ranked(p: Point3, q: Point3) -> bool {
    axis_ge(p.x, p.id, q.x, q.id) && axis_ge(p.y, p.id, q.y, q.id) && axis_ge(p.z, p.id, q.z, q.id)
}

fn axis_ge(a: u32, a_id: u32, b: u32, b_id: u32) -> bool {
    a > b || (a == b && a_id >= b_id)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3(x: u32, y: u32, z: u32) -> Point3 {
        Point3::new(x, y, z, 0)
    }

    #[test]
    fn dominance_componentwise() {
        assert!(dominates(p3(3, 3, 3), p3(1, 2, 3)));
        assert!(dominates(p3(3, 3, 3), p3(3, 3, 3)));
        assert!(!dominates(p3(2, 5, 1), p3(3, 1, 1)));
    }

    #[test]
    fn ranked_matches_plain_on_distinct() {
        let a = Point3::new(4, 9, 2, 0);
        let b = Point3::new(3, 7, 1, 1);
        assert_eq!(dominates(a, b), dominates_ranked(a, b));
        assert_eq!(dominates(b, a), dominates_ranked(b, a));
    }

    #[test]
    fn ranked_orders_duplicates_by_id() {
        let a = Point3::new(5, 5, 5, 0);
        let b = Point3::new(5, 5, 5, 1);
        assert!(dominates_ranked(b, a));
        assert!(!dominates_ranked(a, b));
        assert!(dominates_ranked(a, a));
    }
}
