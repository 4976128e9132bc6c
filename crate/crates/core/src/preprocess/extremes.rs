use core::cmp::Ordering;

use crate::model::Point;
use crate::preprocess::sorted::{axis_cmp, Axis, SortedPointSet};
use crate::scalar::Coord;

/// The (k+1)-extreme points of a point set: the `k + 1` highest, lowest,
/// leftmost and rightmost points. Each list holds ids ordered from the most
/// extreme inwards; `union` is the deduplicated id set, ascending.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExtremeSet {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub union: Vec<usize>,
}

impl ExtremeSet {
    pub fn from_lists(
        top: Vec<usize>,
        bottom: Vec<usize>,
        left: Vec<usize>,
        right: Vec<usize>,
    ) -> Self {
        let mut union: Vec<usize> = top
            .iter()
            .chain(&bottom)
            .chain(&left)
            .chain(&right)
            .copied()
            .collect();
        union.sort_unstable();
        union.dedup();
        ExtremeSet {
            top,
            bottom,
            left,
            right,
            union,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.union.is_empty()
    }
}

/// Extreme points of the whole set. Uses linear-time selection on each of the
/// four directions and only sorts the selected `k + 1` points, so the cost is
/// `O(n + k log k)` and independent of the precomputed sorted orders.
pub fn extreme_points<T: Coord>(set: &SortedPointSet<T>, k: usize) -> ExtremeSet {
    extremes_by_selection(set.points(), k)
}

/// Extreme points of an arbitrary point list (ids are taken from the points).
pub fn extremes_of<T: Coord>(points: &[Point<T>], k: usize) -> ExtremeSet {
    extremes_by_selection(points, k)
}

/// The points of `points` that belong to the extreme set, in input order.
pub fn extreme_subset<T: Coord>(points: &[Point<T>], k: usize) -> Vec<Point<T>> {
    if points.len() <= 4 * (k + 1) {
        return points.to_vec();
    }
    let ext = extremes_by_selection(points, k);
    points
        .iter()
        .filter(|p| ext.union.binary_search(&p.id).is_ok())
        .copied()
        .collect()
}

fn extremes_by_selection<T: Coord>(points: &[Point<T>], k: usize) -> ExtremeSet {
    let take = (k + 1).min(points.len());
    let mut scratch: Vec<usize> = (0..points.len()).collect();
    let mut pick = |axis: Axis, reverse: bool| -> Vec<usize> {
        let cmp = |a: &usize, b: &usize| -> Ordering {
            let o = axis_cmp(axis, &points[*a], &points[*b]);
            if reverse {
                o.reverse()
            } else {
                o
            }
        };
        if take == 0 {
            return Vec::new();
        }
        if take < scratch.len() {
            scratch.select_nth_unstable_by(take - 1, cmp);
        }
        let mut chosen = scratch[..take].to_vec();
        chosen.sort_unstable_by(cmp);
        chosen.into_iter().map(|i| points[i].id).collect()
    };
    let left = pick(Axis::X, false);
    let right = pick(Axis::X, true);
    let bottom = pick(Axis::Y, false);
    let top = pick(Axis::Y, true);
    ExtremeSet::from_lists(top, bottom, left, right)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(coords: &[(f64, f64)]) -> SortedPointSet<f64> {
        SortedPointSet::from_coords(coords).unwrap()
    }

    #[test]
    fn diagonal_extremes_coincide() {
        let coords: Vec<(f64, f64)> = (0..10).map(|i| (i as f64, i as f64)).collect();
        let e = extreme_points(&set(&coords), 1);
        assert_eq!(e.union, vec![0, 1, 8, 9]);
        assert_eq!(e.left, vec![0, 1]);
        assert_eq!(e.right, vec![9, 8]);
        assert_eq!(e.top, vec![9, 8]);
    }

    #[test]
    fn large_k_returns_everything() {
        let e = extreme_points(&set(&[(0., 0.), (1., 2.), (2., 1.), (3., 3.)]), 5);
        assert_eq!(e.union, vec![0, 1, 2, 3]);
        assert_eq!(e.top.len(), 4);
        assert_eq!(e.left, vec![0, 1, 2, 3]);
    }

    #[test]
    fn zero_budget_picks_one_per_side() {
        let e = extreme_points(&set(&[(0., 5.), (1., 0.), (2., 9.), (3., 4.), (4., 7.)]), 0);
        assert_eq!(e.top, vec![2]);
        assert_eq!(e.bottom, vec![1]);
        assert_eq!(e.left, vec![0]);
        assert_eq!(e.right, vec![4]);
        assert_eq!(e.union.len(), 4);
    }

    #[test]
    fn empty_set() {
        let e = extreme_points(&set(&[]), 3);
        assert!(e.is_empty());
    }

    #[test]
    fn matches_sorted_prefixes() {
        let coords: Vec<(f64, f64)> = (0..40)
            .map(|i| (((i * 17) % 23) as f64, ((i * 7) % 11) as f64))
            .collect();
        let s = set(&coords);
        for k in 0..12 {
            let e = extreme_points(&s, k);
            let t = (k + 1).min(s.len());
            assert_eq!(e.left, s.by_x()[..t]);
            assert_eq!(e.bottom, s.by_y()[..t]);
            let rx: Vec<usize> = s.by_x().iter().rev().take(t).copied().collect();
            let ry: Vec<usize> = s.by_y().iter().rev().take(t).copied().collect();
            assert_eq!(e.right, rx);
            assert_eq!(e.top, ry);
            assert!(e.union.len() <= (4 * k + 4).min(s.len()));
        }
    }
}
